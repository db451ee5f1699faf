#include "amalgam/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

constexpr double kSubmultSlack = 1.0 + 1e-12;

// Deterministic probe points for constructor-time validation.
std::vector<double> validation_points() {
  std::vector<double> pts{0.0};
  for (double x : {0.125, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 100.0, 500.0, 1000.0}) {
    pts.push_back(x);
    pts.push_back(-x);
  }
  return pts;
}

}  // namespace

Weight Weight::polynomial(double power) {
  if (!(power >= 0.0) || !std::isfinite(power))
    throw SpecError("polynomial weight needs power >= 0");
  Weight w(Family::polynomial);
  w.power_ = power;
  w.validate();
  return w;
}

Weight Weight::exponential(double rate) {
  if (!(rate >= 0.0) || !std::isfinite(rate))
    throw SpecError("exponential weight needs rate >= 0");
  Weight w(Family::exponential);
  w.rate_ = rate;
  w.validate();
  return w;
}

Weight Weight::product(std::vector<Weight> factors) {
  if (factors.empty()) throw SpecError("product weight needs at least one factor");
  Weight w(Family::product);
  w.factors_ = std::make_shared<const std::vector<Weight>>(std::move(factors));
  w.validate();
  return w;
}

Weight Weight::tabulated(std::vector<double> xs, std::vector<double> vs) {
  if (xs.size() != vs.size() || xs.size() < 2)
    throw SpecError("tabulated weight needs matching x/v arrays of size >= 2");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] > xs[i - 1]))
      throw SpecError("tabulated weight grid must be strictly increasing");
  for (double v : vs)
    if (!(v >= 1.0) || !std::isfinite(v))
      throw SpecError("weight values must be finite and >= 1");
  Weight w(Family::tabulated);
  w.table_xs_ = std::make_shared<const std::vector<double>>(std::move(xs));
  w.table_vs_ = std::make_shared<const std::vector<double>>(std::move(vs));
  w.validate();
  return w;
}

double Weight::operator()(double x) const {
  switch (family_) {
    case Family::polynomial:
      return std::pow(1.0 + std::abs(x), power_);
    case Family::exponential:
      return std::exp(rate_ * std::abs(x));
    case Family::product: {
      double v = 1.0;
      for (const Weight& f : *factors_) v *= f(x);
      return v;
    }
    case Family::tabulated: {
      const auto& xs = *table_xs_;
      const auto& vs = *table_vs_;
      if (x < xs.front() || x > xs.back())
        throw OutOfDomainError("tabulated weight queried outside its grid");
      auto it = std::upper_bound(xs.begin(), xs.end(), x);
      if (it == xs.end()) return vs.back();
      if (it == xs.begin()) return vs.front();
      std::size_t i = static_cast<std::size_t>(it - xs.begin());
      double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
      return vs[i - 1] + t * (vs[i] - vs[i - 1]);
    }
  }
  return 1.0;
}

Eigen::ArrayXd Weight::operator()(const Eigen::ArrayXd& xs) const {
  switch (family_) {
    case Family::polynomial:
      if (power_ == 0.0) return Eigen::ArrayXd::Ones(xs.size());
      return (1.0 + xs.abs()).pow(power_);
    case Family::exponential:
      return (rate_ * xs.abs()).exp();
    default: {
      Eigen::ArrayXd out(xs.size());
      for (Eigen::Index i = 0; i < xs.size(); ++i) out[i] = (*this)(xs[i]);
      return out;
    }
  }
}

std::optional<std::pair<double, double>> Weight::closed_form() const {
  switch (family_) {
    case Family::polynomial:
      return std::make_pair(power_, 0.0);
    case Family::exponential:
      return std::make_pair(0.0, rate_);
    case Family::product: {
      double s = 0.0, a = 0.0;
      for (const Weight& f : *factors_) {
        auto cf = f.closed_form();
        if (!cf) return std::nullopt;
        s += cf->first;
        a += cf->second;
      }
      return std::make_pair(s, a);
    }
    case Family::tabulated:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string Weight::describe() const {
  std::ostringstream os;
  switch (family_) {
    case Family::polynomial: os << "poly:" << power_; break;
    case Family::exponential: os << "exp:" << rate_; break;
    case Family::product: {
      os << "prod(";
      for (std::size_t i = 0; i < factors_->size(); ++i)
        os << (i ? "," : "") << (*factors_)[i].describe();
      os << ")";
      break;
    }
    case Family::tabulated:
      os << "tab[" << table_xs_->front() << "," << table_xs_->back() << "]";
      break;
  }
  return os.str();
}

void Weight::validate() const {
  if (family_ == Family::tabulated) {
    // Positivity is checked on the raw table; linear interpolation of
    // values >= 1 stays >= 1. Submultiplicativity is probed on grid pairs
    // whose sum stays inside the table.
    const auto& xs = *table_xs_;
    const std::size_t n = xs.size();
    const std::size_t stride = std::max<std::size_t>(1, n * n / 4096);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (k++ % stride) continue;
        double s = xs[i] + xs[j];
        if (s < xs.front() || s > xs.back()) continue;
        if ((*this)(s) > (*this)(xs[i]) * (*this)(xs[j]) * kSubmultSlack)
          throw SpecError("tabulated weight is not submultiplicative");
      }
    }
    return;
  }
  // Closed-form families: positivity and submultiplicativity hold by
  // construction; probe a fixed sweep anyway so every instance is checked.
  static const std::vector<double> pts = validation_points();
  for (double x : pts) {
    if (!((*this)(x) >= 1.0))
      throw SpecError("weight fell below 1 at validation probe");
    for (double y : pts) {
      if ((*this)(x + y) > (*this)(x) * (*this)(y) * kSubmultSlack)
        throw SpecError("weight failed submultiplicativity probe");
    }
  }
}

SubmultReport check_submultiplicative(
    const Weight& w, std::span<const std::pair<double, double>> probes) {
  if (probes.empty()) throw SpecError("submultiplicativity check needs probes");
  SubmultReport rep;
  for (const auto& [x, y] : probes) {
    double r = w(x + y) / (w(x) * w(y));
    rep.max_ratio = std::max(rep.max_ratio, r);
  }
  rep.pass = rep.max_ratio <= kSubmultSlack;
  return rep;
}

namespace {

// sup over |x| of (1+|x|)^ds * e^{da |x|} for pairs where the sup is finite.
double ratio_supremum(double ds, double da) {
  if (da > 0.0 || (da == 0.0 && ds > 0.0))
    return std::numeric_limits<double>::infinity();
  if (ds <= 0.0) return 1.0;  // decreasing in |x|, max at 0
  // ds > 0, da < 0: maximum at t* = ds/(-da) - 1 when positive.
  double t = ds / (-da) - 1.0;
  if (t <= 0.0) return 1.0;
  return std::pow(1.0 + t, ds) * std::exp(da * t);
}

// Smallest t >= 0 with (1+t)^ds e^{da t} > ceiling (exists when sup is
// infinite); bisection on a bracket grown geometrically.
double divergence_point(double ds, double da, double ceiling) {
  auto val = [&](double t) { return ds * std::log1p(t) + da * t; };
  const double target = std::log(ceiling);
  double hi = 1.0;
  while (val(hi) <= target && hi < 1e300) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (val(mid) > target ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

DominanceVerdict dominates(const Weight& w1, const Weight& w2,
                           std::span<const double> probes, double ceiling) {
  if (probes.empty()) throw SpecError("dominance check needs probes");
  if (!(ceiling > 1.0)) throw SpecError("dominance ceiling must exceed 1");

  DominanceVerdict v;
  v.probe_count = static_cast<int>(probes.size());

  auto cf1 = w1.closed_form();
  auto cf2 = w2.closed_form();
  if (cf1 && cf2) {
    const double ds = cf1->first - cf2->first;
    const double da = cf1->second - cf2->second;
    const double sup = ratio_supremum(ds, da);
    if (std::isfinite(sup)) {
      v.holds = true;
      v.constant = sup;
    } else {
      v.holds = false;
      v.witness = divergence_point(ds, da, ceiling);
      v.constant = ceiling;
    }
    return v;
  }

  double best = 0.0, arg = probes[0];
  for (double x : probes) {
    double r = w1(x) / w2(x);
    if (r > best) {
      best = r;
      arg = x;
    }
  }
  v.holds = best <= ceiling;
  v.constant = best;
  v.witness = arg;
  return v;
}

const std::vector<double>& default_probes() {
  static const std::vector<double> probes = [] {
    std::vector<double> p{0.0};
    for (double x = 0.125; x <= 1024.0; x *= 2.0) {
      p.push_back(x);
      p.push_back(-x);
      p.push_back(0.75 * x);
      p.push_back(-0.75 * x);
    }
    std::sort(p.begin(), p.end());
    return p;
  }();
  return probes;
}

DominanceVerdict dominates(const Weight& w1, const Weight& w2) {
  return dominates(w1, w2, default_probes(), kDominanceCeiling);
}

bool equivalent(const Weight& w1, const Weight& w2,
                std::span<const double> probes, double ceiling) {
  return dominates(w1, w2, probes, ceiling).holds &&
         dominates(w2, w1, probes, ceiling).holds;
}

bool equivalent(const Weight& w1, const Weight& w2) {
  return equivalent(w1, w2, default_probes(), kDominanceCeiling);
}

BdReport bd_condition(const Weight& w, double x, long n_max) {
  if (x == 0.0) throw SpecError("bd_condition needs x != 0");
  if (n_max < 10) throw SpecError("bd_condition needs n_max >= 10");

  BdReport rep;
  for (long n = 1; n <= n_max; ++n) {
    double term;
    try {
      term = std::log(w(n * x)) / (static_cast<double>(n) * n);
    } catch (const OutOfDomainError&) {
      rep.verdict = SeriesVerdict::inconclusive;
      return rep;
    }
    rep.partial_sum += term;
    rep.terms_used = n;
  }

  auto cf = w.closed_form();
  if (!cf) {
    rep.verdict = SeriesVerdict::inconclusive;
  } else if (cf->second > 0.0) {
    // log term ~ rate |x| / n: harmonic comparison.
    rep.verdict = SeriesVerdict::diverges;
  } else {
    // log term = O(log n / n^2).
    rep.verdict = SeriesVerdict::converges;
  }
  return rep;
}

}  // namespace amalgam
