#include "amalgam/space.hpp"

#include <cmath>

#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

double sup_magnitude(const SampledFunction& f) {
  double v = f.values.abs().maxCoeff();
  return std::max(v, f.edge_values.abs().maxCoeff());
}

}  // namespace

SpaceSpec::SpaceSpec(double p_, double q_, double r_, Weight w1, Weight w2,
                     std::optional<Weight> w0)
    : p(p_),
      q(q_),
      r(r_),
      time_weight(std::move(w1)),
      freq_weight(std::move(w2)),
      module_weight(std::move(w0)) {
  for (auto [e, name] : {std::pair{p, "p"}, {q, "q"}, {r, "r"}}) {
    validate_exponent(e, name);
    if (e == kInf) throw SpecError("space exponents must be finite");
  }
}

ANormReport a_norm(const SampledFunction& f, const SpaceSpec& s) {
  ANormReport rep;
  rep.time_part = amalgam_norm(f, s.p, 1.0, s.time_weight);
  FrequencyFunction fh = fourier(f);
  rep.freq_part = amalgam_norm(fh, s.q, s.r, s.freq_weight);
  rep.total = rep.time_part.global + rep.freq_part.global;
  const auto& locs = rep.freq_part.local_norms;
  rep.freq_tail = std::max(locs.begin()->second, locs.rbegin()->second);
  return rep;
}

ChainReport algebra_chain_check(const SampledFunction& f,
                                const SampledFunction& g, const SpaceSpec& s,
                                double slack) {
  ChainReport rep;
  SampledFunction conv = convolve(f, g);

  FrequencyFunction fh = fourier(f);
  FrequencyFunction gh = fourier(g);
  FrequencyFunction ch = fourier(conv);

  const double f_hat_sup = sup_magnitude(fh);
  const double f_l1 = weighted_lp_norm(f, 1.0, Weight::polynomial(0.0));
  const double f_time = amalgam_norm(f, s.p, 1.0, s.time_weight).global;
  const double g_time = amalgam_norm(g, s.p, 1.0, s.time_weight).global;
  const double g_freq = amalgam_norm(gh, s.q, s.r, s.freq_weight).global;
  const double c_time = amalgam_norm(conv, s.p, 1.0, s.time_weight).global;
  const double c_freq = amalgam_norm(ch, s.q, s.r, s.freq_weight).global;

  rep.lhs = c_time + c_freq;

  auto link = [&](std::string name, double lhs, double rhs) {
    rep.links.push_back({std::move(name), lhs, rhs, lhs <= rhs * (1.0 + slack)});
  };
  link("sup(f_hat) <= ||f||_1", f_hat_sup, f_l1);
  link("||f||_1 <= ||f||_(p1,w1)", f_l1, f_time);
  link("||(f*g)^|| <= sup(f_hat) ||g_hat||", c_freq, f_hat_sup * g_freq);

  rep.empirical_constant =
      f_time * g_time > 0.0 ? c_time / (f_time * g_time) : 0.0;

  rep.pass = true;
  for (const auto& l : rep.links) rep.pass = rep.pass && l.pass;
  return rep;
}

ModuleReport module_check(const SampledFunction& f, const SampledFunction& g,
                          const SpaceSpec& s, double slack) {
  if (!s.module_weight)
    throw SpecError("module_check needs a module weight in the space spec");
  DominanceVerdict dom = dominates(s.time_weight, *s.module_weight);
  if (!dom.holds)
    throw HypothesisError(
        "module hypothesis fails: time weight is not dominated by the module "
        "weight");

  SampledFunction conv = convolve(f, g);
  const double fg_a = a_norm(conv, s).total;
  const double f_a = a_norm(f, s).total;
  const double g_mod = weighted_lp_norm(g, 1.0, *s.module_weight);
  const double f_time = amalgam_norm(f, s.p, 1.0, s.time_weight).global;
  const double g_time1 = weighted_lp_norm(g, 1.0, s.time_weight);
  const double conv_time = amalgam_norm(conv, s.p, 1.0, s.time_weight).global;

  double c_emp =
      f_time * g_time1 > 0.0 ? conv_time / (f_time * g_time1) : 0.0;

  ModuleReport rep;
  rep.bound_constant = std::max(1.0, c_emp * dom.constant);
  rep.ratio = f_a * g_mod > 0.0 ? fg_a / (f_a * g_mod) : 0.0;
  rep.pass = rep.ratio <= rep.bound_constant * (1.0 + slack);
  return rep;
}

double DiscreteMeasure::weighted_mass(const Weight& w) const {
  double total = 0.0;
  for (const Atom& a : atoms) total += std::abs(a.mass) * w(a.location);
  return total;
}

SampledFunction measure_convolve(const DiscreteMeasure& mu,
                                 const SampledFunction& f) {
  SampledFunction acc = scaled(0.0, f);
  acc.sampler = nullptr;
  acc.edge_sampler = nullptr;
  for (const auto& atom : mu.atoms) {
    f.grid.to_steps(atom.location, "measure atom location");
    acc = lin_comb(1.0, acc, atom.mass, translate(f, atom.location));
  }
  acc.label = "measure*" + f.label;
  return acc;
}

double multiplier_norm_estimate(const DiscreteMeasure& mu, const SpaceSpec& s,
                                std::span<const SampledFunction> corpus) {
  if (corpus.empty()) throw SpecError("multiplier estimate needs a corpus");
  double best = 0.0;
  for (const SampledFunction& f : corpus) {
    double denom = amalgam_norm(f, 1.0, 1.0, s.time_weight).global;
    if (denom <= 0.0) throw SpecError("multiplier corpus members must be nonzero");
    double num = a_norm(measure_convolve(mu, f), s).total;
    best = std::max(best, num / denom);
  }
  return best;
}

MembershipReport membership_proxy(const SampledFunction& f, const SpaceSpec& s) {
  MembershipReport rep;
  rep.base = a_norm(f, s);
  ANormReport fine = a_norm(refine(f), s);
  auto rel = [](double a, double b) {
    double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
  };
  rep.time_rel_change = rel(rep.base.time_part.global, fine.time_part.global);
  rep.freq_rel_change = rel(rep.base.freq_part.global, fine.freq_part.global);
  rep.stable = std::isfinite(rep.base.total) && rep.time_rel_change < 0.01 &&
               rep.freq_rel_change < 0.01;
  return rep;
}

}  // namespace amalgam
