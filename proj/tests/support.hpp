// Shared test helpers: an independent Gauss-Legendre oracle for cell
// integrals (never touches the library quadrature) and corpus builders.
#ifndef AMALGAM_TESTS_SUPPORT_HPP
#define AMALGAM_TESTS_SUPPORT_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "amalgam/grid.hpp"
#include "amalgam/norms.hpp"
#include "amalgam/spectral.hpp"

namespace testsupport {

struct GaussLegendre {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;

  explicit GaussLegendre(int n) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }

  double integrate(const std::function<double(double)>& f, double a,
                   double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      s += weights[i] * f(mid + half * nodes[i]);
    return half * s;
  }
};

inline const GaussLegendre& gl() {
  static const GaussLegendre rule(48);
  return rule;
}

// True amalgam norm of a closed-form |f w| magnitude profile over unit cells
// of [-L, L); q may be amalgam::kInf.
inline double true_amalgam_norm(const std::function<double(double)>& mag,
                                double p, double q, int L) {
  std::vector<double> locs;
  for (int n = -L; n < L; ++n) {
    double cell =
        gl().integrate([&](double x) { return std::pow(mag(x), p); }, n, n + 1);
    locs.push_back(std::pow(cell, 1.0 / p));
  }
  if (q == amalgam::kInf) {
    double v = 0.0;
    for (double loc : locs) v = std::max(v, loc);
    return v;
  }
  double s = 0.0;
  for (double loc : locs) s += std::pow(loc, q);
  return std::pow(s, 1.0 / q);
}

inline double gaussian_mag(double x) { return std::exp(-M_PI * x * x); }

inline std::vector<amalgam::SampledFunction> acceptance_corpus(
    const amalgam::GridSpec& grid) {
  using namespace amalgam;
  std::vector<SampledFunction> corpus;
  corpus.push_back(make_gaussian(grid));
  corpus.push_back(make_bump(0.0, 0.5, grid));
  corpus.push_back(make_bump(1.0, 0.25, grid));
  corpus.push_back(make_indicator(0.0, 1.0, grid));
  corpus.push_back(make_indicator(-2.0, 1.0, grid));
  corpus.push_back(modulate(make_gaussian(grid), 1.0));
  return corpus;
}

inline std::vector<amalgam::SampledFunction> smooth_corpus(
    const amalgam::GridSpec& grid) {
  using namespace amalgam;
  std::vector<SampledFunction> corpus;
  corpus.push_back(make_gaussian(grid));
  corpus.push_back(make_bump(0.0, 0.5, grid));
  corpus.push_back(make_bump(1.0, 0.25, grid));
  corpus.push_back(modulate(make_gaussian(grid), 1.0));
  return corpus;
}

// Deterministic uniform doubles for property-style tests.
struct Rng {
  unsigned long long state;
  explicit Rng(unsigned long long seed) : state(seed ? seed : 1) {}
  unsigned long long next() {
    // splitmix64
    unsigned long long z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }
  int pick(int n) { return static_cast<int>(next() % static_cast<unsigned long long>(n)); }
};

}  // namespace testsupport

#endif
