#ifndef AMALGAM_SPACE_HPP
#define AMALGAM_SPACE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amalgam/norms.hpp"
#include "amalgam/spectral.hpp"

namespace amalgam {

// Identifies one member of the double-weighted family: functions whose
// time side lies in (L^p_{w1}, l^1) and whose transform lies in
// (L^q_{w2}, l^r). Exponents are restricted to [1, inf).
struct SpaceSpec {
  double p = 2.0;
  double q = 2.0;
  double r = 2.0;
  Weight time_weight;              // w1
  Weight freq_weight;              // w2
  std::optional<Weight> module_weight;  // w0, for the module check

  SpaceSpec() = default;
  SpaceSpec(double p_, double q_, double r_, Weight w1, Weight w2,
            std::optional<Weight> w0 = std::nullopt);
};

struct ANormReport {
  double total = 0.0;
  NormReport time_part;  // (p, l^1, w1)
  NormReport freq_part;  // (q, l^r, w2) on the reciprocal grid
  double freq_tail = 0.0;  // larger of the two outermost frequency cell norms
};

// ||f||_{p1,w1} + ||f_hat||_{qr,w2}.
ANormReport a_norm(const SampledFunction& f, const SpaceSpec& s);

struct ChainLink {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct ChainReport {
  double lhs = 0.0;  // ||f*g|| in the space norm
  std::vector<ChainLink> links;
  bool pass = false;
  double empirical_constant = 0.0;  // realized C in the time-side product bound
};

// Verifies the convolution-algebra inequality chain link by link with
// multiplicative slack 1e-6; the time-side constant is reported, not bounded.
ChainReport algebra_chain_check(const SampledFunction& f,
                                const SampledFunction& g, const SpaceSpec& s,
                                double slack = 1e-6);

struct ModuleReport {
  bool pass = false;
  double ratio = 0.0;           // ||f*g|| / (||f|| ||g||_{1,w0})
  double bound_constant = 0.0;  // max{1, realized C * dominance constant}
};

// Banach-module bound ||f*g|| <= K ||f|| ||g||_{1,w0}; requires w1 dominated
// by w0 (HypothesisError otherwise).
ModuleReport module_check(const SampledFunction& f, const SampledFunction& g,
                          const SpaceSpec& s, double slack = 1e-6);

// Finite atomic measure with grid-aligned atom locations.
struct DiscreteMeasure {
  struct Atom {
    double location = 0.0;
    Complex mass = 0.0;
  };
  std::vector<Atom> atoms;

  // sum |c_i| w(x_i); finite by construction for finite atom lists.
  double weighted_mass(const Weight& w) const;
};

// mu * f = sum c_i f(. - x_i).
SampledFunction measure_convolve(const DiscreteMeasure& mu,
                                 const SampledFunction& f);

// Lower bound for the multiplier norm: max over the corpus of
// ||mu*f|| / ||f||_{11,w1}. Corpus members should be band-limited
// approximants (see band_limit) and must be nonzero.
double multiplier_norm_estimate(const DiscreteMeasure& mu, const SpaceSpec& s,
                                std::span<const SampledFunction> corpus);

struct MembershipReport {
  bool stable = false;  // both norm parts move < 1% under one refinement
  double time_rel_change = 0.0;
  double freq_rel_change = 0.0;
  ANormReport base;
};

// Numeric membership proxy: finite norm parts, stable under refinement.
MembershipReport membership_proxy(const SampledFunction& f, const SpaceSpec& s);

}  // namespace amalgam

#endif
