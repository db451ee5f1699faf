#ifndef AMALGAM_VERIFIER_HPP
#define AMALGAM_VERIFIER_HPP

#include <span>
#include <string>
#include <vector>

#include "amalgam/decide.hpp"
#include "amalgam/space.hpp"

namespace amalgam {

struct SuiteCase {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
  std::string note;
};

// One theorem-keyed check suite. Every suite is evaluated twice, at the
// input grid and once refined; grid_refinement_delta is the largest relative
// movement of any measured value and a verdict flip is recorded in notes.
struct SuiteReport {
  std::string theorem_tag;
  std::vector<SuiteCase> cases;
  bool overall_pass = false;
  double grid_refinement_delta = 0.0;
  std::vector<std::string> notes;
};

// Upper bound ||T_y f|| <= w1(y) ||f|| per shift (slack 1e-9) plus the
// realized lower-ratio floor min_y ||T_y f|| / w1(y), which must be positive.
// Shifts that would push mass out of the window clip the sweep (noted).
SuiteReport translation_bounds(const SampledFunction& f, const SpaceSpec& s,
                               std::span<const double> shifts,
                               double slack = 1e-9);

// For each epsilon (absolute), the largest grid-aligned delta with
// ||T_y f - f|| < epsilon for every |y| <= delta; asserts delta >= h and
// monotonicity in epsilon. Meant for smooth inputs.
SuiteReport translation_continuity(const SampledFunction& f, const SpaceSpec& s,
                                   std::span<const double> epsilons);

// Requires decide_embedding(src, dst) to fire; scans the corpus for the
// realized norm ratio and compares against the rule's analytic constant.
SuiteReport embedding_constant(const SpaceSpec& src, const SpaceSpec& dst,
                               std::span<const SampledFunction> corpus,
                               double slack = 1e-6);

// Normalized translate family f_n = T_{t_n} f / w1(t_n): boundedness, decay
// of the pairing against a fixed compactly supported kernel, and the norm
// floor in the target weight. Requires the target weight dominated by w1
// with a non-vanishing ratio (HypothesisError otherwise).
SuiteReport noncompactness_witness(const SampledFunction& f,
                                   const Weight& target, const SpaceSpec& s,
                                   std::span<const double> shifts,
                                   double ratio_floor = 1e-6,
                                   double slack = 1e-9);

// Mollifier stage: ||g_rho * f - f|| nonincreasing over the radii and small
// at the end; band-limit stage: a cutoff B with ||g - h_B||_{1,w1} < 0.01
// inside the frequency window plus the remainder chain checks.
SuiteReport approximate_identity(const SampledFunction& f, const SpaceSpec& s,
                                 std::span<const double> radii);

// Pairings of each f_n against a compactly supported kernel, checked against
// the Hoelder bound ||k||_{p',w1} ||f_n||_{p,w1}.
SuiteReport vague_convergence(std::span<const SampledFunction> fs,
                              const SampledFunction& k, const SpaceSpec& s,
                              double slack = 1e-6);

// Converse scan: when the required time-weight dominance fails, the
// dst/src norm ratio along the translate family must grow; the last ratio
// has to exceed 10x the first.
SuiteReport divergence_scan(const SpaceSpec& src, const SpaceSpec& dst,
                            const SampledFunction& f,
                            std::span<const double> shifts);

// Local-integrability chain per corpus member: cell mass <= unweighted L^1
// <= weighted L^1 <= time amalgam norm <= full space norm (slack 1e-9).
SuiteReport bf_chain(std::span<const SampledFunction> corpus,
                     const SpaceSpec& s, double slack = 1e-9);

// Convolution-algebra chain over all ordered corpus pairs.
SuiteReport algebra_suite(std::span<const SampledFunction> corpus,
                          const SpaceSpec& s, double slack = 1e-6);

// Module bound over all ordered corpus pairs (spec needs module_weight).
SuiteReport module_suite(std::span<const SampledFunction> corpus,
                         const SpaceSpec& s, double slack = 1e-6);

}  // namespace amalgam

#endif
