#ifndef AMALGAM_NORMS_HPP
#define AMALGAM_NORMS_HPP

#include <limits>
#include <map>

#include "amalgam/grid.hpp"
#include "amalgam/weights.hpp"

namespace amalgam {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Exponents live in [1, inf]; kInf selects the sup-norm variant.
void validate_exponent(double p, const char* what);

struct NormReport {
  double p = 2.0;
  double q = 2.0;
  Weight weight;
  GridSpec grid;
  std::map<int, double> local_norms;  // cell index -> local norm
  double global = 0.0;

  double recompute_global() const;  // l^q of local_norms in cell order
};

// || f w ||_{L^p(I_n)} on one cell; the sup variant takes the max of the
// weighted samples including the cell's right-edge value.
double local_norm(const SampledFunction& f, int cell, double p,
                  const Weight& w);

// Local L^p norms on every window cell aggregated in l^q, cells in
// increasing order (deterministic reduction).
NormReport amalgam_norm(const SampledFunction& f, double p, double q,
                        const Weight& w);

// Whole-window || f w ||_p; agrees with the diagonal amalgam norm.
double weighted_lp_norm(const SampledFunction& f, double p, const Weight& w);

// p / (p-1) with the usual conventions at 1 and infinity.
double conjugate_exponent(double p);

}  // namespace amalgam

#endif
