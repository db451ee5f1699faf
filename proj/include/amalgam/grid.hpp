#ifndef AMALGAM_GRID_HPP
#define AMALGAM_GRID_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>

namespace amalgam {

using Complex = std::complex<double>;
using Sampler = std::function<Complex(double)>;

// Uniform, integer-aligned grid over the truncation window [-L, L).
// Samples sit at x_k = -L + k/m; every integer in [-L, L) is a grid point
// and unit cells [n, n+1) hold exactly m samples each.
struct GridSpec {
  int half_width = 16;      // L
  int samples_per_cell = 256;  // m, a power of two

  GridSpec() = default;
  GridSpec(int L, int m);

  double step() const { return 1.0 / samples_per_cell; }
  int sample_count() const { return 2 * half_width * samples_per_cell; }
  int cell_count() const { return 2 * half_width; }
  int first_cell() const { return -half_width; }

  double x(int k) const {
    return static_cast<double>(-half_width * samples_per_cell + k) * step();
  }
  // First sample index of cell [n, n+1).
  int cell_start(int n) const { return (n + half_width) * samples_per_cell; }
  bool cell_in_window(int n) const {
    return n >= -half_width && n < half_width;
  }
  // True when v is an integer multiple of the step (within 1e-9 relative).
  bool aligned(double v) const;
  // Nearest sample index multiple for an aligned value; AlignmentError else.
  long to_steps(double v, const char* what) const;

  Eigen::ArrayXd sample_points() const;
  Eigen::ArrayXd edge_points() const;  // the right edge of each cell

  bool operator==(const GridSpec&) const = default;
};

// A complex-valued function sampled on a GridSpec and treated as 0 outside
// the window. Cells are half-open, so alongside the pointwise samples each
// cell carries the one-sided limit of the function at its right edge
// (`edge_values[c]`, the value "just inside" x = n+1). Generators built from
// closed forms keep their samplers so refinement can resample exactly.
struct SampledFunction {
  GridSpec grid;
  Eigen::ArrayXcd values;       // size grid.sample_count()
  Eigen::ArrayXcd edge_values;  // size grid.cell_count()
  std::string label;
  Sampler sampler;       // optional: pointwise closed form
  Sampler edge_sampler;  // optional: left-limit closed form

  bool regenerable() const { return static_cast<bool>(sampler); }
};

// Builds a function by evaluating samplers on the grid.
SampledFunction sample_onto(const GridSpec& grid, Sampler value_fn,
                            Sampler edge_fn, std::string label);

// chi_[a,b) with grid-aligned endpoints inside the window.
SampledFunction make_indicator(double a, double b, const GridSpec& grid);

// e^{-pi x^2}; self-dual under the transform used here.
SampledFunction make_gaussian(const GridSpec& grid);

// Mollifier profile exp(-1/(1-((x-center)/radius)^2)) scaled to unit
// quadrature on its own grid; exactly zero outside the open support.
SampledFunction make_bump(double center, double radius, const GridSpec& grid);

// Wraps raw samples; edge values are taken from the following sample
// (continuity assumption) and 0 at the window edge.
SampledFunction make_from_samples(Eigen::ArrayXcd values, const GridSpec& grid,
                                  std::string label = "samples");

SampledFunction zero_function(const GridSpec& grid);

// Integral over one half-open cell: composite Simpson over the m in-cell
// samples plus the cell's right-edge value (trapezoid when m = 1).
Complex quadrature(const SampledFunction& f, int cell);
// Integral over the window: the cell integrals summed in cell order, so the
// partition identity holds bit-exactly.
Complex quadrature(const SampledFunction& f);

// Same window, twice the sampling rate. Generator-backed functions are
// resampled from their closed forms; others are linearly interpolated.
SampledFunction refine(const SampledFunction& f);

// Pointwise linear combination a*f + b*g (grids must match).
SampledFunction lin_comb(Complex a, const SampledFunction& f, Complex b,
                         const SampledFunction& g);
SampledFunction scaled(Complex a, const SampledFunction& f);
SampledFunction pointwise_product(const SampledFunction& f,
                                  const SampledFunction& g);

inline SampledFunction operator+(const SampledFunction& f,
                                 const SampledFunction& g) {
  return lin_comb(1.0, f, 1.0, g);
}
inline SampledFunction operator-(const SampledFunction& f,
                                 const SampledFunction& g) {
  return lin_comb(1.0, f, -1.0, g);
}

// h * sum |values| — the discrete l1 mass used by window-overflow checks.
double sample_mass(const SampledFunction& f);

}  // namespace amalgam

#endif
