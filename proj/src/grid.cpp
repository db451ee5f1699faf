#include "amalgam/grid.hpp"

#include <cmath>

#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

bool is_pow2(int v) { return v > 0 && (v & (v - 1)) == 0; }

void check_finite(const Eigen::ArrayXcd& v, const char* what) {
  if (!v.isFinite().all())
    throw SpecError(std::string(what) + ": samples must be finite");
}

}  // namespace

GridSpec::GridSpec(int L, int m) : half_width(L), samples_per_cell(m) {
  if (L < 1) throw SpecError("grid half-width must be a positive integer");
  if (!is_pow2(m))
    throw SpecError("samples per cell must be a positive power of two");
}

bool GridSpec::aligned(double v) const {
  double steps = v * samples_per_cell;
  return std::abs(steps - std::round(steps)) <= 1e-9 * std::max(1.0, std::abs(steps));
}

long GridSpec::to_steps(double v, const char* what) const {
  if (!aligned(v))
    throw AlignmentError(std::string(what) + ": value " + std::to_string(v) +
                         " is not grid-aligned");
  return std::lround(v * samples_per_cell);
}

Eigen::ArrayXd GridSpec::sample_points() const {
  const int n = sample_count();
  Eigen::ArrayXd xs(n);
  for (int k = 0; k < n; ++k) xs[k] = x(k);
  return xs;
}

Eigen::ArrayXd GridSpec::edge_points() const {
  Eigen::ArrayXd xs(cell_count());
  for (int c = 0; c < cell_count(); ++c)
    xs[c] = static_cast<double>(first_cell() + c + 1);
  return xs;
}

SampledFunction sample_onto(const GridSpec& grid, Sampler value_fn,
                            Sampler edge_fn, std::string label) {
  SampledFunction f;
  f.grid = grid;
  f.label = std::move(label);
  f.values.resize(grid.sample_count());
  for (int k = 0; k < grid.sample_count(); ++k) f.values[k] = value_fn(grid.x(k));
  f.edge_values.resize(grid.cell_count());
  const Sampler& efn = edge_fn ? edge_fn : value_fn;
  for (int c = 0; c < grid.cell_count(); ++c)
    f.edge_values[c] = efn(static_cast<double>(grid.first_cell() + c + 1));
  f.sampler = std::move(value_fn);
  f.edge_sampler = edge_fn ? std::move(edge_fn) : f.sampler;
  check_finite(f.values, f.label.c_str());
  check_finite(f.edge_values, f.label.c_str());
  return f;
}

SampledFunction make_indicator(double a, double b, const GridSpec& grid) {
  const double L = grid.half_width;
  if (!(a < b) || a < -L || b > L)
    throw SpecError("indicator needs -L <= a < b <= L");
  grid.to_steps(a, "indicator endpoint a");
  grid.to_steps(b, "indicator endpoint b");
  auto value = [a, b](double x) -> Complex { return (x >= a && x < b) ? 1.0 : 0.0; };
  auto edge = [a, b](double x) -> Complex { return (x > a && x <= b) ? 1.0 : 0.0; };
  std::string label = "indicator[" + std::to_string(a) + "," + std::to_string(b) + ")";
  return sample_onto(grid, value, edge, std::move(label));
}

SampledFunction make_gaussian(const GridSpec& grid) {
  auto value = [](double x) -> Complex { return std::exp(-M_PI * x * x); };
  return sample_onto(grid, value, value, "gaussian");
}

SampledFunction make_bump(double center, double radius, const GridSpec& grid) {
  if (!(radius >= 2.0 * grid.step()))
    throw SpecError("bump radius below 2h is unresolvable");
  if (center - radius < -grid.half_width || center + radius > grid.half_width)
    throw SpecError("bump support must fit the window");
  auto profile = [center, radius](double x) -> Complex {
    double u = (x - center) / radius;
    double d = 1.0 - u * u;
    if (d <= 0.0) return 0.0;
    return std::exp(-1.0 / d);
  };
  SampledFunction raw = sample_onto(grid, profile, profile, "bump-profile");
  double q = quadrature(raw).real();
  auto value = [profile, q](double x) -> Complex { return profile(x) / q; };
  std::string label =
      "bump(" + std::to_string(center) + "," + std::to_string(radius) + ")";
  return sample_onto(grid, value, value, std::move(label));
}

SampledFunction make_from_samples(Eigen::ArrayXcd values, const GridSpec& grid,
                                  std::string label) {
  if (values.size() != grid.sample_count())
    throw SpecError("sample array length does not match the grid");
  check_finite(values, label.c_str());
  SampledFunction f;
  f.grid = grid;
  f.label = std::move(label);
  f.values = std::move(values);
  f.edge_values.resize(grid.cell_count());
  const int m = grid.samples_per_cell;
  for (int c = 0; c < grid.cell_count(); ++c) {
    int next = (c + 1) * m;
    f.edge_values[c] = next < grid.sample_count() ? f.values[next] : 0.0;
  }
  return f;
}

SampledFunction zero_function(const GridSpec& grid) {
  auto z = [](double) -> Complex { return 0.0; };
  return sample_onto(grid, z, z, "zero");
}

Complex quadrature(const SampledFunction& f, int cell) {
  if (!f.grid.cell_in_window(cell))
    throw SpecError("quadrature cell outside the window");
  const int m = f.grid.samples_per_cell;
  const int k0 = f.grid.cell_start(cell);
  const Complex edge = f.edge_values[cell + f.grid.half_width];
  if (m == 1) return 0.5 * (f.values[k0] + edge);
  Complex s = f.values[k0] + edge;
  for (int j = 1; j < m; j += 2) s += 4.0 * f.values[k0 + j];
  for (int j = 2; j < m; j += 2) s += 2.0 * f.values[k0 + j];
  return (f.grid.step() * s) / 3.0;
}

Complex quadrature(const SampledFunction& f) {
  Complex total = 0.0;
  for (int n = f.grid.first_cell(); n < f.grid.half_width; ++n)
    total += quadrature(f, n);
  return total;
}

SampledFunction refine(const SampledFunction& f) {
  GridSpec fine(f.grid.half_width, 2 * f.grid.samples_per_cell);
  if (f.regenerable())
    return sample_onto(fine, f.sampler, f.edge_sampler, f.label);

  SampledFunction out;
  out.grid = fine;
  out.label = f.label;
  out.edge_values = f.edge_values;
  out.values.resize(fine.sample_count());
  const int m = f.grid.samples_per_cell;
  const int n = f.grid.sample_count();
  for (int k = 0; k < n; ++k) {
    out.values[2 * k] = f.values[k];
    Complex right;
    if ((k + 1) % m == 0)
      right = f.edge_values[k / m];  // midpoint lies inside this cell
    else
      right = f.values[k + 1];
    out.values[2 * k + 1] = 0.5 * (f.values[k] + right);
  }
  return out;
}

SampledFunction lin_comb(Complex a, const SampledFunction& f, Complex b,
                         const SampledFunction& g) {
  if (!(f.grid == g.grid)) throw SpecError("grid mismatch in linear combination");
  SampledFunction out;
  out.grid = f.grid;
  out.label = f.label + "+" + g.label;
  out.values = a * f.values + b * g.values;
  out.edge_values = a * f.edge_values + b * g.edge_values;
  if (f.sampler && g.sampler) {
    auto fs = f.sampler, gs = g.sampler;
    out.sampler = [a, b, fs, gs](double x) { return a * fs(x) + b * gs(x); };
    auto fe = f.edge_sampler, ge = g.edge_sampler;
    out.edge_sampler = [a, b, fe, ge](double x) { return a * fe(x) + b * ge(x); };
  }
  return out;
}

SampledFunction scaled(Complex a, const SampledFunction& f) {
  SampledFunction out;
  out.grid = f.grid;
  out.label = f.label;
  out.values = a * f.values;
  out.edge_values = a * f.edge_values;
  if (f.sampler) {
    auto fs = f.sampler;
    out.sampler = [a, fs](double x) { return a * fs(x); };
    auto fe = f.edge_sampler;
    out.edge_sampler = [a, fe](double x) { return a * fe(x); };
  }
  return out;
}

SampledFunction pointwise_product(const SampledFunction& f,
                                  const SampledFunction& g) {
  if (!(f.grid == g.grid)) throw SpecError("grid mismatch in product");
  SampledFunction out;
  out.grid = f.grid;
  out.label = f.label + "*" + g.label;
  out.values = f.values * g.values;
  out.edge_values = f.edge_values * g.edge_values;
  if (f.sampler && g.sampler) {
    auto fs = f.sampler, gs = g.sampler;
    out.sampler = [fs, gs](double x) { return fs(x) * gs(x); };
    auto fe = f.edge_sampler, ge = g.edge_sampler;
    out.edge_sampler = [fe, ge](double x) { return fe(x) * ge(x); };
  }
  return out;
}

double sample_mass(const SampledFunction& f) {
  return f.grid.step() * f.values.abs().sum();
}

}  // namespace amalgam
