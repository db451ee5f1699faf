#include "amalgam/norms.hpp"

#include <cmath>
#include <vector>

#include "amalgam/errors.hpp"
#include "amalgam/parallel.hpp"

namespace amalgam {

void validate_exponent(double p, const char* what) {
  if (std::isnan(p) || p < 1.0)
    throw SpecError(std::string(what) + ": exponent must lie in [1, inf]");
}

namespace {

struct WeightedSamples {
  Eigen::ArrayXd mag;       // |f w| at samples
  Eigen::ArrayXd edge_mag;  // |f w| at cell right edges
};

WeightedSamples weighted_magnitudes(const SampledFunction& f, const Weight& w) {
  WeightedSamples ws;
  ws.mag = f.values.abs() * w(f.grid.sample_points());
  ws.edge_mag = f.edge_values.abs() * w(f.grid.edge_points());
  return ws;
}

// Simpson sum of g^p over cell block [k0, k0+m) plus the edge value.
double cell_power_integral(const Eigen::ArrayXd& mag, double edge_mag, int k0,
                           int m, double h, double p) {
  auto powp = [p](double v) {
    if (p == 1.0) return v;
    if (p == 2.0) return v * v;
    if (p == 3.0) return v * v * v;
    return std::pow(v, p);
  };
  if (m == 1) return 0.5 * (powp(mag[k0]) + powp(edge_mag));
  double s = powp(mag[k0]) + powp(edge_mag);
  for (int j = 1; j < m; j += 2) s += 4.0 * powp(mag[k0 + j]);
  for (int j = 2; j < m; j += 2) s += 2.0 * powp(mag[k0 + j]);
  return (h * s) / 3.0;
}

double cell_sup(const Eigen::ArrayXd& mag, double edge_mag, int k0, int m) {
  double v = edge_mag;
  for (int j = 0; j < m; ++j) v = std::max(v, mag[k0 + j]);
  return v;
}

std::vector<double> all_cell_norms(const SampledFunction& f, double p,
                                   const WeightedSamples& ws) {
  const GridSpec& g = f.grid;
  const int m = g.samples_per_cell;
  const double h = g.step();
  std::vector<double> locs(g.cell_count());
  parallel_for(g.cell_count(), [&](int c) {
    if (p == kInf) {
      locs[c] = cell_sup(ws.mag, ws.edge_mag[c], c * m, m);
    } else {
      double s = cell_power_integral(ws.mag, ws.edge_mag[c], c * m, m, h, p);
      locs[c] = p == 1.0 ? s : std::pow(s, 1.0 / p);
    }
  });
  return locs;
}

}  // namespace

double local_norm(const SampledFunction& f, int cell, double p,
                  const Weight& w) {
  validate_exponent(p, "local_norm p");
  if (!f.grid.cell_in_window(cell))
    throw SpecError("local_norm cell outside the window");
  const int m = f.grid.samples_per_cell;
  const int k0 = f.grid.cell_start(cell);
  const double h = f.grid.step();

  Eigen::ArrayXd xs(m);
  for (int j = 0; j < m; ++j) xs[j] = f.grid.x(k0 + j);
  Eigen::ArrayXd mag = f.values.segment(k0, m).abs() * w(xs);
  double edge_x = static_cast<double>(cell + 1);
  double edge_mag = std::abs(f.edge_values[cell + f.grid.half_width]) * w(edge_x);

  if (p == kInf) return cell_sup(mag, edge_mag, 0, m);
  double s = cell_power_integral(mag, edge_mag, 0, m, h, p);
  return p == 1.0 ? s : std::pow(s, 1.0 / p);
}

NormReport amalgam_norm(const SampledFunction& f, double p, double q,
                        const Weight& w) {
  validate_exponent(p, "amalgam_norm p");
  validate_exponent(q, "amalgam_norm q");

  NormReport rep;
  rep.p = p;
  rep.q = q;
  rep.weight = w;
  rep.grid = f.grid;

  WeightedSamples ws = weighted_magnitudes(f, w);
  std::vector<double> locs = all_cell_norms(f, p, ws);
  for (int c = 0; c < f.grid.cell_count(); ++c)
    rep.local_norms[f.grid.first_cell() + c] = locs[c];

  if (q == kInf) {
    double v = 0.0;
    for (double loc : locs) v = std::max(v, loc);
    rep.global = v;
  } else {
    double s = 0.0;
    for (double loc : locs) s += q == 1.0 ? loc : std::pow(loc, q);
    rep.global = q == 1.0 ? s : std::pow(s, 1.0 / q);
  }
  return rep;
}

double NormReport::recompute_global() const {
  if (q == kInf) {
    double v = 0.0;
    for (const auto& [_, loc] : local_norms) v = std::max(v, loc);
    return v;
  }
  double s = 0.0;
  for (const auto& [_, loc] : local_norms) s += q == 1.0 ? loc : std::pow(loc, q);
  return q == 1.0 ? s : std::pow(s, 1.0 / q);
}

double weighted_lp_norm(const SampledFunction& f, double p, const Weight& w) {
  validate_exponent(p, "weighted_lp_norm p");
  WeightedSamples ws = weighted_magnitudes(f, w);
  const GridSpec& g = f.grid;
  const int m = g.samples_per_cell;

  if (p == kInf) {
    double v = ws.edge_mag.maxCoeff();
    return std::max(v, ws.mag.maxCoeff());
  }
  double total = 0.0;
  for (int c = 0; c < g.cell_count(); ++c)
    total += cell_power_integral(ws.mag, ws.edge_mag[c], c * m, m, g.step(), p);
  return p == 1.0 ? total : std::pow(total, 1.0 / p);
}

double conjugate_exponent(double p) {
  validate_exponent(p, "conjugate_exponent");
  if (p == 1.0) return kInf;
  if (p == kInf) return 1.0;
  return p / (p - 1.0);
}

}  // namespace amalgam
