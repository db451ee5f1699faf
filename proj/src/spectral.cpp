#include "amalgam/spectral.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>

#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

constexpr double kMassTolerance = 1e-12;

int next_pow2(int v) {
  int p = 1;
  while (p < v) p <<= 1;
  return p;
}

Eigen::VectorXcd padded_fft(const Eigen::ArrayXcd& values, int P) {
  Eigen::VectorXcd in = Eigen::VectorXcd::Zero(P);
  in.head(values.size()) = values.matrix();
  Eigen::VectorXcd out(P);
  Eigen::FFT<double> fft;
  fft.fwd(out, in);
  return out;
}

Complex unit_phase(double turns) {
  double t = std::remainder(turns, 1.0);
  return {std::cos(2.0 * M_PI * t), std::sin(2.0 * M_PI * t)};
}

}  // namespace

SampledFunction translate(const SampledFunction& f, double shift) {
  const GridSpec& g = f.grid;
  const long s = g.to_steps(shift, "translate shift");
  const int n = g.sample_count();
  const int m = g.samples_per_cell;

  double dropped = 0.0;
  if (s > 0)
    for (long k = n - s; k < n; ++k)
      if (k >= 0) dropped += std::abs(f.values[k]);
  if (s < 0)
    for (long k = 0; k < -s; ++k)
      if (k < n) dropped += std::abs(f.values[k]);
  dropped *= g.step();
  if (dropped > kMassTolerance * sample_mass(f))
    throw WindowOverflowError("translate by " + std::to_string(shift) +
                              " pushes support past the window");

  SampledFunction out;
  out.grid = g;
  out.label = f.label + "<-" + std::to_string(shift);
  out.values = Eigen::ArrayXcd::Zero(n);
  for (long k = 0; k < n; ++k) {
    long src = k - s;
    if (src >= 0 && src < n) out.values[k] = f.values[src];
  }
  out.edge_values = Eigen::ArrayXcd::Zero(g.cell_count());
  if (s % m == 0) {
    long cs = s / m;
    for (int c = 0; c < g.cell_count(); ++c) {
      long src = c - cs;
      if (src >= 0 && src < g.cell_count()) out.edge_values[c] = f.edge_values[src];
    }
  } else {
    for (int c = 0; c < g.cell_count(); ++c) {
      long src = static_cast<long>(c + 1) * m - s;
      if (src >= 0 && src < n) out.edge_values[c] = f.values[src];
    }
  }
  if (f.sampler) {
    auto fs = f.sampler;
    out.sampler = [fs, shift](double x) { return fs(x - shift); };
    auto fe = f.edge_sampler;
    out.edge_sampler = [fe, shift](double x) { return fe(x - shift); };
  }
  return out;
}

SampledFunction modulate(const SampledFunction& f, double freq) {
  SampledFunction out;
  out.grid = f.grid;
  out.label = f.label + "*e(" + std::to_string(freq) + ")";
  out.values.resize(f.values.size());
  for (int k = 0; k < f.grid.sample_count(); ++k)
    out.values[k] = f.values[k] * unit_phase(freq * f.grid.x(k));
  out.edge_values.resize(f.edge_values.size());
  for (int c = 0; c < f.grid.cell_count(); ++c) {
    double x = static_cast<double>(f.grid.first_cell() + c + 1);
    out.edge_values[c] = f.edge_values[c] * unit_phase(freq * x);
  }
  if (f.sampler) {
    auto fs = f.sampler;
    out.sampler = [fs, freq](double x) { return fs(x) * unit_phase(freq * x); };
    auto fe = f.edge_sampler;
    out.edge_sampler = [fe, freq](double x) { return fe(x) * unit_phase(freq * x); };
  }
  return out;
}

GridSpec reciprocal_grid(const GridSpec& g) {
  if (g.samples_per_cell < 2)
    throw SpecError("reciprocal grid needs at least 2 samples per cell");
  const int P = next_pow2(4 * g.sample_count());
  return GridSpec(g.samples_per_cell / 2, P / g.samples_per_cell);
}

FrequencyFunction fourier(const SampledFunction& f) {
  const GridSpec& g = f.grid;
  const GridSpec rg = reciprocal_grid(g);
  const int P = rg.sample_count();
  const double h = g.step();
  const double dxi = 1.0 / (P * h);

  Eigen::VectorXcd spec = padded_fft(f.values, P);

  FrequencyFunction out;
  out.grid = rg;
  out.label = "^(" + f.label + ")";
  out.values.resize(P);
  // alpha = L * dxi turns per bin; exact dyadic for power-of-two grids.
  const double alpha = static_cast<double>(g.half_width) * dxi;
  for (int i = 0; i < P; ++i) {
    const int signed_i = i - P / 2;              // shifted bin index
    const int raw = (signed_i + P) % P;          // DFT bin
    out.values[i] = h * spec[raw] * unit_phase(alpha * signed_i);
  }
  out.edge_values.resize(rg.cell_count());
  const int mf = rg.samples_per_cell;
  for (int c = 0; c < rg.cell_count(); ++c) {
    int next = (c + 1) * mf;
    // The +Nyquist edge and the -Nyquist sample share a bin (phase 1 there).
    out.edge_values[c] = next < P ? out.values[next] : out.values[0];
  }
  return out;
}

namespace {

SampledFunction convolve_impl(const SampledFunction& f, const SampledFunction& g,
                              bool allow_spill, double* spilled) {
  if (!(f.grid == g.grid)) throw SpecError("convolve needs matching grids");
  const GridSpec& gr = f.grid;
  const int n = gr.sample_count();
  const int m = gr.samples_per_cell;
  const int P = next_pow2(4 * n);
  const double h = gr.step();

  Eigen::VectorXcd fa = padded_fft(f.values, P);
  Eigen::VectorXcd ga = padded_fft(g.values, P);
  Eigen::VectorXcd prod = fa.cwiseProduct(ga);
  Eigen::VectorXcd conv(P);
  Eigen::FFT<double> fft;
  fft.inv(conv, prod);
  conv *= h;  // result index j corresponds to x = -2L + j h

  const int w0 = gr.half_width * m;  // index of x = -L
  double outside = 0.0;
  for (int j = 0; j < P; ++j)
    if (j < w0 || j >= w0 + n) outside += std::abs(conv[j]);
  outside *= h;
  double total = h * conv.array().abs().sum();
  if (spilled) *spilled = outside;
  if (!allow_spill && outside > kMassTolerance * total)
    throw WindowOverflowError("convolution support does not fit the window");

  SampledFunction out;
  out.grid = gr;
  out.label = f.label + "*" + g.label;
  out.values = conv.segment(w0, n).array();
  out.edge_values.resize(gr.cell_count());
  for (int c = 0; c < gr.cell_count(); ++c)
    out.edge_values[c] = conv[w0 + (c + 1) * m];  // conv output is continuous

  const bool real_inputs =
      (f.values.imag() == 0.0).all() && (g.values.imag() == 0.0).all();
  if (real_inputs) {
    double resid = out.values.imag().abs().maxCoeff();
    if (resid > 1e-10)
      throw Error("convolution imaginary residue exceeds 1e-10");
    out.values.imag().setZero();
    out.edge_values.imag().setZero();
  }
  return out;
}

}  // namespace

SampledFunction convolve(const SampledFunction& f, const SampledFunction& g) {
  return convolve_impl(f, g, false, nullptr);
}

SampledFunction convolve_truncated(const SampledFunction& f,
                                   const SampledFunction& g, double* spilled) {
  return convolve_impl(f, g, true, spilled);
}

std::vector<Complex> direct_convolve(const SampledFunction& f,
                                     const SampledFunction& g,
                                     std::span<const double> points) {
  if (!(f.grid == g.grid)) throw SpecError("direct_convolve needs matching grids");
  const GridSpec& gr = f.grid;
  const int n = gr.sample_count();
  const double h = gr.step();

  std::vector<Complex> out;
  out.reserve(points.size());
  for (double x : points) {
    const long X = gr.to_steps(x + 2.0 * gr.half_width, "direct_convolve point");
    Complex acc = 0.0;
    const long klo = std::max<long>(0, X - n + 1);
    const long khi = std::min<long>(n - 1, X);
    for (long k = klo; k <= khi; ++k) acc += f.values[k] * g.values[X - k];
    out.push_back(h * acc);
  }
  return out;
}

namespace {

// C-infinity step: 0 at u<=0, 1 at u>=1.
double smooth_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  double a = std::exp(-1.0 / u);
  double b = std::exp(-1.0 / (1.0 - u));
  return a / (a + b);
}

}  // namespace

SampledFunction band_limit(const SampledFunction& f, double cutoff,
                           double taper) {
  if (!(cutoff > 0.0)) throw SpecError("band_limit cutoff must be positive");
  if (taper < 0.0 || taper >= cutoff)
    throw SpecError("band_limit taper must lie in [0, cutoff)");
  const GridSpec& g = f.grid;
  const int n = g.sample_count();
  const int P = next_pow2(4 * n);
  const double dxi = static_cast<double>(g.samples_per_cell) / P;

  Eigen::VectorXcd spec = padded_fft(f.values, P);
  for (int i = 0; i < P; ++i) {
    const int si = i <= P / 2 ? i : i - P;
    const double axi = std::abs(si * dxi);
    if (axi > cutoff) {
      spec[i] = 0.0;
    } else if (taper > 0.0 && axi > cutoff - taper) {
      spec[i] *= smooth_step((cutoff - axi) / taper);
    }
  }
  Eigen::VectorXcd back(P);
  Eigen::FFT<double> fft;
  fft.inv(back, spec);

  SampledFunction out;
  out.grid = g;
  out.label = f.label + "|band<=" + std::to_string(cutoff);
  out.values = back.head(n).array();
  out.edge_values.resize(g.cell_count());
  const int m = g.samples_per_cell;
  for (int c = 0; c < g.cell_count(); ++c)
    out.edge_values[c] = back[(c + 1) * m];  // band-limited output is smooth

  const bool real_input = (f.values.imag() == 0.0).all();
  if (real_input) {
    out.values.imag().setZero();
    out.edge_values.imag().setZero();
  }
  return out;
}

}  // namespace amalgam
