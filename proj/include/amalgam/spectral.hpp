#ifndef AMALGAM_SPECTRAL_HPP
#define AMALGAM_SPECTRAL_HPP

#include <span>
#include <vector>

#include "amalgam/grid.hpp"

namespace amalgam {

// Frequency-domain functions reuse the sampled-function machinery on the
// reciprocal grid, so amalgam norms of transforms need nothing new.
using FrequencyFunction = SampledFunction;

// f(x - shift); shift must be a multiple of the step and the shifted
// support must stay inside the window (checked by l1 mass, 1e-12 relative).
SampledFunction translate(const SampledFunction& f, double shift);

// e^{2 pi i freq x} f(x).
SampledFunction modulate(const SampledFunction& f, double freq);

// Reciprocal grid of g: window [-m/2, m/2), P/m samples per unit frequency,
// where P = next_pow2(4 sample_count) is the transform length.
GridSpec reciprocal_grid(const GridSpec& g);

// f_hat(xi) = integral f(x) e^{-2 pi i x xi} dx, evaluated as the h-scaled
// DFT of the zero-padded samples with the phase correction for the window
// origin at -L; output covers the full reciprocal window.
FrequencyFunction fourier(const SampledFunction& f);

// (f*g)(x) via transform-multiply-inverse on the padded grid. The combined
// support must fit the window; real inputs get their imaginary residue
// (checked <= 1e-10) discarded.
SampledFunction convolve(const SampledFunction& f, const SampledFunction& g);

// Same computation with mass escaping the window truncated instead of
// rejected; the truncated l1 mass is written to *spilled when given.
SampledFunction convolve_truncated(const SampledFunction& f,
                                   const SampledFunction& g,
                                   double* spilled = nullptr);

// Riemann-sum oracle for convolve: h * sum_k f(x_k) g(x - x_k) at each
// requested grid-aligned point, O(N) per point and independent of the FFT.
std::vector<Complex> direct_convolve(const SampledFunction& f,
                                     const SampledFunction& g,
                                     std::span<const double> points);

// Projection onto frequencies |xi| <= cutoff; the result lives on the
// original grid. With taper > 0 the spectrum rolls off smoothly between
// cutoff - taper and cutoff instead of being cut sharply, which keeps the
// spatial tails of the projection below the translation mass tolerance.
SampledFunction band_limit(const SampledFunction& f, double cutoff,
                           double taper = 0.0);

}  // namespace amalgam

#endif
