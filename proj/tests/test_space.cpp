#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "amalgam/errors.hpp"
#include "amalgam/space.hpp"
#include "support.hpp"

using namespace amalgam;
using testsupport::true_amalgam_norm;

namespace {

SpaceSpec spec222_w1() {
  return SpaceSpec(2, 2, 2, Weight::polynomial(1.0), Weight::polynomial(1.0));
}

}  // namespace

TEST_CASE("space spec validation") {
  CHECK_THROWS_AS(SpaceSpec(0.5, 2, 2, Weight(), Weight()), SpecError);
  CHECK_THROWS_AS(SpaceSpec(2, kInf, 2, Weight(), Weight()), SpecError);
}

TEST_CASE("a-norm of the zero function") {
  GridSpec g(16, 256);
  ANormReport rep = a_norm(zero_function(g), spec222_w1());
  CHECK(rep.total == 0.0);
  CHECK(rep.time_part.global == 0.0);
  CHECK(rep.freq_part.global == 0.0);
}

TEST_CASE("integer modulation leaves the unweighted-frequency a-norm unchanged") {
  GridSpec g(16, 256);
  SpaceSpec s(2, 2, 2, Weight::polynomial(1.0), Weight::polynomial(0.0));
  SampledFunction f = make_gaussian(g);
  double base = a_norm(f, s).total;
  double moved = a_norm(modulate(f, 1.0), s).total;
  // the transform shifts by one whole frequency cell: cells permute
  CHECK(moved == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("gaussian a-norm against the high-resolution oracle") {
  GridSpec g(16, 256);
  double measured = a_norm(make_gaussian(g), spec222_w1()).total;
  double time_part = true_amalgam_norm(
      [](double x) { return (1.0 + std::abs(x)) * testsupport::gaussian_mag(x); },
      2.0, 1.0, 16);
  // the transform of the gaussian is itself; oracle works on the closed form
  double freq_part = true_amalgam_norm(
      [](double x) { return (1.0 + std::abs(x)) * testsupport::gaussian_mag(x); },
      2.0, 2.0, 128);
  CHECK(std::abs(measured - (time_part + freq_part)) <= 1e-5);
}

TEST_CASE("a-norm report carries the frequency tail bound") {
  GridSpec g(16, 256);
  ANormReport rep = a_norm(make_indicator(0.0, 1.0, g), spec222_w1());
  CHECK(rep.freq_tail > 0.0);  // sinc tails reach the window edge
  CHECK(rep.freq_tail <= rep.freq_part.global);
}

TEST_CASE("a-norm satisfies the norm axioms on random pairs") {
  GridSpec g(8, 128);
  auto corpus = testsupport::acceptance_corpus(g);
  SpaceSpec s(2, 2, 2, Weight::polynomial(1.0), Weight::polynomial(1.0));
  testsupport::Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& f = corpus[rng.pick(corpus.size())];
    const auto& h = corpus[rng.pick(corpus.size())];
    Complex alpha(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    double nf = a_norm(f, s).total;
    double nh = a_norm(h, s).total;
    CHECK(a_norm(f + h, s).total <= (nf + nh) * (1.0 + 1e-12));
    CHECK(a_norm(scaled(alpha, f), s).total ==
          doctest::Approx(std::abs(alpha) * nf).epsilon(1e-12));
  }
}

TEST_CASE("algebra chain on indicator pair") {
  GridSpec g(16, 256);
  SpaceSpec s(2, 2, 2, Weight::polynomial(0.0), Weight::polynomial(0.0));
  SampledFunction chi = make_indicator(0.0, 1.0, g);
  ChainReport rep = algebra_chain_check(chi, chi, s);
  CHECK(rep.pass);
  // the transform-side product link is saturated at ratio <= 1
  const ChainLink& lb = rep.links[2];
  CHECK(lb.lhs <= lb.rhs * (1.0 + 1e-6));
  CHECK(rep.empirical_constant > 0.0);
}

TEST_CASE("algebra chain on gaussian and bump") {
  GridSpec g(16, 256);
  SpaceSpec s(3, 2, 1, Weight::polynomial(1.0), Weight::polynomial(1.0));
  ChainReport rep =
      algebra_chain_check(make_gaussian(g), make_bump(0.0, 0.5, g), s);
  CHECK(rep.pass);
  CHECK(rep.lhs > 0.0);
}

TEST_CASE("algebra chain on the zero function") {
  GridSpec g(16, 256);
  ChainReport rep =
      algebra_chain_check(zero_function(g), make_gaussian(g), spec222_w1());
  CHECK(rep.pass);
  CHECK(rep.lhs == 0.0);
}

TEST_CASE("module bound holds when the weights nest") {
  GridSpec g(16, 256);
  SpaceSpec s(2, 2, 2, Weight::polynomial(1.0), Weight::polynomial(1.0),
              Weight::polynomial(2.0));
  ModuleReport rep = module_check(make_gaussian(g), make_bump(0.0, 0.5, g), s);
  CHECK(rep.pass);
  CHECK(rep.ratio > 0.0);
  CHECK(rep.ratio <= rep.bound_constant * (1.0 + 1e-6));
}

TEST_CASE("module hypothesis violation is rejected") {
  GridSpec g(16, 256);
  SpaceSpec s(2, 2, 2, Weight::polynomial(2.0), Weight::polynomial(1.0),
              Weight::polynomial(1.0));
  CHECK_THROWS_AS(module_check(make_gaussian(g), make_bump(0.0, 0.5, g), s),
                  HypothesisError);
}

TEST_CASE("module bound with a zero factor") {
  GridSpec g(16, 256);
  SpaceSpec s(2, 2, 2, Weight::polynomial(1.0), Weight::polynomial(1.0),
              Weight::polynomial(2.0));
  ModuleReport rep = module_check(make_gaussian(g), zero_function(g), s);
  CHECK(rep.pass);
  CHECK(rep.ratio == 0.0);
}

TEST_CASE("measure convolution basics") {
  GridSpec g(16, 256);
  SampledFunction chi = make_indicator(0.0, 1.0, g);

  DiscreteMeasure identity{{{0.0, 1.0}}};
  SampledFunction same = measure_convolve(identity, chi);
  CHECK((same.values == chi.values).all());

  DiscreteMeasure shift{{{1.0, 1.0}}};
  SampledFunction moved = measure_convolve(shift, chi);
  SampledFunction direct = make_indicator(1.0, 2.0, g);
  CHECK((moved.values == direct.values).all());

  DiscreteMeasure split{{{0.0, 0.5}, {1.0, 0.5}}};
  SampledFunction both = measure_convolve(split, chi);
  CHECK(both.values[g.cell_start(0)] == Complex(0.5));
  CHECK(both.values[g.cell_start(1)] == Complex(0.5));
  CHECK(both.values[g.cell_start(2)] == Complex(0.0));

  DiscreteMeasure misaligned{{{0.1234567, 1.0}}};
  CHECK_THROWS_AS(measure_convolve(misaligned, chi), AlignmentError);

  CHECK(split.weighted_mass(Weight::polynomial(1.0)) == doctest::Approx(1.5));
}

TEST_CASE("multiplier estimate basics") {
  GridSpec g(16, 256);
  SpaceSpec s(1, 2, 2, Weight::polynomial(1.0), Weight::polynomial(1.0));
  // tapered truncation keeps the projection tails inside the window
  std::vector<SampledFunction> corpus;
  for (const auto& f : testsupport::smooth_corpus(g))
    corpus.push_back(band_limit(f, 64.0, 8.0));

  DiscreteMeasure delta0{{{0.0, 1.0}}};
  double base = multiplier_norm_estimate(delta0, s, corpus);
  CHECK(base >= 1.0);  // ||f||_A >= ||f||_(11,w1) termwise

  DiscreteMeasure twice{{{0.0, 2.0}}};
  CHECK(multiplier_norm_estimate(twice, s, corpus) ==
        doctest::Approx(2.0 * base).epsilon(1e-12));

  DiscreteMeasure shifted{{{2.0, 1.0}}};
  double moved = multiplier_norm_estimate(shifted, s, corpus);
  CHECK(moved <= Weight::polynomial(1.0)(2.0) * base * (1.0 + 1e-9));

  // monotone under corpus enlargement
  std::vector<SampledFunction> small(corpus.begin(), corpus.begin() + 2);
  CHECK(multiplier_norm_estimate(delta0, s, small) <= base * (1.0 + 1e-15));

  CHECK_THROWS_AS(multiplier_norm_estimate(delta0, s, {}), SpecError);
}

TEST_CASE("membership proxy is stable for corpus members") {
  GridSpec g(16, 256);
  MembershipReport rep = membership_proxy(make_gaussian(g), spec222_w1());
  CHECK(rep.stable);
  CHECK(rep.time_rel_change < 0.01);
  CHECK(rep.freq_rel_change < 0.01);
}
