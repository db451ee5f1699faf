#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "amalgam/errors.hpp"
#include "support.hpp"

using namespace amalgam;
using testsupport::true_amalgam_norm;

TEST_CASE("local norm examples") {
  GridSpec g(16, 256);
  SampledFunction chi = make_indicator(0.0, 1.0, g);
  const Weight unit = Weight::polynomial(0.0);
  const Weight w1 = Weight::polynomial(1.0);

  CHECK(local_norm(chi, 0, 3.0, unit) == doctest::Approx(1.0).epsilon(1e-14));
  // integral of (1+x) over [0,1): exact for the cell rule on a linear profile
  CHECK(local_norm(chi, 0, 1.0, w1) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(local_norm(chi, 5, 2.0, unit) == 0.0);
  CHECK(local_norm(chi, 0, kInf, w1) == doctest::Approx(2.0).epsilon(1e-14));

  CHECK_THROWS_AS(local_norm(chi, 20, 2.0, unit), SpecError);
  CHECK_THROWS_AS(local_norm(chi, 0, 0.5, unit), SpecError);
}

TEST_CASE("weighted lp norm examples") {
  GridSpec g(16, 256);
  const Weight unit = Weight::polynomial(0.0);
  SampledFunction gauss = make_gaussian(g);
  CHECK(weighted_lp_norm(gauss, 2.0, unit) ==
        doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-11));

  SampledFunction chi = make_indicator(0.0, 1.0, g);
  CHECK(weighted_lp_norm(chi, 1.0, Weight::polynomial(1.0)) ==
        doctest::Approx(1.5).epsilon(1e-14));

  CHECK(weighted_lp_norm(zero_function(g), 3.0, unit) == 0.0);
}

TEST_CASE("amalgam norm of the unit indicator is exactly 1") {
  GridSpec g(16, 256);
  SampledFunction chi = make_indicator(0.0, 1.0, g);
  const Weight unit = Weight::polynomial(0.0);
  for (double p : {1.0, 2.0, 3.0, kInf})
    for (double q : {1.0, 2.0, 3.0, kInf}) {
      NormReport rep = amalgam_norm(chi, p, q, unit);
      CHECK(std::abs(rep.global - 1.0) <= 1e-13);
    }
}

TEST_CASE("two-cell indicator, l3 aggregation") {
  GridSpec g(16, 256);
  SampledFunction chi = make_indicator(0.0, 2.0, g);
  NormReport rep = amalgam_norm(chi, 2.0, 3.0, Weight::polynomial(0.0));
  CHECK(rep.global == doctest::Approx(std::pow(2.0, 1.0 / 3.0)).epsilon(1e-14));
  CHECK(rep.local_norms.at(0) == doctest::Approx(1.0));
  CHECK(rep.local_norms.at(1) == doctest::Approx(1.0));
  CHECK(rep.local_norms.at(5) == 0.0);
}

TEST_CASE("weighted gaussian norm against the high-resolution oracle") {
  GridSpec g(16, 256);
  SampledFunction gauss = make_gaussian(g);
  double measured = amalgam_norm(gauss, 2.0, 1.0, Weight::polynomial(1.0)).global;
  double oracle = true_amalgam_norm(
      [](double x) { return (1.0 + std::abs(x)) * testsupport::gaussian_mag(x); },
      2.0, 1.0, 16);
  CHECK(std::abs(measured - oracle) <= 1e-6);
}

TEST_CASE("diagonal identity: amalgam(p,p) equals the whole-window norm") {
  GridSpec g(8, 128);
  auto corpus = testsupport::acceptance_corpus(g);
  for (const auto& f : corpus)
    for (double p : {1.0, 2.0, 4.0})
      for (const Weight& w : {Weight::polynomial(0.0), Weight::polynomial(1.0)}) {
        double diag = amalgam_norm(f, p, p, w).global;
        double lp = weighted_lp_norm(f, p, w);
        CHECK(diag == doctest::Approx(lp).epsilon(1e-13));
      }
}

TEST_CASE("global norms are nested in the aggregation exponent") {
  GridSpec g(8, 128);
  auto corpus = testsupport::acceptance_corpus(g);
  const Weight w = Weight::polynomial(1.0);
  const double qs[] = {1.0, 1.5, 2.0, 3.0, kInf};
  for (const auto& f : corpus) {
    for (std::size_t i = 0; i + 1 < std::size(qs); ++i) {
      double lo = amalgam_norm(f, 2.0, qs[i + 1], w).global;
      double hi = amalgam_norm(f, 2.0, qs[i], w).global;
      CHECK(lo <= hi * (1.0 + 1e-13));
    }
  }
}

TEST_CASE("local norms are nested in the local exponent on unit cells") {
  GridSpec g(8, 128);
  auto corpus = testsupport::acceptance_corpus(g);
  const Weight w = Weight::polynomial(1.0);
  const double ps[] = {1.0, 2.0, 3.0, kInf};
  for (const auto& f : corpus)
    for (int n = -8; n < 8; ++n)
      for (std::size_t i = 0; i + 1 < std::size(ps); ++i) {
        double small = local_norm(f, n, ps[i], w);
        double large = local_norm(f, n, ps[i + 1], w);
        CHECK(small <= large * (1.0 + 1e-6));
      }
}

TEST_CASE("weight monotonicity transfers through the norm") {
  GridSpec g(8, 128);
  auto corpus = testsupport::acceptance_corpus(g);
  const Weight w_small = Weight::polynomial(1.0);
  const Weight w_big = Weight::polynomial(2.0);
  auto dom = dominates(w_small, w_big);
  REQUIRE(dom.holds);
  for (const auto& f : corpus) {
    double lhs = amalgam_norm(f, 2.0, 1.0, w_small).global;
    double rhs = amalgam_norm(f, 2.0, 1.0, w_big).global;
    CHECK(lhs <= dom.constant * rhs * (1.0 + 1e-12));
  }
  // a pair with a nontrivial constant: (1+|x|)^2 against e^{|x|/2}
  const Weight w_exp = Weight::exponential(0.5);
  auto dom2 = dominates(w_big, w_exp);
  REQUIRE(dom2.holds);
  CHECK(dom2.constant > 1.0);
  for (const auto& f : corpus) {
    double lhs = amalgam_norm(f, 2.0, 1.0, w_big).global;
    double rhs = amalgam_norm(f, 2.0, 1.0, w_exp).global;
    CHECK(lhs <= dom2.constant * rhs * (1.0 + 1e-12));
  }
}

TEST_CASE("norm axioms on random corpus combinations") {
  GridSpec g(8, 128);
  auto corpus = testsupport::acceptance_corpus(g);
  testsupport::Rng rng(2024);
  const Weight w = Weight::polynomial(1.0);
  const double exps[] = {1.0, 1.7, 2.0, 3.0, kInf};
  for (int trial = 0; trial < 100; ++trial) {
    const auto& f = corpus[rng.pick(corpus.size())];
    const auto& h = corpus[rng.pick(corpus.size())];
    Complex alpha(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    double p = exps[rng.pick(5)];
    double q = exps[rng.pick(5)];

    double nf = amalgam_norm(f, p, q, w).global;
    double nh = amalgam_norm(h, p, q, w).global;
    double nsum = amalgam_norm(f + h, p, q, w).global;
    CHECK(nsum <= (nf + nh) * (1.0 + 1e-12));

    double nscaled = amalgam_norm(scaled(alpha, f), p, q, w).global;
    CHECK(nscaled == doctest::Approx(std::abs(alpha) * nf).epsilon(1e-12));
  }
}

TEST_CASE("norm report is self-consistent") {
  GridSpec g(8, 128);
  SampledFunction f = make_gaussian(g);
  NormReport rep = amalgam_norm(f, 2.0, 1.5, Weight::polynomial(1.0));
  CHECK(rep.recompute_global() == doctest::Approx(rep.global).epsilon(1e-14));
  CHECK(static_cast<int>(rep.local_norms.size()) == g.cell_count());
  for (const auto& [cell, loc] : rep.local_norms) CHECK(loc >= 0.0);
}

TEST_CASE("conjugate exponents") {
  CHECK(conjugate_exponent(1.0) == kInf);
  CHECK(conjugate_exponent(kInf) == 1.0);
  CHECK(conjugate_exponent(2.0) == 2.0);
  CHECK(conjugate_exponent(4.0) == doctest::Approx(4.0 / 3.0));
}
