#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amalgam/decide.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/verifier.hpp"
#include "support.hpp"

using namespace amalgam;

namespace {

SpaceSpec make_spec(double p, double q, double r, double s1, double s2) {
  return SpaceSpec(p, q, r, Weight::polynomial(s1), Weight::polynomial(s2));
}

}  // namespace

TEST_CASE("master sufficient rule fires on fully nested specs") {
  SpaceSpec src = make_spec(3, 3, 1, 2.0, 1.0);
  SpaceSpec dst = make_spec(2, 2, 2, 1.0, 0.0);
  Verdict v = decide_embedding(src, dst);
  CHECK(v.relation == Relation::embeds);
  CHECK(v.rule == "nesting-with-dominance");
  CHECK(v.constant_hint.value() == doctest::Approx(1.0));
  for (const auto& h : v.trace) CHECK(h.holds);
}

TEST_CASE("identical specs are equal") {
  SpaceSpec s = make_spec(2, 2, 2, 1.0, 1.0);
  Verdict v = decide_embedding(s, s);
  CHECK(v.relation == Relation::equal);
  CHECK(v.rule == "weight-equivalence");

  // equivalence through a product weight
  SpaceSpec t(2, 2, 2,
              Weight::product({Weight::polynomial(1.0), Weight::polynomial(0.0)}),
              Weight::polynomial(1.0));
  CHECK(decide_embedding(s, t).relation == Relation::equal);
}

TEST_CASE("definite negative when time dominance is required but fails") {
  SpaceSpec src = make_spec(2, 2, 2, 1.0, 1.0);
  SpaceSpec dst = make_spec(2, 2, 2, 2.0, 1.0);
  Verdict v = decide_embedding(src, dst);
  CHECK(v.relation == Relation::no_rule);
  CHECK(v.rule == "dominance-required");
  CHECK(v.definite_negative);
  bool found_failing = false;
  for (const auto& h : v.trace)
    if (!h.holds) found_failing = true;
  CHECK(found_failing);
}

TEST_CASE("tighter tags are preferred over the master rule") {
  // same weights and q, nested p and r
  Verdict v1 = decide_embedding(make_spec(3, 2, 1, 1.0, 1.0),
                                make_spec(2, 2, 2, 1.0, 1.0));
  CHECK(v1.relation == Relation::embeds);
  CHECK(v1.rule == "local-exponent-nesting");

  // same weights and r, nested p and q
  Verdict v2 = decide_embedding(make_spec(3, 3, 2, 1.0, 1.0),
                                make_spec(2, 2, 2, 1.0, 1.0));
  CHECK(v2.rule == "exponent-nesting");

  // same p and weights, nested q, r
  Verdict v3 = decide_embedding(make_spec(2, 3, 1, 1.0, 1.0),
                                make_spec(2, 2, 2, 1.0, 1.0));
  CHECK(v3.rule == "tail-exponent-nesting");

  // same exponents, dominated weights
  Verdict v4 = decide_embedding(make_spec(2, 2, 2, 2.0, 1.0),
                                make_spec(2, 2, 2, 1.0, 0.0));
  CHECK(v4.rule == "weight-dominance");

  // same p and freq weight, dominated time weight, nested q, r
  Verdict v5 = decide_embedding(make_spec(2, 3, 1, 2.0, 1.0),
                                make_spec(2, 2, 2, 1.0, 1.0));
  CHECK(v5.rule == "mixed-nesting");
}

TEST_CASE("no rule without a definite negative in the mixed case") {
  // opposite nesting directions: nothing fires, but not provably absent
  Verdict v = decide_embedding(make_spec(2, 2, 2, 1.0, 1.0),
                               make_spec(3, 2, 2, 2.0, 1.0));
  CHECK(v.relation == Relation::no_rule);
  CHECK_FALSE(v.definite_negative);
}

TEST_CASE("tabulated weights are undecidable") {
  std::vector<double> xs{-16.0, 0.0, 16.0}, vs{17.0, 1.0, 17.0};
  SpaceSpec src(2, 2, 2, Weight::tabulated(xs, vs), Weight::polynomial(0.0));
  SpaceSpec dst = make_spec(2, 2, 2, 1.0, 0.0);
  CHECK_THROWS_AS(decide_embedding(src, dst), UndecidableError);
}

TEST_CASE("never-compact: equal polynomial weights") {
  SpaceSpec src = make_spec(2, 2, 2, 2.0, 1.0);
  Verdict v = decide_compactness(src, Weight::polynomial(2.0), std::nullopt);
  CHECK(v.relation == Relation::never_compact_embedding);
  CHECK(v.rule == "translate-escape");
}

TEST_CASE("never-compact is silent when the ratio vanishes") {
  SpaceSpec src = make_spec(2, 2, 2, 2.0, 1.0);
  Verdict v = decide_compactness(src, Weight::polynomial(1.0), std::nullopt);
  CHECK(v.relation == Relation::no_rule);
  CHECK(v.rule == "vanishing-ratio");
}

TEST_CASE("never-compact branch (i) with the full target space") {
  // s4=0 <= s2=1 <= s1=2, s3=2=s1
  SpaceSpec src = make_spec(2, 2, 2, 2.0, 1.0);
  Verdict v = decide_compactness(src, Weight::polynomial(2.0),
                                 Weight::polynomial(0.0));
  CHECK(v.relation == Relation::never_compact_embedding);
  CHECK(v.rule == "translate-escape-i");
}

TEST_CASE("never-compact branch (ii)") {
  // s3 <= s1 <= s2, s4 <= s2, s3 = s2 forces s1 = s2 = s3
  SpaceSpec src = make_spec(2, 2, 2, 1.0, 1.0);
  Verdict v = decide_compactness(src, Weight::polynomial(1.0),
                                 Weight::polynomial(0.5));
  CHECK(v.relation == Relation::never_compact_embedding);
}

TEST_CASE("exponential weights decide the same way") {
  SpaceSpec src(2, 2, 2, Weight::exponential(1.0), Weight::polynomial(0.0));
  Verdict same = decide_compactness(src, Weight::exponential(1.0), std::nullopt);
  CHECK(same.relation == Relation::never_compact_embedding);
  Verdict weaker = decide_compactness(src, Weight::exponential(0.5), std::nullopt);
  CHECK(weaker.relation == Relation::no_rule);
}

TEST_CASE("equal verdict for every valid spec against itself") {
  testsupport::Rng rng(5150);
  const double ss[] = {0.0, 0.5, 1.0, 2.0};
  const double ee[] = {1.0, 2.0, 3.0};
  for (int i = 0; i < 50; ++i) {
    SpaceSpec s = make_spec(ee[rng.pick(3)], ee[rng.pick(3)], ee[rng.pick(3)],
                            ss[rng.pick(4)], ss[rng.pick(4)]);
    CHECK(decide_embedding(s, s).relation == Relation::equal);
  }
}

TEST_CASE("chained embeds never end in a definite negative") {
  testsupport::Rng rng(31337);
  const double ss[] = {0.0, 0.5, 1.0, 2.0};
  const double ee[] = {1.0, 2.0, 3.0};
  int checked = 0;
  while (checked < 50) {
    SpaceSpec a = make_spec(ee[rng.pick(3)], ee[rng.pick(3)], ee[rng.pick(3)],
                            ss[rng.pick(4)], ss[rng.pick(4)]);
    SpaceSpec b = make_spec(ee[rng.pick(3)], ee[rng.pick(3)], ee[rng.pick(3)],
                            ss[rng.pick(4)], ss[rng.pick(4)]);
    SpaceSpec c = make_spec(ee[rng.pick(3)], ee[rng.pick(3)], ee[rng.pick(3)],
                            ss[rng.pick(4)], ss[rng.pick(4)]);
    auto ab = decide_embedding(a, b).relation;
    auto bc = decide_embedding(b, c).relation;
    bool ab_ok = ab == Relation::embeds || ab == Relation::equal;
    bool bc_ok = bc == Relation::embeds || bc == Relation::equal;
    if (!ab_ok || !bc_ok) continue;
    Verdict ac = decide_embedding(a, c);
    CHECK_FALSE(ac.definite_negative);
    ++checked;
  }
}

TEST_CASE("soundness: granted embeddings verify numerically") {
  GridSpec g(8, 128);
  auto corpus = testsupport::acceptance_corpus(g);
  testsupport::Rng rng(424242);
  const double ss[] = {0.0, 0.5, 1.0, 2.0};
  const double ee[] = {1.0, 2.0, 3.0};
  int verified = 0;
  while (verified < 50) {
    SpaceSpec a = make_spec(ee[rng.pick(3)], ee[rng.pick(3)], ee[rng.pick(3)],
                            ss[rng.pick(4)], ss[rng.pick(4)]);
    SpaceSpec b = make_spec(ee[rng.pick(3)], ee[rng.pick(3)], ee[rng.pick(3)],
                            ss[rng.pick(4)], ss[rng.pick(4)]);
    Verdict v = decide_embedding(a, b);
    if (v.relation != Relation::embeds && v.relation != Relation::equal) continue;
    SuiteReport rep = embedding_constant(a, b, corpus);
    CHECK(rep.overall_pass);
    ++verified;
  }
}

TEST_CASE("soundness: definite negatives diverge along the translate family") {
  GridSpec g(16, 256);
  SampledFunction f = make_gaussian(g);
  const double ts[] = {0.0, 1.0, 2.0, 4.0, 8.0, 11.0};
  // weight-power gap of 2 so the ratio sweep clears the 10x threshold
  // inside the window
  for (double s_src : {0.0, 0.5, 1.0}) {
    SpaceSpec src = make_spec(2, 2, 2, s_src, 1.0);
    SpaceSpec dst = make_spec(2, 2, 2, s_src + 2.0, 1.0);
    Verdict v = decide_embedding(src, dst);
    REQUIRE(v.definite_negative);
    SuiteReport rep = divergence_scan(src, dst, f, ts);
    CHECK(rep.overall_pass);
  }
}
