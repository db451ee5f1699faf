#include "amalgam/decide.hpp"

#include <cmath>

#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

struct ClosedWeight {
  double power = 0.0;
  double rate = 0.0;
};

ClosedWeight closed(const Weight& w, const char* slot) {
  auto cf = w.closed_form();
  if (!cf)
    throw UndecidableError(std::string("weight in slot ") + slot +
                           " has no closed form; symbolic decision "
                           "undecidable");
  return {cf->first, cf->second};
}

// w_a <= C w_b globally?
bool dominated(const ClosedWeight& a, const ClosedWeight& b) {
  if (a.rate != b.rate) return a.rate < b.rate;
  return a.power <= b.power;
}

bool equiv(const ClosedWeight& a, const ClosedWeight& b) {
  return a.rate == b.rate && a.power == b.power;
}

// Least C with w_a <= C w_b, assuming dominance holds.
double dominance_constant(const ClosedWeight& a, const ClosedWeight& b) {
  const double ds = a.power - b.power;
  const double da = a.rate - b.rate;
  if (da > 0.0 || (da == 0.0 && ds > 0.0)) return kInf;
  if (ds <= 0.0) return 1.0;
  double t = ds / (-da) - 1.0;
  if (t <= 0.0) return 1.0;
  return std::pow(1.0 + t, ds) * std::exp(da * t);
}

// Does w_a / w_b stay bounded away from zero at infinity? (Given dominance
// of a by b, this means the canonical forms coincide.)
bool ratio_does_not_vanish(const ClosedWeight& a, const ClosedWeight& b) {
  return equiv(a, b);
}

Hypothesis hyp(std::string text, bool holds) { return {std::move(text), holds}; }

}  // namespace

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::embeds: return "embeds";
    case Relation::equal: return "equal";
    case Relation::never_compact_embedding: return "never_compact_embedding";
    case Relation::no_rule: return "no_rule";
  }
  return "no_rule";
}

Verdict decide_embedding(const SpaceSpec& src, const SpaceSpec& dst) {
  const ClosedWeight s1 = closed(src.time_weight, "src time");
  const ClosedWeight s2 = closed(src.freq_weight, "src freq");
  const ClosedWeight d1 = closed(dst.time_weight, "dst time");
  const ClosedWeight d2 = closed(dst.freq_weight, "dst freq");

  const bool p_nested = dst.p <= src.p;
  const bool q_nested = dst.q <= src.q;
  const bool r_nested = src.r <= dst.r;
  const bool p_same = src.p == dst.p;
  const bool q_same = src.q == dst.q;
  const bool r_same = src.r == dst.r;
  const bool time_dom = dominated(d1, s1);
  const bool freq_dom = dominated(d2, s2);
  const bool time_equiv = equiv(d1, s1);
  const bool freq_equiv = equiv(d2, s2);
  const double c_time = time_dom ? dominance_constant(d1, s1) : kInf;
  const double c_freq = freq_dom ? dominance_constant(d2, s2) : kInf;

  Verdict v;

  if (p_same && q_same && r_same && time_equiv && freq_equiv) {
    v.relation = Relation::equal;
    v.rule = "weight-equivalence";
    v.trace = {hyp("exponents equal", true),
               hyp("time weights equivalent", true),
               hyp("freq weights equivalent", true)};
    v.constant_hint = 1.0;
    return v;
  }

  if (q_same && time_equiv && freq_equiv && p_nested && r_nested) {
    v.relation = Relation::embeds;
    v.rule = "local-exponent-nesting";
    v.trace = {hyp("p_dst <= p_src", true), hyp("r_src <= r_dst", true),
               hyp("q and weights shared", true)};
    v.constant_hint = 1.0;
    return v;
  }

  if (r_same && time_equiv && freq_equiv && p_nested && q_nested) {
    v.relation = Relation::embeds;
    v.rule = "exponent-nesting";
    v.trace = {hyp("p_dst <= p_src", true), hyp("q_dst <= q_src", true),
               hyp("r and weights shared", true)};
    v.constant_hint = 1.0;
    return v;
  }

  if (p_same && time_equiv && freq_equiv && q_nested && r_nested) {
    v.relation = Relation::embeds;
    v.rule = "tail-exponent-nesting";
    v.trace = {hyp("q_dst <= q_src", true), hyp("r_src <= r_dst", true),
               hyp("p shared by both sides as printed; the stated "
                   "p-monotonicity hypothesis is unused",
                   true)};
    v.constant_hint = 1.0;
    return v;
  }

  if (p_same && freq_equiv && time_dom && q_nested && r_nested) {
    v.relation = Relation::embeds;
    v.rule = "mixed-nesting";
    v.trace = {hyp("time weight dominance", true), hyp("q_dst <= q_src", true),
               hyp("r_src <= r_dst", true)};
    v.constant_hint = std::max(1.0, c_time);
    return v;
  }

  if (p_same && q_same && r_same && time_dom && freq_dom) {
    v.relation = Relation::embeds;
    v.rule = "weight-dominance";
    v.trace = {hyp("time weight dominance", true),
               hyp("freq weight dominance", true),
               hyp("exponents equal", true)};
    v.constant_hint = std::max(c_time, c_freq);
    return v;
  }

  if (p_nested && q_nested && r_nested && time_dom && freq_dom) {
    v.relation = Relation::embeds;
    v.rule = "nesting-with-dominance";
    v.trace = {hyp("p_dst <= p_src", true), hyp("q_dst <= q_src", true),
               hyp("r_src <= r_dst", true), hyp("time weight dominance", true),
               hyp("freq weight dominance", true)};
    v.constant_hint = std::max(c_time, c_freq);
    return v;
  }

  if (p_same && q_same && r_same && freq_equiv && !time_dom) {
    v.relation = Relation::no_rule;
    v.rule = "dominance-required";
    v.definite_negative = true;
    v.trace = {hyp("exponents and freq weight shared", true),
               hyp("dst time weight dominated by src time weight", false)};
    return v;
  }

  v.relation = Relation::no_rule;
  v.rule = "none";
  v.trace = {hyp("p_dst <= p_src", p_nested), hyp("q_dst <= q_src", q_nested),
             hyp("r_src <= r_dst", r_nested),
             hyp("time weight dominance", time_dom),
             hyp("freq weight dominance", freq_dom)};
  return v;
}

Verdict decide_compactness(const SpaceSpec& src, const Weight& w3,
                           const std::optional<Weight>& w4) {
  const ClosedWeight s1 = closed(src.time_weight, "src time");
  const ClosedWeight s2 = closed(src.freq_weight, "src freq");
  const ClosedWeight t3 = closed(w3, "target time");

  Verdict v;
  const bool dom31 = dominated(t3, s1);
  const bool alive31 = ratio_does_not_vanish(t3, s1);

  if (!w4) {
    v.trace = {hyp("target weight dominated by src time weight", dom31),
               hyp("weight ratio bounded away from zero", alive31)};
    if (dom31 && alive31) {
      v.relation = Relation::never_compact_embedding;
      v.rule = "translate-escape";
      return v;
    }
    v.relation = Relation::no_rule;
    v.rule = dom31 ? "vanishing-ratio" : "none";
    if (dom31 && !alive31)
      v.trace.push_back(
          hyp("no compactness result for a vanishing weight ratio", true));
    return v;
  }

  const ClosedWeight t4 = closed(*w4, "target freq");
  const bool dom42 = dominated(t4, s2);
  const bool dom21 = dominated(s2, s1);
  const bool dom12 = dominated(s1, s2);
  const bool alive32 = ratio_does_not_vanish(t3, s2);
  const bool dom32 = dominated(t3, s2);

  // branch (i): w4 < w2 < w1, w3 < w1 with w3/w1 not vanishing
  if (dom42 && dom21 && dom31 && alive31) {
    v.relation = Relation::never_compact_embedding;
    v.rule = "translate-escape-i";
    v.trace = {hyp("target freq weight dominated by src freq weight", true),
               hyp("src freq weight dominated by src time weight", true),
               hyp("target time weight dominated by src time weight", true),
               hyp("time weight ratio bounded away from zero", true)};
    return v;
  }
  // branch (ii): w3 < w1 < w2, w4 < w2 with w3/w2 not vanishing
  if (dom31 && dom12 && dom42 && dom32 && alive32) {
    v.relation = Relation::never_compact_embedding;
    v.rule = "translate-escape-ii";
    v.trace = {hyp("target time weight dominated by src time weight", true),
               hyp("src time weight dominated by src freq weight", true),
               hyp("target freq weight dominated by src freq weight", true),
               hyp("freq weight ratio bounded away from zero", true)};
    return v;
  }

  v.relation = Relation::no_rule;
  if (dom31 && !alive31 && !(dom12 && alive32)) {
    v.rule = "vanishing-ratio";
    v.trace = {hyp("target time weight dominated by src time weight", true),
               hyp("weight ratio bounded away from zero", false),
               hyp("no compactness result for a vanishing weight ratio", true)};
  } else {
    v.rule = "none";
    v.trace = {hyp("branch-i hypotheses", dom42 && dom21 && dom31 && alive31),
               hyp("branch-ii hypotheses",
                   dom31 && dom12 && dom42 && dom32 && alive32)};
  }
  return v;
}

}  // namespace amalgam
