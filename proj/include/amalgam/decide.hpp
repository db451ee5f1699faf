#ifndef AMALGAM_DECIDE_HPP
#define AMALGAM_DECIDE_HPP

#include <optional>
#include <string>
#include <vector>

#include "amalgam/space.hpp"

namespace amalgam {

enum class Relation { embeds, equal, never_compact_embedding, no_rule };

struct Hypothesis {
  std::string description;
  bool holds = false;
};

// Symbolic verdict. The engine is deliberately incomplete: it answers only
// when one of its rules applies verbatim, and no_rule is a first-class
// outcome. A no_rule verdict with definite_negative set means the embedding
// is provably absent (the dominance-required rule), not merely undecided.
struct Verdict {
  Relation relation = Relation::no_rule;
  std::string rule;
  std::vector<Hypothesis> trace;
  std::optional<double> constant_hint;
  bool definite_negative = false;
};

std::string relation_name(Relation r);

// Decides src -> dst from weight-family parameters and exponents alone.
// Rules, checked most-specific first:
//   weight-equivalence      equal exponents, both weight pairs equivalent
//   local-exponent-nesting  p_dst <= p_src, r_src <= r_dst, same q/weights
//   exponent-nesting        p_dst <= p_src, q_dst <= q_src, same r/weights
//   tail-exponent-nesting   same p, q_dst <= q_src, r_src <= r_dst (as
//                           printed, the unused p-hypothesis is traced)
//   mixed-nesting           time dominance + q_dst <= q_src, r_src <= r_dst
//   weight-dominance        same exponents, both dominances
//   nesting-with-dominance  the master sufficient rule (all of the above)
//   dominance-required      same exponents/freq weight but the required
//                           time dominance fails: definite negative
// Tabulated weights are undecidable (the numeric probe is a semi-decision).
Verdict decide_embedding(const SpaceSpec& src, const SpaceSpec& dst);

// Never-compactness of the embedding of src into the target amalgam space
// with time weight w3 (and, when given, the full space with freq weight w4).
// Fires only when the translate-escape hypotheses hold exactly: dominance
// plus a weight ratio that does not vanish at infinity.
Verdict decide_compactness(const SpaceSpec& src, const Weight& w3,
                           const std::optional<Weight>& w4);

}  // namespace amalgam

#endif
