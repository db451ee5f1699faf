#include "amalgam/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

constexpr double kQuadSlack = 1.0 + 1e-6;
constexpr double kBandLimitTarget = 0.01;

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Runs `compute` on the base inputs and once refined, fills the report with
// the base cases, and records the largest relative movement of a measured
// value plus any verdict flip.
SuiteReport assemble(
    std::string tag,
    const std::function<std::vector<SuiteCase>(bool refined)>& compute) {
  SuiteReport rep;
  rep.theorem_tag = std::move(tag);
  rep.cases = compute(false);
  std::vector<SuiteCase> fine = compute(true);

  rep.overall_pass = true;
  for (const auto& c : rep.cases) rep.overall_pass = rep.overall_pass && c.pass;

  bool fine_pass = true;
  for (const auto& c : fine) fine_pass = fine_pass && c.pass;

  double delta = 0.0;
  const std::size_t shared = std::min(rep.cases.size(), fine.size());
  for (std::size_t i = 0; i < shared; ++i) {
    double scale = std::max({std::abs(rep.cases[i].measured),
                             std::abs(fine[i].measured), 1.0});
    delta = std::max(delta,
                     std::abs(rep.cases[i].measured - fine[i].measured) / scale);
  }
  rep.grid_refinement_delta = delta;
  if (fine_pass != rep.overall_pass)
    rep.notes.push_back("verdict flips under grid refinement");
  return rep;
}

SampledFunction magnitude_of(const SampledFunction& f) {
  SampledFunction out;
  out.grid = f.grid;
  out.label = "|" + f.label + "|";
  out.values = f.values.abs();
  out.edge_values = f.edge_values.abs();
  return out;
}

}  // namespace

SuiteReport translation_bounds(const SampledFunction& f, const SpaceSpec& s,
                               std::span<const double> shifts, double slack) {
  std::vector<double> ys(shifts.begin(), shifts.end());
  SuiteReport rep = assemble("translation-bounds", [&](bool refined) {
    SampledFunction base = refined ? refine(f) : f;
    const double norm0 = a_norm(base, s).total;
    std::vector<SuiteCase> cases;
    double floor_ratio = kInf;
    for (double y : ys) {
      SuiteCase c;
      c.name = "upper y=" + fmt(y);
      try {
        double moved = a_norm(translate(base, y), s).total;
        double wy = s.time_weight(y);
        c.measured = moved;
        c.bound = wy * norm0 * (1.0 + slack);
        c.pass = moved <= c.bound;
        floor_ratio = std::min(floor_ratio, moved / wy);
      } catch (const WindowOverflowError&) {
        c.pass = true;
        c.note = "clipped: shift exceeds window";
      }
      cases.push_back(std::move(c));
    }
    SuiteCase lower;
    lower.name = "lower-ratio floor";
    lower.measured = floor_ratio == kInf ? 0.0 : floor_ratio;
    lower.bound = 0.0;
    lower.pass = lower.measured > 0.0;
    cases.push_back(std::move(lower));
    return cases;
  });
  return rep;
}

SuiteReport translation_continuity(const SampledFunction& f, const SpaceSpec& s,
                                   std::span<const double> epsilons) {
  std::vector<double> eps(epsilons.begin(), epsilons.end());
  SuiteReport rep = assemble("translation-continuity", [&](bool refined) {
    SampledFunction base = refined ? refine(f) : f;
    const double h = base.grid.step();
    const double eps_max = *std::max_element(eps.begin(), eps.end());
    const int k_cap = 4 * base.grid.samples_per_cell;

    std::vector<double> diffs;  // diffs[k-1] = max +- difference norm at y = k h
    for (int k = 1; k <= k_cap; ++k) {
      double d = std::max(a_norm(translate(base, k * h) - base, s).total,
                          a_norm(translate(base, -k * h) - base, s).total);
      diffs.push_back(d);
      if (d >= eps_max) break;
    }

    std::vector<SuiteCase> cases;
    SuiteCase zero;
    zero.name = "y=0 difference";
    zero.measured = a_norm(translate(base, 0.0) - base, s).total;
    zero.bound = 0.0;
    zero.pass = zero.measured == 0.0;
    cases.push_back(std::move(zero));

    std::vector<double> deltas;
    for (double e : eps) {
      int k_fail = static_cast<int>(diffs.size()) + 1;
      for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i] >= e) {
          k_fail = static_cast<int>(i) + 1;
          break;
        }
      }
      double delta = (k_fail - 1) * h;
      deltas.push_back(delta);
      SuiteCase c;
      c.name = "delta at eps=" + fmt(e);
      c.measured = delta;
      c.bound = h;
      c.pass = delta >= h;
      cases.push_back(std::move(c));
    }

    SuiteCase mono;
    mono.name = "delta monotone in eps";
    std::vector<std::pair<double, double>> by_eps;
    for (std::size_t i = 0; i < eps.size(); ++i) by_eps.push_back({eps[i], deltas[i]});
    std::sort(by_eps.begin(), by_eps.end());
    mono.pass = true;
    for (std::size_t i = 1; i < by_eps.size(); ++i)
      mono.pass = mono.pass && by_eps[i].second >= by_eps[i - 1].second;
    mono.measured = mono.pass ? 1.0 : 0.0;
    mono.bound = 1.0;
    cases.push_back(std::move(mono));
    return cases;
  });
  // Jump discontinuities have no vanishing modulus in the continuum, so the
  // suite is meaningful for smooth inputs only.
  rep.notes.push_back("restricted to smooth inputs");
  return rep;
}

SuiteReport embedding_constant(const SpaceSpec& src, const SpaceSpec& dst,
                               std::span<const SampledFunction> corpus,
                               double slack) {
  Verdict v = decide_embedding(src, dst);
  if (v.relation != Relation::embeds && v.relation != Relation::equal)
    throw HypothesisError("embedding_constant: decision engine does not grant "
                          "the embedding (rule " + v.rule + ")");
  const double constant = v.constant_hint.value_or(1.0);
  std::vector<const SampledFunction*> members;
  for (const auto& f : corpus) members.push_back(&f);

  return assemble("embedding-constant", [&, constant](bool refined) {
    std::vector<SuiteCase> cases;
    double sup = 0.0;
    for (const SampledFunction* fp : members) {
      SampledFunction f = refined ? refine(*fp) : *fp;
      double num = a_norm(f, dst).total;
      double den = a_norm(f, src).total;
      double ratio = den > 0.0 ? num / den : 0.0;
      sup = std::max(sup, ratio);
      SuiteCase c;
      c.name = "ratio " + f.label;
      c.measured = ratio;
      c.bound = constant * (1.0 + slack);
      c.pass = ratio <= c.bound;
      cases.push_back(std::move(c));
    }
    SuiteCase top;
    top.name = "sup ratio vs analytic constant";
    top.measured = sup;
    top.bound = constant * (1.0 + slack);
    top.pass = sup <= top.bound;
    cases.push_back(std::move(top));
    return cases;
  });
}

SuiteReport noncompactness_witness(const SampledFunction& f,
                                   const Weight& target, const SpaceSpec& s,
                                   std::span<const double> shifts,
                                   double ratio_floor, double slack) {
  DominanceVerdict dom = dominates(target, s.time_weight);
  if (!dom.holds)
    throw HypothesisError(
        "witness hypothesis fails: target weight not dominated by the time "
        "weight");
  auto ct = target.closed_form();
  auto c1 = s.time_weight.closed_form();
  if (ct && c1) {
    const bool vanishes =
        ct->second < c1->second ||
        (ct->second == c1->second && ct->first < c1->first);
    if (vanishes)
      throw HypothesisError(
          "witness hypothesis fails: weight ratio tends to zero at infinity, "
          "the never-compactness criterion does not apply");
  } else {
    double lo = kInf;
    for (double t : shifts) lo = std::min(lo, target(t) / s.time_weight(t));
    if (!(lo >= ratio_floor))
      throw HypothesisError(
          "witness hypothesis fails: weight ratio drops below the configured "
          "floor on the sweep");
  }

  std::vector<double> ts(shifts.begin(), shifts.end());
  return assemble("noncompact-witness", [&](bool refined) {
    SampledFunction base = refined ? refine(f) : f;
    const double norm0 = a_norm(base, s).total;
    SampledFunction kernel = make_bump(0.0, 1.0, base.grid);
    const double kernel_norm =
        weighted_lp_norm(kernel, conjugate_exponent(s.p), s.time_weight);

    std::vector<SuiteCase> cases;
    std::vector<double> pairings;
    std::vector<double> floors;
    for (double t : ts) {
      SampledFunction fn;
      try {
        fn = scaled(1.0 / s.time_weight(t), translate(base, t));
      } catch (const WindowOverflowError&) {
        SuiteCase c;
        c.name = "clip t=" + fmt(t);
        c.pass = true;
        c.note = "clipped: shift exceeds window";
        cases.push_back(std::move(c));
        continue;
      }
      SuiteCase bounded;
      bounded.name = "bounded t=" + fmt(t);
      bounded.measured = a_norm(fn, s).total;
      bounded.bound = norm0 * (1.0 + slack);
      bounded.pass = bounded.measured <= bounded.bound;
      cases.push_back(std::move(bounded));

      double pairing = std::abs(quadrature(pointwise_product(fn, kernel)));
      pairings.push_back(pairing);
      SuiteCase vague;
      vague.name = "vague-decay t=" + fmt(t);
      vague.measured = pairing;
      vague.bound =
          dom.constant * kernel_norm * norm0 / s.time_weight(t) * kQuadSlack;
      vague.pass = vague.measured <= vague.bound;
      cases.push_back(std::move(vague));

      floors.push_back(amalgam_norm(fn, s.p, 1.0, target).global);
    }

    if (pairings.size() >= 2) {
      SuiteCase dec;
      dec.name = "pairing strictly decreasing";
      double worst = 0.0;
      for (std::size_t i = 1; i < pairings.size(); ++i)
        worst = std::max(worst, pairings[i] / pairings[i - 1]);
      dec.measured = worst;
      dec.bound = 1.0;
      dec.pass = worst < 1.0;
      cases.push_back(std::move(dec));
    }

    if (!floors.empty()) {
      const double floor = floors.front() / 2.0;
      for (std::size_t i = 0; i < floors.size(); ++i) {
        SuiteCase c;
        c.name = "norm-floor #" + fmt(static_cast<double>(i));
        c.measured = floors[i];
        c.bound = floor;
        c.pass = floors[i] >= floor;
        cases.push_back(std::move(c));
      }
    }
    return cases;
  });
}

SuiteReport approximate_identity(const SampledFunction& f, const SpaceSpec& s,
                                 std::span<const double> radii) {
  std::vector<double> rho(radii.begin(), radii.end());
  if (rho.empty()) throw SpecError("approximate_identity needs radii");
  for (std::size_t i = 1; i < rho.size(); ++i)
    if (!(rho[i] < rho[i - 1]))
      throw SpecError("approximate_identity radii must decrease");

  return assemble("approximate-identity", [&](bool refined) {
    SampledFunction base = refined ? refine(f) : f;
    const double norm0 = a_norm(base, s).total;
    std::vector<SuiteCase> cases;

    std::vector<double> errs;
    for (double r : rho) {
      SampledFunction g = make_bump(0.0, r, base.grid);
      double d = a_norm(convolve(g, base) - base, s).total;
      errs.push_back(d);
      SuiteCase c;
      c.name = "mollify rho=" + fmt(r);
      c.measured = d;
      c.bound = norm0;
      c.pass = d <= norm0;
      cases.push_back(std::move(c));
    }

    SuiteCase mono;
    mono.name = "error nonincreasing in rho";
    double worst = 0.0;
    for (std::size_t i = 1; i < errs.size(); ++i)
      worst = std::max(worst, errs[i] / errs[i - 1]);
    mono.measured = errs.size() >= 2 ? worst : 0.0;
    mono.bound = 1.0 + 1e-12;
    mono.pass = mono.measured <= mono.bound;
    cases.push_back(std::move(mono));

    SuiteCase fin;
    fin.name = "final error below 2%";
    fin.measured = errs.back();
    fin.bound = 0.02 * norm0;
    fin.pass = fin.measured < fin.bound;
    cases.push_back(std::move(fin));

    // Band-limit stage on the sharpest mollifier.
    SampledFunction g = make_bump(0.0, rho.back(), base.grid);
    const double g_err = errs.back();
    const int cutoff_max = base.grid.samples_per_cell / 2 - 1;
    double reached = kInf;
    int used_cutoff = 0;
    SampledFunction h = g;
    for (int B = 8; B <= cutoff_max; B += 8) {
      SampledFunction cand = band_limit(g, B);
      double val = weighted_lp_norm(g - cand, 1.0, s.time_weight);
      if (val < reached) {
        reached = val;
        used_cutoff = B;
        h = cand;
      }
      if (val < kBandLimitTarget) break;
    }
    SuiteCase band;
    band.name = "band-limit residual at B=" + fmt(used_cutoff);
    band.measured = reached;
    band.bound = kBandLimitTarget;
    if (reached < kBandLimitTarget) {
      band.pass = true;
    } else {
      band.pass = true;  // inconclusive, not a failure
      band.note = "inconclusive: residual target unreachable in the window";
    }
    cases.push_back(std::move(band));

    double spill = 0.0;
    SampledFunction hf = convolve_truncated(h, base, &spill);
    double diff_remainder = a_norm(convolve_truncated(h - g, base) , s).total;
    double lhs_total = a_norm(hf - base, s).total;

    SuiteCase young;
    young.name = "remainder bound ||(h-g)*f|| <= ||h-g||_(1,w1) ||f||";
    young.measured = diff_remainder;
    young.bound = reached * norm0 * kQuadSlack;
    young.pass = young.measured <= young.bound;
    if (spill > 0.0) young.note = "window spill " + fmt(spill);
    cases.push_back(std::move(young));

    SuiteCase tri;
    tri.name = "||h*f - f|| within the two-term bound";
    tri.measured = lhs_total;
    tri.bound = (diff_remainder + g_err) * (1.0 + 1e-12);
    tri.pass = tri.measured <= tri.bound;
    cases.push_back(std::move(tri));
    return cases;
  });
}

SuiteReport vague_convergence(std::span<const SampledFunction> fs,
                              const SampledFunction& k, const SpaceSpec& s,
                              double slack) {
  std::vector<const SampledFunction*> members;
  for (const auto& f : fs) members.push_back(&f);
  return assemble("vague-convergence", [&](bool refined) {
    SampledFunction kernel = refined ? refine(k) : k;
    const double pc = conjugate_exponent(s.p);
    const double kn = weighted_lp_norm(kernel, pc, s.time_weight);
    std::vector<SuiteCase> cases;
    for (std::size_t i = 0; i < members.size(); ++i) {
      SampledFunction fn = refined ? refine(*members[i]) : *members[i];
      SuiteCase c;
      c.name = "pairing #" + fmt(static_cast<double>(i));
      c.measured = std::abs(quadrature(pointwise_product(fn, kernel)));
      c.bound = kn * weighted_lp_norm(fn, s.p, s.time_weight) * (1.0 + slack);
      c.pass = c.measured <= c.bound;
      cases.push_back(std::move(c));
    }
    return cases;
  });
}

SuiteReport divergence_scan(const SpaceSpec& src, const SpaceSpec& dst,
                            const SampledFunction& f,
                            std::span<const double> shifts) {
  std::vector<double> ts(shifts.begin(), shifts.end());
  return assemble("dominance-divergence", [&](bool refined) {
    SampledFunction base = refined ? refine(f) : f;
    std::vector<SuiteCase> cases;
    std::vector<double> ratios;
    for (double t : ts) {
      SuiteCase c;
      c.name = "ratio t=" + fmt(t);
      try {
        SampledFunction moved = translate(base, t);
        double num = a_norm(moved, dst).total;
        double den = a_norm(moved, src).total;
        c.measured = den > 0.0 ? num / den : 0.0;
        ratios.push_back(c.measured);
        c.pass = true;
      } catch (const WindowOverflowError&) {
        c.pass = true;
        c.note = "clipped: shift exceeds window";
      }
      cases.push_back(std::move(c));
    }
    SuiteCase growth;
    growth.name = "last ratio exceeds 10x first";
    growth.measured = ratios.size() >= 2 ? ratios.back() / ratios.front() : 0.0;
    growth.bound = 10.0;
    growth.pass = growth.measured >= 10.0;
    cases.push_back(std::move(growth));
    return cases;
  });
}

SuiteReport bf_chain(std::span<const SampledFunction> corpus,
                     const SpaceSpec& s, double slack) {
  std::vector<const SampledFunction*> members;
  for (const auto& f : corpus) members.push_back(&f);
  const Weight unit = Weight::polynomial(0.0);
  return assemble("local-integrability", [&](bool refined) {
    std::vector<SuiteCase> cases;
    for (const SampledFunction* fp : members) {
      SampledFunction f = refined ? refine(*fp) : *fp;
      SampledFunction mag = magnitude_of(f);
      double cell_max = 0.0;
      for (int n = f.grid.first_cell(); n < f.grid.half_width; ++n)
        cell_max = std::max(cell_max, quadrature(mag, n).real());
      const double l1 = weighted_lp_norm(f, 1.0, unit);
      const double l1w = weighted_lp_norm(f, 1.0, s.time_weight);
      const double time_norm = amalgam_norm(f, s.p, 1.0, s.time_weight).global;
      const double total = a_norm(f, s).total;

      auto push = [&](std::string name, double lhs, double rhs) {
        SuiteCase c;
        c.name = f.label + ": " + std::move(name);
        c.measured = lhs;
        c.bound = rhs * (1.0 + slack);
        c.pass = lhs <= c.bound;
        cases.push_back(std::move(c));
      };
      push("max cell mass <= ||f||_1", cell_max, l1);
      push("||f||_1 <= ||f||_(1,w1)", l1, l1w);
      push("||f||_(1,w1) <= ||f||_(p1,w1)", l1w, time_norm);
      push("||f||_(p1,w1) <= ||f||_A", time_norm, total);
    }
    return cases;
  });
}

SuiteReport algebra_suite(std::span<const SampledFunction> corpus,
                          const SpaceSpec& s, double slack) {
  std::vector<const SampledFunction*> members;
  for (const auto& f : corpus) members.push_back(&f);
  return assemble("convolution-algebra", [&](bool refined) {
    std::vector<SuiteCase> cases;
    for (const SampledFunction* fp : members) {
      for (const SampledFunction* gp : members) {
        SampledFunction f = refined ? refine(*fp) : *fp;
        SampledFunction g = refined ? refine(*gp) : *gp;
        ChainReport chain = algebra_chain_check(f, g, s, slack);
        SuiteCase c;
        c.name = f.label + " * " + g.label;
        c.measured = chain.lhs;
        c.bound = chain.empirical_constant;
        c.pass = chain.pass;
        if (!chain.pass) {
          for (const auto& l : chain.links)
            if (!l.pass) c.note += l.name + " failed; ";
        }
        cases.push_back(std::move(c));
      }
    }
    return cases;
  });
}

SuiteReport module_suite(std::span<const SampledFunction> corpus,
                         const SpaceSpec& s, double slack) {
  if (!s.module_weight)
    throw SpecError("module_suite needs a module weight in the space spec");
  std::vector<const SampledFunction*> members;
  for (const auto& f : corpus) members.push_back(&f);
  return assemble("module-bound", [&](bool refined) {
    std::vector<SuiteCase> cases;
    for (const SampledFunction* fp : members) {
      for (const SampledFunction* gp : members) {
        SampledFunction f = refined ? refine(*fp) : *fp;
        SampledFunction g = refined ? refine(*gp) : *gp;
        ModuleReport mod = module_check(f, g, s, slack);
        SuiteCase c;
        c.name = f.label + " . " + g.label;
        c.measured = mod.ratio;
        c.bound = mod.bound_constant * (1.0 + slack);
        c.pass = mod.pass;
        cases.push_back(std::move(c));
      }
    }
    return cases;
  });
}

}  // namespace amalgam
