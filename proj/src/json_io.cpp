#include "amalgam/json_io.hpp"

#include <sstream>

#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

json exponent_to_json(double p) {
  if (p == kInf) return json("inf");
  return json(p);
}

}  // namespace

json weight_to_json(const Weight& w) {
  json j;
  switch (w.family()) {
    case Weight::Family::polynomial:
      j["family"] = "polynomial";
      j["s"] = w.power();
      break;
    case Weight::Family::exponential:
      j["family"] = "exponential";
      j["a"] = w.rate();
      break;
    case Weight::Family::product: {
      j["family"] = "product";
      j["factors"] = json::array();
      for (const Weight& f : w.factors()) j["factors"].push_back(weight_to_json(f));
      break;
    }
    case Weight::Family::tabulated:
      j["family"] = "tabulated";
      j["x"] = w.table_xs();
      j["v"] = w.table_vs();
      break;
  }
  return j;
}

Weight weight_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw SpecError("weight spec needs a family field");
  const std::string family = j.at("family").get<std::string>();
  try {
    if (family == "polynomial") return Weight::polynomial(j.at("s").get<double>());
    if (family == "exponential") return Weight::exponential(j.at("a").get<double>());
    if (family == "product") {
      std::vector<Weight> factors;
      for (const auto& f : j.at("factors")) factors.push_back(weight_from_json(f));
      return Weight::product(std::move(factors));
    }
    if (family == "tabulated")
      return Weight::tabulated(j.at("x").get<std::vector<double>>(),
                               j.at("v").get<std::vector<double>>());
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed weight spec: ") + e.what());
  }
  throw SpecError("unknown weight family: " + family);
}

json grid_to_json(const GridSpec& g) {
  return json{{"L", g.half_width}, {"m", g.samples_per_cell}};
}

GridSpec grid_from_json(const json& j) {
  try {
    return GridSpec(j.at("L").get<int>(), j.at("m").get<int>());
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed grid spec: ") + e.what());
  }
}

SampledFunction function_from_json(const json& j, const GridSpec& grid) {
  if (!j.is_object() || !j.contains("kind"))
    throw SpecError("function spec needs a kind field");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "gaussian") return make_gaussian(grid);
    if (kind == "indicator")
      return make_indicator(j.at("a").get<double>(), j.at("b").get<double>(), grid);
    if (kind == "bump")
      return make_bump(j.at("center").get<double>(), j.at("radius").get<double>(),
                       grid);
    if (kind == "samples") {
      const auto& arr = j.at("values");
      Eigen::ArrayXcd values(arr.size());
      for (std::size_t i = 0; i < arr.size(); ++i) {
        if (arr[i].is_array())
          values[i] = Complex(arr[i].at(0).get<double>(), arr[i].at(1).get<double>());
        else
          values[i] = arr[i].get<double>();
      }
      return make_from_samples(std::move(values), grid);
    }
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed function spec: ") + e.what());
  }
  throw SpecError("unknown function kind: " + kind);
}

json measure_to_json(const DiscreteMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms)
    atoms.push_back(json{{"x", a.location}, {"c", {a.mass.real(), a.mass.imag()}}});
  return json{{"atoms", atoms}};
}

DiscreteMeasure measure_from_json(const json& j) {
  DiscreteMeasure mu;
  try {
    for (const auto& a : j.at("atoms")) {
      DiscreteMeasure::Atom atom;
      atom.location = a.at("x").get<double>();
      const auto& c = a.at("c");
      atom.mass = c.is_array() ? Complex(c.at(0).get<double>(), c.at(1).get<double>())
                               : Complex(c.get<double>(), 0.0);
      mu.atoms.push_back(atom);
    }
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed measure spec: ") + e.what());
  }
  return mu;
}

json norm_report_to_json(const NormReport& rep) {
  json locals = json::object();
  for (const auto& [cell, value] : rep.local_norms)
    locals[std::to_string(cell)] = value;
  return json{{"p", exponent_to_json(rep.p)},
              {"q", exponent_to_json(rep.q)},
              {"weight", weight_to_json(rep.weight)},
              {"global", rep.global},
              {"locals", locals},
              {"m", rep.grid.samples_per_cell}};
}

json a_norm_report_to_json(const ANormReport& rep) {
  return json{{"total", rep.total},
              {"time_part", norm_report_to_json(rep.time_part)},
              {"freq_part", norm_report_to_json(rep.freq_part)},
              {"freq_tail", rep.freq_tail}};
}

json verdict_to_json(const Verdict& v) {
  json trace = json::array();
  for (const auto& h : v.trace)
    trace.push_back(json{{"hypothesis", h.description}, {"holds", h.holds}});
  json j{{"relation", relation_name(v.relation)},
         {"rule", v.rule},
         {"trace", trace}};
  if (v.constant_hint)
    j["constant_hint"] = *v.constant_hint;
  else
    j["constant_hint"] = nullptr;
  j["definite_negative"] = v.definite_negative;
  return j;
}

json suite_report_to_json(const SuiteReport& rep) {
  json cases = json::array();
  for (const auto& c : rep.cases) {
    json jc{{"name", c.name},
            {"measured", c.measured},
            {"bound", c.bound},
            {"pass", c.pass}};
    if (!c.note.empty()) jc["note"] = c.note;
    cases.push_back(jc);
  }
  return json{{"theorem_tag", rep.theorem_tag},
              {"cases", cases},
              {"overall_pass", rep.overall_pass},
              {"grid_refinement_delta", rep.grid_refinement_delta},
              {"notes", rep.notes}};
}

std::string suite_reports_to_csv(std::span<const SuiteReport> reps) {
  std::ostringstream os;
  os << "suite,case,measured,bound,pass,note\n";
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    out += "\"";
    return out;
  };
  for (const auto& rep : reps) {
    for (const auto& c : rep.cases) {
      os << quote(rep.theorem_tag) << ',' << quote(c.name) << ','
         << json(c.measured).dump() << ',' << json(c.bound).dump() << ','
         << (c.pass ? "true" : "false") << ',' << quote(c.note) << '\n';
    }
  }
  return os.str();
}

}  // namespace amalgam
