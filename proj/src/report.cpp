#include "largesub/report.hpp"

#include <sstream>

#include "largesub/classes.hpp"
#include "largesub/radicals.hpp"

namespace largesub {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_sizes(const Json& arr, const char* sep = ", ") {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

Json subgroup_brief(const FiniteGroup& g, const Subgroup& s) {
  Json j;
  j["order"] = s.order();
  j["generators"] = subgroup_generators(g, s);
  return j;
}

Json radical_brief(const FiniteGroup& g, const RadicalResult& r) {
  return subgroup_brief(g, r.subgroup);
}

}  // namespace

Json to_json(const FiniteGroup&, const Subgroup& s) {
  Json j;
  j["order"] = s.order();
  j["elements"] = s.elements();
  return j;
}

Json to_json(const FiniteGroup&, const SeriesReport& series) {
  Json j;
  j["kind"] = std::string(to_string(series.kind));
  Json orders = Json::array();
  for (const auto& s : series.chain) orders.push_back(s.order());
  j["orders"] = orders;
  j["factor_orders"] = series.factor_orders;
  Json tags = Json::array();
  for (const auto& t : series.factor_tags)
    tags.push_back({{"simple", t.simple}, {"prime_order", t.prime_order}, {"abelian", t.abelian}});
  j["factor_tags"] = tags;
  j["length"] = series.length();
  return j;
}

Json to_json(const FiniteGroup& g, const WitnessResult& w) {
  Json j;
  j["description"] = w.description;
  j["order"] = w.subgroup.order();
  j["generators"] = subgroup_generators(g, w.subgroup);
  j["is_large"] = w.is_large;
  j["centralizer_order"] = w.centralizer_order;
  return j;
}

Json to_json(const FiniteGroup& g, const VerificationReport& report) {
  Json j;
  j["record"] = "verification";
  j["theorem"] = report.theorem;
  j["group"] = report.group_name;
  j["order"] = report.group_order;
  j["outcome"] = std::string(to_string(report.outcome()));
  j["passed"] = report.passed;
  Json hyps = Json::array();
  for (const auto& [name, holds] : report.hypotheses) hyps.push_back({{"name", name}, {"holds", holds}});
  j["hypotheses"] = hyps;
  Json wit = Json::array();
  for (const auto& w : report.witnesses) wit.push_back(to_json(g, w));
  j["witnesses"] = wit;
  j["counterexample"] = report.counterexample ? to_json(g, *report.counterexample) : Json();
  return j;
}

Json to_json(const ScanEntry& entry) {
  Json j;
  j["record"] = "scan";
  j["position"] = entry.position;
  j["group"] = entry.name;
  j["order"] = entry.order;
  j["status"] = std::string(to_string(entry.status));
  j["in_X0"] = entry.in_X0;
  j["residual_order"] = entry.residual_order;
  Json wit = Json::array();
  if (entry.report)
    for (const auto& w : entry.report->witnesses)
      wit.push_back({{"description", w.description},
                     {"order", w.subgroup.order()},
                     {"is_large", w.is_large},
                     {"centralizer_order", w.centralizer_order}});
  j["witnesses"] = wit;
  j["note"] = entry.note;
  return j;
}

Json to_json(const PropBWitness& witness) {
  Json j;
  j["record"] = "prop_b";
  j["group"] = witness.g.name();
  j["order"] = witness.g.order();
  j["z_order"] = witness.z.order();
  j["y_invariants"] = abelian_invariants(witness.y).primary_orders;
  j["y_order"] = witness.y.order();
  j["gamma_order"] = witness.gamma.order();
  Json checks = Json::array();
  for (const auto& [name, ok] : witness.checks) checks.push_back({{"name", name}, {"passed", ok}});
  j["checks"] = checks;
  j["passed"] = witness.all_passed();
  return j;
}

Json group_info(const FiniteGroup& g) {
  Json j;
  j["record"] = "info";
  j["group"] = g.name();
  j["order"] = g.order();
  j["center"] = subgroup_brief(g, center(g));
  Json sizes = Json::array();
  for (const auto& c : conjugacy_classes(g)) sizes.push_back(c.size());
  j["class_sizes"] = sizes;
  Json normals = Json::array();
  for (const auto& n : normal_subgroups(g)) normals.push_back(subgroup_brief(g, n));
  j["normal_subgroups"] = normals;
  Json series;
  series["derived"] = to_json(g, derived_series(g));
  series["lower_central"] = to_json(g, lower_central_series(g));
  series["chief"] = to_json(g, chief_series(g));
  series["composition"] = to_json(g, composition_series(g));
  j["series"] = series;
  const bool soluble = is_soluble(g);
  j["abelian"] = is_abelian(g);
  j["nilpotent"] = is_nilpotent(g);
  j["soluble"] = soluble;
  j["supersoluble"] = is_supersoluble(g);
  j["fitting"] = radical_brief(g, fitting(g));
  j["layer"] = radical_brief(g, layer(g));
  j["generalized_fitting"] = radical_brief(g, generalized_fitting(g));
  j["soluble_radical"] = radical_brief(g, soluble_radical(g));
  j["supersoluble_residual"] = subgroup_brief(g, supersoluble_residual(g));
  j["in_X0"] = soluble ? Json(is_in_X0(g)) : Json();
  return j;
}

std::string render_info(const Json& info) {
  std::ostringstream out;
  out << "group " << info["group"].get<std::string>() << "\n";
  out << "  order: " << info["order"] << "\n";
  out << "  center: order " << info["center"]["order"] << "\n";
  out << "  class sizes: " << join_sizes(info["class_sizes"]) << "\n";
  Json orders = Json::array();
  for (const auto& n : info["normal_subgroups"]) orders.push_back(n["order"]);
  out << "  normal subgroups (" << orders.size() << "): orders " << join_sizes(orders) << "\n";
  for (const auto& [key, s] : info["series"].items())
    out << "  " << key << " series: " << join_sizes(s["orders"], " > ") << "\n";
  out << "  abelian: " << yes_no(info["abelian"].get<bool>())
      << ", nilpotent: " << yes_no(info["nilpotent"].get<bool>())
      << ", soluble: " << yes_no(info["soluble"].get<bool>())
      << ", supersoluble: " << yes_no(info["supersoluble"].get<bool>()) << "\n";
  out << "  F: order " << info["fitting"]["order"] << "\n";
  out << "  E: order " << info["layer"]["order"] << "\n";
  out << "  F*: order " << info["generalized_fitting"]["order"] << "\n";
  out << "  soluble radical: order " << info["soluble_radical"]["order"] << "\n";
  out << "  supersoluble residual: order " << info["supersoluble_residual"]["order"] << "\n";
  out << "  X0: "
      << (info["in_X0"].is_null() ? std::string("n/a (not soluble)")
                                  : std::string(info["in_X0"].get<bool>() ? "true" : "false"))
      << "\n";
  return out.str();
}

std::string render(const VerificationReport& report) {
  std::ostringstream out;
  out << report.theorem << " on " << report.group_name << " (order " << report.group_order
      << "): ";
  switch (report.outcome()) {
    case Outcome::Passed: out << "pass"; break;
    case Outcome::HypothesesFailed: out << "skip (hypotheses failed)"; break;
    case Outcome::Counterexample: out << "COUNTEREXAMPLE"; break;
  }
  out << "\n";
  for (const auto& [name, holds] : report.hypotheses)
    out << "  hypothesis " << name << ": " << yes_no(holds) << "\n";
  for (const auto& w : report.witnesses)
    out << "  witness " << w.description << ", order " << w.subgroup.order() << ": "
        << (w.is_large ? "large" : "NOT large") << " (|C_G| = " << w.centralizer_order << ")\n";
  return out.str();
}

std::string render(const ScanEntry& entry) {
  std::ostringstream out;
  out << "#" << entry.position << " " << entry.name << " (order " << entry.order << "): "
      << to_string(entry.status);
  if (entry.status != ScanStatus::Skipped)
    out << ", X0 " << (entry.in_X0 ? "yes" : "no") << ", supersoluble residual order "
        << entry.residual_order;
  if (!entry.note.empty()) out << " [" << entry.note << "]";
  out << "\n";
  if (entry.status == ScanStatus::Finding && entry.report)
    for (const auto& w : entry.report->witnesses)
      out << "  witness " << w.description << ", order " << w.subgroup.order() << ": "
          << (w.is_large ? "large" : "NOT large") << "\n";
  return out.str();
}

std::string render(const PropBWitness& witness) {
  std::ostringstream out;
  out << "central product of " << witness.g.name() << " (order " << witness.g.order()
      << ") with " << witness.y.name() << " over Z of order " << witness.z.order()
      << ": order " << witness.gamma.order() << "\n";
  for (const auto& [name, ok] : witness.checks)
    out << "  check " << name << ": " << (ok ? "ok" : "FAILED") << "\n";
  return out.str();
}

}  // namespace largesub
