#include "burnside/serialize.hpp"

namespace burnside {

Json to_json(const Count& value) { return value.str(); }

Json to_json(const Coloring& coloring) {
  Json cells = Json::array();
  for (Color c : coloring.cells()) cells.push_back(c);
  return cells;
}

Json to_json(const FixedPointTable& table) {
  Json entries = Json::array();
  for (const auto& entry : table.entries) {
    entries.push_back({{"elementLabel", entry.element_label},
                       {"fixedCount", to_json(entry.fixed_count)}});
  }
  return {{"entries", std::move(entries)}, {"total", to_json(table.total)}};
}

Json to_json(const OrbitReport& report) {
  Json out;
  out["n"] = report.n;
  out["q"] = report.q;
  out["groupOrder"] = report.group_order;
  out["fixedTable"] = report.fixed_table ? to_json(*report.fixed_table) : Json(nullptr);
  out["fixedSum"] = report.fixed_sum ? to_json(*report.fixed_sum) : Json(nullptr);
  out["orbitCount"] = to_json(report.orbit_count);
  out["method"] = to_string(report.method);
  return out;
}

Json to_json(const CongruenceReport& report) {
  Json out;
  out["p"] = report.p;
  out["j"] = report.j;
  out["q"] = report.q;
  out["setSize"] = to_json(report.set_size);
  out["fixedSize"] = to_json(report.fixed_size);
  out["setResidue"] = to_json(report.set_residue);
  out["fixedResidue"] = to_json(report.fixed_residue);
  out["congruent"] = report.congruent;
  out["mode"] = to_string(report.mode);
  out["crossChecked"] = report.cross_checked;
  return out;
}

Json to_json(const VerificationResult& result) {
  Json inputs = Json::object();
  for (const auto& [name, value] : result.inputs) inputs[name] = to_json(value);
  Json out;
  out["theorem"] = to_string(result.theorem);
  out["inputs"] = std::move(inputs);
  out["route"] = to_string(result.route);
  out["witness"] = result.witness;
  out["verified"] = result.verified;
  return out;
}

}  // namespace burnside
