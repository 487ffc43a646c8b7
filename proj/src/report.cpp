#include "fproot/report.hpp"

#include <sstream>

namespace fproot {

Json ideal_to_json(const Ideal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.gens()) gens.push_back(g.str());
  return Json{{"gens", gens}, {"ring", ring_to_string(*ideal.ring())}};
}

Json basis_to_json(const Ideal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.reduced_basis()) gens.push_back(g.str());
  return Json{{"gens", gens}, {"ring", ring_to_string(*ideal.ring())}};
}

Json chain_to_json(const ChainReport& chain) {
  Json ideals = Json::array();
  for (const auto& ideal : chain.ideals) {
    Json gens = Json::array();
    for (const auto& g : ideal.reduced_basis()) gens.push_back(g.str());
    ideals.push_back(gens);
  }
  Json verified = Json::array();
  for (bool ok : chain.containment_ok) verified.push_back(ok);
  const char* direction = chain.direction == ChainDirection::ascending    ? "ascending"
                          : chain.direction == ChainDirection::descending ? "descending"
                                                                          : "none";
  Json out{{"direction", direction},
           {"first_label", chain.first_label},
           {"ideals", ideals},
           {"containment_verified", verified},
           {"overshoot", chain.overshoot}};
  if (chain.stabilization_index)
    out["stabilization_index"] = *chain.stabilization_index;
  else
    out["stabilization_index"] = nullptr;
  return out;
}

Json threshold_to_json(const ThresholdResult& result) {
  Json candidates = Json::array();
  for (const auto& c : result.candidates) candidates.push_back(c.to_string());
  Json out{{"lower", result.lower.to_string()},
           {"upper", result.upper.to_string()},
           {"candidates", candidates},
           {"e_used", result.e_used}};
  out["certified"] = result.certified ? Json(result.certified->to_string()) : Json(nullptr);
  return out;
}

Json make_report(const std::string& command, const Ring& ring, Json inputs, Json result,
                 Json witnesses) {
  return Json{{"command", command},
              {"version", kVersion},
              {"ring", ring ? Json(ring_to_string(*ring)) : Json(nullptr)},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"witnesses", std::move(witnesses)}};
}

namespace {

void render_value(std::ostringstream& os, const std::string& key, const Json& value,
                  int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, v] : value.items()) render_value(os, k, v, indent + 2);
  } else if (value.is_array()) {
    os << pad << key << ": [";
    bool first = true;
    for (const auto& v : value) {
      if (!first) os << ", ";
      first = false;
      if (v.is_string())
        os << v.get<std::string>();
      else
        os << v.dump();
    }
    os << "]\n";
  } else if (value.is_string()) {
    os << pad << key << ": " << value.get<std::string>() << "\n";
  } else {
    os << pad << key << ": " << value.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  os << report["command"].get<std::string>();
  if (report.contains("ring") && report["ring"].is_string())
    os << " over " << report["ring"].get<std::string>();
  os << "\n";
  if (report.contains("result"))
    for (const auto& [k, v] : report["result"].items()) render_value(os, k, v, 2);
  if (report.contains("witnesses") && report["witnesses"].is_object() &&
      !report["witnesses"].empty())
    for (const auto& [k, v] : report["witnesses"].items()) render_value(os, "witness " + k, v, 2);
  return os.str();
}

}  // namespace fproot
