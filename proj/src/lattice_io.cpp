#include <sstream>

#include <json.hpp>

#include "latsb/lattice.hpp"

namespace latsb {

std::string to_json(const Lattice& L) {
  nlohmann::json j;
  j["elements"] = L.names();
  auto covers = nlohmann::json::array();
  for (const auto& c : L.covers()) covers.push_back({c.lower, c.upper});
  j["covers"] = std::move(covers);
  return j.dump(2);
}

Lattice lattice_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LatticeError(std::string("malformed lattice JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw LatticeError("lattice JSON needs an \"elements\" array");
  std::vector<std::string> names;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw LatticeError("element names must be strings");
    names.push_back(e.get<std::string>());
  }
  std::vector<Cover> covers;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw LatticeError("\"covers\" must be an array");
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_unsigned() || !c[1].is_number_unsigned())
        throw LatticeError("each cover must be a pair of element indices");
      covers.push_back({c[0].get<ElementId>(), c[1].get<ElementId>()});
    }
  }
  return Lattice::build(std::move(names), covers);
}

std::string to_dot(const Lattice& L, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (ElementId a = 0; a < L.size(); ++a) {
    std::string label;
    for (char ch : L.name(a)) {
      if (ch == '"' || ch == '\\') label.push_back('\\');
      label.push_back(ch);
    }
    os << "  n" << a << " [label=\"" << label << "\"];\n";
  }
  for (const auto& c : L.covers()) os << "  n" << c.lower << " -> n" << c.upper << " [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

}  // namespace latsb
