#include "c1p/fmo_io.hpp"

#include <json.hpp>

#include "c1p/errors.hpp"

namespace c1p {
namespace {

using json = nlohmann::json;

SymbolMultiset multiset_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " must be an object of symbol multiplicities");
  SymbolMultiset m;
  for (const auto& [token, value] : j.items()) {
    if (!value.is_number_integer() || value.get<long long>() <= 0) {
      throw ParseError(where + ": multiplicity of '" + token + "' must be a positive integer");
    }
    m.add(Symbol(token), value.get<std::size_t>());
  }
  return m;
}

nlohmann::ordered_json multiset_to_json(const SymbolMultiset& m) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [sym, k] : m.counts()) j[sym.token()] = k;
  return j;
}

}  // namespace

FmoInstance parse_fmo_instance(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("R") || !j.contains("F")) {
    throw ParseError("instance JSON needs keys \"R\" and \"F\"");
  }
  if (!j["F"].is_array()) throw ParseError("\"F\" must be an array");

  FmoInstance instance;
  instance.universe = multiset_from_json(j["R"], "R");
  for (std::size_t i = 0; i < j["F"].size(); ++i) {
    instance.family.push_back(multiset_from_json(j["F"][i], "F[" + std::to_string(i) + "]"));
  }
  instance.validate();
  return instance;
}

std::string to_json(const FmoInstance& instance) {
  // "R" before "F", matching the documented layout.
  nlohmann::ordered_json j;
  j["R"] = multiset_to_json(instance.universe);
  j["F"] = nlohmann::ordered_json::array();
  for (const auto& member : instance.family) j["F"].push_back(multiset_to_json(member));
  return j.dump(2) + "\n";
}

std::string format_string_list(const std::vector<SymbolString>& strings) {
  std::string out;
  for (const auto& s : strings) {
    out += join(s);
    out += '\n';
  }
  out += "# count=" + std::to_string(strings.size()) + "\n";
  return out;
}

}  // namespace c1p
