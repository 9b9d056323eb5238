#include "beauty/io.hpp"

#include <set>

#include "json.hpp"

namespace beauty {

namespace {

using nlohmann::json;

json parse_document(const std::string& document) {
  try {
    return json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error("PARSE_ERROR", e.what());
  }
}

void require_keys(const json& object, const std::set<std::string>& allowed,
                  const std::string& where) {
  if (!object.is_object())
    throw Error("PARSE_ERROR", where + " must be an object");
  for (const auto& [key, value] : object.items())
    if (!allowed.count(key))
      throw Error("PARSE_ERROR", "unknown key '" + key + "' in " + where);
}

Rational read_rational(const json& value, const std::string& where) {
  if (!value.is_string())
    throw Error("BAD_RATIONAL",
                where + " must be a rational string \"p/q\", got " + value.dump());
  return Rational::parse(value.get<std::string>());
}

std::string read_string(const json& value, const std::string& where) {
  if (!value.is_string()) throw Error("PARSE_ERROR", where + " must be a string");
  return value.get<std::string>();
}

std::vector<std::string> read_string_list(const json& value, const std::string& where) {
  if (!value.is_array()) throw Error("PARSE_ERROR", where + " must be a list");
  std::vector<std::string> out;
  for (const auto& item : value) out.push_back(read_string(item, "entry of " + where));
  return out;
}

}  // namespace

GameSpec load_game(const std::string& document) {
  json root = parse_document(document);
  require_keys(root, {"realizations", "infosets", "payoffs"}, "game document");
  for (const auto& key : {"realizations", "infosets", "payoffs"})
    if (!root.contains(key))
      throw Error("PARSE_ERROR", std::string("missing top-level key '") + key + "'");

  GameSpec spec;
  if (!root["realizations"].is_array())
    throw Error("PARSE_ERROR", "'realizations' must be a list");
  for (const auto& item : root["realizations"]) {
    require_keys(item, {"id", "probability", "awakenings"}, "realization");
    Realization r;
    r.id = read_string(item.at("id"), "realization id");
    r.probability = read_rational(item.at("probability"), "probability");
    r.awakenings = read_string_list(item.at("awakenings"), "awakenings");
    spec.realizations.push_back(std::move(r));
  }

  if (!root["infosets"].is_array())
    throw Error("PARSE_ERROR", "'infosets' must be a list");
  for (const auto& item : root["infosets"]) {
    require_keys(item, {"label", "actions", "symmetry_class", "decline_action"},
                 "information set");
    InformationSet iset;
    iset.label = read_string(item.at("label"), "information set label");
    iset.actions = read_string_list(item.at("actions"), "actions");
    if (item.contains("symmetry_class"))
      iset.symmetry_class = read_string(item["symmetry_class"], "symmetry_class");
    if (item.contains("decline_action"))
      iset.decline_action = read_string(item["decline_action"], "decline_action");
    spec.infosets.push_back(std::move(iset));
  }

  if (!root["payoffs"].is_object())
    throw Error("PARSE_ERROR", "'payoffs' must be a map from realization id");
  for (const auto& [id, entries] : root["payoffs"].items()) {
    if (!entries.is_array())
      throw Error("PARSE_ERROR", "payoffs for '" + id + "' must be a list");
    for (const auto& item : entries) {
      require_keys(item, {"profile", "value"}, "payoff entry");
      PayoffEntry entry;
      entry.profile = read_string_list(item.at("profile"), "profile");
      entry.value = read_rational(item.at("value"), "payoff value");
      spec.payoffs[id].push_back(std::move(entry));
    }
  }
  return spec;
}

std::string serialize_game(const GameSpec& spec) {
  json root;
  root["realizations"] = json::array();
  for (const auto& r : spec.realizations) {
    json item;
    item["id"] = r.id;
    item["probability"] = r.probability.str();
    item["awakenings"] = r.awakenings;
    root["realizations"].push_back(item);
  }
  root["infosets"] = json::array();
  for (const auto& iset : spec.infosets) {
    json item;
    item["label"] = iset.label;
    item["actions"] = iset.actions;
    if (!iset.symmetry_class.empty()) item["symmetry_class"] = iset.symmetry_class;
    if (iset.decline_action) item["decline_action"] = *iset.decline_action;
    root["infosets"].push_back(item);
  }
  root["payoffs"] = json::object();
  for (const auto& [id, entries] : spec.payoffs) {
    json list = json::array();
    for (const auto& entry : entries) {
      json item;
      item["profile"] = entry.profile;
      item["value"] = entry.value.str();
      list.push_back(item);
    }
    root["payoffs"][id] = list;
  }
  return root.dump(2);
}

std::map<std::string, Rational> load_weights(const std::string& document) {
  json root = parse_document(document);
  if (!root.is_object())
    throw Error("PARSE_ERROR", "weights document must be a map from event key");
  std::map<std::string, Rational> weights;
  for (const auto& [key, value] : root.items())
    weights[key] = read_rational(value, "weight for '" + key + "'");
  return weights;
}

}  // namespace beauty
