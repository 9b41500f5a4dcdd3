#include "parkfn/json_io.hpp"

namespace parkfn {

using nlohmann::json;

namespace {

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(std::string("missing integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

std::vector<int> int_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("missing array field \"") + key + "\"");
  }
  std::vector<int> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) throw ParseError("array entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json to_json(const ParkingFunction& pf) {
  json j;
  if (pf.classical()) {
    const PFParams& p = pf.pf_params();
    j["kind"] = "pf";
    j["m"] = p.m;
    j["n"] = p.n;
  } else {
    const ABParams& p = pf.ab_params();
    j["kind"] = "abpf";
    j["a"] = p.a;
    j["b"] = p.b;
    j["m"] = p.m;
  }
  j["prefs"] = pf.prefs();
  return j;
}

ParkingFunction parking_function_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("expected a parking function object");
  std::string kind = j["kind"].get<std::string>();
  std::vector<int> prefs = int_array(j, "prefs");
  if (kind == "pf") {
    return ParkingFunction(PFParams{int_field(j, "m"), int_field(j, "n")}, std::move(prefs));
  }
  if (kind == "abpf") {
    return ParkingFunction(ABParams{int_field(j, "a"), int_field(j, "b"), int_field(j, "m")},
                           std::move(prefs));
  }
  throw ParseError("unknown parking function kind: " + kind);
}

json to_json(const RootedForest& f) {
  json parent = json::object();
  for (int v = 1; v <= f.edge_count(); ++v) {
    int p = f.parent(v);
    parent[std::to_string(v)] = RootedForest::is_root_ref(p)
                                    ? "0" + std::to_string(RootedForest::root_index(p))
                                    : std::to_string(p);
  }
  json j;
  j["m"] = f.edge_count();
  j["n"] = f.spot_count();
  j["parent"] = std::move(parent);
  return j;
}

RootedForest forest_from_json(const json& j) {
  if (!j.is_object() || !j.contains("parent") || !j["parent"].is_object()) {
    throw ParseError("expected a forest object with a \"parent\" map");
  }
  int m = int_field(j, "m");
  int n = int_field(j, "n");
  if (m < 1) throw ParseError("forest needs m >= 1");
  std::vector<int> parent(static_cast<std::size_t>(m), 0);
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (const auto& [key, value] : j["parent"].items()) {
    int v = 0;
    try {
      v = std::stoi(key);
    } catch (const std::exception&) {
      throw ParseError("bad vertex label: " + key);
    }
    if (v < 1 || v > m) throw ParseError("vertex label out of range: " + key);
    if (!value.is_string()) throw ParseError("parent entries must be strings");
    std::string s = value.get<std::string>();
    if (s.empty()) throw ParseError("empty parent reference");
    int ref = 0;
    try {
      ref = s[0] == '0' && s.size() > 1 ? RootedForest::root_ref(std::stoi(s.substr(1)))
                                        : std::stoi(s);
    } catch (const std::exception&) {
      throw ParseError("bad parent reference: " + s);
    }
    parent[static_cast<std::size_t>(v) - 1] = ref;
    seen[static_cast<std::size_t>(v) - 1] = 1;
  }
  for (int v = 1; v <= m; ++v) {
    if (!seen[static_cast<std::size_t>(v) - 1]) {
      throw ParseError("vertex " + std::to_string(v) + " has no parent entry");
    }
  }
  try {
    return RootedForest(m, n, std::move(parent));
  } catch (const MalformedForest& e) {
    throw ParseError(std::string("malformed forest: ") + e.what());
  }
}

json to_json(const ColoredTree& t) {
  json parent = json::object();
  json color = json::object();
  for (int v = 1; v <= t.size(); ++v) {
    parent[std::to_string(v)] = t.parent(v);
    color[std::to_string(v)] = t.color(v);
  }
  json j;
  j["a"] = t.color_a();
  j["b"] = t.color_b();
  j["parent"] = std::move(parent);
  j["color"] = std::move(color);
  return j;
}

ColoredTree colored_tree_from_json(const json& j) {
  if (!j.is_object() || !j.contains("parent") || !j.contains("color")) {
    throw ParseError("expected a colored tree object with \"parent\" and \"color\"");
  }
  int a = int_field(j, "a");
  int b = int_field(j, "b");
  std::size_t n = j["parent"].size();
  if (n == 0 || j["color"].size() != n) {
    throw ParseError("parent and color maps must cover the same vertices");
  }
  std::vector<int> parent(n, -1);
  std::vector<int> color(n, 0);
  auto read_map = [n](const json& map, std::vector<int>& out) {
    for (const auto& [key, value] : map.items()) {
      int v = 0;
      try {
        v = std::stoi(key);
      } catch (const std::exception&) {
        throw ParseError("bad vertex label: " + key);
      }
      if (v < 1 || v > static_cast<int>(n)) throw ParseError("vertex label out of range: " + key);
      if (!value.is_number_integer()) throw ParseError("map entries must be integers");
      out[static_cast<std::size_t>(v) - 1] = value.get<int>();
    }
  };
  read_map(j["parent"], parent);
  read_map(j["color"], color);
  try {
    return ColoredTree(a, b, std::move(parent), std::move(color));
  } catch (const MalformedTree& e) {
    throw ParseError(std::string("malformed colored tree: ") + e.what());
  }
}

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [exps, coef] : p.terms()) {
    json term;
    term["exps"] = exps;
    term["coef"] = coef.str();
    terms.push_back(std::move(term));
  }
  return terms;
}

MultiPoly poly_from_json(const json& j, int arity) {
  if (!j.is_array()) throw ParseError("expected a polynomial term array");
  MultiPoly p(arity);
  for (const auto& term : j) {
    std::vector<int> exps = int_array(term, "exps");
    if (!term.contains("coef") || !term["coef"].is_string()) {
      throw ParseError("term needs a decimal-string \"coef\"");
    }
    try {
      p.add_term(std::move(exps), BigInt(term["coef"].get<std::string>()));
    } catch (const std::runtime_error& e) {
      throw ParseError(std::string("bad coefficient: ") + e.what());
    }
  }
  return p;
}

}  // namespace parkfn
