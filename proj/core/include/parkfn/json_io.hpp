#pragma once

#include <nlohmann/json.hpp>

#include "parkfn/colored.hpp"
#include "parkfn/forest.hpp"
#include "parkfn/parking.hpp"
#include "parkfn/poly.hpp"

namespace parkfn {

// {"kind":"pf","m":..,"n":..,"prefs":[..]} / {"kind":"abpf","a":..,"b":..,"m":..,"prefs":[..]}
nlohmann::json to_json(const ParkingFunction& pf);
ParkingFunction parking_function_from_json(const nlohmann::json& j);

// {"m":..,"n":..,"parent":{"1":"01","3":"4",...}} with roots serialized "01".."0k".
nlohmann::json to_json(const RootedForest& f);
RootedForest forest_from_json(const nlohmann::json& j);

// {"a":..,"b":..,"parent":{"1":0,...},"color":{"1":1,...}}
nlohmann::json to_json(const ColoredTree& t);
ColoredTree colored_tree_from_json(const nlohmann::json& j);

// Graded-lex ordered [{"exps":[..],"coef":"<decimal>"}, ...]
nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j, int arity);

}  // namespace parkfn
