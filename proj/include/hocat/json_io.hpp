#pragma once

#include <string>

#include <json.hpp>

#include "hocat/fibration.hpp"
#include "hocat/fincat.hpp"
#include "hocat/sset.hpp"

namespace hocat {

using nlohmann::json;

// Schemas:
//   TruncatedSSet: {"trunc_level": L, "cells": {"n": [ids]},
//                   "face": {"n:i": {id: id}}, "degen": {"n:i": {id: id}}}
//   SSetMap:       {"source": <sset>, "target": <sset>,
//                   "levels": {"n": {id: id}}}
//   Presheaf:      {"base": <category>, "values": {obj: [ids]},
//                   "action": {arrow: {id: id}}}
//   category:      {"objects": [ids], "arrows": [{"id","src","tgt"}],
//                   "identity": [ids], "comp": {"g.f": h-id}}

json sset_to_json(const TruncatedSSet& X);
TruncatedSSet sset_from_json(const json& j);

// Owns its endpoints; map() assembles the pointer-based view on demand so
// the loaded value can be moved around safely.
struct LoadedMap {
  TruncatedSSet source, target;
  std::vector<std::vector<int>> level_maps;
  SSetMap map() const { return {&source, &target, level_maps}; }
};
json map_to_json(const SSetMap& f);
LoadedMap map_from_json(const json& j);

json category_to_json(const ExplicitFinCategory& C);
ExplicitFinCategory category_from_json(const json& j);

struct LoadedPresheaf {
  ExplicitFinCategory base;
  std::vector<std::vector<std::string>> values;
  std::vector<std::vector<int>> action;
  Presheaf presheaf() const { return {&base, values, action}; }
};
json presheaf_to_json(const Presheaf& F);
LoadedPresheaf presheaf_from_json(const json& j);

json load_json_file(const std::string& path);  // throws std::runtime_error on I/O
void save_json_file(const std::string& path, const json& j);

}  // namespace hocat
