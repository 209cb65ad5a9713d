#include "hocat/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace hocat {

json sset_to_json(const TruncatedSSet& X) {
  json j;
  j["trunc_level"] = X.trunc_level;
  json cells = json::object();
  for (int n = 0; n <= X.trunc_level; ++n) cells[std::to_string(n)] = X.cells[n];
  j["cells"] = cells;
  json face = json::object(), degen = json::object();
  for (int n = 1; n <= X.trunc_level; ++n)
    for (int i = 0; i <= n; ++i) {
      json m = json::object();
      for (int c = 0; c < X.num_cells(n); ++c)
        m[X.cells[n][c]] = X.cells[n - 1][X.face[n][i][c]];
      face[std::to_string(n) + ":" + std::to_string(i)] = m;
    }
  for (int n = 0; n < X.trunc_level; ++n)
    for (int i = 0; i <= n; ++i) {
      json m = json::object();
      for (int c = 0; c < X.num_cells(n); ++c)
        m[X.cells[n][c]] = X.cells[n + 1][X.degen[n][i][c]];
      degen[std::to_string(n) + ":" + std::to_string(i)] = m;
    }
  j["face"] = face;
  j["degen"] = degen;
  return j;
}

TruncatedSSet sset_from_json(const json& j) {
  TruncatedSSet X;
  X.trunc_level = j.at("trunc_level").get<int>();
  int L = X.trunc_level;
  X.cells.resize(L + 1);
  X.face.resize(L + 1);
  X.degen.resize(L + 1);
  std::vector<std::unordered_map<std::string, int>> idx(L + 1);
  for (int n = 0; n <= L; ++n) {
    X.cells[n] = j.at("cells").at(std::to_string(n)).get<std::vector<std::string>>();
    for (int c = 0; c < int(X.cells[n].size()); ++c) idx[n][X.cells[n][c]] = c;
  }
  auto table = [&](const json& src, int n, int i, int tgt_dim) {
    const json& m = src.at(std::to_string(n) + ":" + std::to_string(i));
    std::vector<int> col(X.cells[n].size());
    for (int c = 0; c < int(X.cells[n].size()); ++c) {
      const std::string& out = m.at(X.cells[n][c]).get_ref<const std::string&>();
      auto it = idx[tgt_dim].find(out);
      if (it == idx[tgt_dim].end())
        throw std::runtime_error("sset_from_json: unknown cell id " + out);
      col[c] = it->second;
    }
    return col;
  };
  for (int n = 1; n <= L; ++n) {
    X.face[n].resize(n + 1);
    for (int i = 0; i <= n; ++i) X.face[n][i] = table(j.at("face"), n, i, n - 1);
  }
  for (int n = 0; n < L; ++n) {
    X.degen[n].resize(n + 1);
    for (int i = 0; i <= n; ++i) X.degen[n][i] = table(j.at("degen"), n, i, n + 1);
  }
  X.finalize();
  return X;
}

json map_to_json(const SSetMap& f) {
  json j;
  j["source"] = sset_to_json(*f.source);
  j["target"] = sset_to_json(*f.target);
  json levels = json::object();
  for (int n = 0; n <= f.source->trunc_level; ++n) {
    json m = json::object();
    for (int c = 0; c < f.source->num_cells(n); ++c)
      m[f.source->cells[n][c]] = f.target->cells[n][f.apply(n, c)];
    levels[std::to_string(n)] = m;
  }
  j["levels"] = levels;
  return j;
}

LoadedMap map_from_json(const json& j) {
  LoadedMap L;
  L.source = sset_from_json(j.at("source"));
  L.target = sset_from_json(j.at("target"));
  L.level_maps.resize(L.source.trunc_level + 1);
  for (int n = 0; n <= L.source.trunc_level; ++n) {
    const json& m = j.at("levels").at(std::to_string(n));
    for (int c = 0; c < L.source.num_cells(n); ++c) {
      const std::string& out =
          m.at(L.source.cells[n][c]).get_ref<const std::string&>();
      int t = L.target.cell_index(n, out);
      if (t < 0) throw std::runtime_error("map_from_json: unknown target id " + out);
      L.level_maps[n].push_back(t);
    }
  }
  return L;
}

json category_to_json(const ExplicitFinCategory& C) {
  json j;
  j["objects"] = C.objects;
  json arrows = json::array();
  for (const auto& a : C.arrows)
    arrows.push_back({{"id", a.id},
                      {"src", C.objects[a.src]},
                      {"tgt", C.objects[a.tgt]}});
  j["arrows"] = arrows;
  json ident = json::array();
  for (int o = 0; o < C.num_objects(); ++o)
    ident.push_back(C.arrows[C.identity[o]].id);
  j["identity"] = ident;
  json comp = json::object();
  for (int g = 0; g < C.num_arrows(); ++g)
    for (int f = 0; f < C.num_arrows(); ++f)
      if (C.comp[g][f] >= 0)
        comp[C.arrows[g].id + "." + C.arrows[f].id] = C.arrows[C.comp[g][f]].id;
  j["comp"] = comp;
  return j;
}

ExplicitFinCategory category_from_json(const json& j) {
  ExplicitFinCategory C;
  C.objects = j.at("objects").get<std::vector<std::string>>();
  std::unordered_map<std::string, int> oidx, aidx;
  for (int o = 0; o < int(C.objects.size()); ++o) oidx[C.objects[o]] = o;
  for (const auto& a : j.at("arrows")) {
    ExplicitFinCategory::Arrow arr;
    arr.id = a.at("id").get<std::string>();
    arr.src = oidx.at(a.at("src").get<std::string>());
    arr.tgt = oidx.at(a.at("tgt").get<std::string>());
    aidx[arr.id] = int(C.arrows.size());
    C.arrows.push_back(arr);
  }
  for (const auto& id : j.at("identity"))
    C.identity.push_back(aidx.at(id.get<std::string>()));
  C.comp.assign(C.arrows.size(), std::vector<int>(C.arrows.size(), -1));
  for (auto it = j.at("comp").begin(); it != j.at("comp").end(); ++it) {
    const std::string& key = it.key();
    // splitting "g.f" needs the arrow ids themselves; try every cut point
    bool found = false;
    for (size_t cut = 1; cut + 1 < key.size() && !found; ++cut) {
      if (key[cut] != '.') continue;
      auto g = aidx.find(key.substr(0, cut));
      auto f = aidx.find(key.substr(cut + 1));
      if (g != aidx.end() && f != aidx.end()) {
        C.comp[g->second][f->second] = aidx.at(it.value().get<std::string>());
        found = true;
      }
    }
    if (!found) throw std::runtime_error("category_from_json: bad comp key " + key);
  }
  C.finalize();
  return C;
}

json presheaf_to_json(const Presheaf& F) {
  const ExplicitFinCategory& C = *F.base;
  json j;
  j["base"] = category_to_json(C);
  json values = json::object();
  for (int o = 0; o < C.num_objects(); ++o) values[C.objects[o]] = F.values[o];
  j["values"] = values;
  json action = json::object();
  for (int a = 0; a < C.num_arrows(); ++a) {
    json m = json::object();
    for (int x = 0; x < int(F.values[C.arrows[a].tgt].size()); ++x)
      m[F.values[C.arrows[a].tgt][x]] = F.values[C.arrows[a].src][F.action[a][x]];
    action[C.arrows[a].id] = m;
  }
  j["action"] = action;
  return j;
}

LoadedPresheaf presheaf_from_json(const json& j) {
  LoadedPresheaf L;
  L.base = category_from_json(j.at("base"));
  const ExplicitFinCategory& C = L.base;
  L.values.resize(C.num_objects());
  for (int o = 0; o < C.num_objects(); ++o)
    L.values[o] = j.at("values").at(C.objects[o]).get<std::vector<std::string>>();
  L.action.resize(C.num_arrows());
  for (int a = 0; a < C.num_arrows(); ++a) {
    const json& m = j.at("action").at(C.arrows[a].id);
    int s = C.arrows[a].src, t = C.arrows[a].tgt;
    for (const auto& vid : L.values[t]) {
      const std::string& out = m.at(vid).get_ref<const std::string&>();
      int pos = -1;
      for (int x = 0; x < int(L.values[s].size()); ++x)
        if (L.values[s][x] == out) pos = x;
      if (pos < 0)
        throw std::runtime_error("presheaf_from_json: unknown value id " + out);
      L.action[a].push_back(pos);
    }
  }
  return L;
}

json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  json j;
  f >> j;
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << j.dump(2) << "\n";
}

}  // namespace hocat
