#pragma once

// JSON ingestion for spaces, covers, maps, bounded hypercovers, groups and
// scenarios, plus deterministic report serialization. Loaders validate
// eagerly and fail with input errors carrying field diagnostics.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hck/chain_complex.hpp"
#include "hck/fixtures.hpp"
#include "hck/hocolim.hpp"
#include "hck/over_x.hpp"

namespace hck::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;
using space::IndexedCover;
using space::OpenSubset;
using space::SpacePtr;

inline json load_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::input, "cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::input, "invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

// {"points": ["a", ...], "leq": [["a","b"], ...]} — a <= b, closure taken by
// the space constructor
inline SpacePtr load_space(const json& j) {
  require(j.is_object() && j.contains("points") && j["points"].is_array(), errc::input,
          "space: expected object with a \"points\" array");
  std::vector<std::string> names;
  for (auto& p : j["points"]) {
    require(p.is_string(), errc::input, "space: point names must be strings");
    names.push_back(p.get<std::string>());
  }
  auto index_of = [&](const std::string& n) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<int>(i);
    fail(errc::input, "space: relation names unknown point \"" + n + "\"");
  };
  std::vector<std::pair<int, int>> rel;
  if (j.contains("leq")) {
    require(j["leq"].is_array(), errc::input, "space: \"leq\" must be an array of pairs");
    for (auto& pr : j["leq"]) {
      require(pr.is_array() && pr.size() == 2 && pr[0].is_string() && pr[1].is_string(), errc::input,
              "space: each \"leq\" entry must be a pair of point names");
      rel.emplace_back(index_of(pr[0].get<std::string>()), index_of(pr[1].get<std::string>()));
    }
  }
  return space::make_space(std::move(names), rel);
}

// {"entries": [{"label": ..., "carrier": ["p", ...]}, ...]}
inline IndexedCover load_cover(const json& j, const SpacePtr& base) {
  require(j.is_object() && j.contains("entries") && j["entries"].is_array(), errc::input,
          "cover: expected object with an \"entries\" array");
  std::vector<std::pair<std::string, OpenSubset>> entries;
  for (auto& e : j["entries"]) {
    require(e.is_object() && e.contains("label") && e.contains("carrier"), errc::input,
            "cover: each entry needs \"label\" and \"carrier\"");
    Bitset b(base->size());
    for (auto& p : e["carrier"]) {
      require(p.is_string(), errc::input, "cover: carrier points must be strings");
      b.set(base->index_of(p.get<std::string>()));
    }
    entries.emplace_back(e["label"].get<std::string>(), OpenSubset(base, b));
  }
  return IndexedCover(base, std::move(entries));
}

inline SpacePtr resolve_space_ref(const json& j);

// {"source": SPACE, "target": SPACE, "assignment": {"p": "q", ...}}
inline space::ContinuousMap load_map(const json& j) {
  require(j.is_object() && j.contains("assignment"), errc::input,
          "map: expected object with an \"assignment\"");
  require(j.contains("source") && j.contains("target"), errc::input,
          "map: needs \"source\" and \"target\" spaces");
  SpacePtr src = resolve_space_ref(j["source"]);
  SpacePtr dst = resolve_space_ref(j["target"]);
  std::vector<int> assign(src->size(), -1);
  for (auto& [k, v] : j["assignment"].items()) {
    require(v.is_string(), errc::input, "map: assignment values must be point names");
    assign[src->index_of(k)] = dst->index_of(v.get<std::string>());
  }
  for (int i = 0; i < src->size(); ++i)
    require(assign[i] >= 0, errc::input, "map: no assignment for point \"" + src->name(i) + "\"");
  return space::ContinuousMap(src, dst, std::move(assign));
}

// space reference: fixture name string or inline space object
inline SpacePtr resolve_space_ref(const json& j) {
  if (j.is_string()) return fixtures::space(j.get<std::string>());
  return load_space(j);
}

// {"base": SPACE, "levels": [{"summands": [...], "faces": [[...], ...],
//  "degens": [[...], ...]}, ...], "coskeletal_above": N}
// faces of level n list n+1 assignments into level n-1; degens of level n
// list n+1 assignments into level n+1 (present below the top level)
inline cech::SimplicialSpaceOverX load_hypercover(const json& j, int cap) {
  require(j.is_object() && j.contains("base") && j.contains("levels"), errc::input,
          "hypercover: expected object with \"base\" and \"levels\"");
  SpacePtr base = resolve_space_ref(j["base"]);
  const json& levels = j["levels"];
  require(levels.is_array() && !levels.empty(), errc::input, "hypercover: \"levels\" must be nonempty");
  int top = static_cast<int>(levels.size()) - 1;
  require(j.contains("coskeletal_above") && j["coskeletal_above"].is_number_integer(), errc::input,
          "hypercover: needs \"coskeletal_above\"");
  int n_bound = j["coskeletal_above"].get<int>();
  require(n_bound <= top, errc::input, "hypercover: explicit levels stop before coskeletal_above");
  cech::SimplicialSpaceOverX h;
  h.base = base;
  h.levels.resize(top + 1);
  h.faces.resize(top + 1);
  h.degens.resize(top);
  for (int n = 0; n <= top; ++n) {
    const json& lvl = levels[n];
    require(lvl.contains("summands") && lvl["summands"].is_array(), errc::input,
            "hypercover: level " + std::to_string(n) + " needs \"summands\"");
    h.levels[n].base = base;
    for (auto& s : lvl["summands"]) {
      Bitset b(base->size());
      for (auto& p : s["carrier"]) b.set(base->index_of(p.get<std::string>()));
      h.levels[n].summands.push_back({s["label"].get<std::string>(), b});
    }
    if (n >= 1) {
      require(lvl.contains("faces") && lvl["faces"].is_array() &&
                  static_cast<int>(lvl["faces"].size()) == n + 1,
              errc::input, "hypercover: level " + std::to_string(n) + " needs n+1 face assignments");
      h.faces[n].resize(n + 1);
      for (int i = 0; i <= n; ++i)
        for (auto& v : lvl["faces"][i]) h.faces[n][i].push_back(v.get<int>());
    }
    if (n < top) {
      require(lvl.contains("degens") && static_cast<int>(lvl["degens"].size()) == n + 1, errc::input,
              "hypercover: level " + std::to_string(n) + " needs n+1 degeneracy assignments");
      h.degens[n].resize(n + 1);
      for (int i = 0; i <= n; ++i)
        for (auto& v : lvl["degens"][i]) h.degens[n][i].push_back(v.get<int>());
    }
  }
  h.check_structure();
  if (cap > top) h = cech::coskeleton_over_x(h, n_bound, cap);
  return h;
}

// reports --------------------------------------------------------------------

inline ordered_json homology_json(const std::vector<homology::HomologyGroup>& groups) {
  ordered_json out = ordered_json::array();
  for (size_t k = 0; k < groups.size(); ++k) {
    ordered_json g;
    g["degree"] = k;
    g["betti"] = groups[k].betti;
    ordered_json tors = ordered_json::array();
    for (auto& t : groups[k].torsion) tors.push_back(t.to_string());
    g["torsion"] = tors;
    g["group"] = groups[k].to_string();
    out.push_back(g);
  }
  return out;
}

inline ordered_json certificate_json(const homology::WeakEquivCertificate& cert) {
  ordered_json out;
  out["range"] = cert.range;
  ordered_json verdicts = ordered_json::array();
  for (size_t k = 0; k < cert.verdict.size(); ++k) {
    ordered_json v;
    v["degree"] = k;
    v["pass"] = static_cast<bool>(cert.verdict[k]);
    verdicts.push_back(v);
  }
  out["verdicts"] = verdicts;
  out["pass"] = cert.all_pass();
  if (!cert.witnesses.empty()) {
    ordered_json ws = ordered_json::array();
    for (size_t i = 0; i < cert.witnesses.size(); ++i) {
      ordered_json w;
      w["cone_degree"] = cert.cone_failures[i];
      ordered_json cyc = ordered_json::array();
      for (auto& [idx, coeff] : cert.witnesses[i]) cyc.push_back({idx, coeff.to_string()});
      w["witness_cycle"] = cyc;
      ws.push_back(w);
    }
    out["witnesses"] = ws;
  }
  return out;
}

inline ordered_json validation_json(const cech::HypercoverValidation& v) {
  ordered_json out;
  out["ok"] = v.ok;
  ordered_json lv = ordered_json::array();
  for (auto& l : v.levels) {
    ordered_json e;
    e["level"] = l.level;
    e["ok"] = l.ok;
    e["matching_summands"] = l.matching_summands;
    e["iso"] = l.iso;
    if (!l.ok) {
      e["witness_summand"] = l.witness_summand;
      e["witness_point"] = l.witness_point;
    }
    lv.push_back(e);
  }
  out["levels"] = lv;
  return out;
}

inline ordered_json cofinality_json(const hocolim::CofinalityReport& r) {
  ordered_json out;
  out["all_contractible"] = r.all_contractible;
  out["core_certified"] = r.core_certified;
  out["objects_total"] = r.objects.size();
  ordered_json objs = ordered_json::array();
  for (auto& o : r.objects) {
    ordered_json e;
    e["object"] = o.object;
    e["method"] = o.method;
    e["contractible"] = o.contractible;
    objs.push_back(e);
  }
  out["objects"] = objs;
  return out;
}

}  // namespace hck::io
