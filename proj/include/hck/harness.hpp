#pragma once

// Theorem-indexed scenario runners. Each scenario id exercises one of the
// desk-scale checks (construction + validation + homology certificates) and
// produces a deterministic JSON report; wall-clock timings go to stderr so
// reports stay byte-identical across runs.
//
// Exit codes: 0 pass, 2 validation failure, 3 certificate failure,
// 4 input error.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "hck/double_complex.hpp"
#include "hck/fd_retract.hpp"
#include "hck/fixtures.hpp"
#include "hck/hocolim.hpp"
#include "hck/json_io.hpp"

namespace hck::harness {

using io::ordered_json;
using space::IndexedCover;
using space::SpacePtr;

// ---------------------------------------------------------------------------
// finite groups (element list + multiplication table)

struct FiniteGroup {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  int identity = -1;

  int order() const { return static_cast<int>(elements.size()); }

  void check() {
    int n = order();
    require(n >= 1 && static_cast<int>(table.size()) == n, errc::input, "group table has wrong shape");
    for (auto& row : table) {
      require(static_cast<int>(row.size()) == n, errc::input, "group table has wrong shape");
      for (int v : row) require(0 <= v && v < n, errc::input, "group table entry out of range");
    }
    for (int e = 0; e < n; ++e) {
      bool id = true;
      for (int g = 0; g < n; ++g) id = id && table[e][g] == g && table[g][e] == g;
      if (id) identity = e;
    }
    require(identity >= 0, errc::input, "group has no identity element");
    for (int g = 0; g < n; ++g) {
      bool has_inverse = false;
      for (int h = 0; h < n; ++h) has_inverse = has_inverse || table[g][h] == identity;
      require(has_inverse, errc::input, "group element without inverse: " + elements[g]);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          require(table[table[a][b]][c] == table[a][table[b][c]], errc::input, "group is not associative");
  }
};

inline FiniteGroup cyclic_group(int n) {
  require(n >= 1, errc::input, "cyclic group order must be positive");
  FiniteGroup g;
  for (int i = 0; i < n; ++i) g.elements.push_back("g" + std::to_string(i));
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  g.check();
  return g;
}

inline FiniteGroup group_fixture(const std::string& name) {
  if (name.size() == 2 && name[0] == 'z' && name[1] >= '1' && name[1] <= '6')
    return cyclic_group(name[1] - '0');
  fail(errc::input, "unknown group fixture: " + name + " (use z1..z6 or a JSON file)");
}

inline FiniteGroup load_group(const io::json& j) {
  require(j.is_object() && j.contains("elements") && j.contains("table"), errc::input,
          "group: expected object with \"elements\" and \"table\"");
  FiniteGroup g;
  for (auto& e : j["elements"]) g.elements.push_back(e.get<std::string>());
  for (auto& row : j["table"]) {
    g.table.push_back({});
    for (auto& v : row) g.table.back().push_back(v.get<int>());
  }
  g.check();
  return g;
}

// discrete space of group elements and the fold map G ⊔ G -> G
inline SpacePtr group_space(const FiniteGroup& g) {
  return space::make_space(std::vector<std::string>(g.elements), {});
}

inline space::ContinuousMap fold_map(const FiniteGroup& g) {
  std::vector<std::string> names;
  for (auto& e : g.elements) names.push_back(e + ".l");
  for (auto& e : g.elements) names.push_back(e + ".r");
  SpacePtr total = space::make_space(std::move(names), {});
  SpacePtr base = group_space(g);
  std::vector<int> assign;
  for (int copy = 0; copy < 2; ++copy)
    for (int i = 0; i < g.order(); ++i) assign.push_back(i);
  return space::ContinuousMap(total, base, std::move(assign));
}

inline space::ContinuousMap to_point_map(const FiniteGroup& g) {
  SpacePtr src = group_space(g);
  SpacePtr pt = fixtures::space("point");
  return space::ContinuousMap(src, pt, std::vector<int>(g.order(), 0));
}

// ---------------------------------------------------------------------------
// scenarios

struct Scenario {
  std::string id;
  std::string space_ref;
  std::string cover_ref;
  std::string map_ref;
  std::string group_ref;
  int K = 2;
  int L = 4;
  uint64_t seed = 0;
};

struct Report {
  ordered_json json;
  int exit_code = 0;
};

inline const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = {"cech",     "hypercover", "omega",   "ordered-vs-full",
                                               "pa-diagram", "pu-diagram", "cofinal", "mccord",
                                               "locally-split", "eg",     "retract", "splitting"};
  return ids;
}

namespace detail {

inline bool looks_like_path(const std::string& ref) {
  return ref.find('/') != std::string::npos || (ref.size() > 5 && ref.substr(ref.size() - 5) == ".json");
}

inline SpacePtr resolve_space(const std::string& ref) {
  if (ref.empty()) fail(errc::input, "scenario needs a space reference");
  if (looks_like_path(ref)) return io::load_space(io::load_file(ref));
  return fixtures::space(ref);
}

inline IndexedCover resolve_cover(const Scenario& sc, const SpacePtr& base) {
  if (sc.cover_ref.empty()) fail(errc::input, "scenario needs a cover reference");
  if (looks_like_path(sc.cover_ref)) return io::load_cover(io::load_file(sc.cover_ref), base);
  if (sc.cover_ref == "random") return fixtures::random_cover(base, sc.seed);
  if (sc.cover_ref == "random-complete") return fixtures::random_complete_cover(base, sc.seed);
  return fixtures::cover(sc.space_ref, sc.cover_ref);
}

inline space::ContinuousMap resolve_map(const std::string& ref) {
  if (ref.empty()) fail(errc::input, "scenario needs a map reference");
  if (looks_like_path(ref)) return io::load_map(io::load_file(ref));
  return fixtures::map_fixture(ref);
}

inline FiniteGroup resolve_group(const std::string& ref) {
  if (ref.empty()) fail(errc::input, "scenario needs a group reference");
  if (looks_like_path(ref)) return load_group(io::load_file(ref));
  return group_fixture(ref);
}

inline void put_homology(ordered_json& rep, const hocolim::HocolimHomology& res) {
  rep["homology"] = io::homology_json(res.groups);
  rep["certificate"] = io::certificate_json(res.certificate);
  rep["pi0_matches"] = res.pi0_matches;
}

// cone certificate for the map of totalizations induced by the inclusion
// ordered Čech -> full Čech (nondegenerate summands map to nondegenerate
// summands, chains ride along)
inline homology::WeakEquivCertificate inclusion_cone_certificate(const IndexedCover& cover, int K, int L) {
  auto full = cech::cech_of_cover(cover, L);
  auto ord = cech::ordered_cech(cover, L);
  auto dcf = homology::normalized_chains(full, K + 2, K + 1);
  auto dco = homology::normalized_chains(ord.space, K + 2, K + 1);
  auto tf = homology::totalize(dcf, K);
  auto to = homology::totalize(dco, K);
  std::vector<std::vector<int>> raw_of_slot(K + 3);
  for (int p = 0; p <= K + 2; ++p) {
    raw_of_slot[p].resize(dco.nd_counts[p]);
    for (int t = 0; t < ord.space.levels[p].size(); ++t)
      if (dco.slot_of_summand[p][t] >= 0) raw_of_slot[p][dco.slot_of_summand[p][t]] = t;
  }
  homology::ChainMap f;
  f.src = &to.complex;
  f.dst = &tf.complex;
  f.comp.resize(to.complex.top_degree() + 1);
  for (int n = 0; n <= to.complex.top_degree(); ++n) {
    homology::IntMatrix m(tf.complex.rank(n), to.complex.rank(n));
    for (int p = 0; p <= std::min(n, K + 2); ++p) {
      int q = n - p;
      if (q > K + 1 || to.block_off[n][p] < 0 || tf.block_off[n][p] < 0) continue;
      for (int j = 0; j < dco.ranks[p][q]; ++j) {
        auto [slot, face] = dco.basis[p][q][j];
        int fraw = ord.inclusion[p][raw_of_slot[p][slot]];
        int fslot = dcf.slot_of_summand[p][fraw];
        require(fslot >= 0, errc::internal, "ordered inclusion hit a degenerate full summand");
        m.add(tf.block_off[n][p] + dcf.basis_pos[p][q].at({fslot, face}), to.block_off[n][p] + j, 1);
      }
    }
    m.normalize();
    f.comp[n] = std::move(m);
  }
  f.validate();
  return homology::cone_certificate(f, K);
}

// per-open and global order-complex certificates for a map of spaces
inline bool map_certificate(const space::ContinuousMap& f, const Bitset& target_open, int K,
                            ordered_json& out) {
  // restrict f over the open: subspaces with the induced order
  Bitset src_open = f.preimage(target_open);
  auto sub_src = std::make_shared<const space::FiniteSpace>(f.source->subspace(src_open));
  auto sub_dst = std::make_shared<const space::FiniteSpace>(f.target->subspace(target_open));
  sset::OrderedComplex ksrc = sset::order_complex(*sub_src);
  sset::OrderedComplex kdst = sset::order_complex(*sub_dst);
  homology::ChainComplex csrc = ksrc.chains(K + 1);
  homology::ChainComplex cdst = kdst.chains(K + 2);
  // vertex map: source vertex -> target vertex through the point map;
  // order-complex vertices are indexed by linear-extension position, not by
  // point index, so translate through names on both sides
  std::map<std::string, int> dst_vertex;
  for (int v = 0; v < kdst.vertex_count(); ++v) dst_vertex[kdst.vertex_names[v]] = v;
  std::vector<int> vmap(ksrc.vertex_count());
  for (int v = 0; v < ksrc.vertex_count(); ++v) {
    int tp = f.assignment[f.source->index_of(ksrc.vertex_names[v])];
    vmap[v] = dst_vertex.at(f.target->name(tp));
  }
  homology::ChainMap cm = sset::induced_chain_map(ksrc, kdst, vmap, csrc, cdst);
  cm.validate();
  homology::WeakEquivCertificate cert = homology::cone_certificate(cm, K);
  // pi0 comparison of the restriction
  int pi_src = sub_src->component_count(Bitset::full(sub_src->size()));
  int pi_dst = sub_dst->component_count(Bitset::full(sub_dst->size()));
  out["certificate"] = io::certificate_json(cert);
  out["pi0_source"] = pi_src;
  out["pi0_target"] = pi_dst;
  bool pass = cert.all_pass() && pi_src == pi_dst;
  out["pass"] = pass;
  return pass;
}

}  // namespace detail

inline Report run_scenario(const Scenario& sc) {
  using clock = std::chrono::steady_clock;
  auto started = clock::now();
  require(sc.K <= sc.L - 2, errc::input, "scenario requires K <= L - 2");
  Report rep;
  ordered_json& out = rep.json;
  out["scenario"] = sc.id;
  out["K"] = sc.K;
  out["L"] = sc.L;
  if (!sc.space_ref.empty()) out["space"] = sc.space_ref;
  if (!sc.cover_ref.empty()) out["cover"] = sc.cover_ref;
  if (!sc.map_ref.empty()) out["map"] = sc.map_ref;
  if (!sc.group_ref.empty()) out["group"] = sc.group_ref;
  if (sc.seed) out["seed"] = sc.seed;

  auto classify = [&rep](bool validation_ok, bool certificates_ok) {
    if (!validation_ok)
      rep.exit_code = 2;
    else if (!certificates_ok)
      rep.exit_code = 3;
    else
      rep.exit_code = 0;
    rep.json["pass"] = rep.exit_code == 0;
  };

  if (sc.id == "cech") {
    SpacePtr s = detail::resolve_space(sc.space_ref);
    IndexedCover cover = detail::resolve_cover(sc, s);
    auto h = cech::cech_of_cover(cover, sc.L);
    h.check_structure();
    auto v = cech::validate_hypercover(h, sc.L);
    out["validation"] = io::validation_json(v);
    auto res = hocolim::hocolim_homology(h, sc.K);
    detail::put_homology(out, res);
    classify(v.ok, res.certificate.all_pass() && res.pi0_matches);
  } else if (sc.id == "hypercover") {
    SpacePtr s = detail::resolve_space(sc.space_ref);
    cech::SimplicialSpaceOverX h = [&] {
      if (sc.cover_ref.empty() || sc.cover_ref == "refinement") {
        require(sc.space_ref == "S1min", errc::input,
                "the built-in refinement hypercover lives over S1min");
        return fixtures::refinement_hypercover(sc.L);
      }
      require(detail::looks_like_path(sc.cover_ref), errc::input,
              "hypercover scenario takes \"refinement\" or a hypercover JSON file");
      return io::load_hypercover(io::load_file(sc.cover_ref), sc.L);
    }();
    h.check_structure();
    auto v = cech::validate_hypercover(h, sc.L);
    out["validation"] = io::validation_json(v);
    if (!v.ok) {
      classify(false, false);
      return rep;
    }
    auto res = hocolim::hocolim_homology(h, sc.K);
    detail::put_homology(out, res);
    bool same_as_cech = true;
    if (sc.cover_ref.empty() || sc.cover_ref == "refinement") {
      auto plain = hocolim::hocolim_homology(cech::cech_of_cover(fixtures::cover("S1min", "UV"), sc.L), sc.K);
      for (int k = 0; k <= sc.K; ++k) same_as_cech = same_as_cech && res.groups[k] == plain.groups[k];
      out["matches_plain_cech"] = same_as_cech;
    }
    classify(true, res.certificate.all_pass() && res.pi0_matches && same_as_cech);
  } else if (sc.id == "omega") {
    SpacePtr s = detail::resolve_space(sc.space_ref);
    IndexedCover cover = detail::resolve_cover(sc, s);
    auto w = space::completeness_witness(cover);
    if (w) {
      std::string pts;
      for (int x : w->members()) pts += (pts.empty() ? "" : ",") + s->name(x);
      out["complete"] = false;
      out["uncovered_intersection"] = pts;
      classify(false, false);
      return rep;
    }
    out["complete"] = true;
    auto om = cech::omega_of_cover(cover, sc.L);
    auto v = cech::validate_hypercover(om, sc.L);
    out["validation"] = io::validation_json(v);
    auto res = hocolim::hocolim_homology(om, sc.K);
    detail::put_homology(out, res);
    // part (b): agreement with the simplicial replacement of the cover
    // category, exactly, in degrees <= K
    auto cat = hocolim::simplicial_replacement(hocolim::diagram_cover(cover), sc.L);
    auto rcat = hocolim::hocolim_homology(cat, sc.K);
    bool agree = true;
    for (int k = 0; k <= sc.K; ++k) agree = agree && res.groups[k] == rcat.groups[k];
    out["matches_cover_category"] = agree;
    classify(v.ok, res.certificate.all_pass() && res.pi0_matches && agree);
  } else if (sc.id == "ordered-vs-full") {
    SpacePtr s = detail::resolve_space(sc.space_ref);
    IndexedCover cover = detail::resolve_cover(sc, s);
    auto full = cech::cech_of_cover(cover, sc.L);
    auto ord = cech::ordered_cech(cover, sc.L);
    cech::check_levelwise_map(ord.space, full, ord.inclusion, sc.L);
    auto retr = cech::reorder_retraction(cover, sc.L);
    bool retract_identity = true;
    int through = std::min(3, sc.L);
    for (int n = 0; n <= through; ++n)
      for (int t = 0; t < ord.space.levels[n].size(); ++t)
        retract_identity = retract_identity && retr[n][ord.inclusion[n][t]] == t;
    out["retraction_identity_through"] = through;
    out["retraction_identity"] = retract_identity;
    auto rf = hocolim::hocolim_homology(full, sc.K);
    auto ro = hocolim::hocolim_homology(ord.space, sc.K);
    bool agree = true;
    for (int k = 0; k <= sc.K; ++k) agree = agree && rf.groups[k] == ro.groups[k];
    out["ordered_homology"] = io::homology_json(ro.groups);
    out["full_homology"] = io::homology_json(rf.groups);
    out["homology_agrees"] = agree;
    homology::WeakEquivCertificate inc = detail::inclusion_cone_certificate(cover, sc.K, sc.L);
    out["inclusion_certificate"] = io::certificate_json(inc);
    out["full_certificate"] = io::certificate_json(rf.certificate);
    classify(true, retract_identity && agree && inc.all_pass() && rf.certificate.all_pass() &&
                       ro.certificate.all_pass());
  } else if (sc.id == "pa-diagram" || sc.id == "pu-diagram") {
    SpacePtr s = detail::resolve_space(sc.space_ref);
    IndexedCover cover = detail::resolve_cover(sc, s);
    hocolim::PosetDiagram d =
        sc.id == "pa-diagram" ? hocolim::diagram_PA(cover) : hocolim::diagram_PU(cover);
    d.check();
    out["objects"] = d.size();
    auto repl = hocolim::simplicial_replacement(d, sc.L);
    repl.check_structure();
    auto res = hocolim::hocolim_homology(repl, sc.K);
    detail::put_homology(out, res);
    auto plain = hocolim::hocolim_homology(cech::cech_of_cover(cover, sc.L), sc.K);
    bool agree = true;
    for (int k = 0; k <= sc.K; ++k) agree = agree && res.groups[k] == plain.groups[k];
    out["matches_cech"] = agree;
    classify(true, res.certificate.all_pass() && res.pi0_matches && agree);
  } else if (sc.id == "cofinal") {
    SpacePtr s = detail::resolve_space(sc.space_ref);
    IndexedCover cover = detail::resolve_cover(sc, s);
    auto r = hocolim::cofinality_check(cover);
    out["cofinality"] = io::cofinality_json(r);
    classify(true, r.all_contractible);
  } else if (sc.id == "mccord") {
    space::ContinuousMap f = detail::resolve_map(sc.map_ref);
    SpacePtr target = f.target;
    IndexedCover cover = [&] {
      if (!sc.cover_ref.empty() && detail::looks_like_path(sc.cover_ref))
        return io::load_cover(io::load_file(sc.cover_ref), target);
      if (!sc.cover_ref.empty() && !sc.space_ref.empty())
        return fixtures::cover(sc.space_ref, sc.cover_ref);
      return fixtures::mccord_cover();
    }();
    require(cover.base == target || cover.base->same_structure(*target), errc::input,
            "mccord cover must live over the map's target");
    auto w = space::completeness_witness(cover);
    out["complete"] = !w.has_value();
    if (w) {
      classify(false, false);
      return rep;
    }
    bool locals_pass = true;
    ordered_json locals = ordered_json::array();
    for (int i = 0; i < cover.arity(); ++i) {
      ordered_json entry;
      entry["entry"] = cover.label(i);
      locals_pass = detail::map_certificate(f, cover.carrier(i), sc.K, entry) && locals_pass;
      locals.push_back(entry);
    }
    out["local_certificates"] = locals;
    ordered_json global;
    bool global_pass = detail::map_certificate(f, Bitset::full(target->size()), sc.K, global);
    out["global_certificate"] = global;
    classify(true, locals_pass && global_pass);
  } else if (sc.id == "locally-split") {
    space::ContinuousMap p = [&] {
      if (!sc.map_ref.empty()) return detail::resolve_map(sc.map_ref);
      // default: the fold map of the given group
      FiniteGroup g = detail::resolve_group(sc.group_ref);
      return fold_map(g);
    }();
    auto witness = space::locally_split_witness(p);
    out["locally_split"] = !witness.has_value();
    if (witness) out["witness_point"] = p.target->name(*witness);
    if (witness) {
      classify(false, false);
      return rep;
    }
    auto cx = cech::cech_of_map(p, sc.K + 2);
    cx.check_structure();
    auto res = hocolim::hocolim_homology(cx, sc.K);
    detail::put_homology(out, res);
    classify(true, res.certificate.all_pass() && res.pi0_matches);
  } else if (sc.id == "eg") {
    FiniteGroup g = detail::resolve_group(sc.group_ref);
    require(g.order() <= 6 && sc.K <= 3, errc::input,
            "the EG scenario caps |G| <= 6 and K <= 3 to bound cell counts");
    auto cx = cech::cech_of_map(to_point_map(g), sc.K + 2);
    auto res = hocolim::hocolim_homology(cx, sc.K);
    detail::put_homology(out, res);
    bool reduced_trivial = res.groups[0].betti == 1 && res.groups[0].torsion.empty();
    for (int k = 1; k <= sc.K; ++k) reduced_trivial = reduced_trivial && res.groups[k].trivial();
    out["reduced_homology_trivial"] = reduced_trivial;
    classify(true, reduced_trivial && res.certificate.all_pass());
  } else if (sc.id == "retract") {
    SpacePtr s = detail::resolve_space(sc.space_ref);
    cech::SimplicialSpaceOverX h = [&]() -> cech::SimplicialSpaceOverX {
      if (sc.cover_ref.empty() || sc.cover_ref == "refinement") {
        require(sc.space_ref == "S1min", errc::input,
                "the built-in refinement hypercover lives over S1min");
        return fixtures::refinement_hypercover(std::max(sc.L, 3));
      }
      if (detail::looks_like_path(sc.cover_ref))
        return io::load_hypercover(io::load_file(sc.cover_ref), std::max(sc.L, 3));
      require(sc.cover_ref == "random", errc::input,
              "retract scenario takes \"refinement\", \"random\", or a hypercover file");
      return fixtures::random_refinement_hypercover(s, sc.seed, std::max(sc.L, 3));
    }();
    int through = std::min(3, h.cap());
    cech::FdInduction fd = cech::fd_induction_data(h, 1, through);
    out["dimension"] = fd.dim;
    out["through_level"] = through;
    ordered_json rows = ordered_json::array();
    for (bool b : fd.rows_constant) rows.push_back(b);
    out["rows_constant"] = rows;
    bool retract_identity = true;  // verified inside fd_induction_data
    out["retract_identity"] = retract_identity;
    ordered_json dsizes = ordered_json::array();
    for (int k = 0; k <= through; ++k) dsizes.push_back(fd.D.levels[k].size());
    out["diagonal_level_sizes"] = dsizes;
    classify(true, retract_identity);
  } else if (sc.id == "splitting") {
    SpacePtr s = detail::resolve_space(sc.space_ref);
    IndexedCover cover = detail::resolve_cover(sc, s);
    auto h = cech::cech_of_cover(cover, sc.L);
    sset::RawLevels raw = cech::summand_raw_levels(h, sc.L);
    raw.check_identities();
    bool split_ok = sset::raw_splitting_holds(raw);
    sset::Normalized nm = sset::normalize(raw);
    sset::Splitting sp = sset::detect_splitting(nm.sset, sc.L);
    ordered_json counts = ordered_json::array();
    for (int n : sp.nondeg_counts) counts.push_back(n);
    out["nondegenerate_counts"] = counts;
    out["splitting_bijection"] = split_ok;
    bool pushouts = true;
    for (int n = 0; n <= std::min(3, sc.L); ++n)
      pushouts = pushouts && sset::sk_pushout_check(nm.sset, n, std::min(3, sc.L));
    out["sk_pushout_through"] = std::min(3, sc.L);
    out["sk_pushout"] = pushouts;
    classify(true, split_ok && pushouts);
  } else {
    fail(errc::input, "unknown scenario id: " + sc.id);
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - started);
  std::cerr << "[hck] scenario " << sc.id << " finished in " << elapsed.count() << " ms\n";
  return rep;
}

inline Scenario scenario_from_json(const io::json& j) {
  Scenario sc;
  require(j.is_object() && j.contains("id"), errc::input, "scenario: expected object with an \"id\"");
  sc.id = j["id"].get<std::string>();
  if (j.contains("space")) sc.space_ref = j["space"].get<std::string>();
  if (j.contains("cover")) sc.cover_ref = j["cover"].get<std::string>();
  if (j.contains("map")) sc.map_ref = j["map"].get<std::string>();
  if (j.contains("group")) sc.group_ref = j["group"].get<std::string>();
  if (j.contains("K")) sc.K = j["K"].get<int>();
  if (j.contains("L")) sc.L = j["L"].get<int>();
  if (j.contains("seed")) sc.seed = j["seed"].get<uint64_t>();
  return sc;
}

}  // namespace hck::harness
