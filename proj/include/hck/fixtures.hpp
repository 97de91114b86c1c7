#pragma once

// Built-in fixture corpus and seed-controlled random generators. Everything
// here is deterministic: generators use a fixed splitmix-style stream, never
// library distributions, so reports are byte-identical across platforms.

#include <string>
#include <vector>

#include "hck/fd_retract.hpp"
#include "hck/finite_space.hpp"
#include "hck/over_x.hpp"

namespace hck::fixtures {

using hck::Bitset;
using space::IndexedCover;
using space::OpenSubset;
using space::SpacePtr;

// deterministic 64-bit stream (splitmix64)
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }
  bool flip() { return next() & 1; }
};

inline std::vector<std::string> space_names() {
  return {"point", "chain2", "S1min", "S2min", "wedge", "disc", "S1six"};
}

inline SpacePtr space(const std::string& name) {
  using space::make_space;
  if (name == "point") return make_space({"p"}, {});
  if (name == "chain2") return make_space({"a", "b"}, {{0, 1}});
  if (name == "S1min")
    return make_space({"x1", "x2", "y1", "y2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  if (name == "S2min")
    // non-Hausdorff suspension of S1min: order complex is the octahedron
    return make_space({"a1", "a2", "b1", "b2", "c1", "c2"},
                      {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
                       {0, 4}, {0, 5}, {1, 4}, {1, 5}});
  if (name == "wedge")
    // minimal model of S1 ∨ S1: the order complex is K_{2,3}
    return make_space({"m1", "m2", "m3", "t1", "t2"},
                      {{0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
  if (name == "disc")
    // cone on S1min
    return make_space({"x1", "x2", "y1", "y2", "z"},
                      {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
  if (name == "S1six")
    // hexagonal circle model
    return make_space({"m0", "m1", "m2", "M0", "M1", "M2"},
                      {{0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}});
  fail(errc::input, "unknown fixture space: " + name);
}

namespace detail {

inline OpenSubset open_of(const SpacePtr& s, std::initializer_list<const char*> pts) {
  Bitset b(s->size());
  for (auto* p : pts) b.set(s->index_of(p));
  return OpenSubset(s, b);
}

}  // namespace detail

// named covers, scoped by space
inline IndexedCover cover(const std::string& space_name, const std::string& cover_name) {
  using detail::open_of;
  SpacePtr s = space(space_name);
  if (cover_name == "trivial") return IndexedCover(s, {{"X", OpenSubset(s, Bitset::full(s->size()))}});
  if (space_name == "S1min") {
    if (cover_name == "UV")
      return IndexedCover(
          s, {{"U", open_of(s, {"x1", "x2", "y1"})}, {"V", open_of(s, {"x1", "x2", "y2"})}});
    if (cover_name == "complete4")
      return IndexedCover(s, {{"U", open_of(s, {"x1", "x2", "y1"})},
                              {"V", open_of(s, {"x1", "x2", "y2"})},
                              {"a", open_of(s, {"x1"})},
                              {"b", open_of(s, {"x2"})}});
  }
  if (space_name == "S2min" && cover_name == "hemispheres")
    return IndexedCover(s, {{"N", open_of(s, {"a1", "a2", "b1", "b2", "c1"})},
                            {"S", open_of(s, {"a1", "a2", "b1", "b2", "c2"})}});
  if (space_name == "wedge" && cover_name == "threeopen")
    return IndexedCover(s, {{"A", open_of(s, {"m1", "m2", "m3", "t1"})},
                            {"B", open_of(s, {"m1", "m2", "m3", "t2"})},
                            {"C", open_of(s, {"m1", "m2", "m3"})}});
  fail(errc::input, "unknown fixture cover: " + space_name + ":" + cover_name);
}

inline std::vector<std::pair<std::string, std::string>> cover_names() {
  return {{"point", "trivial"},   {"chain2", "trivial"},    {"S1min", "trivial"},
          {"S1min", "UV"},        {"S1min", "complete4"},   {"S2min", "trivial"},
          {"S2min", "hemispheres"}, {"wedge", "trivial"},   {"wedge", "threeopen"},
          {"disc", "trivial"},    {"S1six", "trivial"}};
}

// named maps
inline space::ContinuousMap map_fixture(const std::string& name) {
  if (name == "sixwrap") {
    // weak equivalence from the 6-point circle onto the 4-point circle,
    // contracting the arc through m0, m2, M2
    SpacePtr six = space("S1six");
    SpacePtr four = space("S1min");
    auto ix = [&](const char* n) { return four->index_of(n); };
    return space::ContinuousMap(six, four,
                                {ix("x1"), ix("x2"), ix("x1"), ix("y1"), ix("y2"), ix("x1")});
  }
  if (name == "collapse") {
    // the non-equivalence point -> S1min
    SpacePtr pt = space("point");
    SpacePtr four = space("S1min");
    return space::ContinuousMap(pt, four, {four->index_of("x1")});
  }
  fail(errc::input, "unknown fixture map: " + name);
}

// the S1min refinement hypercover: level 1 refines U∩V by {x1}, {x2};
// coskeletal above dimension 1
inline cech::SimplicialSpaceOverX refinement_hypercover(int cap) {
  using detail::open_of;
  SpacePtr s = space("S1min");
  IndexedCover uv = cover("S1min", "UV");
  cech::SimplicialSpaceOverX h;
  h.base = s;
  h.levels.resize(2);
  h.faces.resize(2);
  h.degens.resize(1);
  h.levels[0].base = s;
  h.levels[0].summands = {{"U", uv.carrier(0)}, {"V", uv.carrier(1)}};
  h.levels[1].base = s;
  h.levels[1].summands = {{"U|U", uv.carrier(0)},
                          {"U|V:x1", open_of(s, {"x1"}).carrier},
                          {"U|V:x2", open_of(s, {"x2"}).carrier},
                          {"V|U:x1", open_of(s, {"x1"}).carrier},
                          {"V|U:x2", open_of(s, {"x2"}).carrier},
                          {"V|V", uv.carrier(1)}};
  h.faces[1] = {{0, 1, 1, 0, 0, 1}, {0, 0, 0, 1, 1, 1}};
  h.degens[0] = {{0, 5}};
  return cech::coskeleton_over_x(h, 1, cap);
}

// ---------------------------------------------------------------------------
// seeded random covers

// a random open: union of minimal opens of a nonempty random set of points
inline Bitset random_open(const SpacePtr& s, Rng& rng) {
  Bitset b(s->size());
  for (int x = 0; x < s->size(); ++x)
    if (rng.flip()) b = b | s->down_set(x);
  if (b.none()) b = s->down_set(static_cast<int>(rng.below(s->size())));
  return b;
}

// random cover with up to max_entries entries; the last entry absorbs any
// uncovered minimal opens so the family always covers
inline IndexedCover random_cover(const SpacePtr& s, uint64_t seed, int max_entries = 4) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x51ed2701);
  int k = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(max_entries - 1)));
  std::vector<std::pair<std::string, OpenSubset>> entries;
  Bitset uni(s->size());
  for (int i = 0; i < k; ++i) {
    Bitset b = random_open(s, rng);
    uni = uni | b;
    entries.emplace_back("r" + std::to_string(i), OpenSubset(s, b));
  }
  Bitset missing = Bitset::full(s->size()) - uni;
  if (missing.any()) {
    Bitset b = entries.back().second.carrier;
    for (int x : missing.members()) b = b | s->down_set(x);
    entries.back().second = OpenSubset(s, b);
  }
  return IndexedCover(s, std::move(entries));
}

namespace detail {

// entry posets with nested triples make the Ω-complex blow up; the complete
// generator rejects them
inline bool has_three_chain(const std::vector<Bitset>& carriers) {
  for (auto& a : carriers)
    for (auto& b : carriers)
      for (auto& c : carriers) {
        if (a == b || b == c || a == c) continue;
        if (a.subset_of(b) && b.subset_of(c)) return true;
      }
  return false;
}

}  // namespace detail

// intersection-closed random cover (hence a Čech cover, hence complete)
// whose entry poset has height at most 2, keeping Ω-complex levels at desk
// scale
inline IndexedCover random_complete_cover(const SpacePtr& s, uint64_t seed) {
  for (uint64_t attempt = 0; attempt < 64; ++attempt) {
    Rng rng(seed * 0x2545f4914f6cdd1dull + attempt * 0xb5026f5aa96619e9ull + 1);
    std::vector<Bitset> carriers;
    auto push_distinct = [&](const Bitset& b) {
      if (b.none()) return;
      for (auto& c : carriers)
        if (c == b) return;
      carriers.push_back(b);
    };
    int variant = static_cast<int>(rng.below(3));
    if (variant == 0) {
      // two overlapping opens plus their intersection
      Bitset u = random_open(s, rng), v = random_open(s, rng);
      push_distinct(u);
      push_distinct(v);
      push_distinct(u & v);
    } else if (variant == 1) {
      // the whole space plus a few opens below it
      push_distinct(Bitset::full(s->size()));
      int extra = 1 + static_cast<int>(rng.below(2));
      std::vector<Bitset> below;
      for (int i = 0; i < extra; ++i) below.push_back(random_open(s, rng));
      for (auto& b : below) push_distinct(b);
      for (size_t i = 0; i < below.size(); ++i)
        for (size_t j = i + 1; j < below.size(); ++j) push_distinct(below[i] & below[j]);
    } else {
      // pairwise disjoint union of minimal opens
      std::vector<int> pts;
      for (int x = 0; x < s->size(); ++x) pts.push_back(x);
      for (size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[rng.below(i)]);
      Bitset used(s->size());
      for (int x : pts) {
        Bitset mo = s->down_set(x);
        if (mo.intersects(used)) continue;
        carriers.push_back(mo);
        used = used | mo;
      }
      if (used != Bitset::full(s->size())) continue;
    }
    // cover, closed, shallow?
    Bitset uni(s->size());
    for (auto& c : carriers) uni = uni | c;
    if (uni != Bitset::full(s->size())) continue;
    if (detail::has_three_chain(carriers)) continue;
    std::vector<std::pair<std::string, OpenSubset>> entries;
    for (size_t i = 0; i < carriers.size(); ++i)
      entries.emplace_back("c" + std::to_string(i), OpenSubset(s, carriers[i]));
    IndexedCover cov(s, std::move(entries));
    if (!space::is_cech_cover(cov)) continue;
    return cov;
  }
  // deterministic fallback: the trivial cover is complete
  return IndexedCover(s, {{"X", OpenSubset(s, Bitset::full(s->size()))}});
}

// seeded bounded hypercover of dimension at most 1: refine each pair
// intersection of a 2-entry random cover by splitting its maximal points
// into at most two groups; the diagonal pairs keep their full carrier so
// degeneracies stay total
inline cech::SimplicialSpaceOverX random_refinement_hypercover(const SpacePtr& s, uint64_t seed, int cap) {
  IndexedCover base = random_cover(s, seed ^ 0xabcdef12345ull, 2);
  Rng rng(seed * 0x100000001b3ull + 0x811c9dc5);
  cech::SimplicialSpaceOverX h;
  h.base = s;
  h.levels.resize(2);
  h.faces.resize(2);
  h.degens.resize(1);
  h.levels[0].base = s;
  int k = base.arity();
  for (int i = 0; i < k; ++i) h.levels[0].summands.push_back({base.label(i), base.carrier(i)});
  h.levels[1].base = s;
  std::vector<int> d0, d1;
  std::vector<std::vector<int>> diag_piece(k, std::vector<int>{});
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Bitset inter = base.carrier(a) & base.carrier(b);
      std::string prefix = base.label(a) + "|" + base.label(b);
      std::vector<Bitset> pieces;
      if (a == b) {
        pieces.push_back(inter);  // keep the full carrier for the degeneracy
      } else if (inter.none()) {
        pieces.push_back(inter);
      } else {
        // split maximal points of the intersection into up to two groups
        std::vector<int> maxima;
        for (int x : inter.members()) {
          bool is_max = true;
          for (int y : inter.members())
            if (y != x && s->leq(x, y)) is_max = false;
          if (is_max) maxima.push_back(x);
        }
        Bitset g1(s->size()), g2(s->size());
        for (int m : maxima) {
          if (rng.flip())
            g1 = g1 | (s->down_set(m) & inter);
          else
            g2 = g2 | (s->down_set(m) & inter);
        }
        if (g1.any()) pieces.push_back(g1);
        if (g2.any()) pieces.push_back(g2);
        if (pieces.empty()) pieces.push_back(inter);
      }
      for (size_t pc = 0; pc < pieces.size(); ++pc) {
        if (a == b) diag_piece[a].push_back(static_cast<int>(h.levels[1].summands.size()));
        h.levels[1].summands.push_back({prefix + ":" + std::to_string(pc), pieces[pc]});
        d0.push_back(b);
        d1.push_back(a);
      }
    }
  h.faces[1] = {d0, d1};
  h.degens[0].resize(1);
  h.degens[0][0].resize(k);
  for (int a = 0; a < k; ++a) h.degens[0][0][a] = diag_piece[a][0];
  return cech::coskeleton_over_x(h, 1, cap);
}

// the complete cover used by the McCord comparison scenarios on S1min
inline IndexedCover mccord_cover() { return cover("S1min", "complete4"); }

}  // namespace hck::fixtures
