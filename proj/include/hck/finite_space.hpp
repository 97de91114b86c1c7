#pragma once

// Finite T0 spaces as posets. Convention, fixed once and asserted everywhere:
// x <= y means x lies in the closure of y, and OPEN sets are DOWN-sets of <=.
// minimal_open(x) = { y : y <= x } is then the smallest open set containing x,
// and a map of spaces is continuous iff it is order-preserving.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hck/core.hpp"

namespace hck::space {

class FiniteSpace;
using SpacePtr = std::shared_ptr<const FiniteSpace>;

class FiniteSpace {
public:
  // relation pairs mean a <= b; reflexive-transitive closure is taken here,
  // antisymmetry (= T0) is enforced.
  FiniteSpace(std::vector<std::string> names, const std::vector<std::pair<int, int>>& leq_pairs)
      : names_(std::move(names)) {
    int n = static_cast<int>(names_.size());
    std::map<std::string, int> seen;
    for (int i = 0; i < n; ++i) {
      require(seen.emplace(names_[i], i).second, errc::input, "duplicate point name: " + names_[i]);
    }
    std::vector<Bitset> below(n, Bitset(n));
    for (int i = 0; i < n; ++i) below[i].set(i);
    for (auto& [a, b] : leq_pairs) {
      require(0 <= a && a < n && 0 <= b && b < n, errc::input, "relation refers to unknown point");
      below[b].set(a);
    }
    // transitive closure (Warshall on down-sets)
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < n; ++x) {
        Bitset acc = below[x];
        for (int y : below[x].members()) acc = acc | below[y];
        if (acc != below[x]) {
          below[x] = acc;
          changed = true;
        }
      }
    }
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        require(!(below[x].test(y) && below[y].test(x)), errc::input,
                "relation is not antisymmetric (space not T0): " + names_[x] + " ~ " + names_[y]);
    below_ = std::move(below);
    above_.assign(n, Bitset(n));
    for (int x = 0; x < n; ++x)
      for (int y : below_[x].members()) above_[y].set(x);
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == name) return i;
    fail(errc::input, "unknown point: " + name);
  }
  std::optional<int> find(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool leq(int a, int b) const { return below_[b].test(a); }
  const Bitset& down_set(int x) const { return below_[x]; }
  const Bitset& up_set(int x) const { return above_[x]; }

  bool is_open(const Bitset& carrier) const {
    for (int x : carrier.members())
      if (!below_[x].subset_of(carrier)) return false;
    return true;
  }

  // covering relations a < b with nothing strictly between
  std::vector<std::pair<int, int>> covering_pairs() const {
    std::vector<std::pair<int, int>> out;
    int n = size();
    for (int b = 0; b < n; ++b)
      for (int a : below_[b].members()) {
        if (a == b) continue;
        bool covered = true;
        for (int c : below_[b].members()) {
          if (c == a || c == b) continue;
          if (leq(a, c)) {
            covered = false;
            break;
          }
        }
        if (covered) out.emplace_back(a, b);
      }
    return out;
  }

  // fixed linear extension of <=: Kahn's algorithm with lowest index first
  std::vector<int> linear_extension() const {
    int n = size();
    std::vector<int> indraw(n, 0), order;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
      int pick = -1;
      for (int x = 0; x < n && pick < 0; ++x) {
        if (done[x]) continue;
        bool minimal = true;
        for (int y : below_[x].members())
          if (y != x && !done[y]) {
            minimal = false;
            break;
          }
        if (minimal) pick = x;
      }
      require(pick >= 0, errc::internal, "linear extension failed");
      done[pick] = true;
      order.push_back(pick);
    }
    return order;
  }

  // connected component labels (order-connectedness = topological)
  std::vector<int> components() const { return components_within(Bitset::full(size())); }

  // component labels of a subspace; points outside carrier get -1
  std::vector<int> components_within(const Bitset& carrier) const {
    int n = size();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int s : carrier.members()) {
      if (comp[s] >= 0) continue;
      // BFS over comparability within carrier
      std::vector<int> stack{s};
      comp[s] = next;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : carrier.members()) {
          if (comp[y] >= 0) continue;
          if (leq(x, y) || leq(y, x)) {
            comp[y] = next;
            stack.push_back(y);
          }
        }
      }
      ++next;
    }
    return comp;
  }
  int component_count(const Bitset& carrier) const {
    auto c = components_within(carrier);
    int m = -1;
    for (int v : c) m = std::max(m, v);
    return m + 1;
  }

  bool same_structure(const FiniteSpace& o) const { return names_ == o.names_ && below_ == o.below_; }

  // induced subspace on a subset of points, keeping names
  FiniteSpace subspace(const Bitset& pts) const {
    std::vector<std::string> nm;
    std::vector<int> old_of;
    for (int x : pts.members()) {
      nm.push_back(names_[x]);
      old_of.push_back(x);
    }
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < static_cast<int>(old_of.size()); ++i)
      for (int j = 0; j < static_cast<int>(old_of.size()); ++j)
        if (i != j && leq(old_of[i], old_of[j])) rel.emplace_back(i, j);
    return FiniteSpace(std::move(nm), rel);
  }

private:
  std::vector<std::string> names_;
  std::vector<Bitset> below_;  // below_[x] = {y : y <= x} = minimal open of x
  std::vector<Bitset> above_;
};

inline SpacePtr make_space(std::vector<std::string> names, const std::vector<std::pair<int, int>>& leq_pairs) {
  return std::make_shared<const FiniteSpace>(std::move(names), leq_pairs);
}

struct OpenSubset {
  SpacePtr base;
  Bitset carrier;

  OpenSubset() = default;
  OpenSubset(SpacePtr b, Bitset c) : base(std::move(b)), carrier(std::move(c)) {
    require(base->is_open(carrier), errc::input, "carrier is not a down-set (not open)");
  }
  int count() const { return carrier.count(); }
  bool empty() const { return carrier.none(); }
  bool operator==(const OpenSubset& o) const { return base == o.base && carrier == o.carrier; }
};

inline OpenSubset minimal_open(const SpacePtr& s, int x) {
  require(0 <= x && x < s->size(), errc::input, "unknown point identifier");
  return OpenSubset(s, s->down_set(x));
}
inline OpenSubset minimal_open(const SpacePtr& s, const std::string& name) {
  return minimal_open(s, s->index_of(name));
}

inline OpenSubset intersection(const OpenSubset& u, const OpenSubset& v) {
  require(u.base == v.base, errc::input, "mismatched base spaces");
  return OpenSubset(u.base, u.carrier & v.carrier);
}
inline OpenSubset union_open(const OpenSubset& u, const OpenSubset& v) {
  require(u.base == v.base, errc::input, "mismatched base spaces");
  return OpenSubset(u.base, u.carrier | v.carrier);
}

// Ordered family of opens covering the space. Labels pairwise distinct;
// repeated carriers under distinct labels are allowed. Empty entries are
// permitted only alongside at least one nonempty entry.
struct IndexedCover {
  SpacePtr base;
  std::vector<std::pair<std::string, OpenSubset>> entries;

  IndexedCover(SpacePtr b, std::vector<std::pair<std::string, OpenSubset>> e)
      : base(std::move(b)), entries(std::move(e)) {
    Bitset u(base->size());
    bool nonempty = false;
    std::map<std::string, int> labels;
    for (auto& [label, open] : entries) {
      require(open.base == base, errc::input, "cover entry over a different base space");
      require(labels.emplace(label, 0).second, errc::input, "duplicate cover label: " + label);
      u = u | open.carrier;
      nonempty = nonempty || open.carrier.any();
    }
    if (base->size() == 0) return;  // the empty space has the empty cover
    require(nonempty, errc::input, "cover has no nonempty entry");
    require(u == Bitset::full(base->size()), errc::input, "entries do not cover the space");
  }

  int arity() const { return static_cast<int>(entries.size()); }
  const std::string& label(int i) const { return entries[i].first; }
  const Bitset& carrier(int i) const { return entries[i].second.carrier; }
};

// All distinct nonempty carriers of finite intersections of entries
// (fixpoint of pairwise intersection on distinct carriers).
inline std::vector<Bitset> intersection_closure(const IndexedCover& cover) {
  std::vector<Bitset> closed;
  auto insert = [&](const Bitset& b) {
    if (b.none()) return false;
    for (auto& x : closed)
      if (x == b) return false;
    closed.push_back(b);
    return true;
  };
  for (int i = 0; i < cover.arity(); ++i) insert(cover.carrier(i));
  bool grew = true;
  while (grew) {
    grew = false;
    size_t sz = closed.size();
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = i + 1; j < sz; ++j)
        if (insert(closed[i] & closed[j])) grew = true;
  }
  return closed;
}

// complete: every nonempty finite intersection of entries is a union of
// entries contained in it. Returns an uncovered intersection as witness.
inline std::optional<Bitset> completeness_witness(const IndexedCover& cover) {
  for (const Bitset& s : intersection_closure(cover)) {
    Bitset u(cover.base->size());
    for (int i = 0; i < cover.arity(); ++i)
      if (cover.carrier(i).subset_of(s)) u = u | cover.carrier(i);
    if (u != s) return s;
  }
  return std::nullopt;
}
inline bool is_complete_cover(const IndexedCover& cover) { return !completeness_witness(cover).has_value(); }

// Čech cover: distinct carriers closed under nonempty pairwise intersection.
inline bool is_cech_cover(const IndexedCover& cover) {
  for (const Bitset& s : intersection_closure(cover)) {
    bool found = false;
    for (int i = 0; i < cover.arity() && !found; ++i) found = cover.carrier(i) == s;
    if (!found) return false;
  }
  return true;
}

// Total order-preserving assignment = continuous map of Alexandrov spaces.
struct ContinuousMap {
  SpacePtr source, target;
  std::vector<int> assignment;

  ContinuousMap(SpacePtr src, SpacePtr dst, std::vector<int> assign)
      : source(std::move(src)), target(std::move(dst)), assignment(std::move(assign)) {
    require(static_cast<int>(assignment.size()) == source->size(), errc::input, "assignment is not total");
    for (int v : assignment) require(0 <= v && v < target->size(), errc::input, "assignment hits unknown point");
    for (auto& [a, b] : source->covering_pairs())
      require(target->leq(assignment[a], assignment[b]), errc::input,
              "assignment is not order-preserving: " + source->name(a) + " <= " + source->name(b));
  }

  int operator()(int x) const { return assignment[x]; }

  Bitset preimage(const Bitset& t) const {
    Bitset r(source->size());
    for (int x = 0; x < source->size(); ++x)
      if (t.test(assignment[x])) r.set(x);
    return r;
  }

  static ContinuousMap identity(const SpacePtr& s) {
    std::vector<int> a(s->size());
    for (int i = 0; i < s->size(); ++i) a[i] = i;
    return ContinuousMap(s, s, std::move(a));
  }
};

inline ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f) {
  require(f.target == g.source, errc::input, "maps not composable");
  std::vector<int> a(f.source->size());
  for (int i = 0; i < f.source->size(); ++i) a[i] = g.assignment[f.assignment[i]];
  return ContinuousMap(f.source, g.target, std::move(a));
}

inline IndexedCover pullback_cover(const IndexedCover& cover, const ContinuousMap& f) {
  require(f.target == cover.base, errc::input, "cover does not live over the map's target");
  std::vector<std::pair<std::string, OpenSubset>> entries;
  for (auto& [label, open] : cover.entries)
    entries.emplace_back(label, OpenSubset(f.source, f.preimage(open.carrier)));
  return IndexedCover(f.source, std::move(entries));
}

namespace detail {

// search for an order-preserving section s of p over the open set `dom`,
// extending assignments along a linear extension and pruning by monotonicity
inline bool section_exists(const ContinuousMap& p, const Bitset& dom) {
  const FiniteSpace& b = *p.target;
  const FiniteSpace& e = *p.source;
  std::vector<int> pts;
  for (int x : b.linear_extension())
    if (dom.test(x)) pts.push_back(x);
  std::vector<std::vector<int>> fibers(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    for (int y = 0; y < e.size(); ++y)
      if (p.assignment[y] == pts[i]) fibers[i].push_back(y);
    if (fibers[i].empty()) return false;
  }
  std::vector<int> chosen(pts.size(), -1);
  // DFS with monotonicity pruning against already-assigned earlier points
  size_t i = 0;
  std::vector<size_t> cursor(pts.size(), 0);
  while (true) {
    if (i == pts.size()) return true;
    bool placed = false;
    for (size_t c = cursor[i]; c < fibers[i].size(); ++c) {
      int cand = fibers[i][c];
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) {
        if (b.leq(pts[j], pts[i]) && !e.leq(chosen[j], cand)) ok = false;
        if (b.leq(pts[i], pts[j]) && !e.leq(cand, chosen[j])) ok = false;
      }
      if (ok) {
        chosen[i] = cand;
        cursor[i] = c + 1;
        ++i;
        if (i < pts.size()) cursor[i] = 0;
        placed = true;
        break;
      }
    }
    if (!placed) {
      if (i == 0) return false;
      --i;
    }
  }
}

}  // namespace detail

// locally split: every b in B has a neighborhood over which p admits a
// continuous section. Checking minimal opens is sufficient and necessary.
inline std::optional<int> locally_split_witness(const ContinuousMap& p) {
  for (int b = 0; b < p.target->size(); ++b)
    if (!detail::section_exists(p, p.target->down_set(b))) return b;
  return std::nullopt;
}
inline bool is_locally_split(const ContinuousMap& p) { return !locally_split_witness(p).has_value(); }

// Stong core: repeatedly remove beat points. A point is a beat point when its
// strict down-set has a maximum or its strict up-set has a minimum. The core
// is a point iff the space is contractible (used as a fast certificate).
inline FiniteSpace beat_point_core(const FiniteSpace& s) {
  Bitset alive = Bitset::full(s.size());
  bool removed = true;
  while (removed && alive.count() > 1) {
    removed = false;
    for (int x : alive.members()) {
      // strict down-set / up-set within alive
      std::vector<int> down, up;
      for (int y : alive.members()) {
        if (y == x) continue;
        if (s.leq(y, x)) down.push_back(y);
        if (s.leq(x, y)) up.push_back(y);
      }
      bool beat = false;
      for (int m : down) {
        bool is_max = true;
        for (int y : down)
          if (!s.leq(y, m)) is_max = false;
        if (is_max) beat = true;
      }
      if (!beat)
        for (int m : up) {
          bool is_min = true;
          for (int y : up)
            if (!s.leq(m, y)) is_min = false;
          if (is_min) beat = true;
        }
      if (beat) {
        alive.reset(x);
        removed = true;
        break;
      }
    }
  }
  return s.subspace(alive);
}

}  // namespace hck::space
