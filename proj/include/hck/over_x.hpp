#pragma once

// Simplicial spaces over a finite base space X. Levels are labeled disjoint
// unions of opens of X mapping by inclusion; structure maps are per-summand
// label assignments whose carrier inclusions are checked. All constructions
// generate levels to an explicit cap.
//
// Summands with empty carrier are kept, never pruned, so face maps stay
// total.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hck/core.hpp"
#include "hck/finite_space.hpp"
#include "hck/simplicial.hpp"

namespace hck::cech {

// constructions refuse to materialize more summands than this per level;
// inputs beyond desk scale are an input error, not an OOM
constexpr long long kLevelBudget = 2000000;

using hck::Bitset;
using space::ContinuousMap;
using space::FiniteSpace;
using space::IndexedCover;
using space::SpacePtr;

struct Summand {
  std::string label;
  Bitset carrier;
};

struct SpaceOverX {
  SpacePtr base;
  std::vector<Summand> summands;

  int size() const { return static_cast<int>(summands.size()); }
  long long point_count() const {
    long long n = 0;
    for (auto& s : summands) n += s.carrier.count();
    return n;
  }
};

class SimplicialSpaceOverX {
public:
  SpacePtr base;
  std::vector<SpaceOverX> levels;                    // 0..cap
  std::vector<std::vector<std::vector<int>>> faces;  // faces[n][i] : level n -> n-1, n >= 1, 0 <= i <= n
  std::vector<std::vector<std::vector<int>>> degens; // degens[n][i] : level n -> n+1, n < cap, 0 <= i <= n

  int cap() const { return static_cast<int>(levels.size()) - 1; }
  int face(int n, int i, int s) const { return faces[n][i][s]; }
  int degen(int n, int i, int s) const { return degens[n][i][s]; }
  const Bitset& carrier(int n, int s) const { return levels[n].summands[s].carrier; }

  // carriers open, structure maps carrier-respecting, simplicial identities
  // on the generated range
  void check_structure() const {
    for (int n = 0; n <= cap(); ++n) {
      require(levels[n].base == base, errc::internal, "level over a different base");
      for (auto& s : levels[n].summands)
        require(base->is_open(s.carrier), errc::internal, "summand carrier is not open");
    }
    for (int n = 1; n <= cap(); ++n) {
      require(static_cast<int>(faces[n].size()) == n + 1, errc::internal, "face family has wrong arity");
      for (int i = 0; i <= n; ++i)
        for (int s = 0; s < levels[n].size(); ++s)
          require(carrier(n, s).subset_of(carrier(n - 1, face(n, i, s))), errc::internal,
                  "face does not respect carriers");
    }
    for (int n = 0; n < cap(); ++n) {
      require(static_cast<int>(degens[n].size()) == n + 1, errc::internal, "degeneracy family has wrong arity");
      for (int i = 0; i <= n; ++i)
        for (int s = 0; s < levels[n].size(); ++s)
          require(carrier(n, s) == carrier(n + 1, degen(n, i, s)), errc::internal,
                  "degeneracy does not preserve carriers");
    }
    // d_i d_j = d_{j-1} d_i
    for (int n = 2; n <= cap(); ++n)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          for (int s = 0; s < levels[n].size(); ++s)
            require(face(n - 1, i, face(n, j, s)) == face(n - 1, j - 1, face(n, i, s)), errc::internal,
                    "simplicial identity d_i d_j failed at level " + std::to_string(n));
    // degeneracy identities
    for (int n = 0; n < cap(); ++n)
      for (int i = 0; i <= n; ++i)
        for (int s = 0; s < levels[n].size(); ++s) {
          int t = degen(n, i, s);
          require(face(n + 1, i, t) == s && face(n + 1, i + 1, t) == s, errc::internal,
                  "degeneracy identity d_i s_i failed");
          for (int j = 0; j < i && n >= 1; ++j)
            require(face(n + 1, j, t) == degen(n - 1, i - 1, face(n, j, s)), errc::internal,
                    "identity d_j s_i (j < i) failed");
        }
    for (int n = 1; n < cap(); ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = i + 2; j <= n + 1; ++j)
          for (int s = 0; s < levels[n].size(); ++s)
            require(face(n + 1, j, degen(n, i, s)) == degen(n - 1, i, face(n, j - 1, s)), errc::internal,
                    "identity d_j s_i (j > i+1) failed");
    for (int n = 0; n + 1 < cap(); ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
          for (int s = 0; s < levels[n].size(); ++s)
            require(degen(n + 1, j + 1, degen(n, i, s)) == degen(n + 1, i, degen(n, j, s)), errc::internal,
                    "identity s_j s_i failed");
  }
};

// levelwise map of simplicial spaces over X: per-level summand assignments
using LevelAssign = std::vector<std::vector<int>>;

inline void check_levelwise_map(const SimplicialSpaceOverX& src, const SimplicialSpaceOverX& dst,
                                const LevelAssign& f, int through) {
  require(static_cast<int>(f.size()) > through, errc::internal, "levelwise map not defined far enough");
  for (int n = 0; n <= through; ++n) {
    require(static_cast<int>(f[n].size()) == src.levels[n].size(), errc::internal, "levelwise map not total");
    for (int s = 0; s < src.levels[n].size(); ++s)
      require(src.carrier(n, s).subset_of(dst.carrier(n, f[n][s])), errc::internal,
              "levelwise map does not respect carriers");
  }
  for (int n = 1; n <= through; ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < src.levels[n].size(); ++s)
        require(f[n - 1][src.face(n, i, s)] == dst.face(n, i, f[n][s]), errc::internal,
                "levelwise map does not commute with faces");
  for (int n = 0; n < through; ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < src.levels[n].size(); ++s)
        require(f[n + 1][src.degen(n, i, s)] == dst.degen(n, i, f[n][s]), errc::internal,
                "levelwise map does not commute with degeneracies");
}

// ---------------------------------------------------------------------------
// Čech complexes of covers

namespace detail {

inline std::vector<int> tuple_of_index(long long idx, int k, int len) {
  std::vector<int> t(len);
  for (int i = len - 1; i >= 0; --i) {
    t[i] = static_cast<int>(idx % k);
    idx /= k;
  }
  return t;
}
inline long long index_of_tuple(const std::vector<int>& t, int k) {
  long long idx = 0;
  for (int v : t) idx = idx * k + v;
  return idx;
}

inline std::string tuple_label(const IndexedCover& cover, const std::vector<int>& t) {
  std::string l;
  for (int v : t) l += (l.empty() ? "" : "|") + cover.label(v);
  return l;
}

}  // namespace detail

// level n = all (n+1)-tuples of labels, carrier the intersection; faces omit
// indices, degeneracies repeat them
inline SimplicialSpaceOverX cech_of_cover(const IndexedCover& cover, int cap) {
  int k = cover.arity();
  require(k >= 1, errc::input, "cover has no entries");
  SimplicialSpaceOverX h;
  h.base = cover.base;
  h.levels.resize(cap + 1);
  h.faces.resize(cap + 1);
  h.degens.resize(cap);
  for (int n = 0; n <= cap; ++n) {
    long long count = 1;
    for (int i = 0; i <= n; ++i) count *= k;
    require(count <= kLevelBudget, errc::input,
            "Čech level " + std::to_string(n) + " would have " + std::to_string(count) + " summands");
    h.levels[n].base = cover.base;
    h.levels[n].summands.reserve(count);
    for (long long idx = 0; idx < count; ++idx) {
      std::vector<int> t = detail::tuple_of_index(idx, k, n + 1);
      Bitset c = cover.carrier(t[0]);
      for (int i = 1; i <= n; ++i) c = c & cover.carrier(t[i]);
      h.levels[n].summands.push_back({detail::tuple_label(cover, t), std::move(c)});
    }
    if (n >= 1) {
      h.faces[n].assign(n + 1, std::vector<int>(count));
      for (long long idx = 0; idx < count; ++idx) {
        std::vector<int> t = detail::tuple_of_index(idx, k, n + 1);
        for (int i = 0; i <= n; ++i) {
          std::vector<int> u = t;
          u.erase(u.begin() + i);
          h.faces[n][i][idx] = static_cast<int>(detail::index_of_tuple(u, k));
        }
      }
    }
    if (n < cap) {
      h.degens[n].assign(n + 1, std::vector<int>(count));
      for (long long idx = 0; idx < count; ++idx) {
        std::vector<int> t = detail::tuple_of_index(idx, k, n + 1);
        for (int i = 0; i <= n; ++i) {
          std::vector<int> u = t;
          u.insert(u.begin() + i, t[i]);
          h.degens[n][i][idx] = static_cast<int>(detail::index_of_tuple(u, k));
        }
      }
    }
  }
  return h;
}

struct OrderedCech {
  SimplicialSpaceOverX space;
  LevelAssign inclusion;  // ordered -> full Čech
};

// sub-object of the Čech complex on weakly increasing label tuples, with the
// inclusion produced alongside
inline OrderedCech ordered_cech(const IndexedCover& cover, int cap) {
  int k = cover.arity();
  OrderedCech out;
  SimplicialSpaceOverX& h = out.space;
  h.base = cover.base;
  h.levels.resize(cap + 1);
  h.faces.resize(cap + 1);
  h.degens.resize(cap);
  out.inclusion.resize(cap + 1);
  std::vector<std::vector<std::vector<int>>> tuples(cap + 1);
  std::vector<std::map<std::vector<int>, int>> index(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    std::vector<int> cur(n + 1);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
      if (pos == n + 1) {
        index[n][cur] = static_cast<int>(tuples[n].size());
        tuples[n].push_back(cur);
        return;
      }
      for (int v = lo; v < k; ++v) {
        cur[pos] = v;
        rec(pos + 1, v);
      }
    };
    rec(0, 0);
    h.levels[n].base = cover.base;
    for (auto& t : tuples[n]) {
      Bitset c = cover.carrier(t[0]);
      for (size_t i = 1; i < t.size(); ++i) c = c & cover.carrier(t[i]);
      h.levels[n].summands.push_back({detail::tuple_label(cover, t), std::move(c)});
      out.inclusion[n].push_back(static_cast<int>(detail::index_of_tuple(t, k)));
    }
    if (n >= 1) {
      h.faces[n].assign(n + 1, std::vector<int>(tuples[n].size()));
      for (size_t s = 0; s < tuples[n].size(); ++s)
        for (int i = 0; i <= n; ++i) {
          std::vector<int> u = tuples[n][s];
          u.erase(u.begin() + i);
          h.faces[n][i][s] = index[n - 1].at(u);
        }
    }
    if (n >= 1) {
      h.degens[n - 1].assign(n, std::vector<int>(tuples[n - 1].size()));
      for (size_t s = 0; s < tuples[n - 1].size(); ++s)
        for (int i = 0; i <= n - 1; ++i) {
          std::vector<int> u = tuples[n - 1][s];
          u.insert(u.begin() + i, u[i]);
          h.degens[n - 1][i][s] = index[n].at(u);
        }
    }
  }
  return out;
}

// levelwise retraction full -> ordered: stable sort of each tuple (equal
// labels keep their relative order)
inline LevelAssign reorder_retraction(const IndexedCover& cover, int cap) {
  int k = cover.arity();
  LevelAssign retr(cap + 1);
  // rebuild the ordered index the same way ordered_cech does
  std::vector<std::map<std::vector<int>, int>> index(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    std::vector<int> cur(n + 1);
    int counter = 0;
    std::function<void(int, int)> rec = [&](int pos, int lo) {
      if (pos == n + 1) {
        index[n][cur] = counter++;
        return;
      }
      for (int v = lo; v < k; ++v) {
        cur[pos] = v;
        rec(pos + 1, v);
      }
    };
    rec(0, 0);
    long long count = 1;
    for (int i = 0; i <= n; ++i) count *= k;
    retr[n].resize(count);
    for (long long idx = 0; idx < count; ++idx) {
      std::vector<int> t = detail::tuple_of_index(idx, k, n + 1);
      std::stable_sort(t.begin(), t.end());
      retr[n][idx] = index[n].at(t);
    }
  }
  return retr;
}

// ---------------------------------------------------------------------------
// matching objects over X and hypercover validation

struct MatchingObject {
  SpaceOverX space;
  std::vector<std::vector<int>> tuples;  // boundary tuples (d_0, ..., d_n) of level-(n-1) summands
  std::map<std::vector<int>, int> index;
};

// M_n^X: compatible label tuples (l_0, ..., l_n) with d_i l_j = d_{j-1} l_i
// for i < j, carrier the intersection of the participating carriers. n = 0
// gives X itself.
inline MatchingObject matching_object(const SimplicialSpaceOverX& h, int n) {
  require(n <= h.cap() + 1 && n >= 0, errc::internal, "matching object needs levels below n");
  MatchingObject mo;
  mo.space.base = h.base;
  if (n == 0) {
    mo.space.summands.push_back({"X", Bitset::full(h.base->size())});
    mo.tuples.push_back({});
    mo.index[{}] = 0;
    return mo;
  }
  const SpaceOverX& lvl = h.levels[n - 1];
  int m = lvl.size();
  // prefix index: for j constraints, candidates keyed by faces (d_0..d_{j-1})
  std::vector<std::map<std::vector<int>, std::vector<int>>> by_prefix(n + 1);
  for (int j = 1; j <= n; ++j) {
    if (n - 1 == 0) break;  // level-0 summands have no faces; no constraints
    for (int s = 0; s < m; ++s) {
      std::vector<int> pre(j);
      for (int i = 0; i < j && i <= n - 1; ++i) pre[i] = h.face(n - 1, i, s);
      by_prefix[j][pre].push_back(s);
    }
  }
  std::vector<int> tuple(n + 1);
  std::function<void(int)> rec = [&](int j) {
    if (j == n + 1) {
      Bitset c = lvl.summands[tuple[0]].carrier;
      std::string label = "(" + lvl.summands[tuple[0]].label;
      for (int i = 1; i <= n; ++i) {
        c = c & lvl.summands[tuple[i]].carrier;
        label += ";" + lvl.summands[tuple[i]].label;
      }
      label += ")";
      require(static_cast<long long>(mo.tuples.size()) < kLevelBudget, errc::input,
              "matching object exceeds the level budget");
      mo.index[tuple] = static_cast<int>(mo.tuples.size());
      mo.tuples.push_back(tuple);
      mo.space.summands.push_back({std::move(label), std::move(c)});
      return;
    }
    if (j == 0 || n - 1 == 0) {
      for (int s = 0; s < m; ++s) {
        tuple[j] = s;
        rec(j + 1);
      }
      return;
    }
    // faces of l_j prescribed: d_i l_j = d_{j-1} l_i for i < j
    std::vector<int> pre(j);
    for (int i = 0; i < j; ++i) pre[i] = h.face(n - 1, j - 1, tuple[i]);
    auto it = by_prefix[j].find(pre);
    if (it == by_prefix[j].end()) return;
    for (int s : it->second) {
      tuple[j] = s;
      rec(j + 1);
    }
  };
  rec(0);
  return mo;
}

// canonical map U_n -> M_n^X U: boundary tuple lookup
inline std::vector<int> canonical_to_matching(const SimplicialSpaceOverX& h, const MatchingObject& mo, int n) {
  std::vector<int> can(h.levels[n].size());
  for (int s = 0; s < h.levels[n].size(); ++s) {
    std::vector<int> t;
    if (n >= 1) {
      t.resize(n + 1);
      for (int i = 0; i <= n; ++i) t[i] = h.face(n, i, s);
    }
    auto it = mo.index.find(t);
    require(it != mo.index.end(), errc::internal, "boundary tuple not found in matching object");
    can[s] = it->second;
  }
  return can;
}

struct CoverageWitness {
  int target_summand;
  int point;
};

// open covering map: per-summand carrier inclusions (structural) plus joint
// coverage of every target summand
inline std::optional<CoverageWitness> covering_map_witness(const SpaceOverX& src, const SpaceOverX& dst,
                                                           const std::vector<int>& assign) {
  for (int s = 0; s < src.size(); ++s)
    require(src.summands[s].carrier.subset_of(dst.summands[assign[s]].carrier), errc::internal,
            "assignment does not respect carriers");
  std::vector<Bitset> hit(dst.size(), Bitset(dst.base->size()));
  for (int s = 0; s < src.size(); ++s) hit[assign[s]] = hit[assign[s]] | src.summands[s].carrier;
  for (int t = 0; t < dst.size(); ++t) {
    if (hit[t] != dst.summands[t].carrier) {
      Bitset missing = dst.summands[t].carrier - hit[t];
      return CoverageWitness{t, missing.first()};
    }
  }
  return std::nullopt;
}

inline bool is_open_covering_map(const SpaceOverX& src, const SpaceOverX& dst, const std::vector<int>& assign) {
  return !covering_map_witness(src, dst, assign).has_value();
}

struct LevelValidation {
  int level = -1;
  bool ok = false;
  long long matching_summands = 0;
  bool iso = false;  // canonical map is an isomorphism at this level
  std::string witness_summand;
  std::string witness_point;
};

struct HypercoverValidation {
  bool ok = true;
  int first_bad_level = -1;
  std::vector<LevelValidation> levels;
};

// checks that every canonical map U_n -> M_n^X U (n <= L) is an open
// covering map; records witnesses on failure
inline HypercoverValidation validate_hypercover(const SimplicialSpaceOverX& h, int L) {
  require(L <= h.cap(), errc::input, "validation bound exceeds generated levels");
  HypercoverValidation out;
  for (int n = 0; n <= L; ++n) {
    LevelValidation lv;
    lv.level = n;
    MatchingObject mo = matching_object(h, n);
    std::vector<int> can = canonical_to_matching(h, mo, n);
    lv.matching_summands = static_cast<long long>(mo.tuples.size());
    auto w = covering_map_witness(h.levels[n], mo.space, can);
    lv.ok = !w.has_value();
    if (w) {
      lv.witness_summand = mo.space.summands[w->target_summand].label;
      lv.witness_point = w->point >= 0 ? h.base->name(w->point) : "(empty target)";
      if (out.ok) {
        out.ok = false;
        out.first_bad_level = n;
      }
    }
    // isomorphism check: injective and summand count equal, carriers equal
    if (lv.ok && h.levels[n].size() == static_cast<int>(mo.tuples.size())) {
      std::vector<int> seen(mo.tuples.size(), 0);
      bool iso = true;
      for (int s = 0; s < h.levels[n].size(); ++s) {
        if (seen[can[s]]++) iso = false;
        if (!(h.carrier(n, s) == mo.space.summands[can[s]].carrier)) iso = false;
      }
      lv.iso = iso;
    }
    out.levels.push_back(std::move(lv));
  }
  return out;
}

struct Hypercover {
  SimplicialSpaceOverX space;
  HypercoverValidation validation;
};

inline Hypercover make_hypercover(SimplicialSpaceOverX h, int L) {
  HypercoverValidation v = validate_hypercover(h, L);
  if (!v.ok) {
    const LevelValidation& bad = v.levels[v.first_bad_level];
    fail(errc::validation, "not a hypercover: level " + std::to_string(bad.level) + ", matching summand " +
                               bad.witness_summand + " not covered at point " + bad.witness_point);
  }
  return Hypercover{std::move(h), std::move(v)};
}

// comparison hook for the matching object computed in plain Top (point-level
// compatible tuples, no over-X condition); for n > 1 it agrees with the
// over-X count, for n = 1 it is the full product
inline long long matching_points_plain(const SimplicialSpaceOverX& h, int n) {
  if (n == 0) return 1;  // the empty limit is a point
  const SpaceOverX& lvl = h.levels[n - 1];
  // points of the (n-1)-level: (summand, base point)
  std::vector<std::pair<int, int>> pts;
  for (int s = 0; s < lvl.size(); ++s)
    for (int x : lvl.summands[s].carrier.members()) pts.emplace_back(s, x);
  long long count = 0;
  std::vector<std::pair<int, int>> tuple(n + 1);
  std::function<void(int)> rec = [&](int j) {
    if (j == n + 1) {
      ++count;
      return;
    }
    for (auto& p : pts) {
      bool ok = true;
      for (int i = 0; i < j && ok && n - 1 >= 1; ++i) {
        // d_i p == d_{j-1} tuple[i] as points: face summand plus same base point
        ok = h.face(n - 1, i, p.first) == h.face(n - 1, j - 1, tuple[i].first) && p.second == tuple[i].second;
      }
      if (!ok) continue;
      tuple[j] = p;
      rec(j + 1);
    }
  };
  rec(0);
  return count;
}

// ---------------------------------------------------------------------------
// coskeleta over X

// cosk^X_n h generated through cap: agrees with h through level n, higher
// levels built iteratively as matching objects with projection faces
inline SimplicialSpaceOverX coskeleton_over_x(const SimplicialSpaceOverX& h, int n, int cap) {
  require(n <= h.cap(), errc::input, "coskeleton cut above generated levels");
  SimplicialSpaceOverX out;
  out.base = h.base;
  out.levels.assign(h.levels.begin(), h.levels.begin() + n + 1);
  out.faces.assign(h.faces.begin(), h.faces.begin() + n + 1);
  out.degens.assign(h.degens.begin(), h.degens.begin() + std::min(n, static_cast<int>(h.degens.size())));
  out.faces.resize(cap + 1);
  out.degens.resize(cap);
  out.levels.reserve(cap + 1);
  for (int m = n + 1; m <= cap; ++m) {
    MatchingObject mo = matching_object(out, m);
    out.levels.push_back(mo.space);
    out.faces[m].assign(m + 1, std::vector<int>(mo.tuples.size()));
    for (size_t t = 0; t < mo.tuples.size(); ++t)
      for (int i = 0; i <= m; ++i) out.faces[m][i][t] = m >= 1 ? mo.tuples[t][i] : 0;
    // degeneracies level m-1 -> m via the simplicial identities
    out.degens[m - 1].assign(m, std::vector<int>(out.levels[m - 1].size()));
    for (int s = 0; s < out.levels[m - 1].size(); ++s)
      for (int i = 0; i <= m - 1; ++i) {
        std::vector<int> t(m + 1);
        for (int j = 0; j <= m; ++j) {
          if (j == i || j == i + 1)
            t[j] = s;
          else if (j < i)
            t[j] = out.degen(m - 2, i - 1, out.face(m - 1, j, s));
          else  // j > i + 1
            t[j] = out.degen(m - 2, i, out.face(m - 1, j - 1, s));
        }
        auto it = mo.index.find(t);
        require(it != mo.index.end(), errc::internal, "degeneracy tuple missing from matching object");
        out.degens[m - 1][i][s] = it->second;
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ω-complex of a complete cover

namespace detail {

// nonempty subsets of {0..n} ordered by (popcount, value); immediate
// subsets of a mask appear strictly earlier
inline std::vector<int> mask_order(int n) {
  std::vector<int> masks;
  for (int pc = 1; pc <= n + 1; ++pc)
    for (int m = 1; m < (1 << (n + 1)); ++m)
      if (__builtin_popcount(m) == pc) masks.push_back(m);
  return masks;
}

// transform a subset of {0..n-1} along δ_i / a subset of {0..n+1} along σ_i
inline int mask_expand(int mask, int i) {  // δ_i insertion
  int lo = mask & ((1 << i) - 1);
  int hi = (mask >> i) << (i + 1);
  return lo | hi;
}
inline int mask_collapse(int mask, int i) {  // σ_i merge of i, i+1
  int lo = mask & ((1 << i) - 1);
  int mid = ((mask >> i) & 3) ? (1 << i) : 0;
  int hi = (mask >> (i + 2)) << (i + 1);
  return lo | mid | hi;
}

}  // namespace detail

// level n summands = monotone assignments F from nonempty subsets of {0..n}
// (reverse inclusion) to cover entries, with F(τ) ⊆ F(τ') when τ ⊇ τ';
// carrier F({0..n}). Requires a complete cover and reports the uncovered
// intersection otherwise.
inline SimplicialSpaceOverX omega_of_cover(const IndexedCover& cover, int cap) {
  if (auto w = space::completeness_witness(cover)) {
    std::string pts;
    for (int x : w->members()) pts += (pts.empty() ? "" : ",") + cover.base->name(x);
    fail(errc::validation, "cover is not complete: intersection {" + pts + "} is not a union of entries inside it");
  }
  int k = cover.arity();
  std::vector<std::vector<bool>> sub(k, std::vector<bool>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub[i][j] = cover.carrier(i).subset_of(cover.carrier(j));

  SimplicialSpaceOverX h;
  h.base = cover.base;
  h.levels.resize(cap + 1);
  h.faces.resize(cap + 1);
  h.degens.resize(cap);
  std::vector<std::vector<std::vector<int>>> funcs(cap + 1);  // assignment per mask-order position
  std::vector<std::map<std::vector<int>, int>> index(cap + 1);
  std::vector<std::vector<int>> masks(cap + 1);
  std::vector<std::vector<int>> pos_of_mask(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    masks[n] = detail::mask_order(n);
    pos_of_mask[n].assign(1 << (n + 1), -1);
    for (size_t p = 0; p < masks[n].size(); ++p) pos_of_mask[n][masks[n][p]] = static_cast<int>(p);
    // enumerate monotone functors by DFS in mask order
    std::vector<int> cur(masks[n].size());
    std::function<void(size_t)> rec = [&](size_t p) {
      if (p == masks[n].size()) {
        require(static_cast<long long>(funcs[n].size()) < kLevelBudget, errc::input,
                "Ω level " + std::to_string(n) + " exceeds the level budget");
        index[n][cur] = static_cast<int>(funcs[n].size());
        funcs[n].push_back(cur);
        return;
      }
      int mask = masks[n][p];
      for (int e = 0; e < k; ++e) {
        bool ok = true;
        for (int b = 0; b <= n && ok; ++b) {
          if (!(mask & (1 << b))) continue;
          int m2 = mask & ~(1 << b);
          if (m2) ok = sub[e][cur[pos_of_mask[n][m2]]];
        }
        if (ok) {
          cur[p] = e;
          rec(p + 1);
        }
      }
    };
    rec(0);
    h.levels[n].base = cover.base;
    int full = (1 << (n + 1)) - 1;
    for (auto& f : funcs[n]) {
      std::string label;
      for (size_t p = 0; p < f.size(); ++p) label += (p ? "." : "F") + std::to_string(f[p]);
      h.levels[n].summands.push_back({std::move(label), cover.carrier(f[pos_of_mask[n][full]])});
    }
  }
  // structure maps by precomposition with the cosimplicial structure of P_n
  for (int n = 1; n <= cap; ++n) {
    h.faces[n].assign(n + 1, std::vector<int>(funcs[n].size()));
    for (int i = 0; i <= n; ++i)
      for (size_t s = 0; s < funcs[n].size(); ++s) {
        std::vector<int> g(masks[n - 1].size());
        for (size_t p = 0; p < masks[n - 1].size(); ++p)
          g[p] = funcs[n][s][pos_of_mask[n][detail::mask_expand(masks[n - 1][p], i)]];
        h.faces[n][i][s] = index[n - 1].at(g);
      }
  }
  for (int n = 0; n < cap; ++n) {
    h.degens[n].assign(n + 1, std::vector<int>(funcs[n].size()));
    for (int i = 0; i <= n; ++i)
      for (size_t s = 0; s < funcs[n].size(); ++s) {
        std::vector<int> g(masks[n + 1].size());
        for (size_t p = 0; p < masks[n + 1].size(); ++p)
          g[p] = funcs[n][s][pos_of_mask[n][detail::mask_collapse(masks[n + 1][p], i)]];
        h.degens[n][i][s] = index[n + 1].at(g);
      }
  }
  return h;
}

// ---------------------------------------------------------------------------
// pullbacks

// levelwise carriers f^{-1}(carrier), labels and structure maps preserved
inline SimplicialSpaceOverX pullback_hypercover(const SimplicialSpaceOverX& h, const ContinuousMap& f) {
  require(f.target == h.base, errc::input, "hypercover does not live over the map's target");
  SimplicialSpaceOverX out;
  out.base = f.source;
  out.levels.resize(h.levels.size());
  out.faces = h.faces;
  out.degens = h.degens;
  for (size_t n = 0; n < h.levels.size(); ++n) {
    out.levels[n].base = f.source;
    for (auto& s : h.levels[n].summands) out.levels[n].summands.push_back({s.label, f.preimage(s.carrier)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Čech complex of a map (levels are genuine finite spaces, not unions of
// opens of the base)

struct SimplicialFiniteSpace {
  SpacePtr base;
  std::vector<SpacePtr> levels;
  std::vector<std::vector<std::vector<int>>> faces;   // point-level maps
  std::vector<std::vector<std::vector<int>>> degens;  // point-level maps
  std::vector<int> aug;                               // level 0 -> base

  int cap() const { return static_cast<int>(levels.size()) - 1; }

  void check_structure() const {
    for (int n = 2; n <= cap(); ++n)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          for (int x = 0; x < levels[n]->size(); ++x)
            require(faces[n - 1][i][faces[n][j][x]] == faces[n - 1][j - 1][faces[n][i][x]], errc::internal,
                    "simplicial identity failed in Čech complex of a map");
    for (int n = 1; n <= cap(); ++n)
      for (int i = 0; i <= n; ++i)
        for (auto& [a, b] : levels[n]->covering_pairs())
          require(levels[n - 1]->leq(faces[n][i][a], faces[n][i][b]), errc::internal,
                  "face map not continuous");
  }
};

// level n = (n+1)-fold fiber product of p with itself over the base:
// tuples with equal image, ordered componentwise
inline SimplicialFiniteSpace cech_of_map(const ContinuousMap& p, int cap) {
  SimplicialFiniteSpace out;
  out.base = p.target;
  const FiniteSpace& e = *p.source;
  std::vector<std::vector<std::vector<int>>> tuples(cap + 1);
  std::vector<std::map<std::vector<int>, int>> index(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    std::vector<int> cur(n + 1);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == n + 1) {
        index[n][cur] = static_cast<int>(tuples[n].size());
        tuples[n].push_back(cur);
        return;
      }
      for (int x = 0; x < e.size(); ++x) {
        if (pos > 0 && p.assignment[x] != p.assignment[cur[0]]) continue;
        cur[pos] = x;
        rec(pos + 1);
      }
    };
    rec(0);
    std::vector<std::string> names;
    for (auto& t : tuples[n]) {
      std::string nm = "(";
      for (size_t i = 0; i < t.size(); ++i) nm += (i ? "," : "") + e.name(t[i]);
      names.push_back(nm + ")");
    }
    std::vector<std::pair<int, int>> rel;
    for (size_t a = 0; a < tuples[n].size(); ++a)
      for (size_t b = 0; b < tuples[n].size(); ++b) {
        if (a == b) continue;
        bool le = true;
        for (int i = 0; i <= n && le; ++i) le = e.leq(tuples[n][a][i], tuples[n][b][i]);
        if (le) rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    out.levels.push_back(space::make_space(std::move(names), rel));
  }
  out.faces.resize(cap + 1);
  out.degens.resize(cap);
  for (int n = 1; n <= cap; ++n) {
    out.faces[n].assign(n + 1, std::vector<int>(tuples[n].size()));
    for (size_t s = 0; s < tuples[n].size(); ++s)
      for (int i = 0; i <= n; ++i) {
        std::vector<int> u = tuples[n][s];
        u.erase(u.begin() + i);
        out.faces[n][i][s] = index[n - 1].at(u);
      }
  }
  for (int n = 0; n < cap; ++n) {
    out.degens[n].assign(n + 1, std::vector<int>(tuples[n].size()));
    for (size_t s = 0; s < tuples[n].size(); ++s)
      for (int i = 0; i <= n; ++i) {
        std::vector<int> u = tuples[n][s];
        u.insert(u.begin() + i, u[i]);
        out.degens[n][i][s] = index[n + 1].at(u);
      }
  }
  out.aug.resize(tuples[0].size());
  for (size_t s = 0; s < tuples[0].size(); ++s) out.aug[s] = p.assignment[tuples[0][s][0]];
  return out;
}

// ---------------------------------------------------------------------------
// summand skeleton of a simplicial space as a raw simplicial set (the "Čech
// nerve" of the indexing data)

inline sset::RawLevels summand_raw_levels(const SimplicialSpaceOverX& h, int cap) {
  require(cap <= h.cap(), errc::internal, "summand view beyond generated levels");
  sset::RawLevels raw;
  raw.sizes.resize(cap + 1);
  raw.face.resize(cap + 1);
  raw.degen.resize(cap + 1);
  for (int n = 0; n <= cap; ++n) raw.sizes[n] = h.levels[n].size();
  for (int n = 1; n <= cap; ++n) raw.face[n] = h.faces[n];
  for (int n = 0; n < cap; ++n) raw.degen[n] = h.degens[n];
  return raw;
}

}  // namespace hck::cech
