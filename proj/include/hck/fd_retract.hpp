#pragma once

// Bounded-hypercover induction data: for a hypercover of dimension n+1,
// V = cosk^X_n U, the bisimplicial space W whose kth row is the Čech complex
// of the open covering map U_k -> V_k, the diagonal D of W, and the maps
// exhibiting U as a retract of D over X. Also the extra degeneracy of a Čech
// complex whose cover contains the whole space.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hck/over_x.hpp"

namespace hck::cech {

// bisimplicial space over X: j indexes the Čech-of-map direction, k the
// original simplicial level
struct BiOverX {
  SpacePtr base;
  int jcap = -1, kcap = -1;
  std::vector<std::vector<std::vector<std::vector<int>>>> tuples;  // tuples[j][k][t] = (j+1) U_k summands
  std::vector<std::vector<SpaceOverX>> lvl;                        // lvl[j][k]
  std::vector<std::vector<std::map<std::vector<int>, int>>> index;

  // horizontal face: omit tuple coordinate i
  int hface(int j, int k, int i, int t) const {
    std::vector<int> u = tuples[j][k][t];
    u.erase(u.begin() + i);
    return index[j - 1][k].at(u);
  }
  // vertical face: componentwise U face
  int vface(const SimplicialSpaceOverX& u, int j, int k, int i, int t) const {
    std::vector<int> v = tuples[j][k][t];
    for (int& s : v) s = u.face(k, i, s);
    return index[j][k - 1].at(v);
  }
  int hdeg(int j, int k, int i, int t) const {
    std::vector<int> u = tuples[j][k][t];
    u.insert(u.begin() + i, u[i]);
    return index[j + 1][k].at(u);
  }
  int vdeg(const SimplicialSpaceOverX& u, int j, int k, int i, int t) const {
    std::vector<int> v = tuples[j][k][t];
    for (int& s : v) s = u.degen(k, i, s);
    return index[j][k + 1].at(v);
  }
};

struct FdInduction {
  int dim = -1;                   // claimed dimension n+1
  SimplicialSpaceOverX V;         // cosk^X_n of the input
  std::vector<std::vector<int>> can;  // canonical U_k -> V_k per level
  BiOverX W;
  SimplicialSpaceOverX D;         // diagonal of W
  LevelAssign unit;               // U -> D, the unique horizontal degeneracy
  LevelAssign retraction;         // D -> U via the 0th-vertex face and coskeletality
  std::vector<bool> rows_constant;  // rows 0..n of W constant with value U_k
};

namespace detail {

// canonical levelwise map U -> cosk^X_n U: identity through n, boundary
// tuples above
inline std::vector<std::vector<int>> canonical_to_coskeleton(const SimplicialSpaceOverX& u,
                                                             const SimplicialSpaceOverX& v, int n,
                                                             int through) {
  std::vector<std::vector<int>> can(through + 1);
  for (int k = 0; k <= std::min(n, through); ++k) {
    can[k].resize(u.levels[k].size());
    for (int s = 0; s < u.levels[k].size(); ++s) can[k][s] = s;
  }
  for (int k = n + 1; k <= through; ++k) {
    can[k].resize(u.levels[k].size());
    // v's level k summands are boundary tuples of level k-1 summands of v
    std::map<std::vector<int>, int> idx;
    for (int t = 0; t < v.levels[k].size(); ++t) {
      std::vector<int> bound(k + 1);
      for (int i = 0; i <= k; ++i) bound[i] = v.face(k, i, t);
      idx[bound] = t;
    }
    for (int s = 0; s < u.levels[k].size(); ++s) {
      std::vector<int> bound(k + 1);
      for (int i = 0; i <= k; ++i) bound[i] = can[k - 1][u.face(k, i, s)];
      auto it = idx.find(bound);
      require(it != idx.end(), errc::internal, "canonical coskeleton image not found");
      can[k][s] = it->second;
    }
  }
  return can;
}

}  // namespace detail

// claimed_dim = n+1; verifies boundedness (canonical matching maps are
// isomorphisms above the claimed dimension, through the generated range) and
// that the retract law holds on the generated range.
inline FdInduction fd_induction_data(const SimplicialSpaceOverX& u, int claimed_dim, int through) {
  require(through <= u.cap(), errc::input, "retract data beyond generated levels");
  require(claimed_dim >= 1, errc::input, "dimension-0 hypercovers are Čech complexes; nothing to do");
  int n = claimed_dim - 1;
  require(n <= through, errc::input, "need levels through the claimed dimension");
  FdInduction fd;
  fd.dim = claimed_dim;

  // boundedness above claimed_dim on the generated range
  {
    HypercoverValidation v = validate_hypercover(u, through);
    require(v.ok, errc::validation, "input is not a hypercover through the requested level");
    for (int m = claimed_dim + 1; m <= through; ++m)
      require(v.levels[m].iso, errc::validation,
              "not bounded at dimension " + std::to_string(claimed_dim) + ": level " + std::to_string(m) +
                  " is not matching-isomorphic");
  }

  fd.V = coskeleton_over_x(u, n, through);
  fd.can = detail::canonical_to_coskeleton(u, fd.V, n, through);

  // W_{j,k} = (j+1)-tuples of U_k summands with equal canonical image in V_k
  BiOverX& w = fd.W;
  w.base = u.base;
  w.jcap = w.kcap = through;
  w.tuples.assign(through + 1, std::vector<std::vector<std::vector<int>>>(through + 1));
  w.lvl.assign(through + 1, std::vector<SpaceOverX>(through + 1));
  w.index.assign(through + 1, std::vector<std::map<std::vector<int>, int>>(through + 1));
  for (int k = 0; k <= through; ++k) {
    // group U_k summands by canonical image
    std::map<int, std::vector<int>> fiber;
    for (int s = 0; s < u.levels[k].size(); ++s) fiber[fd.can[k][s]].push_back(s);
    for (int j = 0; j <= through; ++j) {
      w.lvl[j][k].base = u.base;
      std::vector<int> t(j + 1);
      for (auto& [img, ss] : fiber) {
        std::function<void(int)> rec = [&](int pos) {
          if (pos == j + 1) {
            Bitset c = u.carrier(k, t[0]);
            for (int i = 1; i <= j; ++i) c = c & u.carrier(k, t[i]);
            w.index[j][k][t] = static_cast<int>(w.tuples[j][k].size());
            w.tuples[j][k].push_back(t);
            w.lvl[j][k].summands.push_back({std::string(), std::move(c)});
            return;
          }
          for (int s : ss) {
            t[pos] = s;
            rec(pos + 1);
          }
        };
        rec(0);
      }
    }
  }
  // rows 0..n constant with value U_k (carrier multiplicities collapse)
  fd.rows_constant.assign(n + 1, true);
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= through && fd.rows_constant[k]; ++j)
      fd.rows_constant[k] = w.tuples[j][k].size() == static_cast<size_t>(u.levels[k].size());

  // D_k = W_{k,k}; faces and degeneracies act in both directions at once
  SimplicialSpaceOverX& d = fd.D;
  d.base = u.base;
  d.levels.resize(through + 1);
  d.faces.resize(through + 1);
  d.degens.resize(through);
  for (int k = 0; k <= through; ++k) d.levels[k] = w.lvl[k][k];
  for (int k = 1; k <= through; ++k) {
    d.faces[k].assign(k + 1, std::vector<int>(w.tuples[k][k].size()));
    for (size_t t = 0; t < w.tuples[k][k].size(); ++t)
      for (int i = 0; i <= k; ++i) {
        std::vector<int> v = w.tuples[k][k][t];
        v.erase(v.begin() + i);                      // horizontal face
        for (int& s : v) s = u.face(k, i, s);        // vertical face
        d.faces[k][i][t] = w.index[k - 1][k - 1].at(v);
      }
  }
  for (int k = 0; k < through; ++k) {
    d.degens[k].assign(k + 1, std::vector<int>(w.tuples[k][k].size()));
    for (size_t t = 0; t < w.tuples[k][k].size(); ++t)
      for (int i = 0; i <= k; ++i) {
        std::vector<int> v = w.tuples[k][k][t];
        v.insert(v.begin() + i, v[i]);               // horizontal degeneracy
        for (int& s : v) s = u.degen(k, i, s);       // vertical degeneracy
        d.degens[k][i][t] = w.index[k + 1][k + 1].at(v);
      }
  }

  // unit U_k -> D_k: the unique horizontal degeneracy W_{0,k} -> W_{k,k}
  fd.unit.resize(through + 1);
  for (int k = 0; k <= through; ++k) {
    fd.unit[k].resize(u.levels[k].size());
    for (int s = 0; s < u.levels[k].size(); ++s)
      fd.unit[k][s] = w.index[k][k].at(std::vector<int>(k + 1, s));
  }

  // retraction D_k -> U_k: coordinate 0 through dimension n+1 (the 0th
  // vertex inclusion is the chosen face), coskeletal extension above
  fd.retraction.resize(through + 1);
  for (int k = 0; k <= std::min(n + 1, through); ++k) {
    fd.retraction[k].resize(w.tuples[k][k].size());
    for (size_t t = 0; t < w.tuples[k][k].size(); ++t) {
      fd.retraction[k][t] = w.tuples[k][k][t][0];
      if (k <= n)
        for (int i = 1; i <= k; ++i)
          require(w.tuples[k][k][t][i] == w.tuples[k][k][t][0], errc::internal,
                  "row tuples not constant below the bound");
    }
  }
  for (int k = n + 2; k <= through; ++k) {
    // U_k is matching-isomorphic: summands keyed by their boundary
    std::map<std::vector<int>, int> bykey;
    for (int s = 0; s < u.levels[k].size(); ++s) {
      std::vector<int> bound(k + 1);
      for (int i = 0; i <= k; ++i) bound[i] = u.face(k, i, s);
      bykey[bound] = s;
    }
    fd.retraction[k].resize(w.tuples[k][k].size());
    for (size_t t = 0; t < w.tuples[k][k].size(); ++t) {
      std::vector<int> bound(k + 1);
      for (int i = 0; i <= k; ++i) bound[i] = fd.retraction[k - 1][d.faces[k][i][t]];
      auto it = bykey.find(bound);
      require(it != bykey.end(), errc::internal, "retraction boundary has no preimage in U");
      fd.retraction[k][static_cast<int>(t)] = it->second;
    }
  }

  // both maps are simplicial and the composite U -> D -> U is the identity
  // on the generated range
  check_levelwise_map(u, fd.D, fd.unit, through);
  check_levelwise_map(fd.D, u, fd.retraction, through);
  for (int k = 0; k <= through; ++k)
    for (int s = 0; s < u.levels[k].size(); ++s)
      require(fd.retraction[k][fd.unit[k][s]] == s, errc::internal, "retract law failed at level " +
                                                                         std::to_string(k));
  return fd;
}

// ---------------------------------------------------------------------------
// extra degeneracy for covers containing the whole space

struct ExtraDegeneracy {
  int entry = -1;          // index of the entry whose carrier is all of X
  int base_summand = -1;   // level-0 summand (b), the section of the augmentation
  LevelAssign s_minus1;    // s_{-1} : level n -> level n+1, prepend the label b
};

// the augmented identities d_0 s_{-1} = id, d_{i+1} s_{-1} = s_{-1} d_i,
// s_{i+1} s_{-1} = s_{-1} s_i are checked on the generated range
inline ExtraDegeneracy extra_degeneracy(const IndexedCover& cover, const SimplicialSpaceOverX& cech) {
  int b = -1;
  for (int i = 0; i < cover.arity(); ++i)
    if (cover.carrier(i) == Bitset::full(cover.base->size())) {
      b = i;
      break;
    }
  require(b >= 0, errc::validation, "no cover entry equals the whole space");
  int k = cover.arity();
  ExtraDegeneracy ed;
  ed.entry = b;
  ed.base_summand = b;  // level-0 tuples are single labels in entry order
  ed.s_minus1.resize(cech.cap());
  for (int n = 0; n < cech.cap(); ++n) {
    long long count = 1;
    for (int i = 0; i <= n; ++i) count *= k;
    ed.s_minus1[n].resize(count);
    for (long long idx = 0; idx < count; ++idx) {
      std::vector<int> t = detail::tuple_of_index(idx, k, n + 1);
      t.insert(t.begin(), b);
      ed.s_minus1[n][idx] = static_cast<int>(detail::index_of_tuple(t, k));
    }
  }
  // augmented identities
  for (int n = 0; n < cech.cap(); ++n) {
    long long count = static_cast<long long>(cech.levels[n].size());
    for (long long s = 0; s < count; ++s) {
      int ss = static_cast<int>(s);
      require(cech.face(n + 1, 0, ed.s_minus1[n][ss]) == ss, errc::internal, "d_0 s_{-1} != id");
      for (int i = 0; i <= n && n >= 1; ++i)
        require(cech.face(n + 1, i + 1, ed.s_minus1[n][ss]) == ed.s_minus1[n - 1][cech.face(n, i, ss)],
                errc::internal, "d_{i+1} s_{-1} != s_{-1} d_i");
      if (n + 1 < cech.cap())
        for (int i = 0; i <= n; ++i)
          require(cech.degen(n + 1, i + 1, ed.s_minus1[n][ss]) == ed.s_minus1[n + 1][cech.degen(n, i, ss)],
                  errc::internal, "s_{i+1} s_{-1} != s_{-1} s_i");
    }
  }
  return ed;
}

}  // namespace hck::cech
