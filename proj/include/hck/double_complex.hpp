#pragma once

// Double complexes of integer chains attached to simplicial spaces over a
// finite base. Columns index the simplicial (Čech) direction, rows the
// order-complex chain degree; the vertical differential carries the sign
// (-1)^p so the two directions anticommute and totalization is the plain sum.
//
// Two builders: the per-summand route drops degenerate summands (normalized
// columns), the finite-space route keeps full levels (used for Čech
// complexes of maps, whose levels are not unions of opens of the base).
// Column truncation: homology through degree K only reads columns p <= K+1,
// so generating p <= K+2 leaves those degrees exact.

#include <map>
#include <string>
#include <vector>

#include "hck/chain_complex.hpp"
#include "hck/order_complex.hpp"
#include "hck/fd_retract.hpp"
#include "hck/over_x.hpp"

namespace hck::homology {

struct DoubleComplex {
  int P = -1, Q = -1;
  std::vector<std::vector<int>> ranks;         // [p][q]
  std::vector<std::vector<IntMatrix>> dh;      // dh[p][q] : (p,q) -> (p-1,q), p >= 1
  std::vector<std::vector<IntMatrix>> dv;      // dv[p][q] : (p,q) -> (p,q-1), q >= 1, signed (-1)^p
  std::vector<IntMatrix> aug;                  // aug[q] : (0,q) -> C_q(K(base))
  ChainComplex base_chains;                    // chains of the base order complex, through Q+1

  // basis bookkeeping for the per-summand route: basis[p][q][j] =
  // (nondegenerate slot, face index in the base order complex)
  std::vector<int> nd_counts;                               // nondegenerate summands per column
  std::vector<std::vector<int>> slot_of_summand;            // [p][raw summand] -> slot or -1
  std::vector<std::vector<std::vector<std::pair<int, int>>>> basis;
  std::vector<std::vector<std::map<std::pair<int, int>, int>>> basis_pos;

  void check() const {
    for (int p = 2; p <= P; ++p)
      for (int q = 0; q <= Q; ++q) {
        BigMatrix m = BigMatrix::from(dh[p - 1][q]) * BigMatrix::from(dh[p][q]);
        for (int i = 0; i < m.rows; ++i)
          require(m.row[i].empty(), errc::internal, "horizontal differential does not square to zero");
      }
    for (int p = 0; p <= P; ++p)
      for (int q = 2; q <= Q; ++q) {
        BigMatrix m = BigMatrix::from(dv[p][q - 1]) * BigMatrix::from(dv[p][q]);
        for (int i = 0; i < m.rows; ++i)
          require(m.row[i].empty(), errc::internal, "vertical differential does not square to zero");
      }
    for (int p = 1; p <= P; ++p)
      for (int q = 1; q <= Q; ++q) {
        BigMatrix a = BigMatrix::from(dv[p - 1][q]) * BigMatrix::from(dh[p][q]);
        BigMatrix b = BigMatrix::from(dh[p][q - 1]) * BigMatrix::from(dv[p][q]);
        for (int i = 0; i < a.rows; ++i)
          for (auto& [j, v] : a.row[i]) {
            BigInt w = b.at(i, j);
            require(v + w == BigInt(0), errc::internal, "differentials do not anticommute");
          }
        for (int i = 0; i < b.rows; ++i)
          for (auto& [j, v] : b.row[i])
            require(!(a.at(i, j).is_zero() && !v.is_zero()) || (a.at(i, j) + v == BigInt(0)), errc::internal,
                    "differentials do not anticommute");
      }
  }
};

namespace detail {

// weak (monotone, repeats allowed) chains are not needed here; strict chains
// of an open subset of X are exactly the faces of K(X) lying inside it
inline bool face_in_carrier(const sset::OrderedComplex& kx, const std::vector<int>& vert_point,
                            int q, int idx, const Bitset& carrier) {
  for (int v : kx.faces[q][idx])
    if (!carrier.test(vert_point[v])) return false;
  return true;
}

}  // namespace detail

// Normalized double complex of a simplicial space over X: column p is free
// on (nondegenerate level-p summand) x (q-chains of its carrier). A summand
// is degenerate iff it is the image of some degeneracy.
inline DoubleComplex normalized_chains(const cech::SimplicialSpaceOverX& h, int P, int Q) {
  require(P <= h.cap(), errc::input, "double complex needs levels through P");
  DoubleComplex dc;
  dc.P = P;
  dc.Q = Q;
  const space::FiniteSpace& x = *h.base;
  sset::OrderedComplex kx = sset::order_complex(x);
  dc.base_chains = kx.chains(Q + 1);
  // vertex v of kx corresponds to base point:
  std::vector<int> vert_point(kx.vertex_count());
  for (int v = 0; v < kx.vertex_count(); ++v) vert_point[v] = x.index_of(kx.vertex_names[v]);

  dc.slot_of_summand.resize(P + 1);
  dc.nd_counts.resize(P + 1);
  dc.basis.assign(P + 1, {});
  dc.basis_pos.assign(P + 1, {});
  dc.ranks.assign(P + 1, std::vector<int>(Q + 1, 0));
  for (int p = 0; p <= P; ++p) {
    int m = h.levels[p].size();
    std::vector<bool> degen(m, false);
    if (p >= 1)
      for (int i = 0; i < p; ++i)
        for (int s = 0; s < h.levels[p - 1].size(); ++s) degen[h.degen(p - 1, i, s)] = true;
    dc.slot_of_summand[p].assign(m, -1);
    for (int s = 0; s < m; ++s)
      if (!degen[s]) dc.slot_of_summand[p][s] = dc.nd_counts[p]++;
    dc.basis[p].resize(Q + 1);
    dc.basis_pos[p].resize(Q + 1);
    for (int q = 0; q <= Q; ++q) {
      for (int s = 0; s < m; ++s) {
        int slot = dc.slot_of_summand[p][s];
        if (slot < 0) continue;
        for (int f = 0; f < kx.face_count(q); ++f)
          if (detail::face_in_carrier(kx, vert_point, q, f, h.carrier(p, s))) {
            dc.basis_pos[p][q][{slot, f}] = static_cast<int>(dc.basis[p][q].size());
            dc.basis[p][q].emplace_back(slot, f);
          }
      }
      dc.ranks[p][q] = static_cast<int>(dc.basis[p][q].size());
    }
  }
  // slot -> raw summand (for face images)
  std::vector<std::vector<int>> summand_of_slot(P + 1);
  for (int p = 0; p <= P; ++p) {
    summand_of_slot[p].resize(dc.nd_counts[p]);
    for (int s = 0; s < h.levels[p].size(); ++s)
      if (dc.slot_of_summand[p][s] >= 0) summand_of_slot[p][dc.slot_of_summand[p][s]] = s;
  }
  dc.dh.assign(P + 1, std::vector<IntMatrix>(Q + 1));
  dc.dv.assign(P + 1, std::vector<IntMatrix>(Q + 1));
  for (int p = 1; p <= P; ++p)
    for (int q = 0; q <= Q; ++q) {
      IntMatrix d(dc.ranks[p - 1][q], dc.ranks[p][q]);
      for (int j = 0; j < dc.ranks[p][q]; ++j) {
        auto [slot, f] = dc.basis[p][q][j];
        int s = summand_of_slot[p][slot];
        int sign = 1;
        for (int i = 0; i <= p; ++i) {
          int target = h.face(p, i, s);
          int tslot = dc.slot_of_summand[p - 1][target];
          if (tslot >= 0) d.add(dc.basis_pos[p - 1][q].at({tslot, f}), j, sign);
          sign = -sign;
        }
      }
      d.normalize();
      dc.dh[p][q] = std::move(d);
    }
  for (int p = 0; p <= P; ++p)
    for (int q = 1; q <= Q; ++q) {
      IntMatrix d(dc.ranks[p][q - 1], dc.ranks[p][q]);
      int colsign = (p % 2 == 0) ? 1 : -1;
      for (int j = 0; j < dc.ranks[p][q]; ++j) {
        auto [slot, f] = dc.basis[p][q][j];
        const std::vector<int>& verts = kx.faces[q][f];
        int sign = colsign;
        for (size_t i = 0; i < verts.size(); ++i) {
          std::vector<int> sub = verts;
          sub.erase(sub.begin() + i);
          d.add(dc.basis_pos[p][q - 1].at({slot, kx.face_index(q - 1, sub)}), j, sign);
          sign = -sign;
        }
      }
      d.normalize();
      dc.dv[p][q] = std::move(d);
    }
  // augmentation: column 0 chains include into chains of X
  dc.aug.resize(Q + 1);
  for (int q = 0; q <= Q; ++q) {
    IntMatrix a(dc.base_chains.rank(q), dc.ranks[0][q]);
    for (int j = 0; j < dc.ranks[0][q]; ++j) a.add(dc.basis[0][q][j].second, j, 1);
    a.normalize();
    dc.aug[q] = std::move(a);
  }
  return dc;
}

// Unnormalized double complex of a simplicial finite space (Čech complex of
// a map): column p is the full chain complex of the order complex of level
// p; horizontal maps are induced with collapse-to-zero; the augmentation
// factors through the map to the base.
inline DoubleComplex finite_space_chains(const cech::SimplicialFiniteSpace& s, int P, int Q) {
  require(P <= s.cap(), errc::input, "double complex needs levels through P");
  DoubleComplex dc;
  dc.P = P;
  dc.Q = Q;
  sset::OrderedComplex kb = sset::order_complex(*s.base);
  dc.base_chains = kb.chains(Q + 1);
  std::vector<sset::OrderedComplex> kl(P + 1);
  std::vector<homology::ChainComplex> cl(P + 1);
  // vertex order of each order complex follows a linear extension; map
  // vertices back to points for the induced maps
  std::vector<std::vector<int>> vert_point(P + 1);
  for (int p = 0; p <= P; ++p) {
    kl[p] = sset::order_complex(*s.levels[p]);
    cl[p] = kl[p].chains(Q);
    vert_point[p].resize(kl[p].vertex_count());
    for (int v = 0; v < kl[p].vertex_count(); ++v) vert_point[p][v] = s.levels[p]->index_of(kl[p].vertex_names[v]);
  }
  std::vector<std::vector<int>> point_vert(P + 1);
  for (int p = 0; p <= P; ++p) {
    point_vert[p].assign(s.levels[p]->size(), -1);
    for (int v = 0; v < kl[p].vertex_count(); ++v) point_vert[p][vert_point[p][v]] = v;
  }
  dc.ranks.assign(P + 1, std::vector<int>(Q + 1, 0));
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q) dc.ranks[p][q] = cl[p].rank(q);
  dc.dh.assign(P + 1, std::vector<IntMatrix>(Q + 1));
  dc.dv.assign(P + 1, std::vector<IntMatrix>(Q + 1));
  for (int p = 1; p <= P; ++p)
    for (int q = 0; q <= Q; ++q) {
      IntMatrix d(dc.ranks[p - 1][q], dc.ranks[p][q]);
      for (int j = 0; j < dc.ranks[p][q]; ++j) {
        int sign = 1;
        for (int i = 0; i <= p; ++i) {
          // image chain under face map i: weakly increasing since the map is
          // monotone; zero if two vertices collapse
          std::vector<int> img;
          bool collapse = false;
          for (int v : kl[p].faces[q][j]) {
            int w = point_vert[p - 1][s.faces[p][i][vert_point[p][v]]];
            if (!img.empty() && img.back() == w) collapse = true;
            img.push_back(w);
          }
          if (!collapse) d.add(kl[p - 1].face_index(q, img), j, sign);
          sign = -sign;
        }
      }
      d.normalize();
      dc.dh[p][q] = std::move(d);
    }
  for (int p = 0; p <= P; ++p)
    for (int q = 1; q <= Q; ++q) {
      IntMatrix d(dc.ranks[p][q - 1], dc.ranks[p][q]);
      int colsign = (p % 2 == 0) ? 1 : -1;
      for (int j = 0; j < dc.ranks[p][q]; ++j) {
        const std::vector<int>& verts = kl[p].faces[q][j];
        int sign = colsign;
        for (size_t i = 0; i < verts.size(); ++i) {
          std::vector<int> sub = verts;
          sub.erase(sub.begin() + i);
          d.add(kl[p].face_index(q - 1, sub), j, sign);
          sign = -sign;
        }
      }
      d.normalize();
      dc.dv[p][q] = std::move(d);
    }
  // augmentation through the map level0 -> base
  std::vector<int> base_point_vert(s.base->size(), -1);
  for (int v = 0; v < kb.vertex_count(); ++v) base_point_vert[s.base->index_of(kb.vertex_names[v])] = v;
  dc.aug.resize(Q + 1);
  for (int q = 0; q <= Q; ++q) {
    IntMatrix a(dc.base_chains.rank(q), dc.ranks[0][q]);
    for (int j = 0; j < dc.ranks[0][q]; ++j) {
      std::vector<int> img;
      bool collapse = false;
      for (int v : kl[0].faces[q][j]) {
        int w = base_point_vert[s.aug[vert_point[0][v]]];
        if (!img.empty() && img.back() == w) collapse = true;
        img.push_back(w);
      }
      if (!collapse) a.add(kb.face_index(q, img), j, 1);
    }
    a.normalize();
    dc.aug[q] = std::move(a);
  }
  return dc;
}

// ---------------------------------------------------------------------------
// totalization and the augmentation certificate

struct Totalization {
  ChainComplex complex;                       // degrees 0..top
  std::vector<std::vector<int>> block_off;    // block_off[n][p] = offset of column p in Tot_n, or -1
  int column_bound = 0;

  int offset(int n, int p) const { return block_off[n][p]; }
};

// Tot_n = ⊕_{p+q=n, p <= column_bound} N_{p,q}, materialized through degree
// K+2; the default bound K+2 mirrors the coskeletal truncation rule, and a
// wider bound supports the stability cross-runs
inline Totalization totalize(const DoubleComplex& dc, int K, int column_bound = -1) {
  if (column_bound < 0) column_bound = K + 2;
  require(column_bound >= K + 2, errc::input, "column bound below the truncation rule");
  require(dc.P >= column_bound && dc.Q >= K + 1, errc::input,
          "double complex not generated for the requested degree");
  Totalization tot;
  tot.column_bound = column_bound;
  int top = K + 2;
  tot.complex.ranks.resize(top + 1, 0);
  tot.complex.bnd.resize(top + 1);
  tot.block_off.assign(top + 1, {});
  for (int n = 0; n <= top; ++n) {
    tot.block_off[n].assign(dc.P + 1, -1);
    int off = 0;
    for (int p = 0; p <= std::min({n, dc.P, tot.column_bound}); ++p) {
      int q = n - p;
      if (q > dc.Q) continue;
      tot.block_off[n][p] = off;
      off += dc.ranks[p][q];
    }
    tot.complex.ranks[n] = off;
  }
  tot.complex.bnd[0] = IntMatrix(0, tot.complex.ranks[0]);
  for (int n = 1; n <= top; ++n) {
    IntMatrix d(tot.complex.ranks[n - 1], tot.complex.ranks[n]);
    for (int p = 0; p <= std::min({n, dc.P, tot.column_bound}); ++p) {
      int q = n - p;
      if (q > dc.Q || tot.block_off[n][p] < 0) continue;
      int col_off = tot.block_off[n][p];
      if (p >= 1 && tot.block_off[n - 1][p - 1] >= 0) {
        int row_off = tot.block_off[n - 1][p - 1];
        for (auto& [r, c, v] : dc.dh[p][q].entries) d.add(row_off + r, col_off + c, v);
      }
      if (q >= 1 && tot.block_off[n - 1][p] >= 0) {
        int row_off = tot.block_off[n - 1][p];
        for (auto& [r, c, v] : dc.dv[p][q].entries) d.add(row_off + r, col_off + c, v);
      }
    }
    d.normalize();
    tot.complex.bnd[n] = std::move(d);
  }
  return tot;
}

// chain map Tot -> C(K(X)): the (0, n) block maps by the augmentation,
// all other blocks to zero
inline ChainMap augmentation_map(const DoubleComplex& dc, const Totalization& tot) {
  ChainMap f;
  f.src = &tot.complex;
  f.dst = &dc.base_chains;
  int top = tot.complex.top_degree();
  f.comp.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    IntMatrix m(dc.base_chains.rank(n), tot.complex.rank(n));
    if (n <= dc.Q && tot.block_off[n][0] >= 0) {
      int off = tot.block_off[n][0];
      for (auto& [r, c, v] : dc.aug[n].entries) m.add(r, off + c, v);
    }
    m.normalize();
    f.comp[n] = std::move(m);
  }
  return f;
}

// ---------------------------------------------------------------------------
// pi0 comparison: coequalizer of pi0(U_1) ⇉ pi0(U_0) against pi0(X)

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

inline bool pi0_compare(const cech::SimplicialSpaceOverX& h) {
  const space::FiniteSpace& x = *h.base;
  // components of the level-0 total space
  std::vector<std::vector<int>> comp0(h.levels[0].size());
  std::vector<int> offset0(h.levels[0].size() + 1, 0);
  int total0 = 0;
  for (int s = 0; s < h.levels[0].size(); ++s) {
    comp0[s] = x.components_within(h.carrier(0, s));
    int mx = -1;
    for (int v : comp0[s]) mx = std::max(mx, v);
    offset0[s] = total0;
    total0 += mx + 1;
  }
  offset0[h.levels[0].size()] = total0;
  detail::UnionFind uf(total0);
  for (int t = 0; t < h.levels[1].size(); ++t) {
    auto comps = x.components_within(h.carrier(1, t));
    int n = -1;
    for (int v : comps) n = std::max(n, v);
    for (int c = 0; c <= n; ++c) {
      int rep = -1;
      for (int p = 0; p < x.size(); ++p)
        if (comps[p] == c) {
          rep = p;
          break;
        }
      int s0 = h.face(1, 0, t), s1 = h.face(1, 1, t);
      uf.unite(offset0[s0] + comp0[s0][rep], offset0[s1] + comp0[s1][rep]);
    }
  }
  // induced map to components of X must be a bijection
  auto xcomp = x.components();
  int xcount = 0;
  for (int v : xcomp) xcount = std::max(xcount, v);
  ++xcount;
  std::vector<int> image(total0, -1);
  for (int s = 0; s < h.levels[0].size(); ++s)
    for (int p = 0; p < x.size(); ++p)
      if (comp0[s][p] >= 0) image[offset0[s] + comp0[s][p]] = xcomp[p];
  std::vector<int> hit(xcount, 0);
  std::map<int, int> klass;
  for (int c = 0; c < total0; ++c) {
    int root = uf.find(c);
    if (!klass.count(root)) {
      klass[root] = image[c];
      require(image[c] >= 0, errc::internal, "component without image");
      if (++hit[image[c]] > 1) return false;  // not injective
    } else {
      require(klass[root] == image[c], errc::internal, "coequalizer image inconsistent");
    }
  }
  for (int v : hit)
    if (v != 1) return false;  // not surjective
  return true;
}

inline bool pi0_compare(const cech::SimplicialFiniteSpace& s) {
  auto comp0 = s.levels[0]->components();
  int n0 = 0;
  for (int v : comp0) n0 = std::max(n0, v);
  ++n0;
  detail::UnionFind uf(n0);
  auto comp1 = s.levels[1]->components();
  int n1 = -1;
  for (int v : comp1) n1 = std::max(n1, v);
  ++n1;
  for (int c = 0; c < n1; ++c) {
    int rep = -1;
    for (int p = 0; p < s.levels[1]->size(); ++p)
      if (comp1[p] == c) {
        rep = p;
        break;
      }
    uf.unite(comp0[s.faces[1][0][rep]], comp0[s.faces[1][1][rep]]);
  }
  auto xcomp = s.base->components();
  int xcount = 0;
  for (int v : xcomp) xcount = std::max(xcount, v);
  ++xcount;
  std::vector<int> image(n0, -1);
  for (int p = 0; p < s.levels[0]->size(); ++p) image[comp0[p]] = xcomp[s.aug[p]];
  std::vector<int> hit(xcount, 0);
  std::map<int, int> klass;
  for (int c = 0; c < n0; ++c) {
    int root = uf.find(c);
    if (!klass.count(root)) {
      klass[root] = image[c];
      if (++hit[image[c]] > 1) return false;
    }
  }
  for (int v : hit)
    if (v != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// bisimplicial set of a simplicial space over X (all summands, weak chains)
// for the Eilenberg-Zilber cross-check against the materialized diagonal

inline sset::RawBiLevels bisimplicial_set(const cech::SimplicialSpaceOverX& h, int cap) {
  require(cap <= h.cap(), errc::input, "bisimplicial set needs levels through the cap");
  const space::FiniteSpace& x = *h.base;
  std::vector<int> lin = x.linear_extension();
  // weak chains of X of length q+1 (monotone tuples in extension order)
  std::vector<std::vector<std::vector<int>>> weak(cap + 1);  // [q] -> chains as point lists
  std::vector<std::map<std::vector<int>, int>> weak_idx(cap + 1);
  {
    std::vector<std::vector<int>> cur = {{}};
    for (int q = 0; q <= cap; ++q) {
      std::vector<std::vector<int>> next;
      if (q == 0) {
        for (int i = 0; i < x.size(); ++i) next.push_back({lin[i]});
      } else {
        for (auto& ch : weak[q - 1])
          for (int p = 0; p < x.size(); ++p)
            if (x.leq(ch.back(), p)) {
              auto e = ch;
              e.push_back(p);
              next.push_back(std::move(e));
            }
      }
      weak[q] = std::move(next);
      for (size_t i = 0; i < weak[q].size(); ++i) weak_idx[q][weak[q][i]] = static_cast<int>(i);
    }
  }
  auto chain_in = [&](int q, int idx, const Bitset& carrier) {
    for (int p : weak[q][idx])
      if (!carrier.test(p)) return false;
    return true;
  };
  // cells (p,q): pairs (summand, weak chain index); indexed per summand block
  sset::RawBiLevels w;
  w.pmax = w.qmax = cap;
  w.sizes.assign(cap + 1, std::vector<int>(cap + 1, 0));
  std::vector<std::vector<std::vector<std::pair<int, int>>>> cells(cap + 1);
  std::vector<std::vector<std::map<std::pair<int, int>, int>>> cell_idx(cap + 1);
  for (int p = 0; p <= cap; ++p) {
    cells[p].resize(cap + 1);
    cell_idx[p].resize(cap + 1);
    for (int q = 0; q <= cap; ++q) {
      for (int s = 0; s < h.levels[p].size(); ++s)
        for (size_t c = 0; c < weak[q].size(); ++c)
          if (chain_in(q, static_cast<int>(c), h.carrier(p, s))) {
            cell_idx[p][q][{s, static_cast<int>(c)}] = static_cast<int>(cells[p][q].size());
            cells[p][q].emplace_back(s, static_cast<int>(c));
          }
      w.sizes[p][q] = static_cast<int>(cells[p][q].size());
    }
  }
  w.hface.assign(cap + 1, {});
  w.vface.assign(cap + 1, {});
  w.hdeg.assign(cap + 1, {});
  w.vdeg.assign(cap + 1, {});
  for (int p = 0; p <= cap; ++p) {
    w.hface[p].resize(cap + 1);
    w.vface[p].resize(cap + 1);
    w.hdeg[p].resize(cap + 1);
    w.vdeg[p].resize(cap + 1);
    for (int q = 0; q <= cap; ++q) {
      if (p >= 1) {
        w.hface[p][q].assign(p + 1, std::vector<int>(w.sizes[p][q]));
        for (int i = 0; i <= p; ++i)
          for (int t = 0; t < w.sizes[p][q]; ++t) {
            auto [s, c] = cells[p][q][t];
            w.hface[p][q][i][t] = cell_idx[p - 1][q].at({h.face(p, i, s), c});
          }
      }
      if (q >= 1) {
        w.vface[p][q].assign(q + 1, std::vector<int>(w.sizes[p][q]));
        for (int i = 0; i <= q; ++i)
          for (int t = 0; t < w.sizes[p][q]; ++t) {
            auto [s, c] = cells[p][q][t];
            std::vector<int> ch = weak[q][c];
            ch.erase(ch.begin() + i);
            w.vface[p][q][i][t] = cell_idx[p][q - 1].at({s, weak_idx[q - 1].at(ch)});
          }
      }
      if (p < cap) {
        w.hdeg[p][q].assign(p + 1, std::vector<int>(w.sizes[p][q]));
        for (int i = 0; i <= p; ++i)
          for (int t = 0; t < w.sizes[p][q]; ++t) {
            auto [s, c] = cells[p][q][t];
            w.hdeg[p][q][i][t] = cell_idx[p + 1][q].at({h.degen(p, i, s), c});
          }
      }
      if (q < cap) {
        w.vdeg[p][q].assign(q + 1, std::vector<int>(w.sizes[p][q]));
        for (int i = 0; i <= q; ++i)
          for (int t = 0; t < w.sizes[p][q]; ++t) {
            auto [s, c] = cells[p][q][t];
            std::vector<int> ch = weak[q][c];
            ch.insert(ch.begin() + i, ch[i]);
            w.vdeg[p][q][i][t] = cell_idx[p][q + 1].at({s, weak_idx[q + 1].at(ch)});
          }
      }
    }
  }
  return w;
}

// total number of diagonal cells through the given dimension (the guard for
// the Eilenberg-Zilber cross-check)
inline long long diagonal_cell_count(const sset::RawBiLevels& w, int up_to) {
  long long n = 0;
  for (int d = 0; d <= up_to; ++d) n += w.sizes[d][d];
  return n;
}

// ---------------------------------------------------------------------------
// chain contraction induced by an extra degeneracy: verifies that
// h = s_{-1} contracts the augmented total complex, blockwise:
//   dh_{p+1} h_p + h_{p-1} dh_p = id   (horizontal contraction)
//   dv_{p+1} h_p + h_p dv_p = 0        (h anticommutes with the signed dv)
// with the (-1)-column given by the base chains and the augmentation.

inline bool contraction_check(const homology::DoubleComplex& dc, const cech::SimplicialSpaceOverX& h,
                              const cech::ExtraDegeneracy& ed) {
  // h_{p,q} : N_{p,q} -> N_{p+1,q} prepends the full-space label
  std::vector<std::vector<int>> summand_of_slot(dc.P + 1);
  for (int p = 0; p <= dc.P; ++p) {
    summand_of_slot[p].resize(dc.nd_counts[p]);
    for (int raw = 0; raw < h.levels[p].size(); ++raw)
      if (dc.slot_of_summand[p][raw] >= 0) summand_of_slot[p][dc.slot_of_summand[p][raw]] = raw;
  }
  std::vector<std::vector<IntMatrix>> hm(dc.P, std::vector<IntMatrix>(dc.Q + 1));
  for (int p = 0; p + 1 <= dc.P; ++p)
    for (int q = 0; q <= dc.Q; ++q) {
      IntMatrix m(dc.ranks[p + 1][q], dc.ranks[p][q]);
      for (int j = 0; j < dc.ranks[p][q]; ++j) {
        auto [slot, f] = dc.basis[p][q][j];
        int target = ed.s_minus1[p][summand_of_slot[p][slot]];
        int tslot = dc.slot_of_summand[p + 1][target];
        if (tslot >= 0) m.add(dc.basis_pos[p + 1][q].at({tslot, f}), j, 1);
      }
      m.normalize();
      hm[p][q] = std::move(m);
    }
  // (-1)-column: base chains map into column 0 through the witness summand
  std::vector<IntMatrix> h_base(dc.Q + 1);
  for (int q = 0; q <= dc.Q; ++q) {
    int slot = dc.slot_of_summand[0][ed.base_summand];
    require(slot >= 0, errc::internal, "full-space summand is degenerate");
    IntMatrix m(dc.ranks[0][q], dc.base_chains.rank(q));
    for (int f = 0; f < dc.base_chains.rank(q); ++f) m.add(dc.basis_pos[0][q].at({slot, f}), f, 1);
    h_base[q] = std::move(m);
  }
  auto is_identity = [](const BigMatrix& m) {
    if (m.rows != m.cols) return false;
    for (int i = 0; i < m.rows; ++i) {
      if (!(m.at(i, i) == BigInt(1))) return false;
      if (static_cast<int>(m.row[i].size()) != 1) return false;
    }
    return true;
  };
  auto add_into = [](BigMatrix& acc, const BigMatrix& t) {
    for (int i = 0; i < t.rows; ++i)
      for (auto& [j, v] : t.row[i]) {
        BigInt& slot = acc.row[i][j];
        slot += v;
        if (slot.is_zero()) acc.row[i].erase(j);
      }
  };
  for (int p = 0; p + 1 <= dc.P; ++p)
    for (int q = 0; q <= dc.Q; ++q) {
      BigMatrix acc = BigMatrix::from(dc.dh[p + 1][q]) * BigMatrix::from(hm[p][q]);
      if (p >= 1)
        add_into(acc, BigMatrix::from(hm[p - 1][q]) * BigMatrix::from(dc.dh[p][q]));
      else
        add_into(acc, BigMatrix::from(h_base[q]) * BigMatrix::from(dc.aug[q]));
      if (!is_identity(acc)) return false;
      if (q >= 1 && p + 1 <= dc.P) {
        BigMatrix zero = BigMatrix::from(dc.dv[p + 1][q]) * BigMatrix::from(hm[p][q]);
        add_into(zero, BigMatrix::from(hm[p][q - 1]) * BigMatrix::from(dc.dv[p][q]));
        for (int i = 0; i < zero.rows; ++i)
          if (!zero.row[i].empty()) return false;
      }
    }
  // (-1)-column blocks: aug h_base = id and dv_0 h_base = h_base dv^{(-1)}
  for (int q = 0; q <= dc.Q; ++q) {
    if (!is_identity(BigMatrix::from(dc.aug[q]) * BigMatrix::from(h_base[q]))) return false;
    if (q >= 1) {
      BigMatrix zero = BigMatrix::from(dc.dv[0][q]) * BigMatrix::from(h_base[q]);
      // dv^{(-1)} = -∂ on base chains, and h anticommutes: dv_0 h_base + h_base (-∂) should vanish
      BigMatrix t = BigMatrix::from(h_base[q - 1]) * BigMatrix::from(dc.base_chains.boundary(q));
      for (int i = 0; i < t.rows; ++i)
        for (auto& [j, v] : t.row[i]) {
          BigInt& slot = zero.row[i][j];
          slot -= v;
          if (slot.is_zero()) zero.row[i].erase(j);
        }
      for (int i = 0; i < zero.rows; ++i)
        if (!zero.row[i].empty()) return false;
    }
  }
  return true;
}

}  // namespace hck::homology
