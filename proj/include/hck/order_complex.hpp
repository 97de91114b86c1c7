#pragma once

// Ordered simplicial complexes: a totally ordered vertex set and a family of
// faces closed under subsets, each face a strictly increasing vertex list.
// Order complexes of finite posets land here, as does barycentric
// subdivision.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hck/chain_complex.hpp"
#include "hck/core.hpp"
#include "hck/finite_space.hpp"

namespace hck::sset {

struct OrderedComplex {
  std::vector<std::string> vertex_names;
  // faces[k] = lexicographically sorted list of (k+1)-element increasing
  // vertex index vectors; closed under subsets
  std::vector<std::vector<std::vector<int>>> faces;

  int vertex_count() const { return static_cast<int>(vertex_names.size()); }
  int dimension() const { return static_cast<int>(faces.size()) - 1; }
  int face_count(int k) const { return (k < 0 || k > dimension()) ? 0 : static_cast<int>(faces[k].size()); }

  int face_index(int k, const std::vector<int>& f) const {
    auto& lvl = faces[k];
    auto it = std::lower_bound(lvl.begin(), lvl.end(), f);
    require(it != lvl.end() && *it == f, errc::internal, "face not present in complex");
    return static_cast<int>(it - lvl.begin());
  }

  void check_closure() const {
    for (int k = 1; k <= dimension(); ++k)
      for (auto& f : faces[k]) {
        require(std::is_sorted(f.begin(), f.end()) && std::adjacent_find(f.begin(), f.end()) == f.end(),
                errc::internal, "face vertices not strictly increasing");
        for (size_t i = 0; i < f.size(); ++i) {
          std::vector<int> sub = f;
          sub.erase(sub.begin() + i);
          face_index(k - 1, sub);
        }
      }
  }

  // simplicial chain complex through degree up_to (inclusive)
  homology::ChainComplex chains(int up_to) const {
    homology::ChainComplex c;
    int top = up_to;
    c.ranks.resize(top + 1, 0);
    c.bnd.resize(top + 1);
    for (int k = 0; k <= top; ++k) c.ranks[k] = face_count(k);
    c.bnd[0] = homology::IntMatrix(0, c.ranks[0]);
    for (int k = 1; k <= top; ++k) {
      homology::IntMatrix d(c.ranks[k - 1], c.ranks[k]);
      for (int j = 0; j < face_count(k); ++j) {
        const auto& f = faces[k][j];
        int sign = 1;
        for (size_t i = 0; i < f.size(); ++i) {
          std::vector<int> sub = f;
          sub.erase(sub.begin() + i);
          d.add(face_index(k - 1, sub), j, sign);
          sign = -sign;
        }
      }
      d.normalize();
      c.bnd[k] = std::move(d);
    }
    return c;
  }
};

// Order complex of a finite space: k-simplices are strict chains
// x_0 < ... < x_k, vertices renumbered along a fixed linear extension.
inline OrderedComplex order_complex(const space::FiniteSpace& s) {
  OrderedComplex oc;
  std::vector<int> lin = s.linear_extension();
  std::vector<int> pos(s.size());
  for (int i = 0; i < s.size(); ++i) pos[lin[i]] = i;
  oc.vertex_names.resize(s.size());
  for (int i = 0; i < s.size(); ++i) oc.vertex_names[pos[i]] = s.name(i);
  if (s.size() == 0) return oc;
  // grow chains dimension by dimension; a chain is stored in extension order,
  // which refines <
  oc.faces.push_back({});
  for (int v = 0; v < s.size(); ++v) oc.faces[0].push_back({v});
  while (true) {
    std::vector<std::vector<int>> next;
    for (auto& chain : oc.faces.back()) {
      int last = lin[chain.back()];
      for (int v = chain.back() + 1; v < s.size(); ++v) {
        int cand = lin[v];
        if (last != cand && s.leq(last, cand)) {
          auto ext = chain;
          ext.push_back(v);
          next.push_back(std::move(ext));
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    oc.faces.push_back(std::move(next));
  }
  return oc;
}

// Barycentric subdivision: vertices are the faces of c ordered by
// (dimension, then lexicographic on vertex lists); simplices are chains of
// proper face inclusions.
inline OrderedComplex subdivide(const OrderedComplex& c) {
  OrderedComplex sd;
  // vertex k of sd = face_list[k]
  std::vector<std::pair<int, int>> face_list;  // (dim, index)
  for (int k = 0; k <= c.dimension(); ++k)
    for (int i = 0; i < c.face_count(k); ++i) face_list.emplace_back(k, i);
  auto face_name = [&](int k, int i) {
    std::string n = "{";
    const auto& f = c.faces[k][i];
    for (size_t t = 0; t < f.size(); ++t) n += (t ? "," : "") + c.vertex_names[f[t]];
    return n + "}";
  };
  for (auto& [k, i] : face_list) sd.vertex_names.push_back(face_name(k, i));
  if (face_list.empty()) return sd;

  auto is_proper_subface = [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
    if (a.first >= b.first) return false;
    const auto& fa = c.faces[a.first][a.second];
    const auto& fb = c.faces[b.first][b.second];
    return std::includes(fb.begin(), fb.end(), fa.begin(), fa.end());
  };

  sd.faces.push_back({});
  for (size_t v = 0; v < face_list.size(); ++v) sd.faces[0].push_back({static_cast<int>(v)});
  while (true) {
    std::vector<std::vector<int>> next;
    for (auto& chain : sd.faces.back()) {
      for (size_t w = chain.back() + 1; w < face_list.size(); ++w) {
        if (is_proper_subface(face_list[chain.back()], face_list[w])) {
          auto ext = chain;
          ext.push_back(static_cast<int>(w));
          next.push_back(std::move(ext));
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    sd.faces.push_back(std::move(next));
  }
  return sd;
}

// chain map induced by a vertex map that is monotone with respect to the
// vertex orders; simplices with collapsing vertices map to zero
inline homology::ChainMap induced_chain_map(const OrderedComplex& src, const OrderedComplex& dst,
                                            const std::vector<int>& vertex_map,
                                            const homology::ChainComplex& src_chains,
                                            const homology::ChainComplex& dst_chains) {
  homology::ChainMap f;
  f.src = &src_chains;
  f.dst = &dst_chains;
  int top = src_chains.top_degree();
  f.comp.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    homology::IntMatrix m(dst_chains.rank(k), src_chains.rank(k));
    for (int j = 0; j < src.face_count(k) && j < src_chains.rank(k); ++j) {
      std::vector<int> img;
      for (int v : src.faces[k][j]) img.push_back(vertex_map[v]);
      bool collapse = false;
      for (size_t i = 0; i + 1 < img.size(); ++i) {
        require(img[i] <= img[i + 1], errc::internal, "vertex map not monotone on a simplex");
        if (img[i] == img[i + 1]) collapse = true;
      }
      if (!collapse) m.add(dst.face_index(k, img), j, 1);
    }
    m.normalize();
    f.comp[k] = std::move(m);
  }
  return f;
}

}  // namespace hck::sset
