#pragma once

// Finite-type simplicial sets in Eilenberg-Zilber normal form: every simplex
// is stored as a unique pair (nondegenerate cell, degeneracy word), the word
// being a monotone surjection. Faces of arbitrary simplices are computed
// through the epi-mono factorization calculus, so simplicial identities are
// theorems of the representation; the contentful coherence lives in the
// stored faces of nondegenerate cells and is checked explicitly.
//
// Level generation is always capped by an explicit caller-supplied dimension;
// no operation generates unbounded levels.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hck/chain_complex.hpp"
#include "hck/core.hpp"
#include "hck/order_complex.hpp"

namespace hck::sset {

// ---------------------------------------------------------------------------
// monotone maps between finite ordinals [m] = {0, ..., m}

struct Monotone {
  int src = -1, dst = -1;   // dimensions: map [src] -> [dst]
  std::vector<int> values;  // size src+1, weakly increasing

  static Monotone identity(int n) {
    Monotone m;
    m.src = m.dst = n;
    m.values.resize(n + 1);
    for (int i = 0; i <= n; ++i) m.values[i] = i;
    return m;
  }
  // δ_i : [n-1] -> [n], skips i
  static Monotone face(int n, int i) {
    Monotone m;
    m.src = n - 1;
    m.dst = n;
    for (int v = 0; v <= n; ++v)
      if (v != i) m.values.push_back(v);
    return m;
  }
  // σ_i : [n+1] -> [n], hits i twice
  static Monotone degeneracy(int n, int i) {
    Monotone m;
    m.src = n + 1;
    m.dst = n;
    for (int v = 0; v <= n + 1; ++v) m.values.push_back(v <= i ? v : v - 1);
    return m;
  }

  bool is_identity() const { return src == dst && is_surjective() && is_injective(); }
  bool is_surjective() const {
    if (values.empty()) return dst < 0;
    if (values.front() != 0 || values.back() != dst) return false;
    for (size_t i = 0; i + 1 < values.size(); ++i)
      if (values[i + 1] - values[i] > 1) return false;
    return true;
  }
  bool is_injective() const {
    for (size_t i = 0; i + 1 < values.size(); ++i)
      if (values[i + 1] == values[i]) return false;
    return true;
  }
  int operator()(int i) const { return values[i]; }
  bool operator==(const Monotone& o) const { return src == o.src && dst == o.dst && values == o.values; }
  bool operator<(const Monotone& o) const {
    return std::tie(src, dst, values) < std::tie(o.src, o.dst, o.values);
  }

  // surjections encoded canonically by their hit-twice positions:
  // positions i with f(i) = f(i+1)
  std::vector<int> hit_twice_positions() const {
    std::vector<int> out;
    for (size_t i = 0; i + 1 < values.size(); ++i)
      if (values[i] == values[i + 1]) out.push_back(static_cast<int>(i));
    return out;
  }
};

// f ∘ g
inline Monotone compose(const Monotone& f, const Monotone& g) {
  require(g.dst == f.src, errc::internal, "monotone maps not composable");
  Monotone r;
  r.src = g.src;
  r.dst = f.dst;
  for (int v : g.values) r.values.push_back(f.values[v]);
  return r;
}

// unique factorization f = inj ∘ surj
inline std::pair<Monotone, Monotone> epi_mono(const Monotone& f) {
  std::vector<int> image;
  for (int v : f.values)
    if (image.empty() || image.back() != v) image.push_back(v);
  Monotone inj;
  inj.src = static_cast<int>(image.size()) - 1;
  inj.dst = f.dst;
  inj.values = image;
  Monotone surj;
  surj.src = f.src;
  surj.dst = inj.src;
  for (int v : f.values)
    surj.values.push_back(static_cast<int>(std::lower_bound(image.begin(), image.end(), v) - image.begin()));
  return {surj, inj};
}

// all monotone surjections [k] ->> [n], sorted by their value vectors so
// enumeration order and binary search agree
inline std::vector<Monotone> surjections(int k, int n) {
  std::vector<Monotone> out;
  if (n > k || n < 0) return out;
  std::vector<int> comb(k - n);
  // combinations of {0..k-1} of size k-n in lex order
  std::function<void(int, int)> rec = [&](int start, int picked) {
    if (picked == k - n) {
      Monotone m;
      m.src = k;
      m.dst = n;
      m.values.resize(k + 1);
      int v = 0;
      size_t c = 0;
      for (int i = 0; i <= k; ++i) {
        m.values[i] = v;
        bool flat = c < comb.size() && comb[c] == i;
        if (flat)
          ++c;
        else
          ++v;
      }
      out.push_back(std::move(m));
      return;
    }
    for (int i = start; i < k; ++i) {
      comb[picked] = i;
      rec(i + 1, picked + 1);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// simplicial sets

struct Cell {
  int dim = -1;
  int index = -1;
  bool operator==(const Cell& o) const { return dim == o.dim && index == o.index; }
  bool operator<(const Cell& o) const { return std::tie(dim, index) < std::tie(o.dim, o.index); }
};

struct Simplex {
  Cell cell;
  Monotone eta;  // surjection [dim] ->> [cell.dim]
  int dim() const { return eta.src; }
  bool degenerate() const { return dim() != cell.dim; }
  bool operator==(const Simplex& o) const { return cell == o.cell && eta == o.eta; }
  bool operator<(const Simplex& o) const { return std::tie(cell, eta) < std::tie(o.cell, o.eta); }
};

// generation bound for complexes that are known in all dimensions (finite
// complexes, nerves of finite posets, skeleta)
constexpr int kFullyGenerated = 1 << 20;

class SSet {
public:
  // cells stored through max_dim; the cell list is complete through gen_dim
  // (nondegenerate cells above max_dim and at most gen_dim do not exist)
  int max_dim = -1;
  int gen_dim = -1;
  std::vector<std::vector<std::string>> cell_names;          // per dim
  std::vector<std::vector<std::vector<Simplex>>> cell_faces; // per dim >= 1

  int cells(int d) const {
    return (d < 0 || d > max_dim) ? 0 : static_cast<int>(cell_names[d].size());
  }
  bool generated_through(int n) const { return n <= gen_dim; }
  Simplex cell_simplex(int d, int i) const { return Simplex{Cell{d, i}, Monotone::identity(d)}; }

  const Simplex& stored_face(const Cell& c, int i) const { return cell_faces[c.dim][c.index][i]; }

  // s · α : precompose with an arbitrary monotone map α : [a] -> [s.dim]
  Simplex apply(const Simplex& s, const Monotone& alpha) const {
    require(alpha.dst == s.dim(), errc::internal, "monotone map does not match simplex dimension");
    Monotone m = compose(s.eta, alpha);
    auto [surj, inj] = epi_mono(m);
    Simplex t = face_along(s.cell, inj);
    return Simplex{t.cell, compose(t.eta, surj)};
  }

  Simplex face(const Simplex& s, int i) const { return apply(s, Monotone::face(s.dim(), i)); }
  Simplex degeneracy(const Simplex& s, int i) const { return apply(s, Monotone::degeneracy(s.dim(), i)); }

  // number of n-simplices (degenerate included)
  long long level_count(int n) const {
    require(generated_through(n), errc::internal, "level requested beyond generated range");
    long long total = 0;
    for (int d = 0; d <= std::min(n, max_dim); ++d)
      total += static_cast<long long>(cells(d)) * static_cast<long long>(surjections(n, d).size());
    return total;
  }

  // deterministic enumeration of all n-simplices: cell dim asc, cell index
  // asc, surjection lex
  std::vector<Simplex> level(int n) const {
    require(generated_through(n), errc::internal, "level requested beyond generated range");
    std::vector<Simplex> out;
    for (int d = 0; d <= std::min(n, max_dim); ++d) {
      auto surj = surjections(n, d);
      for (int c = 0; c < cells(d); ++c)
        for (auto& s : surj) out.push_back(Simplex{Cell{d, c}, s});
    }
    return out;
  }
  int level_index(int n, const Simplex& s) const {
    long long idx = 0;
    for (int d = 0; d < s.cell.dim; ++d)
      idx += static_cast<long long>(cells(d)) * static_cast<long long>(surjections(n, d).size());
    auto surj = surjections(n, s.cell.dim);
    auto it = std::lower_bound(surj.begin(), surj.end(), s.eta);
    require(it != surj.end() && *it == s.eta, errc::internal, "surjection not found");
    idx += static_cast<long long>(s.cell.index) * static_cast<long long>(surj.size()) + (it - surj.begin());
    return static_cast<int>(idx);
  }

  // d_i d_j = d_{j-1} d_i on stored faces; degeneracy identities spot-checked
  // through the generated range
  void check_identities() const {
    for (int n = 2; n <= max_dim; ++n)
      for (int c = 0; c < cells(n); ++c) {
        Simplex s = cell_simplex(n, c);
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            require(face(face(s, j), i) == face(face(s, i), j - 1), errc::internal,
                    "simplicial identity d_i d_j failed on cell " + cell_names[n][c]);
      }
    for (int n = 0; n < max_dim; ++n)
      for (int c = 0; c < cells(n); ++c) {
        Simplex s = cell_simplex(n, c);
        for (int i = 0; i <= n; ++i) {
          Simplex si = degeneracy(s, i);
          require(face(si, i) == s && face(si, i + 1) == s, errc::internal, "degeneracy identity failed");
        }
      }
  }

  // normalized chains: free on nondegenerate cells, faces with nontrivial
  // degeneracy word contribute zero
  homology::ChainComplex normalized_chains(int up_to) const {
    require(generated_through(up_to), errc::internal, "chains requested beyond generated range");
    homology::ChainComplex c;
    c.ranks.assign(up_to + 1, 0);
    c.bnd.resize(up_to + 1);
    for (int k = 0; k <= std::min(up_to, max_dim); ++k) c.ranks[k] = cells(k);
    c.bnd[0] = homology::IntMatrix(0, c.rank(0));
    for (int k = 1; k <= up_to; ++k) {
      homology::IntMatrix d(c.rank(k - 1), c.rank(k));
      for (int j = 0; j < c.rank(k); ++j) {
        int sign = 1;
        for (int i = 0; i <= k; ++i) {
          const Simplex& f = cell_faces[k][j][i];
          if (!f.degenerate()) d.add(f.cell.index, j, sign);
          sign = -sign;
        }
      }
      d.normalize();
      c.bnd[k] = std::move(d);
    }
    return c;
  }

  // debug dump: one line per nondegenerate cell `dim id : face0 face1 ...`
  // with faces printed as `id.σ`
  std::string dump() const {
    std::string out;
    for (int d = 0; d <= max_dim; ++d)
      for (int c = 0; c < cells(d); ++c) {
        out += std::to_string(d) + " " + cell_names[d][c] + " :";
        if (d > 0)
          for (int i = 0; i <= d; ++i) {
            const Simplex& f = cell_faces[d][c][i];
            out += " " + cell_names[f.cell.dim][f.cell.index] + ".";
            auto ht = f.eta.hit_twice_positions();
            if (ht.empty())
              out += "id";
            else
              for (size_t t = 0; t < ht.size(); ++t) out += (t ? "," : "s") + std::to_string(ht[t]);
          }
        out += "\n";
      }
    return out;
  }

private:
  Simplex face_along(const Cell& c, const Monotone& inj) const {
    if (inj.src == inj.dst) return Simplex{c, Monotone::identity(c.dim)};
    // largest skipped value j: inj = δ_j ∘ inj'
    int j = inj.dst;
    {
      std::vector<bool> hit(inj.dst + 1, false);
      for (int v : inj.values) hit[v] = true;
      while (hit[j]) --j;
    }
    Monotone rest;
    rest.src = inj.src;
    rest.dst = inj.dst - 1;
    for (int v : inj.values) rest.values.push_back(v > j ? v - 1 : v);
    const Simplex& dj = stored_face(c, j);
    return apply_free(dj, rest);
  }
  // apply for use inside face_along (identical to apply; avoids accidental
  // infinite recursion through a virtual-free path)
  Simplex apply_free(const Simplex& s, const Monotone& alpha) const {
    Monotone m = compose(s.eta, alpha);
    auto [surj, inj] = epi_mono(m);
    Simplex t = face_along(s.cell, inj);
    return Simplex{t.cell, compose(t.eta, surj)};
  }
};

// ---------------------------------------------------------------------------
// standard complexes

// Δ^n through dimension n: cells of dim d = (d+1)-subsets of {0..n}, lex order
inline SSet simplex_sset(int n) {
  SSet s;
  s.max_dim = n;
  s.gen_dim = kFullyGenerated;
  s.cell_names.resize(n + 1);
  s.cell_faces.resize(n + 1);
  std::vector<std::vector<std::vector<int>>> subsets(n + 1);
  for (int d = 0; d <= n; ++d) {
    std::vector<int> cur(d + 1);
    std::function<void(int, int)> rec = [&](int start, int picked) {
      if (picked == d + 1) {
        subsets[d].push_back(cur);
        return;
      }
      for (int v = start; v <= n; ++v) {
        cur[picked] = v;
        rec(v + 1, picked + 1);
      }
    };
    rec(0, 0);
  }
  auto find_cell = [&](int d, const std::vector<int>& f) {
    auto it = std::lower_bound(subsets[d].begin(), subsets[d].end(), f);
    return static_cast<int>(it - subsets[d].begin());
  };
  for (int d = 0; d <= n; ++d) {
    for (auto& f : subsets[d]) {
      std::string nm;
      for (int v : f) nm += (nm.empty() ? "" : ".") + std::to_string(v);
      s.cell_names[d].push_back(nm);
    }
    if (d == 0) continue;
    s.cell_faces[d].resize(subsets[d].size());
    for (size_t c = 0; c < subsets[d].size(); ++c) {
      for (int i = 0; i <= d; ++i) {
        std::vector<int> sub = subsets[d][c];
        sub.erase(sub.begin() + i);
        s.cell_faces[d][c].push_back(Simplex{Cell{d - 1, find_cell(d - 1, sub)}, Monotone::identity(d - 1)});
      }
    }
  }
  return s;
}

inline SSet skeleton(const SSet& s, int m) {
  require(s.generated_through(m), errc::internal, "skeleton cut above generated range");
  SSet r = s;
  if (m < -1) m = -1;
  r.max_dim = std::min(s.max_dim, m);
  r.gen_dim = kFullyGenerated;  // a skeleton has no cells above the cut
  r.cell_names.resize(std::max(r.max_dim + 1, 0));
  r.cell_faces.resize(std::max(r.max_dim + 1, 0));
  return r;
}

// ∂Δ^n = all proper subsets of {0..n}
inline SSet boundary_sset(int n) { return skeleton(simplex_sset(n), n - 1); }

// nerve of a finite poset through dimension cap: nondegenerate cells are
// strict chains; shares cell ordering with the order complex
inline SSet nerve(const space::FiniteSpace& poset, int cap) {
  OrderedComplex oc = order_complex(poset);
  SSet s;
  s.max_dim = std::min(cap, oc.dimension());
  s.gen_dim = cap >= oc.dimension() ? kFullyGenerated : cap;
  s.cell_names.resize(s.max_dim + 1);
  s.cell_faces.resize(s.max_dim + 1);
  for (int d = 0; d <= s.max_dim; ++d) {
    for (auto& f : oc.faces[d]) {
      std::string nm;
      for (int v : f) nm += (nm.empty() ? "" : "<") + oc.vertex_names[v];
      s.cell_names[d].push_back(nm);
    }
    if (d == 0) continue;
    s.cell_faces[d].resize(oc.face_count(d));
    for (int c = 0; c < oc.face_count(d); ++c)
      for (int i = 0; i <= d; ++i) {
        std::vector<int> sub = oc.faces[d][c];
        sub.erase(sub.begin() + i);
        s.cell_faces[d][c].push_back(Simplex{Cell{d - 1, oc.face_index(d - 1, sub)}, Monotone::identity(d - 1)});
      }
  }
  return s;
}

// ---------------------------------------------------------------------------
// raw levelwise presentations and normalization

struct RawLevels {
  std::vector<int> sizes;                           // sizes[n], n = 0..top
  std::vector<std::vector<std::vector<int>>> face;  // face[n][i][x], n >= 1
  std::vector<std::vector<std::vector<int>>> degen; // degen[n][i][x], n < top

  int top() const { return static_cast<int>(sizes.size()) - 1; }

  void check_identities() const {
    for (int n = 2; n <= top(); ++n)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          for (int x = 0; x < sizes[n]; ++x)
            require(face[n - 1][i][face[n][j][x]] == face[n - 1][j - 1][face[n][i][x]], errc::internal,
                    "raw face identity failed");
    for (int n = 0; n + 1 <= top(); ++n)
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < sizes[n]; ++x) {
          int sx = degen[n][i][x];
          require(face[n + 1][i][sx] == x && face[n + 1][i + 1][sx] == x, errc::internal,
                  "raw degeneracy identity failed");
        }
  }
};

struct Normalized {
  SSet sset;
  std::vector<std::vector<Simplex>> of_raw;  // of_raw[n][x] = normal form of raw element
};

// Eilenberg-Zilber normalization of a raw levelwise presentation: bottom-up,
// an element is degenerate iff it is some s_i(y), and then inherits y's
// normal form composed with σ_i.
inline Normalized normalize(const RawLevels& raw, std::vector<std::vector<std::string>> names = {}) {
  Normalized out;
  SSet& s = out.sset;
  s.max_dim = raw.top();
  s.gen_dim = raw.top();
  s.cell_names.resize(raw.top() + 1);
  s.cell_faces.resize(raw.top() + 1);
  out.of_raw.resize(raw.top() + 1);
  for (int n = 0; n <= raw.top(); ++n) {
    out.of_raw[n].resize(raw.sizes[n]);
    std::vector<bool> degenerate(raw.sizes[n], false);
    std::vector<std::pair<int, int>> via(raw.sizes[n], {-1, -1});  // (i, y)
    if (n >= 1)
      for (int i = 0; i <= n - 1; ++i)
        for (int y = 0; y < raw.sizes[n - 1]; ++y) {
          int x = raw.degen[n - 1][i][y];
          if (!degenerate[x]) {
            degenerate[x] = true;
            via[x] = {i, y};
          }
        }
    for (int x = 0; x < raw.sizes[n]; ++x) {
      if (degenerate[x]) continue;
      int idx = static_cast<int>(s.cell_names[n].size());
      std::string nm = (!names.empty() && n < static_cast<int>(names.size()) && x < static_cast<int>(names[n].size()))
                           ? names[n][x]
                           : ("c" + std::to_string(n) + "_" + std::to_string(x));
      s.cell_names[n].push_back(nm);
      if (n >= 1) {
        std::vector<Simplex> fs;
        for (int i = 0; i <= n; ++i) fs.push_back(out.of_raw[n - 1][raw.face[n][i][x]]);
        s.cell_faces[n].resize(s.cell_names[n].size());
        s.cell_faces[n][idx] = std::move(fs);
      }
      out.of_raw[n][x] = Simplex{Cell{n, idx}, Monotone::identity(n)};
    }
    for (int x = 0; x < raw.sizes[n]; ++x) {
      if (!degenerate[x]) continue;
      auto [i, y] = via[x];
      const Simplex& base = out.of_raw[n - 1][y];
      out.of_raw[n][x] = Simplex{base.cell, compose(base.eta, Monotone::degeneracy(n - 1, i))};
    }
  }
  return out;
}

// raw view of an SSet through dimension cap (used to assemble products)
inline RawLevels raw_view(const SSet& s, int cap) {
  require(s.generated_through(cap), errc::internal, "raw view beyond generated range");
  RawLevels raw;
  raw.sizes.resize(cap + 1);
  raw.face.resize(cap + 1);
  raw.degen.resize(cap + 1);
  std::vector<std::vector<Simplex>> lvl(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    lvl[n] = s.level(n);
    raw.sizes[n] = static_cast<int>(lvl[n].size());
  }
  for (int n = 1; n <= cap; ++n) {
    raw.face[n].assign(n + 1, std::vector<int>(raw.sizes[n]));
    for (int x = 0; x < raw.sizes[n]; ++x)
      for (int i = 0; i <= n; ++i) raw.face[n][i][x] = s.level_index(n - 1, s.face(lvl[n][x], i));
  }
  for (int n = 0; n < cap; ++n) {
    raw.degen[n].assign(n + 1, std::vector<int>(raw.sizes[n]));
    for (int x = 0; x < raw.sizes[n]; ++x)
      for (int i = 0; i <= n; ++i) raw.degen[n][i][x] = s.level_index(n + 1, s.degeneracy(lvl[n][x], i));
  }
  return raw;
}

// ---------------------------------------------------------------------------
// simplicial maps between finite simplicial sets

struct SMap {
  const SSet* src = nullptr;
  const SSet* dst = nullptr;
  std::vector<std::vector<Simplex>> image;  // image[n][cell index]

  Simplex apply_to(const Simplex& s) const { return dst->apply(image[s.cell.dim][s.cell.index], s.eta); }

  bool valid() const {
    for (int n = 1; n <= src->max_dim; ++n)
      for (int c = 0; c < src->cells(n); ++c)
        for (int i = 0; i <= n; ++i)
          if (!(dst->face(image[n][c], i) == apply_to(src->stored_face(Cell{n, c}, i)))) return false;
    return true;
  }

  std::string key() const {
    std::string k;
    for (auto& lvl : image)
      for (auto& s : lvl) {
        k += std::to_string(s.cell.dim) + "." + std::to_string(s.cell.index) + "(";
        for (int v : s.eta.values) k += std::to_string(v) + ",";
        k += ");";
      }
    return k;
  }
};

// g ∘ f for f : A -> B, g : B -> C
inline SMap compose(const SMap& g, const SMap& f) {
  require(f.dst == g.src, errc::internal, "simplicial maps not composable");
  SMap r;
  r.src = f.src;
  r.dst = g.dst;
  r.image.resize(f.image.size());
  for (size_t n = 0; n < f.image.size(); ++n)
    for (auto& s : f.image[n]) r.image[n].push_back(g.apply_to(s));
  return r;
}

// all simplicial maps k -> u, enumerated by assigning nondegenerate cells of
// k in dimension order with backtracking over face constraints
inline std::vector<SMap> map_space(const SSet& k, const SSet& u) {
  require(k.gen_dim >= kFullyGenerated, errc::internal, "map space domain must be a finite complex");
  require(u.generated_through(k.max_dim), errc::internal, "target not generated through the source dimension");
  std::vector<std::pair<int, int>> order;  // (dim, cell)
  for (int d = 0; d <= k.max_dim; ++d)
    for (int c = 0; c < k.cells(d); ++c) order.emplace_back(d, c);

  std::vector<std::vector<Simplex>> levels(k.max_dim + 1);
  for (int d = 0; d <= k.max_dim; ++d) levels[d] = u.level(d);

  std::vector<SMap> out;
  SMap cur;
  cur.src = &k;
  cur.dst = &u;
  cur.image.resize(k.max_dim + 1);
  for (int d = 0; d <= k.max_dim; ++d) cur.image[d].resize(k.cells(d));

  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == order.size()) {
      out.push_back(cur);
      return;
    }
    auto [d, c] = order[pos];
    for (const Simplex& cand : levels[d]) {
      bool ok = true;
      for (int i = 0; i <= d && ok; ++i) {
        if (d == 0) break;
        ok = u.face(cand, i) == cur.apply_to(k.stored_face(Cell{d, c}, i));
      }
      if (!ok) continue;
      cur.image[d][c] = cand;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

// simplicial map Δ^a -> Δ^b (or their skeleta) induced by a monotone
// α : [a] -> [b]; cells are vertex subsets
inline SMap standard_induced(const Monotone& alpha, const SSet& src_std, const SSet& dst_std) {
  SMap m;
  m.src = &src_std;
  m.dst = &dst_std;
  m.image.resize(src_std.max_dim + 1);
  for (int d = 0; d <= src_std.max_dim; ++d) {
    m.image[d].resize(src_std.cells(d));
    for (int c = 0; c < src_std.cells(d); ++c) {
      // parse vertex list from the cell name ("v0.v1...")
      std::vector<int> verts;
      {
        const std::string& nm = src_std.cell_names[d][c];
        int acc = 0;
        for (char ch : nm) {
          if (ch == '.') {
            verts.push_back(acc);
            acc = 0;
          } else
            acc = acc * 10 + (ch - '0');
        }
        verts.push_back(acc);
      }
      std::vector<int> img;
      for (int v : verts) img.push_back(alpha.values[v]);
      std::vector<int> uniq = img;
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      // locate target cell by name
      std::string nm;
      for (int v : uniq) nm += (nm.empty() ? "" : ".") + std::to_string(v);
      int tdim = static_cast<int>(uniq.size()) - 1;
      int tidx = -1;
      for (int t = 0; t < dst_std.cells(tdim); ++t)
        if (dst_std.cell_names[tdim][t] == nm) {
          tidx = t;
          break;
        }
      require(tidx >= 0, errc::internal, "induced standard cell not found: " + nm);
      Monotone eta;
      eta.src = d;
      eta.dst = tdim;
      for (int v : img)
        eta.values.push_back(
            static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), v) - uniq.begin()));
      m.image[d][c] = Simplex{Cell{tdim, tidx}, eta};
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// coskeleta and matching objects

// cosk_n u generated through dimension cap: level k = Map(sk_n Δ^k, u),
// structure maps by precomposition, then normalized
inline Normalized coskeleton_raw(const SSet& u, int n, int cap) {
  require(u.generated_through(n), errc::internal, "input not generated through coskeleton degree");
  std::vector<SSet> sk(cap + 2);
  for (int k = 0; k <= cap + 1; ++k) sk[k] = skeleton(simplex_sset(k), n);
  std::vector<std::vector<SMap>> maps(cap + 1);
  std::vector<std::map<std::string, int>> index(cap + 1);
  for (int k = 0; k <= cap; ++k) {
    maps[k] = map_space(sk[k], u);
    for (size_t i = 0; i < maps[k].size(); ++i) index[k][maps[k][i].key()] = static_cast<int>(i);
  }
  RawLevels raw;
  raw.sizes.resize(cap + 1);
  raw.face.resize(cap + 1);
  raw.degen.resize(cap + 1);
  for (int k = 0; k <= cap; ++k) raw.sizes[k] = static_cast<int>(maps[k].size());
  for (int k = 1; k <= cap; ++k) {
    raw.face[k].assign(k + 1, std::vector<int>(raw.sizes[k]));
    for (int i = 0; i <= k; ++i) {
      SMap ind = standard_induced(Monotone::face(k, i), sk[k - 1], sk[k]);
      for (int x = 0; x < raw.sizes[k]; ++x) {
        SMap comp_map = compose(maps[k][x], ind);
        auto it = index[k - 1].find(comp_map.key());
        require(it != index[k - 1].end(), errc::internal, "coskeleton face lookup failed");
        raw.face[k][i][x] = it->second;
      }
    }
  }
  for (int k = 0; k < cap; ++k) {
    raw.degen[k].assign(k + 1, std::vector<int>(raw.sizes[k]));
    for (int i = 0; i <= k; ++i) {
      SMap ind = standard_induced(Monotone::degeneracy(k, i), sk[k + 1], sk[k]);
      for (int x = 0; x < raw.sizes[k]; ++x) {
        SMap comp_map = compose(maps[k][x], ind);
        auto it = index[k + 1].find(comp_map.key());
        require(it != index[k + 1].end(), errc::internal, "coskeleton degeneracy lookup failed");
        raw.degen[k][i][x] = it->second;
      }
    }
  }
  raw.check_identities();
  return normalize(raw);
}

inline SSet coskeleton(const SSet& u, int n, int cap) { return coskeleton_raw(u, n, cap).sset; }

// M_n u = n-th object of cosk_{n-1} u = Map(sk_{n-1} Δ^n, u); a single point
// for n = 0. The domain travels with the maps so their pointers stay valid.
struct MatchingSet {
  std::shared_ptr<SSet> domain;
  std::vector<SMap> maps;
  size_t size() const { return maps.size(); }
};

inline MatchingSet matching_sset(const SSet& u, int n) {
  MatchingSet ms;
  ms.domain = std::make_shared<SSet>(skeleton(simplex_sset(n), n - 1));
  ms.maps = map_space(*ms.domain, u);
  return ms;
}

// ---------------------------------------------------------------------------
// free-degeneracy splittings and the skeletal pushout

struct Splitting {
  std::vector<int> nondeg_counts;  // N_k
  // decomposition[k] = list of (surjection word, nondegenerate cell) covering
  // dimension-k simplices
  std::vector<std::vector<std::pair<Monotone, Cell>>> decomposition;
  std::vector<long long> level_sizes;
};

inline Splitting detect_splitting(const SSet& u, int up_to) {
  require(u.generated_through(up_to), errc::internal, "splitting requested beyond generated range");
  Splitting sp;
  for (int k = 0; k <= up_to; ++k) {
    sp.nondeg_counts.push_back(u.cells(k));
    std::vector<std::pair<Monotone, Cell>> dec;
    long long total = 0;
    for (int d = 0; d <= k; ++d) {
      auto surj = surjections(k, d);
      for (int c = 0; c < u.cells(d); ++c)
        for (auto& s : surj) {
          dec.emplace_back(s, Cell{d, c});
          ++total;
        }
    }
    sp.decomposition.push_back(std::move(dec));
    sp.level_sizes.push_back(total);
    require(total == u.level_count(k), errc::internal, "splitting bijection failed");
  }
  return sp;
}

// the honest bijection check on a raw presentation: the canonical map
// ⊔_σ N_σ -> X_k must be a bijection in every generated dimension
inline bool raw_splitting_holds(const RawLevels& raw) {
  Normalized nm = normalize(raw);
  for (int k = 0; k <= raw.top(); ++k) {
    std::map<std::string, int> hits;
    for (int x = 0; x < raw.sizes[k]; ++x) {
      const Simplex& s = nm.of_raw[k][x];
      std::string key = std::to_string(s.cell.dim) + "." + std::to_string(s.cell.index);
      for (int v : s.eta.values) key += "," + std::to_string(v);
      if (++hits[key] > 1) return false;
    }
    long long expect = 0;
    for (int d = 0; d <= k; ++d)
      expect += static_cast<long long>(nm.sset.cells(d)) * static_cast<long long>(surjections(k, d).size());
    if (expect != raw.sizes[k]) return false;
  }
  return true;
}

// Sk_n u is the pushout of Sk_{n-1} u <- N_n x ∂Δ^n -> N_n x Δ^n: verify the
// canonical comparison map is a cell-level bijection in every generated
// dimension
inline bool sk_pushout_check(const SSet& u, int n, int through) {
  for (int k = 0; k <= through; ++k) {
    std::vector<Simplex> lhs;
    for (const Simplex& s : u.level(k))
      if (s.cell.dim <= n) lhs.push_back(s);
    std::vector<Simplex> rhs;
    for (const Simplex& s : u.level(k))
      if (s.cell.dim <= n - 1) rhs.push_back(s);  // (Sk_{n-1} u)_k
    for (auto& sigma : surjections(k, n))        // attached part: N_n x (Δ^n)_k \ (∂Δ^n)_k
      for (int c = 0; c < u.cells(n); ++c) rhs.push_back(Simplex{Cell{n, c}, sigma});
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (!(lhs == rhs)) return false;
    if (std::adjacent_find(rhs.begin(), rhs.end()) != rhs.end()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// bisimplicial sets and diagonals

struct RawBiLevels {
  int pmax = -1, qmax = -1;
  std::vector<std::vector<int>> sizes;                            // [p][q]
  std::vector<std::vector<std::vector<std::vector<int>>>> hface;  // [p][q][i][x], p >= 1
  std::vector<std::vector<std::vector<std::vector<int>>>> vface;  // [p][q][i][x], q >= 1
  std::vector<std::vector<std::vector<std::vector<int>>>> hdeg;   // [p][q][i][x], p < pmax
  std::vector<std::vector<std::vector<std::vector<int>>>> vdeg;   // [p][q][i][x], q < qmax

  void check() const {
    // the two directions commute
    for (int p = 1; p <= pmax; ++p)
      for (int q = 1; q <= qmax; ++q)
        for (int i = 0; i <= p; ++i)
          for (int j = 0; j <= q; ++j)
            for (int x = 0; x < sizes[p][q]; ++x)
              require(vface[p - 1][q][j][hface[p][q][i][x]] == hface[p][q - 1][i][vface[p][q][j][x]],
                      errc::internal, "bisimplicial directions do not commute");
  }
};

// diagonal through dimension up_to; faces and degeneracies act in both
// directions simultaneously
inline Normalized diagonal_raw(const RawBiLevels& w, int up_to) {
  require(up_to <= w.pmax && up_to <= w.qmax, errc::internal, "diagonal requested beyond generated square");
  RawLevels raw;
  raw.sizes.resize(up_to + 1);
  raw.face.resize(up_to + 1);
  raw.degen.resize(up_to + 1);
  for (int n = 0; n <= up_to; ++n) raw.sizes[n] = w.sizes[n][n];
  for (int n = 1; n <= up_to; ++n) {
    raw.face[n].assign(n + 1, std::vector<int>(raw.sizes[n]));
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < raw.sizes[n]; ++x)
        raw.face[n][i][x] = w.vface[n - 1][n][i][w.hface[n][n][i][x]];
  }
  for (int n = 0; n < up_to; ++n) {
    raw.degen[n].assign(n + 1, std::vector<int>(raw.sizes[n]));
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < raw.sizes[n]; ++x)
        raw.degen[n][i][x] = w.vdeg[n + 1][n][i][w.hdeg[n][n][i][x]];
  }
  raw.check_identities();
  return normalize(raw);
}

inline SSet diagonal(const RawBiLevels& w, int up_to) { return diagonal_raw(w, up_to).sset; }

// external product of two simplicial sets as a bisimplicial set (levels are
// cartesian products; used for diagonal cross-checks)
inline RawBiLevels product_bisset(const SSet& a, const SSet& b, int cap) {
  RawLevels ra = raw_view(a, cap), rb = raw_view(b, cap);
  RawBiLevels w;
  w.pmax = w.qmax = cap;
  w.sizes.assign(cap + 1, std::vector<int>(cap + 1));
  w.hface.resize(cap + 1);
  w.vface.resize(cap + 1);
  w.hdeg.resize(cap + 1);
  w.vdeg.resize(cap + 1);
  auto id2 = [&](int q, int xa, int xb) { return xa * rb.sizes[q] + xb; };
  for (int p = 0; p <= cap; ++p) {
    w.hface[p].resize(cap + 1);
    w.vface[p].resize(cap + 1);
    w.hdeg[p].resize(cap + 1);
    w.vdeg[p].resize(cap + 1);
    for (int q = 0; q <= cap; ++q) {
      w.sizes[p][q] = ra.sizes[p] * rb.sizes[q];
      if (p >= 1) {
        w.hface[p][q].assign(p + 1, std::vector<int>(w.sizes[p][q]));
        for (int i = 0; i <= p; ++i)
          for (int xa = 0; xa < ra.sizes[p]; ++xa)
            for (int xb = 0; xb < rb.sizes[q]; ++xb)
              w.hface[p][q][i][id2(q, xa, xb)] = ra.face[p][i][xa] * rb.sizes[q] + xb;
      }
      if (q >= 1) {
        w.vface[p][q].assign(q + 1, std::vector<int>(w.sizes[p][q]));
        for (int i = 0; i <= q; ++i)
          for (int xa = 0; xa < ra.sizes[p]; ++xa)
            for (int xb = 0; xb < rb.sizes[q]; ++xb)
              w.vface[p][q][i][id2(q, xa, xb)] = xa * rb.sizes[q - 1] + rb.face[q][i][xb];
      }
      if (p < cap) {
        w.hdeg[p][q].assign(p + 1, std::vector<int>(w.sizes[p][q]));
        for (int i = 0; i <= p; ++i)
          for (int xa = 0; xa < ra.sizes[p]; ++xa)
            for (int xb = 0; xb < rb.sizes[q]; ++xb)
              w.hdeg[p][q][i][id2(q, xa, xb)] = ra.degen[p][i][xa] * rb.sizes[q] + xb;
      }
      if (q < cap) {
        w.vdeg[p][q].assign(q + 1, std::vector<int>(w.sizes[p][q]));
        for (int i = 0; i <= q; ++i)
          for (int xa = 0; xa < ra.sizes[p]; ++xa)
            for (int xb = 0; xb < rb.sizes[q]; ++xb)
              w.vdeg[p][q][i][id2(q, xa, xb)] = xa * rb.sizes[q + 1] + rb.degen[q][i][xb];
      }
    }
  }
  return w;
}

}  // namespace hck::sset
