#pragma once

// Homotopy colimits of poset-indexed diagrams of opens via simplicial
// replacement, the P_A^op and P_U diagrams of a cover, the cover category
// itself, and the homotopy-cofinality checker. The homotopy colimit is
// computed as homology of the totalized normalized double complex of the
// simplicial replacement; at chain level the naive formula is already the
// derived one.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hck/double_complex.hpp"
#include "hck/finite_space.hpp"
#include "hck/over_x.hpp"

namespace hck::hocolim {

using hck::Bitset;
using space::IndexedCover;
using space::SpacePtr;

// finite-poset-indexed diagram of opens of a common base, with inclusion
// actions; index arrows point from i to j when leq[i][j]
struct PosetDiagram {
  SpacePtr base;
  std::vector<std::string> object_names;
  std::vector<Bitset> values;               // opens of base
  std::vector<std::vector<bool>> leq;       // arrow i -> j

  int size() const { return static_cast<int>(values.size()); }

  // poset axioms and monotonicity of values along arrows (functoriality of
  // inclusions is automatic once monotone)
  void check() const {
    int n = size();
    for (int i = 0; i < n; ++i) require(leq[i][i], errc::internal, "diagram index not reflexive");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i != j)
          require(!(leq[i][j] && leq[j][i]), errc::internal, "diagram index not antisymmetric");
        for (int k = 0; k < n; ++k)
          if (leq[i][j] && leq[j][k]) require(leq[i][k], errc::internal, "diagram index not transitive");
      }
    for (int i = 0; i < n; ++i) {
      require(base->is_open(values[i]), errc::internal, "diagram value is not open");
      for (int j = 0; j < n; ++j)
        if (leq[i][j]) require(values[i].subset_of(values[j]), errc::internal, "diagram action is not an inclusion");
    }
  }
};

// P_A^op: objects the nonempty subsets of the label set, arrow σ -> τ when
// τ ⊆ σ, value U_σ
inline PosetDiagram diagram_PA(const IndexedCover& cover) {
  int k = cover.arity();
  require(k <= 20, errc::input, "label set too large for the subset diagram");
  PosetDiagram d;
  d.base = cover.base;
  int total = (1 << k) - 1;
  for (int mask = 1; mask <= total; ++mask) {
    std::string nm;
    Bitset val = Bitset::full(cover.base->size());
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) {
        nm += (nm.empty() ? "{" : ",") + cover.label(i);
        val = val & cover.carrier(i);
      }
    d.object_names.push_back(nm + "}");
    d.values.push_back(val);
  }
  d.leq.assign(total, std::vector<bool>(total, false));
  for (int a = 1; a <= total; ++a)
    for (int b = 1; b <= total; ++b)
      if ((a | b) == a) d.leq[a - 1][b - 1] = true;  // arrow σ -> τ iff τ ⊆ σ
  return d;
}

// P_U: distinct carriers of all finite intersections ordered by inclusion
inline PosetDiagram diagram_PU(const IndexedCover& cover) {
  PosetDiagram d;
  d.base = cover.base;
  std::vector<Bitset> closure = space::intersection_closure(cover);
  std::sort(closure.begin(), closure.end());
  for (auto& c : closure) {
    std::string nm = "{";
    bool first = true;
    for (int x : c.members()) {
      nm += (first ? "" : ",") + cover.base->name(x);
      first = false;
    }
    d.object_names.push_back(nm + "}");
    d.values.push_back(c);
  }
  int n = d.size();
  d.leq.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) d.leq[a][b] = d.values[a].subset_of(d.values[b]);
  return d;
}

// the cover itself as a category: distinct entry carriers under inclusion
inline PosetDiagram diagram_cover(const IndexedCover& cover) {
  PosetDiagram d;
  d.base = cover.base;
  std::vector<Bitset> distinct;
  std::vector<std::string> names;
  for (int i = 0; i < cover.arity(); ++i) {
    bool seen = false;
    for (auto& c : distinct) seen = seen || c == cover.carrier(i);
    if (!seen) {
      distinct.push_back(cover.carrier(i));
      names.push_back(cover.label(i));
    }
  }
  d.values = std::move(distinct);
  d.object_names = std::move(names);
  int n = d.size();
  d.leq.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) d.leq[a][b] = d.values[a].subset_of(d.values[b]);
  return d;
}

// simplicial replacement: level n summands are the chains i_0 -> ... -> i_n
// in the index category (weakly monotone, identities allowed), with summand
// the value at i_0; faces drop a chain entry, degeneracies repeat one
inline cech::SimplicialSpaceOverX simplicial_replacement(const PosetDiagram& d, int cap) {
  cech::SimplicialSpaceOverX h;
  h.base = d.base;
  h.levels.resize(cap + 1);
  h.faces.resize(cap + 1);
  h.degens.resize(cap);
  std::vector<std::vector<std::vector<int>>> chains(cap + 1);
  std::vector<std::map<std::vector<int>, int>> index(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    std::vector<int> cur(n + 1);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == n + 1) {
        index[n][cur] = static_cast<int>(chains[n].size());
        chains[n].push_back(cur);
        return;
      }
      for (int v = 0; v < d.size(); ++v) {
        if (pos > 0 && !d.leq[cur[pos - 1]][v]) continue;
        cur[pos] = v;
        rec(pos + 1);
      }
    };
    rec(0);
    h.levels[n].base = d.base;
    for (auto& ch : chains[n]) {
      std::string nm;
      for (int v : ch) nm += (nm.empty() ? "" : ">") + d.object_names[v];
      h.levels[n].summands.push_back({std::move(nm), d.values[ch[0]]});
    }
    if (n >= 1) {
      h.faces[n].assign(n + 1, std::vector<int>(chains[n].size()));
      for (size_t s = 0; s < chains[n].size(); ++s)
        for (int i = 0; i <= n; ++i) {
          std::vector<int> u = chains[n][s];
          u.erase(u.begin() + i);
          h.faces[n][i][s] = index[n - 1].at(u);
        }
      h.degens[n - 1].assign(n, std::vector<int>(chains[n - 1].size()));
      for (size_t s = 0; s < chains[n - 1].size(); ++s)
        for (int i = 0; i <= n - 1; ++i) {
          std::vector<int> u = chains[n - 1][s];
          u.insert(u.begin() + i, u[i]);
          h.degens[n - 1][i][s] = index[n].at(u);
        }
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// homotopy cofinality of P_A^op -> P_U (undercategories are contractible)

struct UndercategoryReport {
  std::string object;
  std::string method;  // "core" or "homology"
  bool contractible = false;
  int undercategory_size = 0;
};

struct CofinalityReport {
  bool all_contractible = true;
  int core_certified = 0;
  std::vector<UndercategoryReport> objects;
};

// for each object V of P_U, the undercategory {σ : V ⊆ U_σ} (a finite
// poset); contractibility certified by beat-point core, else by trivial
// reduced homology through degree 3 (flagged "homology")
inline CofinalityReport cofinality_check(const IndexedCover& cover) {
  CofinalityReport report;
  PosetDiagram pu = diagram_PU(cover);
  int k = cover.arity();
  for (int obj = 0; obj < pu.size(); ++obj) {
    // subsets σ with V ⊆ U_σ, as a poset under inclusion of subsets
    std::vector<int> masks;
    for (int mask = 1; mask < (1 << k); ++mask) {
      Bitset inter = Bitset::full(cover.base->size());
      for (int i = 0; i < k; ++i)
        if (mask & (1 << i)) inter = inter & cover.carrier(i);
      if (pu.values[obj].subset_of(inter)) masks.push_back(mask);
    }
    UndercategoryReport ur;
    ur.object = pu.object_names[obj];
    ur.undercategory_size = static_cast<int>(masks.size());
    // build the finite poset: order by subset inclusion
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> rel;
    for (size_t a = 0; a < masks.size(); ++a) names.push_back("s" + std::to_string(masks[a]));
    for (size_t a = 0; a < masks.size(); ++a)
      for (size_t b = 0; b < masks.size(); ++b)
        if (a != b && (masks[a] | masks[b]) == masks[b]) rel.emplace_back(a, b);
    space::FiniteSpace under(std::move(names), rel);
    if (space::beat_point_core(under).size() == 1) {
      ur.method = "core";
      ur.contractible = true;
      ++report.core_certified;
    } else {
      ur.method = "homology";
      auto chains = sset::order_complex(under).chains(4);
      bool trivial = homology::homology(chains, 0).betti == 1 && homology::homology(chains, 0).torsion.empty();
      for (int deg = 1; deg <= 3 && trivial; ++deg) trivial = homology::homology(chains, deg).trivial();
      ur.contractible = trivial;
    }
    report.all_contractible = report.all_contractible && ur.contractible;
    report.objects.push_back(std::move(ur));
  }
  return report;
}

// ---------------------------------------------------------------------------
// the hocolim homology pipeline

struct HocolimHomology {
  std::vector<homology::HomologyGroup> groups;        // degrees 0..K
  homology::WeakEquivCertificate certificate;         // against the base space
  bool pi0_matches = false;
  homology::DoubleComplex dc;
  homology::Totalization tot;
};

// homology of the homotopy colimit in degrees <= K via the normalized double
// complex truncated at column K+2, plus the augmentation mapping-cone
// certificate against the base
inline HocolimHomology hocolim_homology(const cech::SimplicialSpaceOverX& h, int K) {
  require(h.cap() >= K + 2, errc::input, "generation cap too small for the requested degree");
  HocolimHomology out;
  out.dc = homology::normalized_chains(h, K + 2, K + 1);
  out.tot = homology::totalize(out.dc, K);
  for (int k = 0; k <= K; ++k) out.groups.push_back(homology::homology(out.tot.complex, k));
  homology::ChainMap aug = homology::augmentation_map(out.dc, out.tot);
  out.certificate = homology::cone_certificate(aug, K);
  out.pi0_matches = homology::pi0_compare(h);
  return out;
}

inline HocolimHomology hocolim_homology(const cech::SimplicialFiniteSpace& s, int K) {
  require(s.cap() >= K + 2, errc::input, "generation cap too small for the requested degree");
  HocolimHomology out;
  out.dc = homology::finite_space_chains(s, K + 2, K + 1);
  out.tot = homology::totalize(out.dc, K);
  for (int k = 0; k <= K; ++k) out.groups.push_back(homology::homology(out.tot.complex, k));
  homology::ChainMap aug = homology::augmentation_map(out.dc, out.tot);
  out.certificate = homology::cone_certificate(aug, K);
  out.pi0_matches = homology::pi0_compare(s);
  return out;
}

}  // namespace hck::hocolim
