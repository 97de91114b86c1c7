#pragma once

// Integer chain complexes, homology via Smith normal form, chain maps and
// mapping-cone certificates. Homology classes come with explicit witness
// cycles so certificate failures can point at a concrete non-bounding cycle.

#include <optional>
#include <string>
#include <vector>

#include "hck/snf.hpp"

namespace hck::homology {

using SparseVec = std::vector<std::pair<int, BigInt>>;  // (index, coeff), index ascending

struct HomologyGroup {
  int betti = 0;
  std::vector<BigInt> torsion;  // each > 1, ordered by divisibility

  bool trivial() const { return betti == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup& o) const { return betti == o.betti && torsion == o.torsion; }
  bool operator!=(const HomologyGroup& o) const { return !(*this == o); }
  std::string to_string() const {
    std::string s;
    if (betti > 0) s = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
    for (auto& t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t.to_string());
    return s.empty() ? "0" : s;
  }
};

// C_n with boundaries bnd[n] : C_n -> C_{n-1} for n >= 1; bnd[0] unused.
struct ChainComplex {
  std::vector<int> ranks;
  std::vector<IntMatrix> bnd;

  int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
  int rank(int n) const { return (n < 0 || n > top_degree()) ? 0 : ranks[n]; }

  const IntMatrix& boundary(int n) const {
    static const IntMatrix empty;
    if (n < 1 || n > top_degree()) return empty;
    return bnd[n];
  }

  // d∘d = 0 on every consecutive pair
  void validate() const {
    require(bnd.size() == ranks.size(), errc::internal, "chain complex shape mismatch");
    for (int n = 1; n <= top_degree(); ++n) {
      require(bnd[n].rows == rank(n - 1) && bnd[n].cols == rank(n), errc::internal,
              "boundary matrix shape mismatch at degree " + std::to_string(n));
    }
    for (int n = 2; n <= top_degree(); ++n) {
      BigMatrix dd = BigMatrix::from(bnd[n - 1]) * BigMatrix::from(bnd[n]);
      for (int i = 0; i < dd.rows; ++i)
        require(dd.row[i].empty(), errc::internal, "d∘d != 0 at degree " + std::to_string(n));
    }
  }
};

struct HomologyData {
  HomologyGroup group;
  // one representative cycle per free generator, then per torsion generator
  std::vector<SparseVec> witnesses;
  SmithResult snf_bnd;       // SNF of ∂_k
  SmithResult snf_quotient;  // SNF of ∂_{k+1} expressed in kernel coordinates
};

namespace detail {

inline SparseVec to_sparse(const std::vector<BigInt>& dense) {
  SparseVec v;
  for (int i = 0; i < static_cast<int>(dense.size()); ++i)
    if (!dense[i].is_zero()) v.emplace_back(i, dense[i]);
  return v;
}

}  // namespace detail

// H_k = ker ∂_k / im ∂_{k+1}, computed in kernel coordinates so that
// explicit witness cycles come out of the same decomposition.
inline HomologyData homology_data(const ChainComplex& c, int k, bool want_witnesses = false) {
  require(0 <= k && k <= c.top_degree(), errc::internal, "homology degree out of range");
  int nk = c.rank(k);
  HomologyData out;
  if (nk == 0) return out;

  IntMatrix dk = c.boundary(k);
  if (k == 0 || dk.rows == 0) {
    dk = IntMatrix(0, nk);  // everything is a cycle
  }
  out.snf_bnd = smith_normal_form(dk);
  int r = out.snf_bnd.rank;
  int z = nk - r;  // kernel rank
  if (z == 0) return out;

  // kernel basis = columns r..nk-1 of V; express ∂_{k+1} in those coordinates
  const IntMatrix& dk1 = c.boundary(k + 1);
  int m1 = (k + 1 <= c.top_degree()) ? c.rank(k + 1) : 0;
  BigMatrix w(z, m1);
  if (m1 > 0 && !dk1.is_zero()) {
    // W = (Vinv * ∂_{k+1}) restricted to rows r.., computed column by column
    BigMatrix d1 = BigMatrix::from(dk1);
    std::vector<std::vector<BigInt>> cols(m1, std::vector<BigInt>(nk));
    for (int i = 0; i < d1.rows; ++i)
      for (auto& [j, v] : d1.row[i]) cols[j][i] = v;
    for (int j = 0; j < m1; ++j) {
      std::vector<BigInt> y = out.snf_bnd.Vinv.apply(cols[j]);
      for (int i = 0; i < r; ++i)
        require(y[i].is_zero(), errc::internal, "image of boundary not contained in kernel (d∘d != 0?)");
      for (int i = r; i < nk; ++i)
        if (!y[i].is_zero()) w.row[i - r][j] = y[i];
    }
  }
  out.snf_quotient = smith_normal_form(w);
  int rw = out.snf_quotient.rank;
  out.group.betti = z - rw;
  for (int i = 0; i < rw; ++i)
    if (out.snf_quotient.diag[i] > BigInt(1)) out.group.torsion.push_back(out.snf_quotient.diag[i]);

  if (want_witnesses) {
    // quotient Z^z / im(W): basis vectors Uinv_w e_i generate; order d_i
    // (0 = free). Witness for generator i = V_k * (0..0 | Uinv_w e_i).
    auto emit = [&](int i) {
      std::vector<BigInt> kernel_coord(z);
      for (int row = 0; row < z; ++row) kernel_coord[row] = out.snf_quotient.Uinv.at(row, i);
      std::vector<BigInt> full(nk);
      // x = V * (0,...,0, kernel_coord)
      for (int row = 0; row < nk; ++row) {
        BigInt acc;
        for (auto& [j, v] : out.snf_bnd.V.row[row])
          if (j >= r) acc += v * kernel_coord[j - r];
        full[row] = acc;
      }
      out.witnesses.push_back(detail::to_sparse(full));
    };
    for (int i = rw; i < z; ++i) emit(i);  // free generators
    for (int i = 0; i < rw; ++i)
      if (out.snf_quotient.diag[i] > BigInt(1)) emit(i);  // torsion generators
  }
  return out;
}

inline HomologyGroup homology(const ChainComplex& c, int k) { return homology_data(c, k).group; }

// chain map f : src -> dst, components comp[n] : src_n -> dst_n
struct ChainMap {
  const ChainComplex* src = nullptr;
  const ChainComplex* dst = nullptr;
  std::vector<IntMatrix> comp;

  int degrees() const { return static_cast<int>(comp.size()) - 1; }
  const IntMatrix& component(int n) const {
    static const IntMatrix empty;
    if (n < 0 || n > degrees()) return empty;
    return comp[n];
  }
  // ∂ f = f ∂ in every degree where both sides exist
  void validate() const {
    for (int n = 1; n <= degrees(); ++n) {
      BigMatrix lhs = BigMatrix::from(dst->boundary(n)) * BigMatrix::from(comp[n]);
      BigMatrix rhs = BigMatrix::from(comp[n - 1]) * BigMatrix::from(src->boundary(n));
      require(lhs == rhs, errc::internal, "chain map law fails at degree " + std::to_string(n));
    }
  }
};

// Cone(f)_n = src_{n-1} ⊕ dst_n, d(a, b) = (-d a, f a + d b). src block first.
// dst ranks beyond its generated top count as zero; certificate callers must
// bound their range so truncation cannot hide cells.
inline ChainComplex mapping_cone(const ChainMap& f) {
  int top = std::min(f.src->top_degree() + 1, f.degrees() + 1);
  ChainComplex cone;
  cone.ranks.resize(top + 1);
  cone.bnd.resize(top + 1);
  for (int n = 0; n <= top; ++n) cone.ranks[n] = f.src->rank(n - 1) + f.dst->rank(n);
  for (int n = 1; n <= top; ++n) {
    IntMatrix d(cone.ranks[n - 1], cone.ranks[n]);
    int src_off_lo = 0, dst_off_lo = f.src->rank(n - 2);
    int src_off_hi = 0, dst_off_hi = f.src->rank(n - 1);
    for (auto& [r, c, v] : f.src->boundary(n - 1).entries) d.add(src_off_lo + r, src_off_hi + c, -v);
    for (auto& [r, c, v] : f.component(n - 1).entries) d.add(dst_off_lo + r, src_off_hi + c, v);
    for (auto& [r, c, v] : f.dst->boundary(n).entries) d.add(dst_off_lo + r, dst_off_hi + c, v);
    d.normalize();
    cone.bnd[n] = std::move(d);
  }
  return cone;
}

struct WeakEquivCertificate {
  int range = 0;                      // verdicts for degrees 0..range
  std::vector<bool> verdict;          // verdict[k] = cone exact at k and k+1
  std::vector<int> cone_failures;     // cone degrees with nontrivial homology
  std::vector<SparseVec> witnesses;   // one witness cycle per failing cone degree
  bool all_pass() const {
    for (bool v : verdict)
      if (!v) return false;
    return true;
  }
};

// Certifies H_k(f) iso for k <= K by exactness of the mapping cone in
// degrees k and k+1. Requires both complexes generated through K+2.
inline WeakEquivCertificate cone_certificate(const ChainMap& f, int K) {
  require(f.src->top_degree() >= K + 1 && f.dst->top_degree() >= K + 2 && f.degrees() >= K + 1,
          errc::internal, "complexes not generated far enough for certificate range");
  ChainComplex cone = mapping_cone(f);
  WeakEquivCertificate cert;
  cert.range = K;
  std::vector<bool> exact(K + 2, false);
  for (int d = 0; d <= K + 1; ++d) {
    HomologyData h = homology_data(cone, d, true);
    exact[d] = h.group.trivial();
    if (!exact[d]) {
      cert.cone_failures.push_back(d);
      cert.witnesses.push_back(h.witnesses.empty() ? SparseVec{} : h.witnesses.front());
    }
  }
  cert.verdict.resize(K + 1);
  for (int k = 0; k <= K; ++k) cert.verdict[k] = exact[k] && exact[k + 1];
  return cert;
}

}  // namespace hck::homology
