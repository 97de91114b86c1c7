#include <doctest.h>

#include <random>

#include "hck/finite_space.hpp"
#include "hck/simplicial.hpp"

using namespace hck;
using namespace hck::sset;
using hck::space::make_space;

TEST_CASE("monotone map calculus: epi-mono factorization is exact") {
  // every monotone [3] -> [2] factors as injection ∘ surjection
  std::function<void(Monotone&, int)> rec = [&](Monotone& m, int pos) {
    if (pos == 4) {
      auto [s, i] = epi_mono(m);
      CHECK(s.is_surjective());
      CHECK(i.is_injective());
      CHECK(compose(i, s) == m);
      return;
    }
    int lo = pos == 0 ? 0 : m.values[pos - 1];
    for (int v = lo; v <= 2; ++v) {
      m.values[pos] = v;
      rec(m, pos + 1);
    }
  };
  Monotone m;
  m.src = 3;
  m.dst = 2;
  m.values.assign(4, 0);
  rec(m, 0);
}

TEST_CASE("surjection enumeration is sorted and counted by binomials") {
  auto s42 = surjections(4, 2);
  CHECK(s42.size() == 6);  // C(4,2)
  CHECK(std::is_sorted(s42.begin(), s42.end()));
  for (auto& s : s42) {
    CHECK(s.is_surjective());
    CHECK(s.hit_twice_positions().size() == 2);
  }
  CHECK(surjections(2, 2).size() == 1);
  CHECK(surjections(1, 2).empty());
}

TEST_CASE("standard simplex and its boundary") {
  SSet d2 = simplex_sset(2);
  d2.check_identities();
  CHECK(d2.cells(0) == 3);
  CHECK(d2.cells(1) == 3);
  CHECK(d2.cells(2) == 1);
  CHECK(d2.level_count(2) == 3 + 2 * 3 + 1);  // vertices doubly degenerate, edges once, top
  SSet b2 = boundary_sset(2);
  CHECK(b2.max_dim == 1);
  CHECK(b2.cells(1) == 3);
  SSet b0 = boundary_sset(0);
  CHECK(b0.max_dim == -1);
}

TEST_CASE("nerve of finite posets") {
  // 1-point poset -> Δ⁰
  auto pt = make_space({"p"}, {});
  SSet n0 = nerve(*pt, 3);
  CHECK(n0.max_dim == 0);
  CHECK(n0.cells(0) == 1);
  CHECK(n0.level_count(3) == 1);

  // 2-chain -> Δ¹ plus degeneracies
  auto c2 = make_space({"a", "b"}, {{0, 1}});
  SSet n1 = nerve(*c2, 3);
  n1.check_identities();
  CHECK(n1.cells(0) == 2);
  CHECK(n1.cells(1) == 1);
  CHECK(n1.level_count(1) == 3);

  // P₁ = nonempty subsets of {0,1} ordered by inclusion: nerve has 3
  // vertices and strict chains of length <= 2; isomorphic to sd Δ¹
  auto p1 = make_space({"0", "1", "01"}, {{0, 2}, {1, 2}});
  SSet np1 = nerve(*p1, 3);
  CHECK(np1.cells(0) == 3);
  CHECK(np1.cells(1) == 2);
  CHECK(np1.cells(2) == 0);
}

TEST_CASE("map spaces: Yoneda and boundary evaluations") {
  auto s1 = make_space({"x1", "x2", "y1", "y2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  SSet u = nerve(*s1, 4);
  u.check_identities();

  // Map(Δ⁰, U) = U_0
  SSet d0 = simplex_sset(0);
  CHECK(map_space(d0, u).size() == static_cast<size_t>(u.level_count(0)));

  // Map(Δⁿ, U) = U_n for n <= 2
  for (int n = 1; n <= 2; ++n) {
    SSet dn = simplex_sset(n);
    CHECK(map_space(dn, u).size() == static_cast<size_t>(u.level_count(n)));
  }

  // Map(∂Δ¹, U) = U_0 × U_0
  SSet b1 = boundary_sset(1);
  CHECK(map_space(b1, u).size() == static_cast<size_t>(u.level_count(0) * u.level_count(0)));
}

TEST_CASE("matching objects agree with the boundary map space (two code paths)") {
  auto s1 = make_space({"x1", "x2", "y1", "y2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  SSet u = nerve(*s1, 4);
  for (int n = 0; n <= 3; ++n) {
    MatchingSet viacosk = matching_sset(u, n);
    SSet bd = boundary_sset(n);
    CHECK(viacosk.size() == map_space(bd, u).size());
  }
  // n = 0: a single point
  CHECK(matching_sset(u, 0).size() == 1);
  // n = 1 on the nerve of a discrete poset V: V × V
  auto disc = make_space({"a", "b", "c"}, {});
  SSet nd = nerve(*disc, 2);
  CHECK(matching_sset(nd, 1).size() == 9);
  // n = 2 on Δ²: boundary triples satisfying the face compatibilities,
  // enumerated directly as an oracle
  SSet d2 = simplex_sset(2);
  auto lvl1 = d2.level(1);
  int compat = 0;
  for (auto& x0 : lvl1)
    for (auto& x1 : lvl1)
      for (auto& x2 : lvl1) {
        // d_i x_j = d_{j-1} x_i for i < j
        if (d2.face(x1, 0) == d2.face(x0, 0) && d2.face(x2, 0) == d2.face(x0, 1) &&
            d2.face(x2, 1) == d2.face(x1, 1))
          ++compat;
      }
  CHECK(matching_sset(d2, 2).size() == static_cast<size_t>(compat));
}

TEST_CASE("coskeleton: agreement below the cut, idempotence, cosk0 of a nerve") {
  auto disc = make_space({"a", "b"}, {});
  SSet u = nerve(*disc, 3);
  SSet c0 = coskeleton(u, 0, 3);
  c0.check_identities();
  // cosk_0: k-cells of the underlying level = V^{k+1}
  for (int k = 0; k <= 3; ++k) CHECK(c0.level_count(k) == 1LL << (k + 1));

  auto s1 = make_space({"x1", "x2", "y1", "y2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  SSet v = nerve(*s1, 3);
  SSet c1 = coskeleton(v, 1, 3);
  c1.check_identities();
  // agrees with v through dimension 1
  for (int k = 0; k <= 1; ++k) CHECK(c1.level_count(k) == v.level_count(k));
  // idempotence: cosk_1 applied twice at the same degree
  SSet c11 = coskeleton(c1, 1, 3);
  for (int k = 0; k <= 3; ++k) CHECK(c11.level_count(k) == c1.level_count(k));
  CHECK(c11.cells(2) == c1.cells(2));
  CHECK(c11.cells(3) == c1.cells(3));
}

TEST_CASE("adjunction |Hom(sk_n K, U)| = |Hom(K, cosk_n U)| on fixtures") {
  auto s1 = make_space({"x1", "x2", "y1", "y2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  SSet u = nerve(*s1, 3);
  for (int n = 0; n <= 1; ++n) {
    SSet cu = coskeleton(u, n, 3);
    for (int k = 0; k <= 3; ++k) {
      SSet dk = simplex_sset(k);
      SSet skk = skeleton(dk, n);
      CHECK(map_space(skk, u).size() == map_space(dk, cu).size());
      SSet bk = boundary_sset(k);
      SSet skb = skeleton(bk, n);
      CHECK(map_space(skb, u).size() == map_space(bk, cu).size());
    }
  }
}

TEST_CASE("splitting: counts two ways on Δ¹ and degenerate tuple classification") {
  SSet d1 = simplex_sset(1);
  Splitting sp = detect_splitting(d1, 1);
  CHECK(sp.nondeg_counts[0] == 2);
  CHECK(sp.nondeg_counts[1] == 1);
  // dimension-2 simplices: 2 surjections x 1 edge + 1 surjection x 2 vertices
  CHECK(d1.level_count(2) == 2 * 1 + 1 * 2);

  // nerve of a 1-point poset: N_k empty for k >= 1
  auto pt = make_space({"p"}, {});
  SSet n0 = nerve(*pt, 0);
  Splitting sp0 = detect_splitting(n0, 0);
  CHECK(sp0.nondeg_counts[0] == 1);
  CHECK(n0.level_count(4) == 1);
}

TEST_CASE("sk pushout check on standard fixtures") {
  SSet d2 = simplex_sset(2);
  CHECK(sk_pushout_check(d2, 0, 2));
  CHECK(sk_pushout_check(d2, 1, 2));
  CHECK(sk_pushout_check(d2, 2, 2));
  auto s1 = make_space({"x1", "x2", "y1", "y2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  SSet u = nerve(*s1, 3);
  for (int n = 0; n <= 3; ++n) CHECK(sk_pushout_check(u, n, 3));
}

TEST_CASE("raw normalization recovers the nerve and validates the splitting") {
  auto s1 = make_space({"x1", "x2", "y1", "y2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  SSet u = nerve(*s1, 3);
  RawLevels raw = raw_view(u, 3);
  raw.check_identities();
  CHECK(raw_splitting_holds(raw));
  Normalized nm = normalize(raw);
  for (int d = 0; d <= 3; ++d) CHECK(nm.sset.cells(d) == u.cells(d));
  nm.sset.check_identities();
}

TEST_CASE("diagonal of a product of nerves is the nerve of the product poset") {
  auto c2 = make_space({"a", "b"}, {{0, 1}});
  SSet n = nerve(*c2, 2);
  RawBiLevels w = product_bisset(n, n, 2);
  w.check();
  SSet diag = diagonal(w, 2);
  diag.check_identities();
  // product poset: 2-chain x 2-chain = square poset
  auto sq = make_space({"aa", "ab", "ba", "bb"}, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  SSet nsq = nerve(*sq, 2);
  for (int d = 0; d <= 2; ++d) CHECK(diag.cells(d) == nsq.cells(d));
  for (int k = 0; k <= 2; ++k) CHECK(diag.level_count(k) == nsq.level_count(k));
}

TEST_CASE("diagonal of a horizontally constant bisimplicial set is the vertical part") {
  auto s1 = make_space({"x1", "x2", "y1", "y2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  SSet u = nerve(*s1, 3);
  auto pt = make_space({"p"}, {});
  SSet trivial = nerve(*pt, 3);
  RawBiLevels w = product_bisset(trivial, u, 3);
  SSet diag = diagonal(w, 3);
  for (int d = 0; d <= 3; ++d) CHECK(diag.cells(d) == u.cells(d));
}

TEST_CASE("degeneracy identities hold on enumerated simplices") {
  auto s1 = make_space({"x1", "x2", "y1", "y2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  SSet u = nerve(*s1, 3);
  for (int n = 0; n <= 2; ++n) {
    for (const Simplex& s : u.level(n)) {
      for (int i = 0; i <= n; ++i) {
        Simplex si = u.degeneracy(s, i);
        CHECK(u.face(si, i) == s);
        CHECK(u.face(si, i + 1) == s);
        for (int j = 0; j <= n; ++j) {
          if (j < i) CHECK(u.face(si, j) == u.degeneracy(u.face(s, j), i - 1));
          if (j > i + 1 && n >= 1) CHECK(u.face(si, j + 1) == u.degeneracy(u.face(s, j), i));
        }
        for (int j = i; j <= n; ++j)
          CHECK(u.degeneracy(si, j + 1) == u.degeneracy(u.degeneracy(s, j), i));
      }
    }
  }
}

// random poset on n points: relations only from lower to higher index, so
// antisymmetry is automatic; the constructor takes the transitive closure
static hck::space::SpacePtr random_poset(std::mt19937_64& rng, int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 3 == 0) rel.emplace_back(i, j);
  return hck::space::make_space(std::move(names), rel);
}

TEST_CASE("property: nerves of random posets satisfy the simplicial calculus") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 12; ++trial) {
    auto p = random_poset(rng, 4 + static_cast<int>(rng() % 3));
    SSet u = nerve(*p, 4);
    u.check_identities();
    // matching objects via the two independent routes
    for (int n = 0; n <= 3; ++n) {
      MatchingSet viacosk = matching_sset(u, n);
      CHECK(viacosk.size() == map_space(boundary_sset(n), u).size());
    }
    // normalization round trip preserves the cell counts
    RawLevels raw = raw_view(u, 3);
    raw.check_identities();
    CHECK(raw_splitting_holds(raw));
    Normalized nm = normalize(raw);
    for (int d = 0; d <= 3; ++d) CHECK(nm.sset.cells(d) == u.cells(d));
    // skeletal pushouts hold in every dimension
    for (int n = 0; n <= 3; ++n) CHECK(sk_pushout_check(u, n, 3));
  }
}

TEST_CASE("debug dump lists nondegenerate cells with face words") {
  auto c2 = make_space({"a", "b"}, {{0, 1}});
  SSet n = nerve(*c2, 1);
  std::string d = n.dump();
  CHECK(d.find("0 a :") != std::string::npos);
  CHECK(d.find("1 a<b : b.id a.id") != std::string::npos);
}
