#include <doctest.h>

#include "hck/double_complex.hpp"
#include "hck/fixtures.hpp"
#include "hck/hocolim.hpp"

using namespace hck;
using namespace hck::homology;
using hck::space::make_space;
using hck::space::IndexedCover;
using hck::space::OpenSubset;
using hck::space::ContinuousMap;
using hck::space::SpacePtr;

// ---------------------------------------------------------------------------
// independent dense oracle: textbook Smith reduction on dense matrices, no
// pivoting strategy, no certificates; used only to cross-check homology

namespace oracle {

using Mat = std::vector<std::vector<long long>>;

static void dense_smith(Mat a, std::vector<long long>& diag) {
  int m = static_cast<int>(a.size());
  int n = m ? static_cast<int>(a[0].size()) : 0;
  diag.clear();
  int s = 0;
  while (s < std::min(m, n)) {
    int pr = -1, pc = -1;
    for (int i = s; i < m; ++i)
      for (int j = s; j < n; ++j)
        if (a[i][j] != 0 && (pr < 0 || std::abs(a[i][j]) < std::abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    std::swap(a[s], a[pr]);
    for (int i = 0; i < m; ++i) std::swap(a[i][s], a[i][pc]);
    bool dirty = false;
    for (int i = s + 1; i < m; ++i) {
      long long q = a[i][s] / a[s][s];
      if (q)
        for (int j = 0; j < n; ++j) a[i][j] -= q * a[s][j];
      if (a[i][s]) dirty = true;
    }
    for (int j = s + 1; j < n; ++j) {
      long long q = a[s][j] / a[s][s];
      if (q)
        for (int i = 0; i < m; ++i) a[i][j] -= q * a[i][s];
      if (a[s][j]) dirty = true;
    }
    if (dirty) continue;
    bool bad = false;
    for (int i = s + 1; i < m && !bad; ++i)
      for (int j = s + 1; j < n && !bad; ++j)
        if (a[i][j] % a[s][s]) {
          for (int t = 0; t < n; ++t) a[s][t] += a[i][t];
          bad = true;
        }
    if (bad) continue;
    diag.push_back(std::llabs(a[s][s]));
    ++s;
  }
}

static Mat to_dense(const IntMatrix& m) {
  Mat a(m.rows, std::vector<long long>(m.cols, 0));
  for (auto& [r, c, v] : m.entries) a[r][c] += v;
  return a;
}

// H_k of a chain complex: betti + torsion via two dense Smith runs
static std::pair<int, std::vector<long long>> dense_homology(const ChainComplex& c, int k) {
  std::vector<long long> dk, dk1;
  dense_smith(to_dense(c.boundary(k)), dk);
  dense_smith(to_dense(c.boundary(k + 1)), dk1);
  int rank_k = static_cast<int>(dk.size());
  int rank_k1 = static_cast<int>(dk1.size());
  int betti = c.rank(k) - rank_k - rank_k1;
  std::vector<long long> tors;
  for (long long d : dk1)
    if (d > 1) tors.push_back(d);
  return {betti, tors};
}

}  // namespace oracle

static SpacePtr s1min() {
  return make_space({"x1", "x2", "y1", "y2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}
static OpenSubset open_of(const SpacePtr& s, std::initializer_list<const char*> pts) {
  Bitset b(s->size());
  for (auto* p : pts) b.set(s->index_of(p));
  return OpenSubset(s, b);
}
static IndexedCover uv_cover(const SpacePtr& s) {
  return IndexedCover(s, {{"U", open_of(s, {"x1", "x2", "y1"})}, {"V", open_of(s, {"x1", "x2", "y2"})}});
}

TEST_CASE("trivial cover: single column equal to the chains of K(X)") {
  // contractible fixture: the cone on S1min
  auto disc = make_space({"x1", "x2", "y1", "y2", "z"},
                         {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
  IndexedCover whole(disc, {{"X", OpenSubset(disc, Bitset::full(5))}});
  auto h = cech::cech_of_cover(whole, 4);
  DoubleComplex dc = normalized_chains(h, 4, 3);
  dc.check();
  // one label: every tuple above p = 0 is degenerate
  for (int p = 1; p <= 4; ++p)
    for (int q = 0; q <= 3; ++q) CHECK(dc.ranks[p][q] == 0);
  for (int q = 0; q <= 3; ++q) CHECK(dc.ranks[0][q] == dc.base_chains.rank(q));
  auto res = hocolim::hocolim_homology(h, 2);
  CHECK(res.groups[0].betti == 1);
  CHECK(res.groups[1].trivial());
  CHECK(res.groups[2].trivial());
  CHECK(res.certificate.all_pass());
  CHECK(res.pi0_matches);
  // the circle with its trivial cover keeps its H_1
  auto s = s1min();
  IndexedCover wholes(s, {{"X", OpenSubset(s, Bitset::full(4))}});
  auto res2 = hocolim::hocolim_homology(cech::cech_of_cover(wholes, 4), 2);
  CHECK(res2.groups[1].betti == 1);
  CHECK(res2.certificate.all_pass());
}

TEST_CASE("normalized column ranks for the UV cover") {
  auto s = s1min();
  auto h = cech::cech_of_cover(uv_cover(s), 4);
  DoubleComplex dc = normalized_chains(h, 4, 3);
  dc.check();
  // exactly 2 alternating tuples per column p >= 1, plus 2 at p = 0
  CHECK(dc.nd_counts[0] == 2);
  for (int p = 1; p <= 4; ++p) CHECK(dc.nd_counts[p] == 2);
  CHECK(dc.ranks[0][0] == 6);  // U and V have 3 points each
  CHECK(dc.ranks[0][1] == 4);  // two edges each
  for (int p = 1; p <= 4; ++p) {
    CHECK(dc.ranks[p][0] == 4);  // the intersection {x1,x2} twice
    CHECK(dc.ranks[p][1] == 0);  // discrete intersection
  }
}

TEST_CASE("S1min UV: homology of the hocolim is the circle, certified") {
  auto s = s1min();
  auto h = cech::cech_of_cover(uv_cover(s), 4);
  auto res = hocolim::hocolim_homology(h, 2);
  CHECK(res.groups[0].betti == 1);
  CHECK(res.groups[1].betti == 1);
  CHECK(res.groups[1].torsion.empty());
  CHECK(res.groups[2].trivial());
  CHECK(res.certificate.all_pass());
  CHECK(res.pi0_matches);
  // independent dense oracle on the totalization, including an untruncated
  // run through p <= 6
  for (int k = 0; k <= 2; ++k) {
    auto [betti, tors] = oracle::dense_homology(res.tot.complex, k);
    CHECK(betti == res.groups[k].betti);
    CHECK(tors.size() == res.groups[k].torsion.size());
  }
  auto h6 = cech::cech_of_cover(uv_cover(s), 6);
  DoubleComplex dc6 = normalized_chains(h6, 6, 3);
  Totalization t6 = totalize(dc6, 2, 6);  // untruncated through p <= 6
  for (int k = 0; k <= 2; ++k) {
    auto [betti, tors] = oracle::dense_homology(t6.complex, k);
    CHECK(betti == res.groups[k].betti);
    CHECK(tors.empty());
  }
}

TEST_CASE("column truncation stability: K+2 versus K+4") {
  auto s = s1min();
  for (int K = 0; K <= 2; ++K) {
    auto h = cech::cech_of_cover(uv_cover(s), K + 4);
    DoubleComplex a = normalized_chains(h, K + 2, K + 1);
    DoubleComplex b = normalized_chains(h, K + 4, K + 1);
    Totalization ta = totalize(a, K);
    Totalization tb = totalize(b, K, K + 4);
    for (int k = 0; k <= K; ++k) CHECK(homology::homology(ta.complex, k) == homology::homology(tb.complex, k));
  }
}

TEST_CASE("augmentation is a verified chain map, surjective in degree 0") {
  auto s = s1min();
  auto h = cech::cech_of_cover(uv_cover(s), 4);
  DoubleComplex dc = normalized_chains(h, 4, 3);
  Totalization tot = totalize(dc, 2);
  ChainMap aug = augmentation_map(dc, tot);
  aug.validate();  // ε ∘ d = ∂ ∘ ε
  SmithResult r = smith_normal_form(aug.comp[0]);
  CHECK(r.rank == dc.base_chains.rank(0));  // surjective onto vertices
  CHECK(r.verify(aug.comp[0]));
}

TEST_CASE("eilenberg-zilber cross-check: totalization against the diagonal") {
  auto s = s1min();
  auto h = cech::cech_of_cover(uv_cover(s), 4);
  sset::RawBiLevels w = bisimplicial_set(h, 4);
  w.check();
  CHECK(diagonal_cell_count(w, 4) <= 5000);
  sset::SSet diag = sset::diagonal(w, 4);
  diag.check_identities();
  ChainComplex dchains = diag.normalized_chains(4);
  dchains.validate();
  auto res = hocolim::hocolim_homology(h, 2);
  for (int k = 0; k <= 2; ++k) CHECK(homology::homology(dchains, k) == res.groups[k]);
}

TEST_CASE("pi0: disjoint points covered by singletons") {
  auto two = make_space({"a", "b"}, {});
  IndexedCover singles(two, {{"A", open_of(two, {"a"})}, {"B", open_of(two, {"b"})}});
  auto h = cech::cech_of_cover(singles, 3);
  CHECK(pi0_compare(h));
  auto res = hocolim::hocolim_homology(h, 1);
  CHECK(res.groups[0].betti == 2);
  CHECK(res.certificate.all_pass());
}

TEST_CASE("broken hypercover fails the certificate with a witness cycle") {
  auto s = s1min();
  // cover by U and V but with level-1 structure missing the {x2} part over
  // U∩V: realize it as the honest Čech complex of the smaller cover
  // {U, V} restricted... instead: compare the hocolim of the cover {U', V}
  // with U' = {x1, y1} which fails to cover (so we drop to a direct cone
  // failure): map the circle's chains to a point's chains
  auto h = cech::cech_of_cover(uv_cover(s), 4);
  DoubleComplex dc = normalized_chains(h, 4, 3);
  Totalization tot = totalize(dc, 2);
  // target: chains of the one-point space
  auto pt = make_space({"p"}, {});
  auto kpt = sset::order_complex(*pt);
  ChainComplex cpt = kpt.chains(4);
  ChainMap f;
  f.src = &tot.complex;
  f.dst = &cpt;
  f.comp.resize(tot.complex.top_degree() + 1);
  for (int n = 0; n <= tot.complex.top_degree(); ++n) {
    IntMatrix m(cpt.rank(n), tot.complex.rank(n));
    if (n == 0)
      for (int j = 0; j < tot.complex.rank(0); ++j) m.add(0, j, 1);
    m.normalize();
    f.comp[n] = std::move(m);
  }
  f.validate();
  WeakEquivCertificate cert = cone_certificate(f, 2);
  CHECK(!cert.all_pass());
  CHECK(cert.verdict[0]);    // H_0 matches
  CHECK(!cert.verdict[1]);   // H_1 = Z vs 0
  REQUIRE(!cert.witnesses.empty());
  CHECK(!cert.witnesses[0].empty());
}

TEST_CASE("cech of a map feeds the homology pipeline: EG for Z/2 and Z/3") {
  auto pt = make_space({"p"}, {});
  for (int g = 2; g <= 3; ++g) {
    std::vector<std::string> names;
    for (int i = 0; i < g; ++i) names.push_back("g" + std::to_string(i));
    auto grp = make_space(names, {});
    ContinuousMap to_pt(grp, pt, std::vector<int>(g, 0));
    auto cx = cech::cech_of_map(to_pt, 5);
    auto res = hocolim::hocolim_homology(cx, 3);
    CHECK(res.groups[0].betti == 1);
    for (int k = 1; k <= 3; ++k) CHECK(res.groups[k].trivial());
    CHECK(res.certificate.all_pass());
    CHECK(res.pi0_matches);
    // independent bar-complex oracle: C_n free on G^{n+1}, alternating sum
    // of deletions
    ChainComplex bar;
    int top = 4;
    bar.ranks.resize(top + 1);
    bar.bnd.resize(top + 1);
    long long pw = g;
    for (int n = 0; n <= top; ++n) {
      bar.ranks[n] = static_cast<int>(pw);
      pw *= g;
    }
    bar.bnd[0] = IntMatrix(0, bar.ranks[0]);
    for (int n = 1; n <= top; ++n) {
      IntMatrix d(bar.ranks[n - 1], bar.ranks[n]);
      for (int j = 0; j < bar.ranks[n]; ++j) {
        // digits of j in base g are the tuple
        std::vector<int> t(n + 1);
        int x = j;
        for (int i = n; i >= 0; --i) {
          t[i] = x % g;
          x /= g;
        }
        int sign = 1;
        for (int i = 0; i <= n; ++i) {
          std::vector<int> u = t;
          u.erase(u.begin() + i);
          int enc = 0;
          for (int v : u) enc = enc * g + v;
          d.add(enc, j, sign);
          sign = -sign;
        }
      }
      d.normalize();
      bar.bnd[n] = std::move(d);
    }
    bar.validate();
    for (int k = 0; k <= 3; ++k) {
      auto [betti, tors] = oracle::dense_homology(bar, k);
      CHECK(betti == res.groups[k].betti);
      CHECK(tors.empty());
    }
  }
}

TEST_CASE("property: random covers pass the EZ cross-check and truncation stability") {
  // seeded random covers on two fixtures; the diagonal comparison and the
  // K+2-vs-K+4 column runs must agree with the pipeline
  for (auto* space_name : {"S1min", "wedge"}) {
    auto s = hck::fixtures::space(space_name);
    for (uint64_t seed = 11; seed <= 14; ++seed) {
      auto cover = hck::fixtures::random_cover(s, seed, 3);
      auto h = cech::cech_of_cover(cover, 6);
      auto res = hocolim::hocolim_homology(h, 1);
      // diagonal route
      sset::RawBiLevels w = bisimplicial_set(h, 3);
      sset::SSet diag = sset::diagonal(w, 3);
      ChainComplex dchains = diag.normalized_chains(3);
      for (int k = 0; k <= 1; ++k) CHECK(homology::homology(dchains, k) == res.groups[k]);
      // stability
      DoubleComplex wide = normalized_chains(h, 5, 2);
      Totalization tw = totalize(wide, 1, 5);
      for (int k = 0; k <= 1; ++k) CHECK(homology::homology(tw.complex, k) == res.groups[k]);
    }
  }
}

TEST_CASE("extra degeneracy yields a verified chain contraction") {
  auto s = s1min();
  IndexedCover withx(s, {{"X", OpenSubset(s, Bitset::full(4))}, {"U", open_of(s, {"x1", "x2", "y1"})}});
  auto h = cech::cech_of_cover(withx, 4);
  cech::ExtraDegeneracy ed = cech::extra_degeneracy(withx, h);
  DoubleComplex dc = normalized_chains(h, 3, 3);
  dc.check();
  CHECK(contraction_check(dc, h, ed));
  // consequence: homology equals the base's homology
  auto res = hocolim::hocolim_homology(h, 2);
  CHECK(res.certificate.all_pass());
}
