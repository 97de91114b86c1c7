#include <doctest.h>

#include <random>

#include "hck/finite_space.hpp"
#include "hck/order_complex.hpp"

using namespace hck;
using namespace hck::space;
using hck::sset::order_complex;
using hck::sset::OrderedComplex;
using hck::sset::subdivide;

// fixtures used across the suite
static SpacePtr point_space() { return make_space({"p"}, {}); }
static SpacePtr chain2() { return make_space({"a", "b"}, {{0, 1}}); }
// minimal circle: x1, x2 minimal, y1, y2 maximal, x_i < y_j
static SpacePtr s1min() {
  return make_space({"x1", "x2", "y1", "y2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// oracle: enumerate all down-sets containing x by brute force, return the
// intersection of all of them
static Bitset brute_minimal_open(const FiniteSpace& s, int x) {
  int n = s.size();
  Bitset acc = Bitset::full(n);
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    Bitset b(n);
    for (int i = 0; i < n; ++i)
      if (mask & (uint64_t{1} << i)) b.set(i);
    if (!b.test(x) || !s.is_open(b)) continue;
    acc = acc & b;
  }
  return acc;
}

TEST_CASE("minimal_open: one-point space") {
  auto s = point_space();
  CHECK(minimal_open(s, 0).carrier == Bitset::full(1));
}

TEST_CASE("minimal_open matches brute-force down-set oracle on S1min") {
  auto s = s1min();
  for (int x = 0; x < s->size(); ++x) CHECK(minimal_open(s, x).carrier == brute_minimal_open(*s, x));
  // frozen values from the oracle
  Bitset y1(4);
  y1.set(0);
  y1.set(1);
  y1.set(2);
  CHECK(minimal_open(s, "y1").carrier == y1);
  Bitset x1(4);
  x1.set(0);
  CHECK(minimal_open(s, "x1").carrier == x1);
}

TEST_CASE("minimal_open is contained in every open containing the point") {
  auto s = s1min();
  int n = s->size();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    Bitset b(n);
    for (int i = 0; i < n; ++i)
      if (mask & (uint64_t{1} << i)) b.set(i);
    if (!s->is_open(b)) continue;
    for (int x : b.members()) CHECK(s->down_set(x).subset_of(b));
  }
}

TEST_CASE("space loader rejects non-T0 relations and unknown points") {
  CHECK_THROWS_AS(make_space({"a", "b"}, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(make_space({"a"}, {{0, 3}}), Error);
  CHECK_THROWS_AS(make_space({"a", "a"}, {}), Error);
}

static OpenSubset open_of(const SpacePtr& s, std::initializer_list<const char*> pts) {
  Bitset b(s->size());
  for (auto* p : pts) b.set(s->index_of(p));
  return OpenSubset(s, b);
}

TEST_CASE("intersection of opens") {
  auto s = s1min();
  OpenSubset u = open_of(s, {"x1", "x2", "y1"});
  OpenSubset v = open_of(s, {"x1", "x2", "y2"});
  CHECK(intersection(u, u) == u);
  CHECK(intersection(u, v) == open_of(s, {"x1", "x2"}));
  OpenSubset empty(s, Bitset(4));
  CHECK(intersection(u, empty) == empty);
  // down-closedness preserved for every pair of opens (enumerated)
  int n = s->size();
  for (uint64_t m1 = 0; m1 < (uint64_t{1} << n); ++m1)
    for (uint64_t m2 = 0; m2 < (uint64_t{1} << n); ++m2) {
      Bitset a(n), b(n);
      for (int i = 0; i < n; ++i) {
        if (m1 & (uint64_t{1} << i)) a.set(i);
        if (m2 & (uint64_t{1} << i)) b.set(i);
      }
      if (!s->is_open(a) || !s->is_open(b)) continue;
      CHECK(s->is_open(a & b));
    }
}

TEST_CASE("non-open carrier is rejected") {
  auto s = s1min();
  Bitset b(4);
  b.set(s->index_of("y1"));  // up-point without its closure downward
  CHECK_THROWS_AS(OpenSubset(s, b), Error);
}

static IndexedCover uv_cover(const SpacePtr& s) {
  return IndexedCover(s, {{"U", open_of(s, {"x1", "x2", "y1"})}, {"V", open_of(s, {"x1", "x2", "y2"})}});
}

TEST_CASE("complete and cech cover decisions") {
  auto s = s1min();
  // {X} is complete and cech for any X
  IndexedCover whole(s, {{"X", OpenSubset(s, Bitset::full(4))}});
  CHECK(is_complete_cover(whole));
  CHECK(is_cech_cover(whole));

  IndexedCover uv = uv_cover(s);
  CHECK(!is_complete_cover(uv));
  auto w = completeness_witness(uv);
  REQUIRE(w.has_value());
  CHECK(*w == open_of(s, {"x1", "x2"}).carrier);  // U∩V is the uncovered intersection
  CHECK(!is_cech_cover(uv));

  IndexedCover refined(s, {{"U", open_of(s, {"x1", "x2", "y1"})},
                           {"V", open_of(s, {"x1", "x2", "y2"})},
                           {"a", open_of(s, {"x1"})},
                           {"b", open_of(s, {"x2"})}});
  CHECK(is_complete_cover(refined));
  CHECK(!is_cech_cover(refined));  // {x1,x2} itself is not an entry

  IndexedCover closed(s, {{"U", open_of(s, {"x1", "x2", "y1"})},
                          {"V", open_of(s, {"x1", "x2", "y2"})},
                          {"UV", open_of(s, {"x1", "x2"})}});
  CHECK(is_cech_cover(closed));
  CHECK(is_complete_cover(closed));  // property: cech => complete
}

TEST_CASE("property: every cech cover is complete (random covers)") {
  auto s = s1min();
  std::mt19937_64 rng(11);
  int tried = 0;
  while (tried < 200) {
    // random family of opens, then decide both predicates
    std::vector<std::pair<std::string, OpenSubset>> entries;
    Bitset uni(4);
    int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) {
      Bitset b(4);
      for (int x = 0; x < 4; ++x)
        if (rng() & 1) b = b | s->down_set(x);
      entries.emplace_back("e" + std::to_string(i), OpenSubset(s, b));
      uni = uni | b;
    }
    if (uni != Bitset::full(4)) continue;
    bool nonempty = false;
    for (auto& e : entries) nonempty = nonempty || e.second.carrier.any();
    if (!nonempty) continue;
    // dedup labels fine; carriers may repeat
    IndexedCover c(s, std::move(entries));
    ++tried;
    if (is_cech_cover(c)) CHECK(is_complete_cover(c));
  }
}

TEST_CASE("cover conventions: empty entries and the empty space") {
  auto s = s1min();
  // an empty entry is permitted alongside a nonempty one
  IndexedCover with_empty(s, {{"X", OpenSubset(s, Bitset::full(4))}, {"E", OpenSubset(s, Bitset(4))}});
  CHECK(with_empty.arity() == 2);
  CHECK(is_complete_cover(with_empty));
  // a cover of all-empty entries is rejected
  CHECK_THROWS_AS(IndexedCover(s, {{"E", OpenSubset(s, Bitset(4))}}), Error);
  // the empty space has the empty cover by convention
  auto empty = make_space({}, {});
  IndexedCover none(empty, {});
  CHECK(none.arity() == 0);
}

TEST_CASE("continuous maps are exactly order-preserving assignments") {
  auto s = s1min();
  auto t = chain2();
  CHECK_NOTHROW(ContinuousMap(t, s, {s->index_of("x1"), s->index_of("y1")}));
  CHECK_THROWS_AS(ContinuousMap(t, s, {s->index_of("y1"), s->index_of("x1")}), Error);
}

// total space of a cover: the disjoint union of its carriers with the
// summandwise projection to the base
static ContinuousMap cover_projection(const IndexedCover& c) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  std::vector<int> assign;
  for (int i = 0; i < c.arity(); ++i) {
    int off = static_cast<int>(names.size());
    auto pts = c.carrier(i).members();
    for (int p : pts) {
      names.push_back(c.label(i) + "." + c.base->name(p));
      assign.push_back(p);
    }
    for (size_t a = 0; a < pts.size(); ++a)
      for (size_t b = 0; b < pts.size(); ++b)
        if (a != b && c.base->leq(pts[a], pts[b])) rel.emplace_back(off + a, off + b);
  }
  auto total = make_space(std::move(names), rel);
  return ContinuousMap(total, c.base, std::move(assign));
}

TEST_CASE("cover projections are locally split (open covering maps are generalized covers)") {
  auto s = s1min();
  CHECK(is_locally_split(cover_projection(uv_cover(s))));
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 15) {
    std::vector<std::pair<std::string, OpenSubset>> entries;
    Bitset uni(4);
    int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      Bitset b(4);
      for (int x = 0; x < 4; ++x)
        if (rng() & 1) b = b | s->down_set(x);
      if (b.none()) continue;
      entries.emplace_back("e" + std::to_string(i), OpenSubset(s, b));
      uni = uni | b;
    }
    if (entries.empty() || uni != Bitset::full(4)) continue;
    ++done;
    CHECK(is_locally_split(cover_projection(IndexedCover(s, std::move(entries)))));
  }
}

TEST_CASE("locally split: identity, fold, and inclusion counterexample") {
  auto s = s1min();
  CHECK(is_locally_split(ContinuousMap::identity(s)));

  // G ⊔ G -> G for discrete G of order 2
  auto g = make_space({"g0", "g1"}, {});
  auto gg = make_space({"g0a", "g1a", "g0b", "g1b"}, {});
  ContinuousMap fold(gg, g, {0, 1, 0, 1});
  CHECK(is_locally_split(fold));

  // inclusion of a single minimal point: no section over points outside the image
  auto pt = point_space();
  ContinuousMap incl(pt, s, {s->index_of("x1")});
  auto w = locally_split_witness(incl);
  REQUIRE(w.has_value());
  CHECK(s->name(*w) == "x2");  // first point with empty fiber in its minimal open
}

TEST_CASE("order complex: frozen chain enumerations") {
  // one-point space -> one vertex
  auto oc0 = order_complex(*point_space());
  CHECK(oc0.dimension() == 0);
  CHECK(oc0.face_count(0) == 1);

  // 2-chain -> one edge (a cone)
  auto oc1 = order_complex(*chain2());
  CHECK(oc1.face_count(0) == 2);
  CHECK(oc1.face_count(1) == 1);

  // S1min -> 4 vertices, 4 edges, no triangles: a 4-cycle
  auto oc = order_complex(*s1min());
  CHECK(oc.face_count(0) == 4);
  CHECK(oc.face_count(1) == 4);
  CHECK(oc.dimension() == 1);
  auto c = oc.chains(2);
  c.validate();
  CHECK(homology::homology(c, 0).betti == 1);
  CHECK(homology::homology(c, 1).betti == 1);
  CHECK(homology::homology(c, 1).torsion.empty());
}

TEST_CASE("order complex of a space with a maximum has trivial reduced homology") {
  // cone on S1min: add a top point above everything
  auto disc = make_space({"x1", "x2", "y1", "y2", "z"},
                         {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
  auto c = order_complex(*disc).chains(3);
  c.validate();
  CHECK(homology::homology(c, 0).betti == 1);
  for (int k = 1; k <= 3; ++k) CHECK(homology::homology(c, k).trivial());
}

TEST_CASE("beat point core") {
  CHECK(beat_point_core(*chain2()).size() == 1);   // b is a beat point
  CHECK(beat_point_core(*s1min()).size() == 4);    // no beat points on the circle
  auto with_max = make_space({"a", "b", "c", "m"}, {{0, 3}, {1, 3}, {2, 3}});
  CHECK(beat_point_core(*with_max).size() == 1);   // cone collapses
  // oracle for S1min: check each point's strict up/down sets directly
  auto s = s1min();
  for (int x = 0; x < 4; ++x) {
    std::vector<int> down, up;
    for (int y = 0; y < 4; ++y) {
      if (y == x) continue;
      if (s->leq(y, x)) down.push_back(y);
      if (s->leq(x, y)) up.push_back(y);
    }
    bool beat = false;
    for (int m : down) {
      bool mx = true;
      for (int y : down) mx = mx && s->leq(y, m);
      beat = beat || mx;
    }
    for (int m : up) {
      bool mn = true;
      for (int y : up) mn = mn && s->leq(m, y);
      beat = beat || mn;
    }
    CHECK(!beat);
  }
}

TEST_CASE("pullback cover") {
  auto s = s1min();
  IndexedCover uv = uv_cover(s);
  // identity pullback is the same cover
  auto idpull = pullback_cover(uv, ContinuousMap::identity(s));
  for (int i = 0; i < uv.arity(); ++i) {
    CHECK(idpull.label(i) == uv.label(i));
    CHECK(idpull.carrier(i) == uv.carrier(i));
  }
  // point mapping to x1: both preimages are the whole point space
  auto pt = point_space();
  ContinuousMap f(pt, s, {s->index_of("x1")});
  auto pull = pullback_cover(uv, f);
  for (int i = 0; i < 2; ++i) CHECK(pull.carrier(i) == Bitset::full(1));
  // pointwise preimage oracle on a 6-point circle model mapping down
  auto six = make_space({"m0", "m1", "m2", "M0", "M1", "M2"},
                        {{0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}});
  ContinuousMap g(six, s,
                  {s->index_of("x1"), s->index_of("x2"), s->index_of("x1"), s->index_of("y1"),
                   s->index_of("y2"), s->index_of("x1")});
  auto gp = pullback_cover(uv, g);
  for (int i = 0; i < 2; ++i) {
    Bitset expect(6);
    for (int x = 0; x < 6; ++x)
      if (uv.carrier(i).test(g(x))) expect.set(x);
    CHECK(gp.carrier(i) == expect);
  }
}

TEST_CASE("subdivision preserves counts and homology") {
  auto oc0 = order_complex(*point_space());
  auto sd0 = subdivide(oc0);
  CHECK(sd0.face_count(0) == 1);
  CHECK(sd0.dimension() == 0);

  // Δ¹ -> path with 3 vertices, 2 edges
  OrderedComplex d1;
  d1.vertex_names = {"0", "1"};
  d1.faces = {{{0}, {1}}, {{0, 1}}};
  auto sd1 = subdivide(d1);
  CHECK(sd1.face_count(0) == 3);
  CHECK(sd1.face_count(1) == 2);

  // Δ² -> 7 vertices, 12 edges, 6 triangles
  OrderedComplex d2;
  d2.vertex_names = {"0", "1", "2"};
  d2.faces = {{{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}}};
  auto sd2 = subdivide(d2);
  sd2.check_closure();
  CHECK(sd2.face_count(0) == 7);
  CHECK(sd2.face_count(1) == 12);
  CHECK(sd2.face_count(2) == 6);

  // homology preserved on fixtures up to degree 3
  auto s2min = make_space({"a1", "a2", "b1", "b2", "c1", "c2"},
                          {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
                           {0, 4}, {0, 5}, {1, 4}, {1, 5}});
  auto wedge = make_space({"m1", "m2", "m3", "t1", "t2"},
                          {{0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
  for (auto space : {s1min(), chain2(), s2min, wedge}) {
    auto oc = order_complex(*space);
    auto sd = subdivide(oc);
    auto a = oc.chains(3);
    auto b = sd.chains(3);
    for (int k = 0; k <= 3; ++k) CHECK(homology::homology(a, k) == homology::homology(b, k));
  }
}

TEST_CASE("order complex of the six-point sphere model is the octahedron") {
  auto s2min = make_space({"a1", "a2", "b1", "b2", "c1", "c2"},
                          {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
                           {0, 4}, {0, 5}, {1, 4}, {1, 5}});
  auto oc = order_complex(*s2min);
  CHECK(oc.face_count(0) == 6);
  CHECK(oc.face_count(1) == 12);
  CHECK(oc.face_count(2) == 8);
  auto c = oc.chains(3);
  c.validate();
  CHECK(homology::homology(c, 0).betti == 1);
  CHECK(homology::homology(c, 1).trivial());
  CHECK(homology::homology(c, 2).betti == 1);
  CHECK(homology::homology(c, 2).torsion.empty());
  // wedge of two circles: K_{2,3} has H_1 = Z^2
  auto wedge = make_space({"m1", "m2", "m3", "t1", "t2"},
                          {{0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
  auto cw = order_complex(*wedge).chains(2);
  CHECK(homology::homology(cw, 0).betti == 1);
  CHECK(homology::homology(cw, 1).betti == 2);
}
