#include <set>

#include "doctest.h"
#include "quiverknot/catalog.hpp"
#include "quiverknot/coloring.hpp"

using namespace quiverknot;

namespace {

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
// Reidemeister-II picture of the two-component unlink: one circle pushed across the other.
const char* kUnlinkR2 = "X(1,3,2,4) X(2,3,1,4)";

// Oracle for the literal reading "under_in * over = under_out" at every crossing,
// independent of crossing_relation.
std::size_t literal_count(const Diagram& d, const FiniteQuandle& x) {
  const int n = x.order(), arcs = d.arc_count();
  std::vector<int> c(static_cast<std::size_t>(arcs), 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& k : d.crossings()) ok = ok && x.op(c[k.under_in_arc], c[k.over_arc]) == c[k.under_out_arc];
    if (ok) ++count;
    int i = arcs - 1;
    while (i >= 0 && ++c[i] == n) c[i--] = 0;
    if (i < 0) return count;
  }
}

}  // namespace

TEST_CASE("PD parsing accepts the three common spellings") {
  const auto a = parse_pd(kTrefoil);
  const auto b = parse_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]");
  const auto c = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
  CHECK(a.crossings == b.crossings);
  CHECK(a.crossings == c.crossings);
  CHECK(a.crossings.size() == 3);
  CHECK(a.components.size() == 1);
}

TEST_CASE("PD parse errors carry a position") {
  try {
    parse_pd("X(1,4,2,5) Y(3,6,4,1)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 11);
  }
  CHECK_THROWS_AS(parse_pd("X(1,4,2"), ParseError);
  CHECK_THROWS_AS(parse_pd("X(1,4,a,5)"), ParseError);
  CHECK_THROWS_AS(parse_pd("X(1,2,3)"), ParseError);
}

TEST_CASE("PD structure checks") {
  CHECK_THROWS_AS(parse_pd("X(1,2,3,4)"), StructuralError);
  CHECK_THROWS_AS(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) X(1,1,1,1)"), StructuralError);
  CHECK_THROWS_AS(Diagram::build(parse_pd("X(1,1,2,3) X(2,4,3,4)")), StructuralError);         // non-planar
  CHECK_THROWS_AS(Diagram::build(parse_pd("X(1,2,2,1) X(3,4,4,3)")), UnsupportedError);        // split
  CHECK_THROWS_AS(Diagram::build(parse_pd("X(1,4,2,5) X(3,6,4,1) X(6,2,5,3)")), StructuralError);  // bad orientation
}

TEST_CASE("trefoil diagram: arcs, regions, signs") {
  const auto d = Diagram::build(parse_pd(kTrefoil));
  CHECK(d.crossing_count() == 3);
  CHECK(d.arc_count() == 3);
  CHECK(d.region_count() == 5);
  CHECK(d.writhe() == -3);
  for (const auto& x : d.crossings()) CHECK(x.sign == -1);
  // Mirror image: reversing every over/under choice flips all signs.
  const auto m = Diagram::build(parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"));
  CHECK(m.writhe() == 3);
  // Default unbounded region is a largest face (the trefoil's outer face has 3 corners).
  CHECK(d.region_corners()[static_cast<std::size_t>(d.unbounded_region())].size() == 3);
}

TEST_CASE("every edge separates two distinct regions and every corner is in exactly one face") {
  const auto catalog = Catalog::defaults();
  for (const auto& name : catalog.names()) {
    const auto& d = catalog.at(name).diagram;
    CAPTURE(name);
    CHECK(d.region_count() == d.crossing_count() + 2);
    std::set<std::pair<int, int>> corners;
    for (const auto& face : d.region_corners())
      for (const auto& c : face) CHECK(corners.insert({c.crossing, c.quadrant}).second);
    CHECK(corners.size() == static_cast<std::size_t>(4 * d.crossing_count()));
    for (const auto& e : d.edges()) CHECK(e.left_region != e.right_region);
  }
}

TEST_CASE("arcs group edges through over-crossings") {
  const auto d = Diagram::build(parse_pd(kTrefoil));
  std::set<int> seen;
  for (const auto& arc : d.arc_edges())
    for (int label : arc) CHECK(seen.insert(label).second);
  CHECK(seen.size() == 6);
  for (const auto& x : d.crossings()) {
    CHECK(d.arc_of_edge(x.edges[1]) == d.arc_of_edge(x.edges[3]));
    CHECK(x.over_arc == d.arc_of_edge(x.edges[1]));
    CHECK(x.under_in_arc == d.arc_of_edge(x.edges[0]));
    CHECK(x.under_out_arc == d.arc_of_edge(x.edges[2]));
  }
}

TEST_CASE("crossingless unknot") {
  const auto u = Diagram::unknot();
  CHECK(u.arc_count() == 1);
  CHECK(u.region_count() == 2);
  CHECK(u.crossing_count() == 0);
  CHECK(u.writhe() == 0);
  CHECK(emit_pd(u).empty());
}

TEST_CASE("emit_pd round-trips") {
  const auto d = Diagram::build(parse_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]"));
  CHECK(emit_pd(d) == kTrefoil);
  CHECK(Diagram::build(parse_pd(emit_pd(d))) == d);
}

TEST_CASE("two-edge components are oriented consistently") {
  // Hopf link diagrams: each component has two edges, so orientation must be inferred.
  const auto pos = Diagram::build(parse_pd("X(1,3,2,4) X(3,1,4,2)"));
  const auto neg = Diagram::build(parse_pd("X(1,3,2,4) X(4,2,3,1)"));
  CHECK(pos.writhe() == 2);
  CHECK(neg.writhe() == -2);
}

TEST_CASE("choosing another unbounded face keeps the diagram otherwise identical") {
  const auto d = Diagram::build(parse_pd(kTrefoil));
  for (int r = 0; r < d.region_count(); ++r) {
    const auto e = d.with_unbounded_region(r);
    CHECK(e.unbounded_region() == r);
    CHECK(e.crossings() == d.crossings());
  }
  CHECK_THROWS_AS(d.with_unbounded_region(5), InvalidParameter);
  const auto pinned = Diagram::build(parse_pd(kTrefoil), CornerRef{0, 2});
  CHECK(pinned.unbounded_region() == pinned.region_of({0, 2}));
}

TEST_CASE("crossing relation: the source is the under-arc to the right of the over-strand") {
  for (const char* pd : {kTrefoil, "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"}) {
    const auto k = Diagram::build(parse_pd(pd));
    for (int i = 0; i < k.crossing_count(); ++i) {
      const auto& x = k.crossings()[i];
      const auto rel = crossing_relation(k, i);
      CHECK(rel.over == x.over_arc);
      if (x.sign > 0) {
        CHECK(rel.source == x.under_in_arc);
        CHECK(rel.target == x.under_out_arc);
      } else {
        CHECK(rel.source == x.under_out_arc);
        CHECK(rel.target == x.under_in_arc);
      }
    }
  }
}

TEST_CASE("crossing convention is pinned by a Reidemeister-II diagram of the unlink") {
  // The two-component unlink has n^2 colorings by every quandle of order n.
  // Reading "under_in * over = under_out" literally at both crossings of the
  // R-II picture would lose colorings for Alexander quandles with t^2 != 1.
  const auto d = Diagram::build(parse_pd(kUnlinkR2));
  CHECK(d.pd().components.size() == 2);
  CHECK(d.writhe() == 0);
  for (auto [n, t] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {5, 3}, {7, 2}, {7, 3}}) {
    const auto x = FiniteQuandle::alexander(n, t);
    CAPTURE(n);
    CAPTURE(t);
    CHECK(enumerate_colorings(d, x).size() == static_cast<std::size_t>(n * n));
    if (mod(static_cast<long long>(t) * t, n) != 1) CHECK(literal_count(d, x) == static_cast<std::size_t>(n));
  }
}
