#include <set>

#include "doctest.h"
#include "quiverknot/catalog.hpp"
#include "quiverknot/coloring.hpp"

using namespace quiverknot;

namespace {

// Oracle: all n^arcs assignments filtered by is_coloring.
std::vector<Coloring> brute_force_colorings(const Diagram& d, const FiniteQuandle& x) {
  const int n = x.order(), arcs = d.arc_count();
  std::vector<Coloring> out;
  Coloring c{std::vector<int>(static_cast<std::size_t>(arcs), 0)};
  while (true) {
    if (is_coloring(d, x, c)) out.push_back(c);
    int i = arcs - 1;
    while (i >= 0 && ++c.values[i] == n) c.values[i--] = 0;
    if (i < 0) return out;
  }
}

// Oracle: number of region labellings completing (arcs, base) to a shadow coloring.
std::size_t brute_force_extensions(const Diagram& d, const FiniteQuandle& x, const Coloring& c, int base) {
  const int n = x.order(), regions = d.region_count();
  ShadowColoring s{c, std::vector<int>(static_cast<std::size_t>(regions), 0)};
  std::size_t count = 0;
  while (true) {
    if (s.regions[d.unbounded_region()] == base && is_shadow_coloring(d, x, s)) ++count;
    int i = regions - 1;
    while (i >= 0 && ++s.regions[i] == n) s.regions[i--] = 0;
    if (i < 0) return count;
  }
}

BigInt big(long long v) { return BigInt(v); }

}  // namespace

TEST_CASE("Smith diagonal of small integer matrices") {
  CHECK(smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<BigInt>{big(2), big(6), big(12)});
  CHECK(smith_diagonal({{0, 0}, {0, 0}}) == std::vector<BigInt>{big(0), big(0)});
  CHECK(smith_diagonal({{6, 4}}) == std::vector<BigInt>{big(2)});
  CHECK(smith_diagonal({{2, 0}, {0, 3}}) == std::vector<BigInt>{big(1), big(6)});
  CHECK(smith_diagonal({{4}, {6}, {0}}) == std::vector<BigInt>{big(2)});
  CHECK(smith_diagonal({}).empty());
  // Divisibility chain on a larger matrix.
  const auto diag = smith_diagonal({{3, 1, 4, 1}, {5, 9, 2, 6}, {5, 3, 5, 8}, {9, 7, 9, 3}});
  for (std::size_t i = 0; i + 1 < diag.size(); ++i)
    if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
}

TEST_CASE("enumeration agrees with brute force on catalog knots") {
  const auto catalog = Catalog::defaults();
  for (const auto& name : catalog.names()) {
    const auto& d = catalog.at(name).diagram;
    for (int n : {2, 3, 4}) {
      CAPTURE(name);
      CAPTURE(n);
      const auto x = FiniteQuandle::dihedral(n);
      CHECK(enumerate_colorings(d, x) == brute_force_colorings(d, x));
    }
  }
  const auto a = FiniteQuandle::alexander(5, 2);
  for (const char* name : {"3_1", "4_1", "5_1"}) {
    const auto& d = catalog.at(name).diagram;
    CHECK(enumerate_colorings(d, a) == brute_force_colorings(d, a));
  }
}

TEST_CASE("Smith-form counts agree with enumeration for n in 2..9") {
  const auto catalog = Catalog::defaults();
  for (const auto& name : catalog.names()) {
    const auto& d = catalog.at(name).diagram;
    for (int n = 2; n <= 9; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      CHECK(count_colorings_dihedral(d, n) == BigInt(enumerate_colorings(d, FiniteQuandle::dihedral(n)).size()));
    }
  }
}

TEST_CASE("knot determinants") {
  const auto catalog = Catalog::defaults();
  const std::vector<std::pair<const char*, long long>> table = {
      {"unknot", 1}, {"3_1", 3}, {"3_1_kinked", 3}, {"4_1", 5},  {"5_1", 5},   {"5_2", 7},
      {"6_1", 9},    {"6_2", 11}, {"6_3", 13},       {"7_4", 15}, {"8_10", 27}, {"8_18", 45}};
  for (auto [name, det] : table) {
    CAPTURE(name);
    CHECK(coloring_determinant(catalog.at(name).diagram) == det);
  }
}

TEST_CASE("specific coloring counts") {
  const auto catalog = Catalog::defaults();
  CHECK(count_colorings_dihedral(catalog.at("4_1").diagram, 5) == 25);
  CHECK(count_colorings_dihedral(catalog.at("5_1").diagram, 5) == 25);
  CHECK(count_colorings_dihedral(catalog.at("8_10").diagram, 9) == 81);
  CHECK(count_colorings_dihedral(catalog.at("8_18").diagram, 9) == 81);
  CHECK(count_colorings_dihedral(Diagram::unknot(), 7) == 7);
  CHECK(count_colorings_dihedral(catalog.at("3_1").diagram, 3) == 9);
  // Alexander quandle Z_7 with t = 3 is a root of t^2 - t + 1, so the trefoil gets 49 colorings.
  CHECK(enumerate_colorings(catalog.at("3_1").diagram, FiniteQuandle::alexander(7, 3)).size() == 49);
  CHECK(enumerate_colorings(catalog.at("3_1").diagram, FiniteQuandle::alexander(7, 2)).size() == 7);
}

TEST_CASE("trivial colorings and endomorphism images") {
  const auto catalog = Catalog::defaults();
  const auto& d = catalog.at("4_1").diagram;
  const auto x = FiniteQuandle::dihedral(5);
  const auto colorings = enumerate_colorings(d, x);
  std::size_t trivial = 0;
  for (const auto& c : colorings) trivial += c.is_trivial();
  CHECK(trivial == 5);
  CHECK(trivial_coloring(d, 3).is_trivial());
  const std::set<Coloring> all(colorings.begin(), colorings.end());
  for (const auto& f : enumerate_endos(x))
    for (const auto& c : colorings) CHECK(all.count(apply_endo(f, c)) == 1);
}

TEST_CASE("shadow extension exists, is unique and ignores the propagation order") {
  const auto catalog = Catalog::defaults();
  for (const char* name : {"3_1", "4_1", "3_1_kinked"}) {
    const auto& d = catalog.at(name).diagram;
    const auto x = FiniteQuandle::dihedral(3);
    for (const auto& c : enumerate_colorings(d, x))
      for (int base = 0; base < 3; ++base) {
        const auto bfs = extend_shadow(d, x, c, base, PropagationOrder::breadth_first);
        const auto dfs = extend_shadow(d, x, c, base, PropagationOrder::depth_first);
        CHECK(bfs == dfs);
        CHECK(is_shadow_coloring(d, x, bfs));
        CHECK(bfs.regions[d.unbounded_region()] == base);
        CHECK(brute_force_extensions(d, x, c, base) == 1);
      }
  }
}

TEST_CASE("|SCol_X(D, a)| = |Col_X(D)|") {
  const auto catalog = Catalog::defaults();
  for (const auto& name : catalog.names()) {
    const auto& d = catalog.at(name).diagram;
    const auto x = FiniteQuandle::dihedral(5);
    const auto colorings = enumerate_colorings(d, x);
    std::set<ShadowColoring> shadows;
    for (const auto& c : colorings) shadows.insert(extend_shadow(d, x, c, 2));
    CHECK(shadows.size() == colorings.size());
  }
}

TEST_CASE("invalid colorings are rejected") {
  const auto d = Catalog::defaults().at("3_1").diagram;
  const auto x = FiniteQuandle::dihedral(3);
  CHECK_FALSE(is_coloring(d, x, Coloring{{0, 0, 1}}));
  CHECK(is_coloring(d, x, Coloring{{0, 1, 2}}));
  CHECK_THROWS_AS(extend_shadow(d, x, Coloring{{0, 0, 1}}, 0), Error);
}
