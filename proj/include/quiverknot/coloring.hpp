#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "quiverknot/diagram.hpp"
#include "quiverknot/quandle.hpp"
#include "quiverknot/smith.hpp"

namespace quiverknot {

/// Quandle element per arc, indexed by arc id.
struct Coloring {
  std::vector<int> values;

  int operator[](std::size_t arc) const { return values[arc]; }
  bool is_trivial() const;
  auto operator<=>(const Coloring&) const = default;
};

struct ShadowColoring {
  Coloring arcs;
  std::vector<int> regions;  // indexed by region id

  auto operator<=>(const ShadowColoring&) const = default;
};

struct ColoringHash {
  std::size_t operator()(const Coloring& c) const noexcept;
};

bool is_coloring(const Diagram& d, const FiniteQuandle& x, const Coloring& c);
bool is_shadow_coloring(const Diagram& d, const FiniteQuandle& x, const ShadowColoring& s);

/// Every X-coloring of d in lexicographic order.
std::vector<Coloring> enumerate_colorings(const Diagram& d, const FiniteQuandle& x);

/// Dihedral relation matrix: one row per crossing, source - 2*over + target.
struct ColoringMatrix {
  int arcs = 0;
  std::vector<std::vector<int>> rows;
  std::vector<BigInt> elementary_divisors;
};

ColoringMatrix coloring_matrix(const Diagram& d);

/// |Col_{R_n}(d)| = n^(arcs - r) * prod_{i<r} gcd(d_i, n) from the Smith form.
BigInt count_colorings_dihedral(const Diagram& d, int n);

/// Product of the nonzero elementary divisors; the knot determinant for knot diagrams.
BigInt coloring_determinant(const Diagram& d);

enum class PropagationOrder { breadth_first, depth_first };

/// Unique shadow coloring extending c with the unbounded region labelled base.
ShadowColoring extend_shadow(const Diagram& d, const FiniteQuandle& x, const Coloring& c, int base,
                             PropagationOrder order = PropagationOrder::breadth_first);

Coloring apply_endo(const QuandleMap& f, const Coloring& c);
Coloring trivial_coloring(const Diagram& d, int value);

}  // namespace quiverknot
