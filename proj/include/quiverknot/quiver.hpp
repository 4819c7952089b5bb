#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "quiverknot/cocycle.hpp"

namespace quiverknot {

struct QuiverEdge {
  int source = 0;
  int target = 0;
  int endo = 0;  // index into WeightedQuiver::endos
  bool operator==(const QuiverEdge&) const = default;
};

/// Directed multigraph on colorings with one edge v -> f o v per vertex and f in S.
/// Shadow cocycle quivers additionally carry the shadow coloring and its weight per vertex.
struct WeightedQuiver {
  std::vector<Coloring> vertices;
  std::vector<ShadowColoring> shadows;
  std::optional<std::vector<int>> weights;
  int weight_modulus = 0;
  std::vector<QuiverEdge> edges;
  std::vector<QuandleMap> endos;

  int vertex_count() const noexcept { return static_cast<int>(vertices.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges.size()); }
};

WeightedQuiver coloring_quiver(const Diagram& d, const FiniteQuandle& x, const std::vector<QuandleMap>& endos);

WeightedQuiver shadow_cocycle_quiver(const Diagram& d, const FiniteQuandle& x, const std::vector<QuandleMap>& endos,
                                     int base, const Cocycle3& theta);

/// Same quiver with vertex v renamed to perm[v].
WeightedQuiver relabel_vertices(const WeightedQuiver& q, const std::vector<int>& perm);

struct IsoResult {
  bool isomorphic = false;
  std::vector<int> witness;  // witness[v] = image in the second quiver
};

/// Directed multigraph isomorphism ignoring edge labels; with respect_weights the
/// bijection must also preserve vertex weights. Any witness is verified edge by edge.
IsoResult quiver_isomorphic(const WeightedQuiver& a, const WeightedQuiver& b, bool respect_weights);

/// Two-variable polynomial with exponents in Z_m.
struct Polynomial2 {
  int modulus = 0;
  std::map<std::pair<int, int>, long long> coefficients;

  long long total() const;
  bool operator==(const Polynomial2&) const = default;
};

/// Sum over edges (v, w) of s^weight(v) t^weight(w).
Polynomial2 cocycle_polynomial(const WeightedQuiver& q);

/// "5 + 10st + 10s^4t^4": terms sorted by (i, j); unit coefficients and zero exponents elided.
std::string to_string(const Polynomial2& p);

std::string to_dot(const WeightedQuiver& q, bool collapse_parallel = false);
nlohmann::json to_json(const WeightedQuiver& q);

}  // namespace quiverknot
