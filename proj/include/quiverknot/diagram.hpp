#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quiverknot {

/// Planar diagram code. Each crossing lists four edge labels counterclockwise,
/// starting at the incoming under-strand; labels along a component are
/// consecutive integers increasing with the orientation and wrapping around.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  // Edge labels of each component in orientation order (inferred by parse_pd).
  std::vector<std::vector<int>> components;

  bool operator==(const PDCode&) const = default;
};

PDCode parse_pd(std::string_view text);
// Recomputes and validates `components` for an already-populated crossing list.
PDCode make_pd(std::vector<std::array<int, 4>> crossings);

// Corner q of a crossing is the region between slots q and q+1 (counterclockwise).
struct CornerRef {
  int crossing = 0;
  int quadrant = 0;
  bool operator==(const CornerRef&) const = default;
};

struct SlotRef {
  int crossing = -1;
  int slot = -1;
  bool operator==(const SlotRef&) const = default;
};

struct Crossing {
  std::array<int, 4> edges{};  // PD quadruple
  int over_arc = 0;
  int under_in_arc = 0;
  int under_out_arc = 0;
  int sign = 0;  // +1 when the over-strand runs left to right seen along the under-strand
  std::array<int, 4> corner_regions{};

  bool operator==(const Crossing&) const = default;
};

struct Edge {
  int label = 0;
  int arc = 0;
  SlotRef tail;
  SlotRef head;
  int left_region = 0;
  int right_region = 0;

  bool operator==(const Edge&) const = default;
};

/// Oriented link diagram with arcs (over-strand segments between undercrossings),
/// signed crossings, complementary regions and the left/right region of every edge.
class Diagram {
 public:
  static Diagram build(const PDCode& pd, std::optional<CornerRef> unbounded_corner = std::nullopt);
  static Diagram unknot();

  int arc_count() const noexcept { return arc_count_; }
  int region_count() const noexcept { return static_cast<int>(region_corners_.size()); }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int unbounded_region() const noexcept { return unbounded_; }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const PDCode& pd() const noexcept { return pd_; }
  const std::vector<std::vector<CornerRef>>& region_corners() const noexcept { return region_corners_; }
  // Edge labels making up each arc, ascending.
  const std::vector<std::vector<int>>& arc_edges() const noexcept { return arc_edges_; }

  int arc_of_edge(int label) const;
  int region_of(CornerRef corner) const;
  int writhe() const;

  /// Same diagram with another face declared unbounded.
  Diagram with_unbounded_region(int region) const;

  bool operator==(const Diagram&) const = default;

 private:
  Diagram() = default;

  PDCode pd_;
  int arc_count_ = 0;
  int unbounded_ = 0;
  std::vector<Crossing> crossings_;
  std::vector<Edge> edges_;
  std::vector<std::vector<CornerRef>> region_corners_;
  std::vector<std::vector<int>> arc_edges_;
};

/// The arcs (source, over, target) at a crossing, related by
/// c(source) * c(over) = c(target) in any coloring. The source arc is the
/// under-arc on the right of the oriented over-strand: the incoming under-arc
/// at a positive crossing and the outgoing one at a negative crossing.
struct CrossingRelation {
  int source = 0;
  int over = 0;
  int target = 0;
};

CrossingRelation crossing_relation(const Diagram& d, int crossing);

/// "X(a,b,c,d) X(...)" form; the crossingless unknot emits an empty string.
std::string emit_pd(const Diagram& d);

}  // namespace quiverknot
