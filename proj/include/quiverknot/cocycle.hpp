#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverknot/coloring.hpp"

namespace quiverknot {

/// Z_m-valued function on X^3, stored densely (x-major, then y, then z).
class Cocycle3 {
 public:
  static Cocycle3 zero(int quandle_order, int modulus);
  static Cocycle3 from_values(int quandle_order, int modulus, std::vector<int> values);

  int quandle_order() const noexcept { return n_; }
  int modulus() const noexcept { return m_; }
  int operator()(int x, int y, int z) const { return table_[index(x, y, z)]; }
  const std::vector<int>& values() const noexcept { return table_; }

 private:
  Cocycle3(int n, int m, std::vector<int> table) : n_(n), m_(m), table_(std::move(table)) {}
  std::size_t index(int x, int y, int z) const {
    return (static_cast<std::size_t>(x) * n_ + y) * n_ + z;
  }

  int n_;
  int m_;
  std::vector<int> table_;
};

bool is_prime(long long n);

/// Mochizuki's 3-cocycle on R_p with values in Z_p:
/// theta(x, y, z) = (x - y) * (y^p + (2z - y)^p - 2 z^p) / p  (mod p),
/// with 2z - y reduced into 0..p-1 before exponentiation.
Cocycle3 mochizuki(int p);

struct CocycleWitness {
  enum class Condition { degenerate_xxy, degenerate_xyy, identity };
  Condition condition = Condition::identity;
  int x = 0, y = 0, z = 0, w = 0;
};

/// Exhaustive check of both degeneracy conditions and the four-variable identity.
std::optional<CocycleWitness> verify_cocycle(const Cocycle3& theta, const FiniteQuandle& x);

/// Which corner region and under-arc a crossing's weight reads.
///  behind_both:   the region from which both strand orientations point away
///                 (between the incoming under- and incoming over-edges), with the
///                 incoming under-arc. This is the default.
///  right_of_both: the region to the right of both strands, with the under-arc on
///                 the right of the over-strand (the source arc of the crossing
///                 relation). Kept as the documented alternative.
enum class WeightConvention { behind_both, right_of_both };

/// Corner quadrant whose region labels the weight at crossing k.
int weight_corner(const Diagram& d, int crossing, WeightConvention convention);

/// Sum over crossings of sign * theta(region, under-arc, over-arc), in Z_m.
int weight_sum(const Diagram& d, const ShadowColoring& s, const Cocycle3& theta,
               WeightConvention convention = WeightConvention::behind_both);

using ValueMultiset = std::map<int, std::size_t>;

/// Weights over all shadow colorings whose unbounded region is labelled base.
ValueMultiset invariant_multiset_base(const Diagram& d, const FiniteQuandle& x, const Cocycle3& theta, int base,
                                      WeightConvention convention = WeightConvention::behind_both);
/// Weights over all shadow colorings.
ValueMultiset invariant_multiset(const Diagram& d, const FiniteQuandle& x, const Cocycle3& theta,
                                 WeightConvention convention = WeightConvention::behind_both);

/// Text form: header "n m", then n^2 lines of n values (x-major, then y, then z).
Cocycle3 parse_cocycle_table(std::string_view text);
std::string format_cocycle_table(const Cocycle3& theta);

}  // namespace quiverknot
