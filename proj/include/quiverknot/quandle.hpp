#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quiverknot/errors.hpp"

namespace quiverknot {

// Reduces v into 0..n-1.
inline int mod(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

enum class QuandleKind { dihedral, alexander, table };

// Witness of a failed quandle axiom: axiom is 1, 2 or 3; z is only used by Q3.
struct AxiomWitness {
  int axiom = 0;
  int x = 0;
  int y = 0;
  std::optional<int> z;
};

class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(AxiomWitness w);
  const AxiomWitness& witness() const noexcept { return witness_; }

 private:
  AxiomWitness witness_;
};

/// A quandle on {0, ..., n-1} stored as its full operation table together with
/// the table of right inverses, so that both x*y and the unique solution of
/// x*y = z are O(1) lookups.
class FiniteQuandle {
 public:
  static FiniteQuandle dihedral(int n);
  static FiniteQuandle alexander(int n, long long t);
  /// Validates Q1-Q3; throws AxiomViolation with the first failing tuple.
  static FiniteQuandle from_table(std::vector<std::vector<int>> op);

  int order() const noexcept { return n_; }
  int op(int x, int y) const { return op_[index(x, y)]; }
  int inv_op(int z, int y) const { return inv_[index(z, y)]; }

  QuandleKind kind() const noexcept { return kind_; }
  bool is_dihedral() const noexcept { return kind_ == QuandleKind::dihedral; }
  // Alexander parameter t (n-1 for dihedral quandles).
  std::optional<long long> alexander_t() const noexcept { return t_; }
  std::string describe() const;

  bool operator==(const FiniteQuandle& other) const { return n_ == other.n_ && op_ == other.op_; }

 private:
  FiniteQuandle(int n, std::vector<int> op, QuandleKind kind, std::optional<long long> t);
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(x) * n_ + y; }

  int n_;
  std::vector<int> op_;
  std::vector<int> inv_;
  QuandleKind kind_;
  std::optional<long long> t_;
};

// Returns the first axiom violation of a raw table, if any.
std::optional<AxiomWitness> check_axioms(const std::vector<std::vector<int>>& op);

/// Text form: first line n, then n rows of n integers (row x lists x*0 .. x*(n-1)).
FiniteQuandle parse_quandle_table(std::string_view text);
std::string format_quandle_table(const FiniteQuandle& q);

struct QuandleMap {
  int source_order = 0;
  int target_order = 0;
  std::vector<int> image;
  // (a, b) with image[x] = a*x + b mod n; set only between dihedral quandles of equal order.
  std::optional<std::pair<int, int>> affine_form;

  int operator()(int x) const { return image[static_cast<std::size_t>(x)]; }
  bool is_bijective() const;
  bool is_constant() const;
  auto operator<=>(const QuandleMap& o) const { return image <=> o.image; }
  bool operator==(const QuandleMap& o) const {
    return source_order == o.source_order && target_order == o.target_order && image == o.image;
  }
};

bool is_homomorphism(const std::vector<int>& image, const FiniteQuandle& source,
                     const FiniteQuandle& target);

QuandleMap identity_map(const FiniteQuandle& x);
/// f(x) = a*x + b on a dihedral quandle; throws InvalidParameter if not a homomorphism.
QuandleMap affine_map(const FiniteQuandle& x, long long a, long long b);
/// Wraps an arbitrary image vector, validating the homomorphism property.
QuandleMap make_map(const FiniteQuandle& source, const FiniteQuandle& target, std::vector<int> image);

/// All homomorphisms source -> target in lexicographic order of their image vectors.
std::vector<QuandleMap> enumerate_homs(const FiniteQuandle& source, const FiniteQuandle& target);
std::vector<QuandleMap> enumerate_endos(const FiniteQuandle& x);
std::vector<QuandleMap> enumerate_autos(const FiniteQuandle& x);

/// (f o g)(x) = f(g(x)).
QuandleMap compose(const QuandleMap& f, const QuandleMap& g);

}  // namespace quiverknot
