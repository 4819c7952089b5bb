#include "quiverknot/cocycle.hpp"

#include <sstream>

namespace quiverknot {

Cocycle3 Cocycle3::zero(int quandle_order, int modulus) {
  if (quandle_order < 1 || modulus < 1) throw InvalidParameter("cocycle dimensions must be positive");
  const auto n = static_cast<std::size_t>(quandle_order);
  return Cocycle3(quandle_order, modulus, std::vector<int>(n * n * n, 0));
}

Cocycle3 Cocycle3::from_values(int quandle_order, int modulus, std::vector<int> values) {
  if (quandle_order < 1 || modulus < 1) throw InvalidParameter("cocycle dimensions must be positive");
  const auto n = static_cast<std::size_t>(quandle_order);
  if (values.size() != n * n * n) throw InvalidParameter("cocycle table must have n^3 entries");
  for (int& v : values) v = mod(v, modulus);
  return Cocycle3(quandle_order, modulus, std::move(values));
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

long long pow_mod(long long base, long long exp, long long modulus) {
  long long result = 1 % modulus;
  base %= modulus;
  while (exp > 0) {
    if (exp & 1) result = static_cast<long long>(static_cast<__int128>(result) * base % modulus);
    base = static_cast<long long>(static_cast<__int128>(base) * base % modulus);
    exp >>= 1;
  }
  return result;
}

}  // namespace

Cocycle3 mochizuki(int p) {
  if (p == 2 || !is_prime(p))
    throw InvalidParameter("Mochizuki's cocycle needs an odd prime, got " + std::to_string(p));
  const long long p2 = static_cast<long long>(p) * p;
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(p) * p * p);
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y)
      for (int z = 0; z < p; ++z) {
        const long long w = mod(2LL * z - y, p);
        // y^p + w^p - 2 z^p is divisible by p (Fermat), so its value mod p^2 is p * q.
        const long long numerator = mod(pow_mod(y, p, p2) + pow_mod(w, p, p2) - 2 * pow_mod(z, p, p2), static_cast<int>(p2));
        if (numerator % p != 0) throw InternalError("Mochizuki numerator not divisible by p");
        const long long q = numerator / p;
        values.push_back(mod((x - y) * q, p));
      }
  return Cocycle3::from_values(p, p, std::move(values));
}

std::optional<CocycleWitness> verify_cocycle(const Cocycle3& theta, const FiniteQuandle& q) {
  if (theta.quandle_order() != q.order()) throw InvalidParameter("cocycle and quandle orders differ");
  using C = CocycleWitness::Condition;
  const int n = q.order(), m = theta.modulus();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (theta(x, x, y) != 0) return CocycleWitness{C::degenerate_xxy, x, x, y, 0};
      if (theta(x, y, y) != 0) return CocycleWitness{C::degenerate_xyy, x, y, y, 0};
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          const long long lhs = theta(x, y, z) + theta(q.op(x, z), q.op(y, z), w) + theta(x, z, w);
          const long long rhs = theta(q.op(x, y), z, w) + theta(x, y, w) + theta(q.op(x, w), q.op(y, w), q.op(z, w));
          if (mod(lhs - rhs, m) != 0) return CocycleWitness{C::identity, x, y, z, w};
        }
  return std::nullopt;
}

int weight_corner(const Diagram& d, int crossing, WeightConvention convention) {
  const Crossing& x = d.crossings().at(static_cast<std::size_t>(crossing));
  // Slots: 0 under-in (south), 1 east, 2 under-out (north), 3 west. Positive
  // crossings carry the over-strand west to east.
  if (convention == WeightConvention::right_of_both) return x.sign > 0 ? 0 : 1;
  return x.sign > 0 ? 3 : 0;
}

int weight_sum(const Diagram& d, const ShadowColoring& s, const Cocycle3& theta, WeightConvention convention) {
  long long total = 0;
  for (int k = 0; k < d.crossing_count(); ++k) {
    const Crossing& x = d.crossings()[k];
    const int region = s.regions[x.corner_regions[weight_corner(d, k, convention)]];
    const int under = convention == WeightConvention::right_of_both ? s.arcs[crossing_relation(d, k).source]
                                                                     : s.arcs[x.under_in_arc];
    total += x.sign * theta(region, under, s.arcs[x.over_arc]);
  }
  return mod(total, theta.modulus());
}

ValueMultiset invariant_multiset_base(const Diagram& d, const FiniteQuandle& x, const Cocycle3& theta, int base,
                                      WeightConvention convention) {
  if (theta.quandle_order() != x.order()) throw InvalidParameter("cocycle and quandle orders differ");
  ValueMultiset out;
  for (const auto& c : enumerate_colorings(d, x)) ++out[weight_sum(d, extend_shadow(d, x, c, base), theta, convention)];
  return out;
}

ValueMultiset invariant_multiset(const Diagram& d, const FiniteQuandle& x, const Cocycle3& theta,
                                 WeightConvention convention) {
  if (theta.quandle_order() != x.order()) throw InvalidParameter("cocycle and quandle orders differ");
  ValueMultiset out;
  const auto colorings = enumerate_colorings(d, x);
  for (int base = 0; base < x.order(); ++base)
    for (const auto& c : colorings) ++out[weight_sum(d, extend_shadow(d, x, c, base), theta, convention)];
  return out;
}

Cocycle3 parse_cocycle_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0, m = 0;
  if (!(in >> n >> m) || n < 1 || m < 1) throw ParseError("expected cocycle header 'n m'", 0);
  std::vector<int> values(static_cast<std::size_t>(n) * n * n);
  for (auto& v : values) {
    const auto pos = static_cast<std::size_t>(std::max<std::streamoff>(0, in.tellg()));
    if (!(in >> v)) throw ParseError("cocycle table ended early", pos);
  }
  std::string rest;
  if (in >> rest) throw ParseError("trailing data after cocycle table", text.size() - rest.size());
  return Cocycle3::from_values(n, m, std::move(values));
}

std::string format_cocycle_table(const Cocycle3& theta) {
  std::ostringstream os;
  const int n = theta.quandle_order();
  os << n << " " << theta.modulus() << "\n";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) os << (z ? " " : "") << theta(x, y, z);
      os << "\n";
    }
  return os.str();
}

}  // namespace quiverknot
