#include "quiverknot/quandle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace quiverknot {

namespace {

std::string witness_message(const AxiomWitness& w) {
  std::ostringstream os;
  os << "quandle axiom Q" << w.axiom << " fails at (" << w.x << ", " << w.y;
  if (w.z) os << ", " << *w.z;
  os << ")";
  return os.str();
}

std::vector<std::vector<int>> affine_table(int n, long long t) {
  std::vector<std::vector<int>> op(static_cast<std::size_t>(n), std::vector<int>(n));
  const int tn = mod(t, n);
  const int one_minus_t = mod(1 - static_cast<long long>(tn), n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      op[x][y] = mod(static_cast<long long>(tn) * x + static_cast<long long>(one_minus_t) * y, n);
  return op;
}

std::vector<int> flatten(const std::vector<std::vector<int>>& op) {
  std::vector<int> flat;
  flat.reserve(op.size() * op.size());
  for (const auto& row : op) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

std::optional<std::pair<int, int>> affine_of(const std::vector<int>& image, int n) {
  if (n == 1) return std::pair{0, 0};
  const int b = image[0];
  const int a = mod(static_cast<long long>(image[1]) - b, n);
  return std::pair{a, b};
}

}  // namespace

AxiomViolation::AxiomViolation(AxiomWitness w) : Error(witness_message(w)), witness_(w) {}

std::optional<AxiomWitness> check_axioms(const std::vector<std::vector<int>>& op) {
  const int n = static_cast<int>(op.size());
  for (int x = 0; x < n; ++x)
    if (op[x][x] != x) return AxiomWitness{1, x, x, std::nullopt};
  for (int y = 0; y < n; ++y) {
    std::vector<int> seen(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
      const int z = op[x][y];
      if (seen[z] >= 0) return AxiomWitness{2, seen[z], y, x};
      seen[z] = x;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (op[op[x][y]][z] != op[op[x][z]][op[y][z]]) return AxiomWitness{3, x, y, z};
  return std::nullopt;
}

FiniteQuandle::FiniteQuandle(int n, std::vector<int> op, QuandleKind kind, std::optional<long long> t)
    : n_(n), op_(std::move(op)), inv_(op_.size()), kind_(kind), t_(t) {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) inv_[index(this->op(x, y), y)] = x;
}

FiniteQuandle FiniteQuandle::dihedral(int n) {
  if (n < 1) throw InvalidParameter("dihedral quandle order must be positive, got " + std::to_string(n));
  return FiniteQuandle(n, flatten(affine_table(n, n - 1)), QuandleKind::dihedral, n - 1);
}

FiniteQuandle FiniteQuandle::alexander(int n, long long t) {
  if (n < 1) throw InvalidParameter("Alexander quandle order must be positive, got " + std::to_string(n));
  if (std::gcd(static_cast<long long>(mod(t, n)), static_cast<long long>(n)) != 1)
    throw InvalidParameter("Alexander quandle needs gcd(t, n) = 1, got t=" + std::to_string(t) +
                           ", n=" + std::to_string(n));
  return FiniteQuandle(n, flatten(affine_table(n, t)), QuandleKind::alexander, mod(t, n));
}

FiniteQuandle FiniteQuandle::from_table(std::vector<std::vector<int>> op) {
  const int n = static_cast<int>(op.size());
  if (n < 1) throw InvalidParameter("quandle table is empty");
  for (const auto& row : op) {
    if (static_cast<int>(row.size()) != n) throw InvalidParameter("quandle table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw InvalidParameter("quandle table entry out of range: " + std::to_string(v));
  }
  if (auto w = check_axioms(op)) throw AxiomViolation(*w);
  return FiniteQuandle(n, flatten(op), QuandleKind::table, std::nullopt);
}

std::string FiniteQuandle::describe() const {
  switch (kind_) {
    case QuandleKind::dihedral:
      return "dihedral:" + std::to_string(n_);
    case QuandleKind::alexander:
      return "alexander:" + std::to_string(n_) + ":" + std::to_string(*t_);
    case QuandleKind::table:
      break;
  }
  return "table(" + std::to_string(n_) + ")";
}

FiniteQuandle parse_quandle_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0;
  if (!(in >> n) || n < 1) throw ParseError("expected a positive quandle order", 0);
  std::vector<std::vector<int>> op(static_cast<std::size_t>(n), std::vector<int>(n));
  for (auto& row : op)
    for (auto& v : row) {
      const auto pos = static_cast<std::size_t>(std::max<std::streamoff>(0, in.tellg()));
      if (!(in >> v)) throw ParseError("quandle table ended early", pos);
    }
  std::string rest;
  if (in >> rest) throw ParseError("trailing data after quandle table", text.size() - rest.size());
  return FiniteQuandle::from_table(std::move(op));
}

std::string format_quandle_table(const FiniteQuandle& q) {
  std::ostringstream os;
  os << q.order() << "\n";
  for (int x = 0; x < q.order(); ++x) {
    for (int y = 0; y < q.order(); ++y) os << (y ? " " : "") << q.op(x, y);
    os << "\n";
  }
  return os.str();
}

bool QuandleMap::is_bijective() const {
  if (source_order != target_order) return false;
  std::vector<char> hit(static_cast<std::size_t>(target_order), 0);
  for (int v : image) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool QuandleMap::is_constant() const {
  return std::adjacent_find(image.begin(), image.end(), std::not_equal_to<>()) == image.end();
}

bool is_homomorphism(const std::vector<int>& image, const FiniteQuandle& source,
                     const FiniteQuandle& target) {
  if (static_cast<int>(image.size()) != source.order()) return false;
  for (int v : image)
    if (v < 0 || v >= target.order()) return false;
  for (int x = 0; x < source.order(); ++x)
    for (int y = 0; y < source.order(); ++y)
      if (image[source.op(x, y)] != target.op(image[x], image[y])) return false;
  return true;
}

QuandleMap make_map(const FiniteQuandle& source, const FiniteQuandle& target, std::vector<int> image) {
  if (!is_homomorphism(image, source, target))
    throw InvalidParameter("map is not a quandle homomorphism " + source.describe() + " -> " +
                           target.describe());
  QuandleMap f{source.order(), target.order(), std::move(image), std::nullopt};
  if (source.is_dihedral() && target.is_dihedral() && source.order() == target.order())
    f.affine_form = affine_of(f.image, source.order());
  return f;
}

QuandleMap identity_map(const FiniteQuandle& x) {
  std::vector<int> image(static_cast<std::size_t>(x.order()));
  std::iota(image.begin(), image.end(), 0);
  return make_map(x, x, std::move(image));
}

QuandleMap affine_map(const FiniteQuandle& x, long long a, long long b) {
  if (!x.is_dihedral()) throw InvalidParameter("affine endomorphisms are defined on dihedral quandles only");
  const int n = x.order();
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) image[v] = mod(mod(a, n) * static_cast<long long>(v) + mod(b, n), n);
  return make_map(x, x, std::move(image));
}

namespace {

// Backtracking over images of 0, 1, ...; every triple (u, v, u*v) is checked as
// soon as its last member is assigned, so partial maps are always consistent.
void extend_hom(const FiniteQuandle& source, const FiniteQuandle& target, std::vector<int>& image,
                int next, std::vector<QuandleMap>& out) {
  const int n = source.order();
  if (next == n) {
    out.push_back({n, target.order(), image, std::nullopt});
    return;
  }
  for (int value = 0; value < target.order(); ++value) {
    image[next] = value;
    bool ok = true;
    for (int u = 0; u <= next && ok; ++u)
      for (int v = 0; v <= next && ok; ++v) {
        const int w = source.op(u, v);
        if (w > next || std::max({u, v, w}) != next) continue;
        ok = image[w] == target.op(image[u], image[v]);
      }
    if (ok) extend_hom(source, target, image, next + 1, out);
  }
  image[next] = -1;
}

}  // namespace

std::vector<QuandleMap> enumerate_homs(const FiniteQuandle& source, const FiniteQuandle& target) {
  std::vector<QuandleMap> homs;
  const bool affine = source.is_dihedral() && target.is_dihedral() && source.order() == target.order();
  if (affine) {
    const int n = source.order();
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        for (int x = 0; x < n; ++x) image[x] = mod(static_cast<long long>(a) * x + b, n);
        if (!is_homomorphism(image, source, target))
          throw InternalError("affine candidate failed the homomorphism check on " + source.describe());
        homs.push_back({n, n, image, std::pair{a, b}});
      }
    std::sort(homs.begin(), homs.end());
    homs.erase(std::unique(homs.begin(), homs.end()), homs.end());
    return homs;
  }
  std::vector<int> image(static_cast<std::size_t>(source.order()), -1);
  extend_hom(source, target, image, 0, homs);
  return homs;
}

std::vector<QuandleMap> enumerate_endos(const FiniteQuandle& x) { return enumerate_homs(x, x); }

std::vector<QuandleMap> enumerate_autos(const FiniteQuandle& x) {
  auto homs = enumerate_homs(x, x);
  std::erase_if(homs, [](const QuandleMap& f) { return !f.is_bijective(); });
  return homs;
}

QuandleMap compose(const QuandleMap& f, const QuandleMap& g) {
  if (g.target_order != f.source_order)
    throw InvalidParameter("cannot compose: inner map lands in order " + std::to_string(g.target_order) +
                           ", outer map starts at order " + std::to_string(f.source_order));
  QuandleMap h{g.source_order, f.target_order, std::vector<int>(g.image.size()), std::nullopt};
  for (std::size_t x = 0; x < g.image.size(); ++x) h.image[x] = f.image[g.image[x]];
  if (f.affine_form && g.affine_form) {
    const int n = f.source_order;
    const auto [a1, b1] = *f.affine_form;
    const auto [a2, b2] = *g.affine_form;
    h.affine_form = std::pair{mod(static_cast<long long>(a1) * a2, n), mod(static_cast<long long>(a1) * b2 + b1, n)};
  }
  return h;
}

}  // namespace quiverknot
