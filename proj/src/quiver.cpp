#include "quiverknot/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace quiverknot {

namespace {

void check_endos(const FiniteQuandle& x, const std::vector<QuandleMap>& endos) {
  for (std::size_t i = 0; i < endos.size(); ++i) {
    const auto& f = endos[i];
    if (f.source_order != x.order() || f.target_order != x.order() || !is_homomorphism(f.image, x, x))
      throw InvalidParameter("map #" + std::to_string(i) + " is not an endomorphism of " + x.describe());
  }
}

void add_edges(WeightedQuiver& q) {
  std::unordered_map<Coloring, int, ColoringHash> index;
  for (int v = 0; v < q.vertex_count(); ++v) index.emplace(q.vertices[v], v);
  q.edges.reserve(q.vertices.size() * q.endos.size());
  for (int v = 0; v < q.vertex_count(); ++v)
    for (int e = 0; e < static_cast<int>(q.endos.size()); ++e) {
      const auto it = index.find(apply_endo(q.endos[e], q.vertices[v]));
      if (it == index.end()) throw InternalError("endomorphism image is not an enumerated coloring");
      q.edges.push_back({v, it->second, e});
    }
  std::vector<std::size_t> out_degree(q.vertices.size(), 0);
  for (const auto& e : q.edges) ++out_degree[e.source];
  for (auto deg : out_degree)
    if (deg != q.endos.size()) throw InternalError("quiver vertex out-degree differs from |S|");
}

}  // namespace

WeightedQuiver coloring_quiver(const Diagram& d, const FiniteQuandle& x, const std::vector<QuandleMap>& endos) {
  check_endos(x, endos);
  WeightedQuiver q;
  q.vertices = enumerate_colorings(d, x);
  q.endos = endos;
  add_edges(q);
  return q;
}

WeightedQuiver shadow_cocycle_quiver(const Diagram& d, const FiniteQuandle& x, const std::vector<QuandleMap>& endos,
                                     int base, const Cocycle3& theta) {
  check_endos(x, endos);
  if (theta.quandle_order() != x.order()) throw InvalidParameter("cocycle and quandle orders differ");
  if (base < 0 || base >= x.order()) throw InvalidParameter("base label out of range");
  WeightedQuiver q;
  q.vertices = enumerate_colorings(d, x);
  q.endos = endos;
  q.weight_modulus = theta.modulus();
  std::vector<int> weights;
  for (const auto& c : q.vertices) {
    q.shadows.push_back(extend_shadow(d, x, c, base));
    weights.push_back(weight_sum(d, q.shadows.back(), theta));
  }
  q.weights = std::move(weights);
  add_edges(q);
  return q;
}

WeightedQuiver relabel_vertices(const WeightedQuiver& q, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != q.vertex_count()) throw InvalidParameter("permutation size mismatch");
  WeightedQuiver out = q;
  for (int v = 0; v < q.vertex_count(); ++v) {
    out.vertices[perm[v]] = q.vertices[v];
    if (!q.shadows.empty()) out.shadows[perm[v]] = q.shadows[v];
    if (q.weights) (*out.weights)[perm[v]] = (*q.weights)[v];
  }
  for (auto& e : out.edges) {
    e.source = perm[e.source];
    e.target = perm[e.target];
  }
  return out;
}

namespace {

// Adjacency of a quiver as neighbour/multiplicity lists plus a dense count matrix.
struct Adjacency {
  int n = 0;
  std::vector<std::vector<std::pair<int, int>>> out, in;
  std::vector<int> count;  // count[u * n + v] = number of edges u -> v

  explicit Adjacency(const WeightedQuiver& q)
      : n(q.vertex_count()), out(n), in(n), count(static_cast<std::size_t>(n) * n, 0) {
    for (const auto& e : q.edges) ++count[static_cast<std::size_t>(e.source) * n + e.target];
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (int c = count[static_cast<std::size_t>(u) * n + v]) {
          out[u].push_back({v, c});
          in[v].push_back({u, c});
        }
  }
  int edges(int u, int v) const { return count[static_cast<std::size_t>(u) * n + v]; }
};

// Colour refinement on the disjoint union of two quivers followed by
// individualisation of one vertex at a time, so colours are always comparable
// across the two sides.
class IsoSearch {
 public:
  IsoSearch(const WeightedQuiver& a, const WeightedQuiver& b, bool respect_weights)
      : a_(a), b_(b), n_(a.vertex_count()) {
    std::vector<int> colour(static_cast<std::size_t>(2 * n_), 0);
    if (respect_weights) {
      for (int v = 0; v < n_; ++v) {
        colour[v] = (*a.weights)[v];
        colour[n_ + v] = (*b.weights)[v];
      }
    }
    initial_ = colour;
  }

  std::optional<std::vector<int>> run() {
    auto colour = initial_;
    if (!refine(colour)) return std::nullopt;
    return search(colour);
  }

 private:
  const Adjacency& side(int v) const { return v < n_ ? a_ : b_; }
  int local(int v) const { return v < n_ ? v : v - n_; }

  // Refines to the coarsest equitable partition; false when the two sides' class sizes differ.
  bool refine(std::vector<int>& colour) const {
    std::size_t classes = 0;
    while (true) {
      std::map<std::vector<int>, int> ids;
      std::vector<std::vector<int>> signature(colour.size());
      for (int v = 0; v < 2 * n_; ++v) {
        const Adjacency& g = side(v);
        const int offset = v < n_ ? 0 : n_;
        std::vector<std::pair<int, int>> outs, ins;
        for (auto [u, c] : g.out[local(v)]) outs.push_back({colour[offset + u], c});
        for (auto [u, c] : g.in[local(v)]) ins.push_back({colour[offset + u], c});
        std::sort(outs.begin(), outs.end());
        std::sort(ins.begin(), ins.end());
        auto& sig = signature[v];
        sig.push_back(colour[v]);
        sig.push_back(static_cast<int>(outs.size()));
        for (auto [c, m] : outs) sig.insert(sig.end(), {c, m});
        for (auto [c, m] : ins) sig.insert(sig.end(), {c, m});
        ids.emplace(sig, 0);
      }
      int next = 0;
      for (auto& [sig, id] : ids) id = next++;
      for (int v = 0; v < 2 * n_; ++v) colour[v] = ids.at(signature[v]);

      std::vector<int> balance(ids.size(), 0);
      for (int v = 0; v < 2 * n_; ++v) balance[colour[v]] += v < n_ ? 1 : -1;
      if (std::any_of(balance.begin(), balance.end(), [](int x) { return x != 0; })) return false;
      if (ids.size() == classes) return true;
      classes = ids.size();
    }
  }

  std::optional<std::vector<int>> search(const std::vector<int>& colour) const {
    std::vector<int> size(static_cast<std::size_t>(2 * n_), 0);
    for (int v = 0; v < n_; ++v) ++size[colour[v]];
    int pick = -1;
    for (int v = 0; v < n_; ++v)
      if (size[colour[v]] > 1 && (pick < 0 || size[colour[v]] < size[colour[pick]])) pick = v;

    if (pick < 0) {
      std::vector<int> image(static_cast<std::size_t>(2 * n_), -1), map(static_cast<std::size_t>(n_));
      for (int w = 0; w < n_; ++w) image[colour[n_ + w]] = w;
      for (int v = 0; v < n_; ++v) map[v] = image[colour[v]];
      if (verify(map)) return map;
      return std::nullopt;
    }

    const int fresh = 2 * n_;
    for (int w = 0; w < n_; ++w) {
      if (colour[n_ + w] != colour[pick]) continue;
      auto trial = colour;
      trial[pick] = fresh;
      trial[n_ + w] = fresh;
      if (!refine(trial)) continue;
      if (auto found = search(trial)) return found;
    }
    return std::nullopt;
  }

  bool verify(const std::vector<int>& map) const {
    for (int v = 0; v < n_; ++v)
      if (initial_[v] != initial_[n_ + map[v]]) return false;
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (a_.edges(u, v) != b_.edges(map[u], map[v])) return false;
    return true;
  }

  Adjacency a_, b_;
  int n_;
  std::vector<int> initial_;
};

bool verify_witness(const WeightedQuiver& a, const WeightedQuiver& b, const std::vector<int>& map,
                    bool respect_weights) {
  const int n = a.vertex_count();
  if (static_cast<int>(map.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int w : map) {
    if (w < 0 || w >= n || hit[w]) return false;
    hit[w] = 1;
  }
  if (respect_weights)
    for (int v = 0; v < n; ++v)
      if ((*a.weights)[v] != (*b.weights)[map[v]]) return false;
  std::map<std::pair<int, int>, int> pending;
  for (const auto& e : a.edges) ++pending[{map[e.source], map[e.target]}];
  for (const auto& e : b.edges)
    if (--pending[{e.source, e.target}] < 0) return false;
  return std::all_of(pending.begin(), pending.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

IsoResult quiver_isomorphic(const WeightedQuiver& a, const WeightedQuiver& b, bool respect_weights) {
  if (respect_weights && (!a.weights || !b.weights))
    throw InvalidParameter("weighted comparison needs weighted quivers");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return {};
  if (respect_weights) {
    auto ha = *a.weights, hb = *b.weights;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return {};
  }
  auto found = IsoSearch(a, b, respect_weights).run();
  if (!found) return {};
  if (!verify_witness(a, b, *found, respect_weights))
    throw InternalError("isomorphism witness failed edge verification");
  return {true, std::move(*found)};
}

long long Polynomial2::total() const {
  long long sum = 0;
  for (const auto& [exps, c] : coefficients) sum += c;
  return sum;
}

Polynomial2 cocycle_polynomial(const WeightedQuiver& q) {
  if (!q.weights) throw InvalidParameter("cocycle polynomial needs a weighted quiver");
  Polynomial2 p;
  p.modulus = q.weight_modulus;
  for (const auto& e : q.edges) ++p.coefficients[{(*q.weights)[e.source], (*q.weights)[e.target]}];
  return p;
}

std::string to_string(const Polynomial2& p) {
  std::string out;
  for (const auto& [exps, coefficient] : p.coefficients) {
    if (coefficient == 0) continue;
    const auto [i, j] = exps;
    std::string term;
    if (coefficient != 1 || (i == 0 && j == 0)) term += std::to_string(coefficient);
    if (i > 0) term += i == 1 ? "s" : "s^" + std::to_string(i);
    if (j > 0) term += j == 1 ? "t" : "t^" + std::to_string(j);
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

namespace {

std::string coloring_label(const Coloring& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.values.size(); ++i) s += (i ? "," : "") + std::to_string(c.values[i]);
  return s + "]";
}

}  // namespace

std::string to_dot(const WeightedQuiver& q, bool collapse_parallel) {
  if (q.vertices.empty()) return "digraph { }";
  std::ostringstream os;
  os << "digraph {\n";
  for (int v = 0; v < q.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << v << " " << coloring_label(q.vertices[v]);
    if (q.weights) os << " w=" << (*q.weights)[v];
    os << "\"];\n";
  }
  if (collapse_parallel) {
    std::map<std::pair<int, int>, int> multiplicity;
    for (const auto& e : q.edges) ++multiplicity[{e.source, e.target}];
    for (const auto& [ends, m] : multiplicity)
      os << "  v" << ends.first << " -> v" << ends.second << " [label=\"x" << m << "\"];\n";
  } else {
    for (const auto& e : q.edges)
      os << "  v" << e.source << " -> v" << e.target << " [label=\"f" << e.endo << "\"];\n";
  }
  os << "}";
  return os.str();
}

nlohmann::json to_json(const WeightedQuiver& q) {
  nlohmann::json vertices = nlohmann::json::array();
  for (int v = 0; v < q.vertex_count(); ++v) {
    nlohmann::json vertex{{"id", v}, {"coloring", q.vertices[v].values}};
    if (!q.shadows.empty()) vertex["regions"] = q.shadows[v].regions;
    if (q.weights) vertex["weight"] = (*q.weights)[v];
    vertices.push_back(std::move(vertex));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : q.edges) edges.push_back({e.source, e.target, e.endo});
  nlohmann::json endos = nlohmann::json::array();
  for (const auto& f : q.endos) {
    nlohmann::json entry{{"image", f.image}};
    if (f.affine_form) entry["affine"] = {f.affine_form->first, f.affine_form->second};
    endos.push_back(std::move(entry));
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}, {"endos", std::move(endos)}};
}

}  // namespace quiverknot
