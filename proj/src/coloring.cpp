#include "quiverknot/coloring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace quiverknot {

bool Coloring::is_trivial() const {
  return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
}

std::size_t ColoringHash::operator()(const Coloring& c) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : c.values) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
  return h;
}

bool is_coloring(const Diagram& d, const FiniteQuandle& x, const Coloring& c) {
  if (static_cast<int>(c.values.size()) != d.arc_count()) return false;
  for (int v : c.values)
    if (v < 0 || v >= x.order()) return false;
  for (int k = 0; k < d.crossing_count(); ++k) {
    const auto rel = crossing_relation(d, k);
    if (x.op(c[rel.source], c[rel.over]) != c[rel.target]) return false;
  }
  return true;
}

bool is_shadow_coloring(const Diagram& d, const FiniteQuandle& x, const ShadowColoring& s) {
  if (!is_coloring(d, x, s.arcs) || static_cast<int>(s.regions.size()) != d.region_count()) return false;
  for (int v : s.regions)
    if (v < 0 || v >= x.order()) return false;
  for (const auto& e : d.edges())
    if (x.op(s.regions[e.right_region], s.arcs[e.arc]) != s.regions[e.left_region]) return false;
  return true;
}

namespace {

// Depth-first search over arc values with unit propagation: once two arcs of a
// relation are known (the source and over arcs, or the target and over arcs),
// the third is forced.
class ColoringSearch {
 public:
  ColoringSearch(const Diagram& d, const FiniteQuandle& x) : x_(x), values_(d.arc_count(), -1), touching_(d.arc_count()) {
    for (int k = 0; k < d.crossing_count(); ++k) {
      relations_.push_back(crossing_relation(d, k));
      const auto& r = relations_.back();
      for (int arc : {r.source, r.over, r.target}) {
        auto& list = touching_[arc];
        if (list.empty() || list.back() != k) list.push_back(k);
      }
    }
  }

  std::vector<Coloring> run() {
    search();
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool assign(int arc, int value) {
    if (values_[arc] >= 0) return values_[arc] == value;
    values_[arc] = value;
    trail_.push_back(arc);
    pending_.push_back(arc);
    return true;
  }

  bool propagate() {
    while (!pending_.empty()) {
      const int arc = pending_.front();
      pending_.pop_front();
      for (int k : touching_[arc]) {
        const auto& r = relations_[k];
        const int s = values_[r.source], o = values_[r.over], t = values_[r.target];
        if (o < 0) {
          if (s >= 0 && t >= 0 && r.source == r.target && s != t) return false;
          continue;
        }
        if (s >= 0) {
          if (!assign(r.target, x_.op(s, o))) return false;
        } else if (t >= 0) {
          if (!assign(r.source, x_.inv_op(t, o))) return false;
        }
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      values_[trail_.back()] = -1;
      trail_.pop_back();
    }
    pending_.clear();
  }

  void search() {
    const auto free_arc = std::find(values_.begin(), values_.end(), -1);
    if (free_arc == values_.end()) {
      found_.push_back(Coloring{values_});
      return;
    }
    const int arc = static_cast<int>(free_arc - values_.begin());
    for (int v = 0; v < x_.order(); ++v) {
      const std::size_t mark = trail_.size();
      if (assign(arc, v) && propagate()) search();
      undo_to(mark);
    }
  }

  const FiniteQuandle& x_;
  std::vector<int> values_;
  std::vector<std::vector<int>> touching_;
  std::vector<CrossingRelation> relations_;
  std::vector<int> trail_;
  std::deque<int> pending_;
  std::vector<Coloring> found_;
};

}  // namespace

std::vector<Coloring> enumerate_colorings(const Diagram& d, const FiniteQuandle& x) {
  auto colorings = ColoringSearch(d, x).run();
  for (const auto& c : colorings)
    if (!is_coloring(d, x, c)) throw InternalError("enumeration produced an invalid coloring");
  return colorings;
}

ColoringMatrix coloring_matrix(const Diagram& d) {
  ColoringMatrix m;
  m.arcs = d.arc_count();
  IntMatrix big;
  for (int k = 0; k < d.crossing_count(); ++k) {
    const auto r = crossing_relation(d, k);
    std::vector<int> row(static_cast<std::size_t>(m.arcs), 0);
    row[r.source] += 1;
    row[r.over] -= 2;
    row[r.target] += 1;
    big.emplace_back(row.begin(), row.end());
    m.rows.push_back(std::move(row));
  }
  m.elementary_divisors = smith_diagonal(std::move(big));
  return m;
}

BigInt count_colorings_dihedral(const Diagram& d, int n) {
  if (n < 1) throw InvalidParameter("dihedral order must be positive, got " + std::to_string(n));
  const ColoringMatrix m = coloring_matrix(d);
  BigInt count = 1;
  int rank = 0;
  for (const auto& div : m.elementary_divisors) {
    if (div == 0) continue;
    ++rank;
    count *= static_cast<BigInt>(gcd(div, BigInt(n)));
  }
  for (int i = rank; i < m.arcs; ++i) count *= n;
  return count;
}

BigInt coloring_determinant(const Diagram& d) {
  BigInt det = 1;
  for (const auto& div : coloring_matrix(d).elementary_divisors)
    if (div != 0) det *= div;
  return det;
}

ShadowColoring extend_shadow(const Diagram& d, const FiniteQuandle& x, const Coloring& c, int base,
                             PropagationOrder order) {
  if (base < 0 || base >= x.order()) throw InvalidParameter("base label out of range");
  if (static_cast<int>(c.values.size()) != d.arc_count())
    throw InvalidParameter("coloring does not match the diagram's arcs");
  ShadowColoring s{c, std::vector<int>(static_cast<std::size_t>(d.region_count()), -1)};

  std::vector<std::vector<int>> edges_at(static_cast<std::size_t>(d.region_count()));
  for (std::size_t i = 0; i < d.edges().size(); ++i) {
    edges_at[d.edges()[i].right_region].push_back(static_cast<int>(i));
    edges_at[d.edges()[i].left_region].push_back(static_cast<int>(i));
  }

  std::deque<int> frontier{d.unbounded_region()};
  s.regions[d.unbounded_region()] = base;
  while (!frontier.empty()) {
    int region = 0;
    if (order == PropagationOrder::breadth_first) {
      region = frontier.front();
      frontier.pop_front();
    } else {
      region = frontier.back();
      frontier.pop_back();
    }
    auto visit = [&](int edge_index) {
      const Edge& e = d.edges()[edge_index];
      const int label = c[e.arc];
      if (e.right_region == region && s.regions[e.left_region] < 0) {
        s.regions[e.left_region] = x.op(s.regions[region], label);
        frontier.push_back(e.left_region);
      } else if (e.left_region == region && s.regions[e.right_region] < 0) {
        s.regions[e.right_region] = x.inv_op(s.regions[region], label);
        frontier.push_back(e.right_region);
      }
    };
    const auto& incident = edges_at[region];
    if (order == PropagationOrder::breadth_first)
      std::for_each(incident.begin(), incident.end(), visit);
    else
      std::for_each(incident.rbegin(), incident.rend(), visit);
  }

  if (!is_shadow_coloring(d, x, s))
    throw InternalError("shadow extension is inconsistent; the coloring or region sidedness is wrong");
  return s;
}

Coloring apply_endo(const QuandleMap& f, const Coloring& c) {
  Coloring out{c.values};
  for (int& v : out.values) v = f(v);
  return out;
}

Coloring trivial_coloring(const Diagram& d, int value) {
  return Coloring{std::vector<int>(static_cast<std::size_t>(d.arc_count()), value)};
}

}  // namespace quiverknot
