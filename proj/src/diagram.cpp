#include "quiverknot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "quiverknot/errors.hpp"

namespace quiverknot {

namespace {

class PdParser {
 public:
  explicit PdParser(std::string_view text) : text_(text) {}

  std::vector<std::array<int, 4>> parse() {
    skip_space();
    if (at_end()) throw ParseError("PD code has no crossings", pos_);
    std::vector<std::array<int, 4>> crossings;
    if (peek() == '[') {
      ++pos_;
      skip_space();
      while (true) {
        crossings.push_back(quadruple('[', ']'));
        skip_space();
        if (consume(',')) {
          skip_space();
          continue;
        }
        expect(']');
        break;
      }
    } else {
      while (!at_end()) {
        if (peek() != 'X' && peek() != 'x') throw ParseError("expected 'X(' or '['", pos_);
        ++pos_;
        skip_space();
        if (at_end()) throw ParseError("unexpected end of PD code", pos_);
        const char open = peek();
        if (open != '(' && open != '[') throw ParseError("expected '(' after X", pos_);
        crossings.push_back(quadruple(open, open == '(' ? ')' : ']'));
        skip_space();
        if (consume(',')) skip_space();
      }
    }
    skip_space();
    if (!at_end()) throw ParseError("trailing characters after PD code", pos_);
    return crossings;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool consume(char c) {
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_space();
    if (!consume(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }
  int integer() {
    skip_space();
    const std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") throw ParseError("expected an integer arc label", start);
    try {
      return std::stoi(digits);
    } catch (const std::out_of_range&) {
      throw ParseError("arc label out of range", start);
    }
  }
  std::array<int, 4> quadruple(char open, char close) {
    const std::size_t start = pos_;
    expect(open);
    std::array<int, 4> q{};
    for (int i = 0; i < 4; ++i) {
      q[i] = integer();
      skip_space();
      if (i < 3 && !consume(',')) throw ParseError("crossing must list exactly four labels", start);
    }
    skip_space();
    if (!consume(close)) throw ParseError("crossing must list exactly four labels", start);
    return q;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string quad_string(const std::array<int, 4>& q) {
  std::ostringstream os;
  os << "X(" << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << ")";
  return os.str();
}

}  // namespace

PDCode make_pd(std::vector<std::array<int, 4>> crossings) {
  if (crossings.empty()) throw ParseError("PD code has no crossings", 0);
  std::map<int, int> occurrences;
  for (const auto& q : crossings)
    for (int label : q) ++occurrences[label];
  for (const auto& [label, count] : occurrences)
    if (count != 2)
      throw StructuralError("arc label " + std::to_string(label) + " appears " + std::to_string(count) +
                            " times (expected 2)");

  std::vector<int> labels;
  for (const auto& entry : occurrences) labels.push_back(entry.first);
  auto index = [&](int label) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  UnionFind strands(labels.size());
  for (const auto& q : crossings) {
    strands.unite(index(q[0]), index(q[2]));
    strands.unite(index(q[1]), index(q[3]));
  }
  std::map<int, std::vector<int>> groups;
  for (int label : labels) groups[strands.find(index(label))].push_back(label);

  PDCode pd;
  pd.crossings = std::move(crossings);
  for (auto& [root, members] : groups) {
    for (std::size_t i = 1; i < members.size(); ++i)
      if (members[i] != members[i - 1] + 1)
        throw StructuralError("component labels are not consecutive: " + std::to_string(members[i - 1]) +
                              " is followed by " + std::to_string(members[i]));
    pd.components.push_back(std::move(members));
  }
  std::sort(pd.components.begin(), pd.components.end());
  return pd;
}

PDCode parse_pd(std::string_view text) { return make_pd(PdParser(text).parse()); }

Diagram Diagram::unknot() {
  Diagram d;
  d.arc_count_ = 1;
  d.unbounded_ = 0;
  // Counterclockwise circle: outside on the right, inside on the left.
  d.edges_.push_back(Edge{1, 0, {}, {}, 1, 0});
  d.region_corners_.resize(2);
  d.arc_edges_ = {{1}};
  d.pd_.components = {{1}};
  return d;
}

Diagram Diagram::build(const PDCode& input, std::optional<CornerRef> unbounded_corner) {
  const PDCode pd = make_pd(input.crossings);
  const int c = static_cast<int>(pd.crossings.size());

  std::map<int, int> next_label;
  for (const auto& comp : pd.components)
    for (std::size_t i = 0; i < comp.size(); ++i) next_label[comp[i]] = comp[(i + 1) % comp.size()];
  auto follows = [&](int from, int to) { return next_label.at(from) == to; };

  // Orientation of every slot: true when the edge in that slot enters the crossing.
  std::vector<std::array<bool, 4>> incoming(static_cast<std::size_t>(c));
  std::vector<int> ambiguous;
  std::map<int, int> heads;
  for (int k = 0; k < c; ++k) {
    const auto& q = pd.crossings[k];
    if (!follows(q[0], q[2]))
      throw StructuralError("under-strand of " + quad_string(q) + " does not continue " +
                            std::to_string(q[0]) + " -> " + std::to_string(q[2]));
    incoming[k][0] = true;
    incoming[k][2] = false;
    const bool forward = follows(q[1], q[3]);
    const bool backward = follows(q[3], q[1]);
    if (!forward && !backward)
      throw StructuralError("over-strand labels of " + quad_string(q) + " are not consecutive");
    ++heads[q[0]];
    if (forward && backward) {
      ambiguous.push_back(k);
      continue;
    }
    incoming[k][1] = forward;
    incoming[k][3] = !forward;
    ++heads[forward ? q[1] : q[3]];
  }
  // Two-edge components leave the over direction open; pick the one giving every edge one head.
  for (int k : ambiguous) {
    const auto& q = pd.crossings[k];
    bool forward = q[3] == q[1] + 1;
    if (heads[q[1]] > 0 && heads[q[3]] == 0) forward = false;
    if (heads[q[3]] > 0 && heads[q[1]] == 0) forward = true;
    incoming[k][1] = forward;
    incoming[k][3] = !forward;
    ++heads[forward ? q[1] : q[3]];
  }

  Diagram d;
  d.pd_ = pd;

  std::map<int, SlotRef> tails, head_slots;
  for (int k = 0; k < c; ++k)
    for (int s = 0; s < 4; ++s) {
      auto& table = incoming[k][s] ? head_slots : tails;
      const int label = pd.crossings[k][s];
      if (table.count(label))
        throw StructuralError("edge " + std::to_string(label) + " has inconsistent orientation");
      table[label] = SlotRef{k, s};
    }

  // Arcs: edges joined through the over-strand of each crossing.
  std::vector<int> labels;
  for (const auto& comp : pd.components) labels.insert(labels.end(), comp.begin(), comp.end());
  std::sort(labels.begin(), labels.end());
  auto label_index = [&](int label) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  UnionFind arcs(labels.size());
  UnionFind connectivity(static_cast<std::size_t>(c));
  for (int k = 0; k < c; ++k) {
    const auto& q = pd.crossings[k];
    arcs.unite(label_index(q[1]), label_index(q[3]));
  }
  for (int label : labels) connectivity.unite(tails.at(label).crossing, head_slots.at(label).crossing);
  for (int k = 1; k < c; ++k)
    if (connectivity.find(k) != connectivity.find(0))
      throw UnsupportedError("split (disconnected) diagrams are not supported");

  std::map<int, int> arc_id;
  for (int label : labels) {
    const int root = arcs.find(label_index(label));
    if (!arc_id.count(root)) {
      arc_id[root] = static_cast<int>(d.arc_edges_.size());
      d.arc_edges_.emplace_back();
    }
    d.arc_edges_[arc_id[root]].push_back(label);
  }
  d.arc_count_ = static_cast<int>(d.arc_edges_.size());
  auto arc_of = [&](int label) { return arc_id.at(arcs.find(label_index(label))); };

  // Faces: orbits of corner (k, q) -> corner at the far end of the edge in slot q+1.
  std::vector<int> corner_region(static_cast<std::size_t>(4 * c), -1);
  auto other_end = [&](int k, int s) {
    const int label = pd.crossings[k][s];
    const SlotRef t = tails.at(label), h = head_slots.at(label);
    return (t.crossing == k && t.slot == s) ? h : t;
  };
  for (int start = 0; start < 4 * c; ++start) {
    if (corner_region[start] >= 0) continue;
    const int region = static_cast<int>(d.region_corners_.size());
    d.region_corners_.emplace_back();
    int corner = start;
    while (corner_region[corner] < 0) {
      corner_region[corner] = region;
      const int k = corner / 4, q = corner % 4;
      d.region_corners_[region].push_back(CornerRef{k, q});
      const SlotRef far = other_end(k, (q + 1) % 4);
      corner = 4 * far.crossing + far.slot;
    }
    if (corner != start) throw StructuralError("face tracing did not close");
  }
  if (d.region_count() != c + 2)
    throw StructuralError("diagram is not planar: " + std::to_string(d.region_count()) + " faces for " +
                          std::to_string(c) + " crossings (expected " + std::to_string(c + 2) + ")");

  for (int k = 0; k < c; ++k) {
    const auto& q = pd.crossings[k];
    Crossing x;
    x.edges = q;
    x.under_in_arc = arc_of(q[0]);
    x.under_out_arc = arc_of(q[2]);
    x.over_arc = arc_of(q[1]);
    // Under-strand runs south to north; slot 1 is east, slot 3 west. West to east is positive.
    x.sign = incoming[k][3] ? +1 : -1;
    for (int r = 0; r < 4; ++r) x.corner_regions[r] = corner_region[4 * k + r];
    d.crossings_.push_back(x);
  }

  for (int label : labels) {
    const SlotRef h = head_slots.at(label);
    Edge e{label, arc_of(label), tails.at(label), h, corner_region[4 * h.crossing + (h.slot + 3) % 4],
           corner_region[4 * h.crossing + h.slot]};
    d.edges_.push_back(e);
  }

  if (unbounded_corner) {
    if (unbounded_corner->crossing < 0 || unbounded_corner->crossing >= c || unbounded_corner->quadrant < 0 ||
        unbounded_corner->quadrant > 3)
      throw InvalidParameter("unbounded-region corner is out of range");
    d.unbounded_ = d.region_of(*unbounded_corner);
  } else {
    d.unbounded_ = 0;
    for (int r = 1; r < d.region_count(); ++r)
      if (d.region_corners_[r].size() > d.region_corners_[d.unbounded_].size()) d.unbounded_ = r;
  }
  return d;
}

int Diagram::arc_of_edge(int label) const {
  for (const auto& e : edges_)
    if (e.label == label) return e.arc;
  throw InvalidParameter("no edge labelled " + std::to_string(label));
}

int Diagram::region_of(CornerRef corner) const {
  if (corner.crossing < 0 || corner.crossing >= crossing_count() || corner.quadrant < 0 || corner.quadrant > 3)
    throw InvalidParameter("corner out of range");
  return crossings_[corner.crossing].corner_regions[corner.quadrant];
}

int Diagram::writhe() const {
  int w = 0;
  for (const auto& x : crossings_) w += x.sign;
  return w;
}

Diagram Diagram::with_unbounded_region(int region) const {
  if (region < 0 || region >= region_count()) throw InvalidParameter("region id out of range");
  Diagram d = *this;
  d.unbounded_ = region;
  return d;
}

CrossingRelation crossing_relation(const Diagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count()) throw InvalidParameter("crossing id out of range");
  const Crossing& x = d.crossings()[crossing];
  if (x.sign > 0) return {x.under_in_arc, x.over_arc, x.under_out_arc};
  return {x.under_out_arc, x.over_arc, x.under_in_arc};
}

std::string emit_pd(const Diagram& d) {
  std::string out;
  for (const auto& q : d.pd().crossings) {
    if (!out.empty()) out += ' ';
    out += quad_string(q);
  }
  return out;
}

}  // namespace quiverknot
