#include "quiverknot/commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace quiverknot {
namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

long long parse_integer(std::string_view text, const char* what) {
  const std::string t = trim(text);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
    throw InvalidParameter(std::string("invalid ") + what + ": '" + std::string(text) + "'");
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string big_to_string(const BigInt& v) { return v.str(); }

nlohmann::json counts_json(const BigInt& v) {
  // Counts that fit are emitted as numbers, larger ones as decimal strings.
  if (v <= BigInt(std::numeric_limits<long long>::max())) return static_cast<long long>(v);
  return big_to_string(v);
}

nlohmann::json histogram_json(const WeightedQuiver& q) {
  ValueMultiset m;
  for (int w : *q.weights) ++m[w];
  return multiset_json(m);
}

}  // namespace

FiniteQuandle parse_quandle_spec(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  if (kind == "dihedral" && parts.size() == 2) {
    const long long n = parse_integer(parts[1], "dihedral order");
    if (n < 1 || n > 4096) throw InvalidParameter("dihedral order must be in 1..4096");
    return FiniteQuandle::dihedral(static_cast<int>(n));
  }
  if (kind == "alexander" && parts.size() == 3) {
    const long long n = parse_integer(parts[1], "alexander order");
    if (n < 1 || n > 4096) throw InvalidParameter("alexander order must be in 1..4096");
    return FiniteQuandle::alexander(static_cast<int>(n), parse_integer(parts[2], "alexander parameter"));
  }
  if (kind == "table" && parts.size() >= 2) {
    const std::string path(spec.substr(spec.find(':') + 1));
    return parse_quandle_table(read_file(path));
  }
  throw InvalidParameter("invalid quandle spec '" + std::string(spec) +
                         "' (expected dihedral:n, alexander:n:t or table:PATH)");
}

std::vector<QuandleMap> random_endo_subset(const FiniteQuandle& x, std::size_t k, std::uint64_t seed) {
  auto all = enumerate_endos(x);
  if (k > all.size())
    throw InvalidParameter("requested " + std::to_string(k) + " endomorphisms but End(X) has " +
                           std::to_string(all.size()));
  std::vector<std::size_t> idx(all.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  std::vector<QuandleMap> out;
  out.reserve(k);
  for (auto i : idx) out.push_back(all[i]);
  return out;
}

std::vector<QuandleMap> parse_endo_spec(const FiniteQuandle& x, std::string_view spec) {
  const std::string s = trim(spec);
  if (s == "all") return enumerate_endos(x);
  if (s == "auto") return enumerate_autos(x);
  if (s.rfind("random:", 0) == 0) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw InvalidParameter("invalid endo spec '" + s + "' (expected random:K:SEED)");
    const long long k = parse_integer(parts[1], "subset size");
    const long long seed = parse_integer(parts[2], "seed");
    if (k < 0) throw InvalidParameter("subset size must be non-negative");
    return random_endo_subset(x, static_cast<std::size_t>(k), static_cast<std::uint64_t>(seed));
  }
  if (!x.is_dihedral()) throw InvalidParameter("affine endo lists need a dihedral quandle");
  std::vector<QuandleMap> out;
  for (const auto& item : split(s, ';')) {
    const auto ab = split(item, ',');
    if (ab.size() != 2) throw InvalidParameter("invalid endo '" + item + "' (expected a,b)");
    out.push_back(affine_map(x, parse_integer(ab[0], "endo coefficient"), parse_integer(ab[1], "endo offset")));
  }
  return out;
}

Diagram resolve_knot(const Catalog& catalog, const std::string& name_or_pd) {
  if (catalog.contains(name_or_pd)) return catalog.at(name_or_pd).diagram;
  if (name_or_pd.find('X') != std::string::npos || name_or_pd.find("[[") != std::string::npos)
    return Diagram::build(parse_pd(name_or_pd));
  return catalog.at(name_or_pd).diagram;  // throws "unknown knot"
}

Cocycle3 resolve_cocycle(const FiniteQuandle& x, std::string_view spec) {
  if (spec == "mochizuki") {
    if (!x.is_dihedral()) throw InvalidParameter("the mochizuki cocycle needs a dihedral quandle");
    return mochizuki(x.order());
  }
  if (spec.rfind("table:", 0) == 0) {
    auto theta = parse_cocycle_table(read_file(std::string(spec.substr(6))));
    if (theta.quandle_order() != x.order()) throw InvalidParameter("cocycle table order differs from the quandle");
    if (auto w = verify_cocycle(theta, x))
      throw InvalidParameter("cocycle table violates the cocycle condition at (" + std::to_string(w->x) + "," +
                             std::to_string(w->y) + "," + std::to_string(w->z) + "," + std::to_string(w->w) + ")");
    return theta;
  }
  throw InvalidParameter("invalid cocycle spec '" + std::string(spec) + "' (expected mochizuki or table:PATH)");
}

nlohmann::json multiset_json(const ValueMultiset& m) {
  auto out = nlohmann::json::array();
  for (const auto& [value, count] : m) out.push_back({value, count});
  return out;
}

nlohmann::json RunResult::to_json(bool include_timing) const {
  nlohmann::json j = {{"command", command}, {"parameters", parameters}, {"outputs", outputs}};
  if (include_timing) j["timing"] = {{"elapsed_ms", elapsed_ms}};
  return j;
}

std::string RunResult::to_text() const {
  std::ostringstream os;
  for (const auto& [key, value] : outputs.items()) {
    if (key == "quiver") continue;
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return os.str();
}

RunResult cmd_colorings(const Catalog& catalog, const ColoringsOptions& options) {
  const auto start = Clock::now();
  RunResult r;
  r.command = "colorings";
  r.parameters = {{"knot", options.knot}, {"quandle", options.quandle}, {"mode", options.list ? "list" : "count"}};
  const Diagram d = resolve_knot(catalog, options.knot);
  const FiniteQuandle x = parse_quandle_spec(options.quandle);
  r.outputs["arcs"] = d.arc_count();
  if (x.is_dihedral() && !options.list) {
    r.outputs["count"] = counts_json(count_colorings_dihedral(d, x.order()));
    r.outputs["method"] = "smith";
  } else {
    const auto colorings = enumerate_colorings(d, x);
    r.outputs["count"] = colorings.size();
    r.outputs["method"] = "enumeration";
    if (options.list) {
      auto list = nlohmann::json::array();
      for (const auto& c : colorings) list.push_back(c.values);
      r.outputs["colorings"] = std::move(list);
    }
  }
  r.elapsed_ms = elapsed_since(start);
  return r;
}

RunResult cmd_quiver(const Catalog& catalog, const QuiverOptions& options) {
  const auto start = Clock::now();
  RunResult r;
  r.command = "quiver";
  r.parameters = {{"knot", options.knot}, {"quandle", options.quandle}, {"endos", options.endos}};
  const Diagram d = resolve_knot(catalog, options.knot);
  const FiniteQuandle x = parse_quandle_spec(options.quandle);
  const auto q = coloring_quiver(d, x, parse_endo_spec(x, options.endos));
  r.outputs["vertices"] = q.vertex_count();
  r.outputs["edges"] = q.edge_count();
  r.outputs["endos"] = q.endos.size();
  if (options.include_quiver) r.outputs["quiver"] = to_json(q);
  r.dot = to_dot(q, options.collapse_parallel);
  r.elapsed_ms = elapsed_since(start);
  return r;
}

RunResult cmd_shadow(const Catalog& catalog, const ShadowOptions& options) {
  const auto start = Clock::now();
  RunResult r;
  r.command = "shadow";
  r.parameters = {{"knot", options.knot},
                  {"quandle", options.quandle},
                  {"cocycle", options.cocycle},
                  {"base", options.base},
                  {"endos", options.endos}};
  const Diagram d = resolve_knot(catalog, options.knot);
  const FiniteQuandle x = parse_quandle_spec(options.quandle);
  const Cocycle3 theta = resolve_cocycle(x, options.cocycle);
  if (options.base < 0 || options.base >= x.order())
    throw InvalidParameter("base " + std::to_string(options.base) + " is not an element of the quandle");
  const auto q = shadow_cocycle_quiver(d, x, parse_endo_spec(x, options.endos), options.base, theta);
  r.outputs["vertices"] = q.vertex_count();
  r.outputs["edges"] = q.edge_count();
  r.outputs["weight_histogram"] = histogram_json(q);
  r.outputs["polynomial"] = to_string(cocycle_polynomial(q));
  if (options.include_quiver) r.outputs["quiver"] = to_json(q);
  r.dot = to_dot(q, options.collapse_parallel);
  r.elapsed_ms = elapsed_since(start);
  return r;
}

RunResult cmd_compare(const Catalog& catalog, const CompareOptions& options) {
  const auto start = Clock::now();
  RunResult r;
  r.command = "compare";
  r.parameters = {{"knot_a", options.knot_a},
                  {"knot_b", options.knot_b},
                  {"quandle", options.quandle},
                  {"endos", options.endos},
                  {"weighted", options.weighted}};
  const Diagram da = resolve_knot(catalog, options.knot_a);
  const Diagram db = resolve_knot(catalog, options.knot_b);
  const FiniteQuandle x = parse_quandle_spec(options.quandle);
  const auto endos = parse_endo_spec(x, options.endos);

  WeightedQuiver qa, qb;
  if (options.weighted) {
    r.parameters["cocycle"] = options.cocycle;
    r.parameters["base"] = options.base;
    if (options.base < 0 || options.base >= x.order())
      throw InvalidParameter("base " + std::to_string(options.base) + " is not an element of the quandle");
    const Cocycle3 theta = resolve_cocycle(x, options.cocycle);
    qa = shadow_cocycle_quiver(da, x, endos, options.base, theta);
    qb = shadow_cocycle_quiver(db, x, endos, options.base, theta);
    const auto ma = invariant_multiset(da, x, theta);
    const auto mb = invariant_multiset(db, x, theta);
    r.outputs["multiset_a"] = multiset_json(ma);
    r.outputs["multiset_b"] = multiset_json(mb);
    r.outputs["multisets_equal"] = ma == mb;
    r.outputs["polynomial_a"] = to_string(cocycle_polynomial(qa));
    r.outputs["polynomial_b"] = to_string(cocycle_polynomial(qb));
  } else {
    qa = coloring_quiver(da, x, endos);
    qb = coloring_quiver(db, x, endos);
  }
  r.outputs["vertices_a"] = qa.vertex_count();
  r.outputs["vertices_b"] = qb.vertex_count();
  const auto iso = quiver_isomorphic(qa, qb, options.weighted);
  r.outputs["isomorphic"] = iso.isomorphic;
  if (iso.isomorphic) r.outputs["witness"] = iso.witness;
  r.elapsed_ms = elapsed_since(start);
  return r;
}

RunResult cmd_catalog(const Catalog& catalog) {
  const auto start = Clock::now();
  RunResult r;
  r.command = "catalog";
  auto entries = nlohmann::json::array();
  for (const auto& name : catalog.names()) {
    const auto& e = catalog.at(name);
    nlohmann::json j = {{"name", name},
                        {"pd", e.pd},
                        {"crossings", e.diagram.crossing_count()},
                        {"arcs", e.diagram.arc_count()},
                        {"regions", e.diagram.region_count()},
                        {"writhe", e.diagram.writhe()},
                        {"determinant", counts_json(coloring_determinant(e.diagram))}};
    if (!e.notes.empty()) j["notes"] = e.notes;
    entries.push_back(std::move(j));
  }
  r.outputs["size"] = catalog.size();
  r.outputs["entries"] = std::move(entries);
  r.elapsed_ms = elapsed_since(start);
  return r;
}

}  // namespace quiverknot
