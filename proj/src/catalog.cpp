#include "quiverknot/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "quiverknot/coloring.hpp"

namespace quiverknot {

namespace {

struct DefaultKnot {
  const char* name;
  const char* pd;
  long long determinant;
  const char* notes;
};

// PD codes in the Knot Atlas convention (Rolfsen table numbering). 6_2 and 7_4
// are the plat closures of their rational tangles [3 1 2] and [3 1 3].
constexpr DefaultKnot kDefaults[] = {
    {"3_1", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", 3, "trefoil"},
    {"3_1_kinked", "X(3,6,4,7) X(5,8,6,1) X(7,4,8,5) X(1,2,2,3)", 3,
     "trefoil with a Reidemeister I curl inserted in edge 1"},
    {"4_1", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)", 5, "figure-eight knot"},
    {"5_1", "X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)", 5, "cinquefoil"},
    {"5_2", "X(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3)", 7, ""},
    {"6_1", "X(1,4,2,5) X(7,10,8,11) X(3,9,4,8) X(9,3,10,2) X(5,12,6,1) X(11,6,12,7)", 9, "stevedore"},
    {"6_2", "X(6,1,7,2) X(2,7,3,8) X(8,3,9,4) X(12,9,1,10) X(4,12,5,11) X(10,6,11,5)", 11, ""},
    {"6_3", "X(4,2,5,1) X(8,4,9,3) X(12,9,1,10) X(10,5,11,6) X(6,11,7,12) X(2,8,3,7)", 13, ""},
    {"7_4", "X(10,2,11,1) X(2,10,3,9) X(8,4,9,3) X(14,8,1,7) X(4,14,5,13) X(12,6,13,5) X(6,12,7,11)", 15, ""},
    {"8_10",
     "X(1,4,2,5) X(3,8,4,9) X(9,15,10,14) X(5,13,6,12) X(13,7,14,6) X(11,1,12,16) X(15,11,16,10) X(7,2,8,3)", 27,
     ""},
    {"8_18",
     "X(6,2,7,1) X(8,3,9,4) X(16,11,1,12) X(2,14,3,13) X(4,15,5,16) X(10,6,11,5) X(12,7,13,8) X(14,10,15,9)", 45,
     ""},
};

}  // namespace

CatalogEntry make_entry(std::string name, std::string pd, std::optional<CornerRef> r_infinity,
                        std::optional<long long> determinant, std::string notes) {
  CatalogEntry entry{std::move(name), std::move(pd), r_infinity, std::move(notes), determinant, Diagram::unknot()};
  try {
    entry.diagram = Diagram::build(parse_pd(entry.pd), r_infinity);
  } catch (const Error& e) {
    throw LoadError(entry.name, e.what());
  }
  if (determinant) {
    const BigInt det = coloring_determinant(entry.diagram);
    if (det != *determinant)
      throw LoadError(entry.name, "coloring matrix gives determinant " + det.str() + ", recorded " +
                                      std::to_string(*determinant));
  }
  for (int n : {3, 5}) {
    const BigInt by_smith = count_colorings_dihedral(entry.diagram, n);
    const auto listed = enumerate_colorings(entry.diagram, FiniteQuandle::dihedral(n)).size();
    if (by_smith != listed)
      throw InternalError("catalog entry '" + entry.name + "': Smith count and enumeration disagree over R_" +
                          std::to_string(n));
  }
  return entry;
}

Catalog Catalog::defaults() {
  Catalog catalog;
  CatalogEntry unknot{"unknot", "", std::nullopt, "crossingless circle", 1, Diagram::unknot()};
  catalog.entries_.emplace(unknot.name, std::move(unknot));
  for (const auto& k : kDefaults) catalog.add(make_entry(k.name, k.pd, std::nullopt, k.determinant, k.notes));
  return catalog;
}

void Catalog::add(CatalogEntry entry) {
  const std::string name = entry.name;
  entries_.insert_or_assign(name, std::move(entry));
}

void Catalog::merge_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw LoadError("<root>", "catalog must be a JSON object of name -> entry");
  for (const auto& [name, spec] : doc.items()) {
    if (!spec.is_object() || !spec.contains("pd") || !spec["pd"].is_string())
      throw LoadError(name, "entry needs a string field 'pd'");
    std::optional<CornerRef> corner;
    if (spec.contains("r_infinity") && !spec["r_infinity"].is_null()) {
      const auto& r = spec["r_infinity"];
      if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
        throw LoadError(name, "'r_infinity' must be [crossing, quadrant]");
      corner = CornerRef{r[0].get<int>(), r[1].get<int>()};
    }
    std::optional<long long> det;
    if (spec.contains("determinant")) {
      if (!spec["determinant"].is_number_integer()) throw LoadError(name, "'determinant' must be an integer");
      det = spec["determinant"].get<long long>();
    }
    std::string notes;
    if (spec.contains("notes") && spec["notes"].is_string()) notes = spec["notes"].get<std::string>();
    try {
      add(make_entry(name, spec["pd"].get<std::string>(), corner, det, notes));
    } catch (const LoadError&) {
      throw;
    } catch (const Error& e) {
      throw LoadError(name, e.what());
    }
  }
}

Catalog Catalog::load(const std::optional<std::string>& path) {
  Catalog catalog = defaults();
  std::optional<std::string> file = path;
  if (!file)
    if (const char* env = std::getenv("QUIVERKNOT_CATALOG"); env && *env) file = env;
  if (!file) return catalog;
  std::ifstream in(*file);
  if (!in) throw LoadError(*file, "cannot open catalog file");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(*file, std::string("invalid JSON: ") + e.what());
  }
  catalog.merge_json(doc);
  return catalog;
}

const CatalogEntry& Catalog::at(const std::string& name) const {
  const auto it = entries_.find(name);
  if (it == entries_.end()) throw InvalidParameter("unknown knot '" + name + "'");
  return it->second;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [name, entry] : entries_) out.push_back(name);
  return out;
}

}  // namespace quiverknot
