#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quiverknot/diagram.hpp"

namespace quiverknot {

struct CatalogEntry {
  std::string name;
  std::string pd;  // empty for the crossingless unknot
  std::optional<CornerRef> r_infinity;
  std::string notes;
  std::optional<long long> determinant;
  Diagram diagram = Diagram::unknot();
};

/// Named knot diagrams. Entries are validated when they enter the catalog:
/// the PD code must build (planarity via the face count) and, when a
/// determinant is recorded, the coloring matrix must reproduce it.
class Catalog {
 public:
  static Catalog defaults();
  /// Defaults merged with the JSON file at path (or $QUIVERKNOT_CATALOG when path is empty).
  static Catalog load(const std::optional<std::string>& path);

  /// JSON object name -> {pd, r_infinity?, notes?, determinant?}; entries override existing names.
  void merge_json(const nlohmann::json& doc);
  void add(CatalogEntry entry);

  const CatalogEntry& at(const std::string& name) const;
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  std::vector<std::string> names() const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<std::string, CatalogEntry> entries_;
};

CatalogEntry make_entry(std::string name, std::string pd, std::optional<CornerRef> r_infinity = std::nullopt,
                        std::optional<long long> determinant = std::nullopt, std::string notes = {});

}  // namespace quiverknot
