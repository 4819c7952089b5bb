#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "quiverknot/catalog.hpp"
#include "quiverknot/quiver.hpp"

namespace quiverknot {

/// `dihedral:n` | `alexander:n:t` | `table:PATH`.
FiniteQuandle parse_quandle_spec(std::string_view spec);

/// `all` | `auto` | `random:K:SEED` | `a,b;a,b;...` (affine maps x -> a*x + b, dihedral only).
/// Listed maps are validated as endomorphisms.
std::vector<QuandleMap> parse_endo_spec(const FiniteQuandle& x, std::string_view spec);

/// K distinct endomorphisms drawn from End(X) with a seeded generator, in End(X) order.
std::vector<QuandleMap> random_endo_subset(const FiniteQuandle& x, std::size_t k, std::uint64_t seed);

/// A catalog name, or a PD code when the text contains an `X` term.
Diagram resolve_knot(const Catalog& catalog, const std::string& name_or_pd);

/// Machine-readable outcome of one command.
struct RunResult {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  double elapsed_ms = 0.0;
  std::string dot;  // filled by commands that build a quiver

  /// {command, parameters, outputs, timing?}; without timing the output is byte-stable.
  nlohmann::json to_json(bool include_timing = true) const;
  /// One "key: value" line per output.
  std::string to_text() const;
};

struct ColoringsOptions {
  std::string knot;
  std::string quandle;
  bool list = false;
};

struct QuiverOptions {
  std::string knot;
  std::string quandle;
  std::string endos = "all";
  bool collapse_parallel = false;
  bool include_quiver = true;  // embed the JSON quiver in the outputs
};

struct ShadowOptions {
  std::string knot;
  std::string quandle;
  std::string cocycle = "mochizuki";
  int base = 0;
  std::string endos = "all";
  bool collapse_parallel = false;
  bool include_quiver = true;
};

struct CompareOptions {
  std::string knot_a;
  std::string knot_b;
  std::string quandle;
  std::string endos = "all";
  bool weighted = false;
  std::string cocycle = "mochizuki";
  int base = 0;
};

RunResult cmd_colorings(const Catalog& catalog, const ColoringsOptions& options);
RunResult cmd_quiver(const Catalog& catalog, const QuiverOptions& options);
RunResult cmd_shadow(const Catalog& catalog, const ShadowOptions& options);
RunResult cmd_compare(const Catalog& catalog, const CompareOptions& options);
RunResult cmd_catalog(const Catalog& catalog);

/// `mochizuki` (requires a dihedral quandle of odd prime order) or `table:PATH`.
Cocycle3 resolve_cocycle(const FiniteQuandle& x, std::string_view spec);

/// Multiset as a sorted array of [value, multiplicity].
nlohmann::json multiset_json(const ValueMultiset& m);

}  // namespace quiverknot
