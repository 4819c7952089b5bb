// quiverknot: quandle colorings, coloring quivers and shadow cocycle quivers of knot diagrams.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "quiverknot/commands.hpp"

namespace {

struct Output {
  std::string format = "json";
  std::string dot_file;
  bool no_timing = false;
};

int emit(const quiverknot::RunResult& result, const Output& out) {
  if (!out.dot_file.empty()) {
    if (result.dot.empty()) throw quiverknot::InvalidParameter("--dot is only available for quiver and shadow");
    std::ofstream f(out.dot_file);
    if (!f) throw quiverknot::InvalidParameter("cannot write '" + out.dot_file + "'");
    f << result.dot;
  }
  if (out.format == "text")
    std::cout << result.to_text();
  else
    std::cout << result.to_json(!out.no_timing).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quandle coloring quivers and shadow cocycle quivers of knot diagrams"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  std::optional<std::string> catalog_path;
  Output out;
  app.add_option("--catalog", catalog_path, "JSON catalog merged over the built-in knots (default: $QUIVERKNOT_CATALOG)");
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--dot", out.dot_file, "Also write the quiver as Graphviz DOT to FILE");
  app.add_flag("--no-timing", out.no_timing, "Omit the timing block so output is byte-stable");

  quiverknot::ColoringsOptions col;
  auto* colorings = app.add_subcommand("colorings", "Count or list quandle colorings");
  colorings->add_option("--knot,--pd", col.knot, "Catalog name or PD code")->required();
  colorings->add_option("--quandle", col.quandle, "dihedral:n | alexander:n:t | table:PATH")->required();
  auto* count_flag = colorings->add_flag("--count", "Report the count only (default)");
  colorings->add_flag("--list", col.list, "List every coloring")->excludes(count_flag);

  quiverknot::QuiverOptions qv;
  auto* quiver = app.add_subcommand("quiver", "Build the quandle coloring quiver");
  quiver->add_option("--knot,--pd", qv.knot, "Catalog name or PD code")->required();
  quiver->add_option("--quandle", qv.quandle, "dihedral:n | alexander:n:t | table:PATH")->required();
  quiver->add_option("--endos", qv.endos, "all | auto | random:K:SEED | a,b;a,b;...")->capture_default_str();
  quiver->add_flag("--collapse-parallel", qv.collapse_parallel, "Merge parallel edges in DOT output");

  quiverknot::ShadowOptions sh;
  auto* shadow = app.add_subcommand("shadow", "Build the shadow cocycle quiver and its polynomial");
  shadow->add_option("--knot,--pd", sh.knot, "Catalog name or PD code")->required();
  shadow->add_option("--quandle", sh.quandle, "dihedral:p")->required();
  shadow->add_option("--cocycle", sh.cocycle, "mochizuki | table:PATH")->capture_default_str();
  shadow->add_option("--base", sh.base, "Colour of the unbounded region")->capture_default_str();
  shadow->add_option("--endos", sh.endos, "all | auto | random:K:SEED | a,b;a,b;...")->capture_default_str();
  shadow->add_flag("--collapse-parallel", sh.collapse_parallel, "Merge parallel edges in DOT output");

  quiverknot::CompareOptions cmp;
  auto* compare = app.add_subcommand("compare", "Decide quiver isomorphism for two knots");
  compare->add_option("knot_a", cmp.knot_a, "First knot (name or PD)")->required();
  compare->add_option("knot_b", cmp.knot_b, "Second knot (name or PD)")->required();
  compare->add_option("--quandle", cmp.quandle, "dihedral:n | alexander:n:t | table:PATH")->required();
  compare->add_option("--endos", cmp.endos, "all | auto | random:K:SEED | a,b;a,b;...")->capture_default_str();
  compare->add_flag("--weighted", cmp.weighted, "Compare shadow cocycle quivers including weights");
  compare->add_option("--cocycle", cmp.cocycle, "mochizuki | table:PATH")->capture_default_str();
  compare->add_option("--base", cmp.base, "Colour of the unbounded region")->capture_default_str();

  auto* catalog_cmd = app.add_subcommand("catalog", "List the knot catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto catalog = quiverknot::Catalog::load(catalog_path);
    quiverknot::RunResult result;
    if (colorings->parsed()) result = quiverknot::cmd_colorings(catalog, col);
    else if (quiver->parsed()) result = quiverknot::cmd_quiver(catalog, qv);
    else if (shadow->parsed()) result = quiverknot::cmd_shadow(catalog, sh);
    else if (compare->parsed()) result = quiverknot::cmd_compare(catalog, cmp);
    else if (catalog_cmd->parsed()) result = quiverknot::cmd_catalog(catalog);
    return emit(result, out);
  } catch (const quiverknot::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.error_class());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(quiverknot::ErrorClass::internal);
  }
}
