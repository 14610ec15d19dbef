#include "gvf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "gvf/gvf_core.hpp"
#include "gvf/manifold.hpp"
#include "gvf/mesh_io.hpp"
#include "gvf/pipeline.hpp"
#include "gvf/raster_io.hpp"
#include "gvf/real_fit.hpp"
#include "text_util.hpp"

namespace gvf {

namespace {

struct CheckArgs {
  std::string input;
  int width = 0;
  int height = 0;
  std::string mesh;
  std::string space = "vertex";
};

struct GridFitArgs {
  std::string input;
  int width = 0;
  int height = 0;
  bool auto_res = false;
  std::vector<double> bounds;
  std::string policy = "mid";
  int smooth_iters = 100;
  int order = 1;
  double lambda = 0.2;
  double tolerance = 1e-8;
  int levels = 1;
  std::string out_pgm;
  std::string out_csv;
  bool report = false;
};

struct MeshFitArgs {
  std::string mesh;
  std::string input;
  std::string space = "vertex";
  std::string mode = "real";
  int level_count = 0;
  std::string policy = "mid";
  std::string out_off;
  std::string out_values;
  std::string out_obj;
};

struct HarmonicArgs {
  std::string mesh;
  std::string input;
  std::string space = "vertex";
  int iters = kDefaultHarmonicIterations;
  std::string policy = "mid";
  std::string out_values;
  std::string trace;
};

void print_infeasible(std::ostream& out, const FeasibilityReport& report) {
  out << "infeasible";
  if (report.witness) out << ": " << describe(*report.witness);
  out << "\n";
}

int run_check(const CheckArgs& a, std::ostream& out) {
  const auto samples = parse_element_samples_csv(read_text_file(a.input));
  const auto guides = to_level_guiding(samples);
  std::optional<DomainGraph> grid;
  std::optional<TriMesh> mesh;
  const DomainGraph* g = nullptr;
  if (!a.mesh.empty()) {
    mesh.emplace(load_mesh_file(a.mesh));
    g = &mesh->graph(parse_space(a.space));
  } else {
    if (a.width < 1 || a.height < 1) throw input_error("check needs --mesh or --width/--height");
    grid.emplace(build_grid(a.width, a.height));
    g = &*grid;
  }
  const auto report = check_feasible(*g, guides);
  if (!report.feasible) {
    print_infeasible(out, report);
    return kExitInfeasible;
  }
  out << "feasible\n";
  return kExitOk;
}

int run_grid_fit(const GridFitArgs& a, std::ostream& out, std::ostream& err) {
  const auto samples = parse_samples_csv(read_text_file(a.input));

  PipelineOptions options;
  options.policy = parse_policy(a.policy);
  options.levels = a.levels;
  options.smooth.iterations = a.smooth_iters;
  options.smooth.order = a.order;
  options.smooth.lambda = a.lambda;
  options.smooth.tolerance = a.tolerance;
  if (!a.auto_res && (a.width > 0 || a.height > 0)) {
    if (a.width < 1 || a.height < 1) throw input_error("--width and --height go together");
    Bounds b = a.bounds.empty() ? sample_bounds(samples)
                                : Bounds{a.bounds[0], a.bounds[1], a.bounds[2], a.bounds[3]};
    options.grid = GridSpec{a.width, a.height, b};
  }

  const auto result = run_grid_pipeline(samples, options);
  for (const auto& w : result.warnings) err << "warning: " << w << "\n";
  const int w = result.resolution.spec.width;
  const int h = result.resolution.spec.height;
  if (!a.out_pgm.empty()) write_pgm(a.out_pgm, w, h, result.field);
  if (!a.out_csv.empty()) write_csv_raster(a.out_csv, w, h, result.field);
  if (a.report) out << result.report.to_string() << "\n";
  return kExitOk;
}

int run_mesh_fit(const MeshFitArgs& a, std::ostream& out) {
  const TriMesh mesh = load_mesh_file(a.mesh);
  const auto space = parse_space(a.space);
  const auto policy = parse_policy(a.policy);
  const auto samples = parse_element_samples_csv(read_text_file(a.input));

  std::vector<double> values;
  if (a.mode == "int") {
    const auto guides = to_level_guiding(samples);
    int n = a.level_count;
    if (n == 0) {
      for (const auto& e : guides) n = std::max(n, e.value);
    }
    try {
      const auto field = space == ElementSpace::vertex
                             ? manifold_int_gvf(mesh, guides, n, policy)
                             : manifold_cell_int_gvf(mesh, guides, n, policy);
      values.assign(field.values.begin(), field.values.end());
    } catch (const InfeasibleError& e) {
      print_infeasible(out, e.report());
      return kExitInfeasible;
    }
  } else if (a.mode == "real") {
    const auto guides = to_real_guiding(samples);
    values = (space == ElementSpace::vertex ? manifold_real_gvf(mesh, guides, policy)
                                            : manifold_cell_real_gvf(mesh, guides, policy))
                 .values;
  } else {
    throw input_error("--mode must be int or real");
  }

  if (!a.out_off.empty()) write_text_file(a.out_off, format_off(mesh));
  if (!a.out_values.empty()) write_text_file(a.out_values, format_element_values_csv(values));
  if (!a.out_obj.empty()) {
    if (space != ElementSpace::vertex) throw input_error("--out-obj needs --space vertex");
    write_text_file(a.out_obj, format_obj(mesh, values));
  }
  if (a.out_off.empty() && a.out_values.empty() && a.out_obj.empty()) {
    out << format_element_values_csv(values);
  }
  return kExitOk;
}

int run_harmonic(const HarmonicArgs& a, std::ostream& out) {
  const TriMesh mesh = load_mesh_file(a.mesh);
  const auto space = parse_space(a.space);
  const auto guides = to_real_guiding(parse_element_samples_csv(read_text_file(a.input)));

  const auto init = space == ElementSpace::vertex
                        ? manifold_real_gvf(mesh, guides, parse_policy(a.policy))
                        : manifold_cell_real_gvf(mesh, guides, parse_policy(a.policy));
  const auto result = harmonic_fit(mesh, init, guides, a.iters);

  if (!a.trace.empty()) {
    std::string trace = "sweep,max_update\n";
    for (std::size_t s = 0; s < result.trace.size(); ++s) {
      trace += std::to_string(s + 1) + "," + text::format_double(result.trace[s]) + "\n";
    }
    write_text_file(a.trace, trace);
  }
  const auto csv = format_element_values_csv(result.field.values);
  if (!a.out_values.empty()) {
    write_text_file(a.out_values, csv);
  } else {
    out << csv;
  }
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gradually varied reconstruction of sampled data on grids and meshes", "gvf"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Feasibility of an integer guiding set");
  check_cmd->add_option("--input", check.input, "CSV of id,level")->required();
  check_cmd->add_option("--width", check.width, "Grid width");
  check_cmd->add_option("--height", check.height, "Grid height");
  check_cmd->add_option("--mesh", check.mesh, "OFF or OBJ mesh instead of a grid");
  check_cmd->add_option("--space", check.space, "vertex | cell")->check(CLI::IsMember({"vertex", "cell"}));

  GridFitArgs grid;
  auto* grid_cmd = app.add_subcommand("grid-fit", "Fit scattered x,y,value samples on a grid");
  grid_cmd->add_option("--input", grid.input, "CSV of x,y,value")->required();
  auto* w_opt = grid_cmd->add_option("--width", grid.width, "Grid width");
  auto* h_opt = grid_cmd->add_option("--height", grid.height, "Grid height");
  grid_cmd->add_flag("--auto-res", grid.auto_res, "Choose the resolution automatically")
      ->excludes(w_opt)
      ->excludes(h_opt);
  grid_cmd->add_option("--bounds", grid.bounds, "xmin ymin xmax ymax (with --width/--height)")
      ->expected(4)
      ->delimiter(',');
  grid_cmd->add_option("--policy", grid.policy, "lower | mid | upper")
      ->check(CLI::IsMember({"lower", "mid", "midpoint", "upper"}));
  grid_cmd->add_option("--smooth-iters", grid.smooth_iters, "Sweeps per smoothing pass");
  grid_cmd->add_option("--order", grid.order, "Number of smoothing passes");
  grid_cmd->add_option("--lambda", grid.lambda, "Relaxation step in (0, 0.25]");
  grid_cmd->add_option("--tolerance", grid.tolerance, "Stop when a sweep moves less than this");
  grid_cmd->add_option("--levels", grid.levels, "Multilevel pyramid depth");
  grid_cmd->add_option("--out-pgm", grid.out_pgm, "ASCII PGM output");
  grid_cmd->add_option("--out-csv", grid.out_csv, "CSV raster output");
  grid_cmd->add_flag("--report", grid.report, "Print a key=value run summary");

  MeshFitArgs mesh;
  auto* mesh_cmd = app.add_subcommand("mesh-fit", "Gradually varied fit on a triangle mesh");
  mesh_cmd->add_option("--mesh", mesh.mesh, "OFF or OBJ mesh")->required();
  mesh_cmd->add_option("--input", mesh.input, "CSV of id,value")->required();
  mesh_cmd->add_option("--space", mesh.space, "vertex | cell")->check(CLI::IsMember({"vertex", "cell"}));
  mesh_cmd->add_option("--mode", mesh.mode, "int | real")->check(CLI::IsMember({"int", "real"}));
  mesh_cmd->add_option("--level-count", mesh.level_count, "Levels for int mode (default: max input)");
  mesh_cmd->add_option("--policy", mesh.policy, "lower | mid | upper")
      ->check(CLI::IsMember({"lower", "mid", "midpoint", "upper"}));
  mesh_cmd->add_option("--out-off", mesh.out_off, "Write the mesh as OFF");
  mesh_cmd->add_option("--out-values", mesh.out_values, "Write id,value CSV");
  mesh_cmd->add_option("--out-obj", mesh.out_obj, "Write OBJ with grayscale vertex colors");

  HarmonicArgs harmonic;
  auto* harm_cmd = app.add_subcommand("harmonic", "Harmonic fit seeded by a real-valued fit");
  harm_cmd->add_option("--mesh", harmonic.mesh, "OFF or OBJ mesh")->required();
  harm_cmd->add_option("--input", harmonic.input, "CSV of id,value")->required();
  harm_cmd->add_option("--space", harmonic.space, "vertex | cell")->check(CLI::IsMember({"vertex", "cell"}));
  harm_cmd->add_option("--iters", harmonic.iters, "Jacobi sweeps")->check(CLI::NonNegativeNumber);
  harm_cmd->add_option("--policy", harmonic.policy, "lower | mid | upper")
      ->check(CLI::IsMember({"lower", "mid", "midpoint", "upper"}));
  harm_cmd->add_option("--out-values", harmonic.out_values, "Write id,value CSV");
  harm_cmd->add_option("--trace", harmonic.trace, "Write per-sweep max update CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    CLI::App* failing = &app;
    for (auto* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return kExitInput;
  }

  try {
    if (*check_cmd) return run_check(check, out);
    if (*grid_cmd) return run_grid_fit(grid, out, err);
    if (*mesh_cmd) return run_mesh_fit(mesh, out);
    if (*harm_cmd) return run_harmonic(harmonic, out);
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << "\n";
    print_infeasible(out, e.report());
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::internal ? kExitInternal : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace gvf
