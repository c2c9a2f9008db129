#include <clocale>
#include <cmath>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "regge/alexandrov.hpp"
#include "regge/error.hpp"
#include "regge/functional.hpp"
#include "regge/io.hpp"
#include "regge/mesh.hpp"
#include "regge/rigidity.hpp"

namespace {

using namespace regge;

struct RunConfig {
  std::string input;
  std::string out_path;
  std::string builtin;
  double tol_zero = kZeroEigenRel;
  double tol_newton = 1e-10;
  double tol_final = 1e-8;
  double tol_theta = 1e-9;
  double twist = 30.0;
  int max_steps = 10000;
  int max_flips = 100;
  unsigned seed = 20240601;  // reserved for generator plumbing; no command draws from it yet
  bool trace = false;
  bool check_gradient = false;
};

const char* bool_str(bool b) { return b ? "true" : "false"; }

int cmd_validate(const RunConfig& cfg) {
  ManifoldInput in = parse_manifold(read_file(cfg.input));
  const Triangulation3& t3 = in.complex;
  int bad = first_inadmissible_tet(t3, in.lengths);
  std::string line = "tets=" + std::to_string(t3.tets.size()) +
                     " edges=" + std::to_string(t3.edges.size()) +
                     " interior=" + std::to_string(t3.interior_edge_indices.size()) +
                     " boundary=" + std::to_string(t3.boundary_edge_indices.size()) +
                     " admissible=" + (bad < 0 ? "yes" : "no");
  if (bad >= 0) line += " tet=" + std::to_string(bad);
  std::printf("%s\n", line.c_str());
  return bad < 0 ? 0 : 2;
}

int cmd_energy(const RunConfig& cfg) {
  ManifoldInput in = parse_manifold(read_file(cfg.input));
  const Triangulation3& t3 = in.complex;
  CurvatureField field = curvatures(t3, in.lengths);
  double S = energy(t3, in.lengths);

  std::string out = "{\n  \"S\": " + format_number(S) + ",\n  \"edges\": [\n";
  for (size_t e = 0; e < t3.edges.size(); ++e) {
    out += "    {\"edge\": [" + std::to_string(t3.edges[e][0]) + ", " +
           std::to_string(t3.edges[e][1]) + "], \"length\": " + format_number(in.lengths.value[e]) +
           ", \"interior\": " + bool_str(!t3.edge_on_boundary[e]) +
           ", \"kappa\": " + format_number(field.kappa[e]) + "}";
    out += e + 1 < t3.edges.size() ? ",\n" : "\n";
  }
  out += "  ]";

  if (cfg.check_gradient) {
    double worst = 0;
    for (size_t e = 0; e < t3.edges.size(); ++e) {
      double l0 = in.lengths.value[e];
      double h = 1e-5 * l0;
      auto s_at = [&](double le) {
        EdgeLengths moved = in.lengths;
        moved.value[e] = le;
        return energy(t3, moved);
      };
      double fd =
          (s_at(l0 - 2 * h) - 8 * s_at(l0 - h) + 8 * s_at(l0 + h) - s_at(l0 + 2 * h)) / (12 * h);
      double kappa = field.kappa[e];
      double err = std::abs(fd - kappa) / std::max(1.0, std::abs(kappa));
      worst = std::max(worst, err);
    }
    out += ",\n  \"max_gradient_mismatch\": " + format_number(worst);
  }

  out += "\n}\n";
  std::fputs(out.c_str(), stdout);
  return 0;
}

int cmd_rigidity(const RunConfig& cfg) {
  if (cfg.builtin.empty() && cfg.input.empty())
    fail(ErrorCode::ParseError, "need an input file or --builtin");
  EmbeddedPolyhedron poly = cfg.builtin.empty() ? parse_polyhedron(read_file(cfg.input))
                                                : builtin_polyhedron(cfg.builtin, cfg.twist);
  StarComplex sc = star_from_embedding(poly);
  RigidityVerdict v = rigidity_verdict(sc, cfg.tol_zero);

  std::string out = "{\n";
  out += "  \"rigid\": " + std::string(bool_str(v.rigid)) + ",\n";
  out += "  \"advisory\": " + std::string(bool_str(v.advisory)) + ",\n";
  out += "  \"kernel_dimension\": " + std::to_string(v.kernel_dimension) + ",\n";
  out += "  \"trivial_dimension\": " + std::to_string(v.trivial_dimension) + ",\n";
  out += "  \"positive\": " + std::to_string(v.report.positive) + ",\n";
  out += "  \"zero\": " + std::to_string(v.report.zero) + ",\n";
  out += "  \"negative\": " + std::to_string(v.report.negative) + ",\n";
  out += "  \"spectral_gap\": " + format_number(v.report.spectral_gap) + ",\n";
  out += "  \"max_interior_curvature\": " + format_number(v.max_interior_curvature) + "\n";
  out += "}\n";
  std::fputs(out.c_str(), stdout);
  return 0;
}

int cmd_realize(const RunConfig& cfg) {
  SurfaceInput in = parse_surface(read_file(cfg.input));
  TargetMetric target = in.cone_points ? make_target_metric(in.surface, *in.cone_points)
                                       : make_target_metric(in.surface);
  SolverConfig solver;
  solver.theta_tol = cfg.tol_theta;
  solver.newton_tol_rel = cfg.tol_newton;
  solver.final_tol = cfg.tol_final;
  solver.max_steps = cfg.max_steps;
  solver.max_flips_per_step = cfg.max_flips;
  solver.trace = cfg.trace;

  RealizationResult res = homotopy_solve(target, solver);
  write_file(cfg.out_path, obj_of(res.vertices, res.triangulation.triangles));

  std::string out = "{\n  \"radii\": [";
  for (size_t i = 0; i < res.radii.size(); ++i) {
    out += format_number(res.radii[i]);
    if (i + 1 < res.radii.size()) out += ", ";
  }
  out += "],\n";
  out += "  \"max_residual_curvature\": " + format_number(res.max_residual_curvature) + ",\n";
  out += "  \"steps\": " + std::to_string(res.trace.steps) + ",\n";
  out += "  \"flips\": " + std::to_string(res.trace.flips) + ",\n";
  out += "  \"newton_iterations\": " + std::to_string(res.trace.newton_iterations) + ",\n";
  out += "  \"max_condition\": " + format_number(res.trace.max_condition) + "\n";
  out += "}\n";
  std::fputs(out.c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");

  CLI::App app{"discrete Hilbert-Einstein energetics and convex realization"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--tol-zero", cfg.tol_zero, "relative zero-eigenvalue threshold")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-newton", cfg.tol_newton, "Newton corrector tolerance (relative)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-final", cfg.tol_final, "residual curvature bound at the end of the homotopy")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-theta", cfg.tol_theta, "slack over pi before an edge counts as reflex")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-steps", cfg.max_steps, "homotopy step budget")->check(CLI::PositiveNumber);
  app.add_option("--max-flips", cfg.max_flips, "flip budget per homotopy step")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized auxiliary runs");
  app.add_flag("--trace", cfg.trace, "per-step progress on stderr")->envname("REGGE_HE_TRACE");

  CLI::App* validate = app.add_subcommand("validate", "check a 3-manifold file and report counts");
  validate->add_option("input", cfg.input, "3-manifold JSON file")->required();

  CLI::App* energy = app.add_subcommand("energy", "energy and per-edge curvature report");
  energy->add_option("input", cfg.input, "3-manifold JSON file")->required();
  energy->add_flag("--check-gradient", cfg.check_gradient,
                   "report max mismatch between finite differences of S and kappa");

  CLI::App* rigidity = app.add_subcommand("rigidity", "infinitesimal rigidity verdict");
  rigidity->add_option("input", cfg.input, "polyhedron JSON file");
  rigidity->add_option("--builtin", cfg.builtin, "catalog polyhedron name instead of a file");
  rigidity->add_option("--twist", cfg.twist, "schoenhardt twist in degrees, in (0, 60)");

  CLI::App* realize = app.add_subcommand("realize", "realize a convex polyhedron from a cone-metric");
  realize->add_option("input", cfg.input, "surface metric JSON file")->required();
  realize->add_option("--out", cfg.out_path, "output OBJ path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(cfg);
    if (energy->parsed()) return cmd_energy(cfg);
    if (rigidity->parsed()) return cmd_rigidity(cfg);
    return cmd_realize(cfg);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    switch (e.kind()) {
      case ErrorKind::Input:
        return 2;
      case ErrorKind::Precondition:
        return 3;
      case ErrorKind::Solver:
        return 4;
    }
    return 4;
  }
}
