#include <CLI11.hpp>
#include <cmath>
#include <iostream>

#include "coverlift/cusp_geometry.hpp"
#include "coverlift/harness.hpp"

using namespace coverlift;

namespace {

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

Triangulation load_surface(const std::string& path) { return triangulation_from_json(read_json_file(path)); }

struct CoverArgs {
  std::string surface, spec;
  int max_degree = 6;
};

CoverTriangulation load_cover(const Triangulation& t, const CoverArgs& args) {
  const CoverSpec spec = cover_spec_from_json(t, read_json_file(args.spec));
  if (spec.degree > args.max_degree) {
    throw std::invalid_argument("degree " + std::to_string(spec.degree) + " exceeds --max-degree " +
                                std::to_string(args.max_degree));
  }
  return build_cover(t, spec);
}

Json census(const Triangulation& t) {
  const Surface s = t.surface();
  return Json{{"genus", s.genus},
              {"punctures", s.punctures},
              {"euler_characteristic", s.euler_characteristic()},
              {"complexity", s.complexity()},
              {"triangles", t.num_triangles()},
              {"edges", t.num_edges()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curve complexes of punctured surfaces and their finite covers"};
  app.require_subcommand(1);
  int status = 0;

  int genus = 0, punctures = 5;
  auto* surface = app.add_subcommand("surface", "Print the canonical triangulation of S_{g,n}");
  surface->add_option("--genus,-g", genus)->required();
  surface->add_option("--punctures,-n", punctures)->required();
  surface->callback([&] { print(to_json(build_surface(genus, punctures))); });

  std::string surface_file, a_file, b_file;
  DistanceBudget budget{3, 2, 8};
  auto* distance = app.add_subcommand("distance", "Certified curve complex distance");
  distance->add_option("--surface", surface_file)->required()->check(CLI::ExistingFile);
  distance->add_option("--a", a_file)->required()->check(CLI::ExistingFile);
  distance->add_option("--b", b_file)->required()->check(CLI::ExistingFile);
  distance->add_option("--weight-bound", budget.weight_bound);
  distance->add_option("--radius", budget.radius);
  distance->add_option("--descent-steps", budget.descent_steps);
  distance->callback([&] {
    const Triangulation t = load_surface(surface_file);
    const CurveClass a = curve_from_json(t, read_json_file(a_file));
    const CurveClass b = curve_from_json(t, read_json_file(b_file));
    const CurveComplex complex(t);
    const DistanceCertificate cert = complex.distance(a, b, budget);
    Json out = to_json(cert);
    out["intersection_number"] = intersection_number(t, a.coords(), b.coords());
    print(out);
  });

  bool dump = false;
  auto* intersect = app.add_subcommand("intersect", "Intersection number and minimal-position overlay");
  intersect->add_option("--surface", surface_file)->required()->check(CLI::ExistingFile);
  intersect->add_option("--a", a_file)->required()->check(CLI::ExistingFile);
  intersect->add_option("--b", b_file)->required()->check(CLI::ExistingFile);
  intersect->add_flag("--dump", dump, "Include the arrangement");
  intersect->callback([&] {
    const Triangulation t = load_surface(surface_file);
    const Coords a = coords_from_json(t, read_json_file(a_file));
    const Coords b = coords_from_json(t, read_json_file(b_file));
    const Arrangement arr = minimal_position(t, a, b);
    Json out{{"intersection_number", arr.num_vertices()}, {"fills", fills(t, a, b)}};
    if (auto w = disjoint_witness(t, a, b)) out["witness"] = curve_to_json(t, w->coords());
    if (dump) out["arrangement"] = to_json(arr);
    print(out);
  });

  CoverArgs cover_args;
  std::string curve_file;
  auto* cover = app.add_subcommand("cover", "Finite covers given by edge permutations");
  cover->require_subcommand(1);
  auto* build = cover->add_subcommand("build", "Build the total space and report its census");
  auto* lift = cover->add_subcommand("lift", "Lift a curve: all components of its preimage");
  for (auto* cmd : {build, lift}) {
    cmd->add_option("--surface", cover_args.surface)->required()->check(CLI::ExistingFile);
    cmd->add_option("--spec", cover_args.spec)->required()->check(CLI::ExistingFile);
    cmd->add_option("--max-degree", cover_args.max_degree, "Refuse larger covers")->capture_default_str();
  }
  lift->add_option("--curve", curve_file)->required()->check(CLI::ExistingFile);
  build->callback([&] {
    const Triangulation t = load_surface(cover_args.surface);
    const CoverTriangulation c = load_cover(t, cover_args);
    print(Json{{"degree", c.degree}, {"census", census(c.total)}, {"triangulation", to_json(c.total)}});
  });
  lift->callback([&] {
    const Triangulation t = load_surface(cover_args.surface);
    const CoverTriangulation c = load_cover(t, cover_args);
    const CurveClass a = curve_from_json(t, read_json_file(curve_file));
    Json lifts = Json::array();
    for (const CurveClass& x : lift_curve(c, a)) lifts.push_back(curve_to_json(c.total, x.coords()));
    print(Json{{"census", census(c.total)},
               {"preferred", curve_to_json(c.total, preferred_lift(c, a).coords())},
               {"components", std::move(lifts)}});
  });

  double delta = 0.1, delta_prime = 0.05;
  int samples = 200, points = 6;
  std::uint64_t seed = 1;
  auto* cusp = app.add_subcommand("cusp", "Horoball retraction constant and a randomized check");
  cusp->add_option("--delta", delta)->required();
  cusp->add_option("--delta-prime", delta_prime)->required();
  cusp->add_option("--samples", samples)->capture_default_str();
  cusp->add_option("--points", points, "Vertices per sampled path")->capture_default_str();
  cusp->add_option("--seed", seed)->capture_default_str();
  cusp->callback([&] {
    const double r = lipschitz_constant(delta, delta_prime);
    Rng rng(seed);
    double worst = 0;
    bool holds = true;
    if (r > 1) {
      for (int i = 0; i < samples; ++i) {
        const RetractionSample s = retract(random_slab_path(rng, r, points));
        worst = std::max(worst, s.ratio());
        holds = holds && s.retracted <= r * s.geodesic * (1 + 1e-12);
      }
    }
    print(Json{{"delta", delta},
               {"delta_prime", delta_prime},
               {"R", r},
               {"samples", r > 1 ? samples : 0},
               {"max_ratio", worst},
               {"holds", holds}});
    if (!holds) status = 1;
  });

  std::string config_file, out_dir;
  auto* experiment = app.add_subcommand("experiment", "Sampled lifting experiments");
  experiment->require_subcommand(1);
  auto* qie = experiment->add_subcommand("qie", "Distortion of the lift map and the fitted constant");
  auto* lemma = experiment->add_subcommand("lemma-simp", "Lift exact geodesics and verify them upstairs");
  for (auto* cmd : {qie, lemma}) {
    cmd->add_option("--config", config_file, "Config JSON (defaults if omitted)")->check(CLI::ExistingFile);
    cmd->add_option("--out", out_dir, "Directory for report.json and records.csv")->required();
    cmd->callback([&, cmd] {
      const ExperimentConfig config = config_file.empty() ? ExperimentConfig{} : config_from_json(read_json_file(config_file));
      const DistortionReport report = cmd == qie ? run_qie(config) : run_lemma_simp(config);
      emit(report, out_dir);
      print(to_json(report)["summary"]);
      if (!report.ok()) status = 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
