#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "lastmile/experiment.hpp"
#include "lastmile/io.hpp"

using namespace lastmile;

namespace {

int cmd_generate(const std::string& spec_path, GeneratorSpec spec,
                 const std::string& dist, const std::string& depot,
                 const std::string& out) {
  if (!spec_path.empty()) {
    spec = load_generator_spec(spec_path);
  } else {
    if (dist == "uniform") {
      spec.distribution = PointDistribution::Uniform;
    } else if (dist == "clustered") {
      spec.distribution = PointDistribution::Clustered;
    } else {
      throw std::runtime_error("unknown distribution: " + dist);
    }
    if (depot == "center") {
      spec.depot_placement = DepotPlacement::Center;
    } else if (depot == "corner") {
      spec.depot_placement = DepotPlacement::Corner;
    } else if (depot == "random") {
      spec.depot_placement = DepotPlacement::Random;
    } else {
      throw std::runtime_error("unknown depot placement: " + depot);
    }
  }
  const Instance instance = generate_instance(spec);
  save_instance(instance, out);
  std::cout << "wrote " << out << " (" << instance.n_points() << " points, "
            << instance.n_workers() << " workers)\n";
  return 0;
}

std::vector<double> parse_mix(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) vals.push_back(std::stod(part));
  if (vals.size() != 5) throw std::runtime_error("--mix needs 5 comma-separated fractions");
  return vals;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Last-mile delivery workload balancing solver and benchmark harness"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a synthetic instance file");
  std::string gen_spec_path, gen_dist = "uniform", gen_depot = "center", gen_out;
  GeneratorSpec gspec;
  gen->add_option("--spec", gen_spec_path, "Generator spec JSON (overrides flags)");
  gen->add_option("--n-points", gspec.n_points, "Number of delivery points");
  gen->add_option("--workers", gspec.n_workers, "Number of workers");
  gen->add_option("--dist", gen_dist, "uniform|clustered");
  gen->add_option("--clusters", gspec.n_clusters, "Cluster count (clustered mode)");
  gen->add_option("--spread-m", gspec.spread_m, "Cluster spread, meters");
  gen->add_option("--bbox-m", gspec.bbox_m, "Bounding box side, meters");
  gen->add_option("--depot", gen_depot, "center|corner|random");
  gen->add_option("--seed", gspec.seed, "Generator seed");
  gen->add_option("--name", gspec.name, "Instance name");
  gen->add_option("--out", gen_out, "Output instance JSON")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Run one solver on an instance");
  std::string s_instance, s_algo, s_init = "kmeans", s_out, s_geojson, s_breakdown, s_mix;
  uint64_t s_seed = 0;
  EAConfig ea;
  solve->add_option("--instance", s_instance, "Instance JSON")->required();
  solve->add_option("--algo", s_algo, "ea-ie|ea-ce|ra-ie|ra-ce|ra-ea-ie|cluster")->required();
  solve->add_option("--init", s_init, "kmeans|spectral");
  solve->add_option("--seed", s_seed, "Run seed");
  solve->add_option("--generations", ea.max_generations, "Max generations");
  solve->add_option("--pop", ea.population_size, "Population size");
  solve->add_option("--time-budget-s", ea.time_budget_s, "Per-run wall budget, seconds");
  solve->add_option("--mutation-p", ea.mutation_prob, "Mutation probability");
  solve->add_option("--crossover-frac", ea.crossover_frac, "Crossover fraction");
  solve->add_option("--survival-frac", ea.survival_frac, "Survival fraction");
  solve->add_option("--mix", s_mix, "RA-EA-IE seed mix a,b,c,d,e");
  solve->add_option("--out", s_out, "Result JSON path");
  solve->add_option("--geojson", s_geojson, "Assignment GeoJSON path");
  solve->add_option("--breakdown", s_breakdown, "Per-worker breakdown CSV path");

  // bench
  auto* bench = app.add_subcommand("bench", "Repeated seeded runs with statistics");
  std::string b_instance, b_algos, b_out, b_init = "kmeans";
  int b_runs = 30;
  uint64_t b_seed = 0;
  EAConfig bea;
  bench->add_option("--instance", b_instance, "Instance JSON")->required();
  bench->add_option("--algos", b_algos, "Comma-separated algorithm list")->required();
  bench->add_option("--runs", b_runs, "Runs per algorithm");
  bench->add_option("--seed", b_seed, "Base seed (runs use seed..seed+runs-1)");
  bench->add_option("--init", b_init, "kmeans|spectral");
  bench->add_option("--generations", bea.max_generations, "Max generations");
  bench->add_option("--pop", bea.population_size, "Population size");
  bench->add_option("--time-budget-s", bea.time_budget_s, "Per-run wall budget, seconds");
  bench->add_option("--out", b_out, "Stats CSV path");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum for tiny instances");
  std::string o_instance, o_out;
  oracle->add_option("--instance", o_instance, "Instance JSON")->required();
  oracle->add_option("--out", o_out, "Optimum result JSON path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return cmd_generate(gen_spec_path, gspec, gen_dist, gen_depot, gen_out);
    }

    if (solve->parsed()) {
      const Instance instance = load_instance(s_instance);
      ExperimentConfig config;
      config.ea = ea;
      config.init = s_init == "spectral" ? ClusterInit::Spectral : ClusterInit::kMeans;
      if (s_init != "kmeans" && s_init != "spectral") {
        throw std::runtime_error("unknown initializer: " + s_init);
      }
      if (!s_mix.empty()) {
        const auto m = parse_mix(s_mix);
        config.mix = {m[0], m[1], m[2], m[3], m[4]};
        config.mix.validate();
      }
      const Algorithm algo = parse_algorithm(s_algo);
      const SolveResult result = run_algorithm(instance, algo, s_seed, config);
      std::cout << breakdown_report(result.best_evaluation);
      if (!s_out.empty()) save_result_json(instance, s_algo, s_seed, result, s_out);
      if (!s_geojson.empty()) export_assignment_geojson(instance, result.best_solution, s_geojson);
      if (!s_breakdown.empty()) save_breakdown_csv(result.best_evaluation, s_breakdown);
      return 0;
    }

    if (bench->parsed()) {
      const Instance instance = load_instance(b_instance);
      ExperimentConfig config;
      config.ea = bea;
      config.init = b_init == "spectral" ? ClusterInit::Spectral : ClusterInit::kMeans;
      std::vector<Algorithm> algos;
      std::stringstream ss(b_algos);
      std::string part;
      while (std::getline(ss, part, ',')) algos.push_back(parse_algorithm(part));
      const auto stats = run_experiment(instance, algos, b_runs, b_seed, config);
      std::cout << stats_table(stats);
      if (!b_out.empty()) save_stats_csv(stats, b_out);
      return 0;
    }

    if (oracle->parsed()) {
      const Instance instance = load_instance(o_instance);
      const auto [solution, evaluation] = brute_force_optimum(instance);
      std::cout << breakdown_report(evaluation);
      if (!o_out.empty()) {
        SolveResult result;
        result.best_solution = solution;
        result.best_evaluation = evaluation;
        result.evaluations = 1;
        save_result_json(instance, "oracle", 0, result, o_out);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
