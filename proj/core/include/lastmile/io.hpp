#pragma once

#include <cstdint>
#include <string>

#include "lastmile/experiment.hpp"
#include "lastmile/model.hpp"
#include "lastmile/solvers.hpp"

namespace lastmile {

// Defaults used whenever a file or generator omits these fields.
inline constexpr double kDefaultInternalHandlingS = 57.64;
inline constexpr double kDefaultExternalHandlingS = 132.76;
inline constexpr double kDefaultSpeedKmH = 5.0;

inline double km_h_to_m_s(double km_h) { return km_h * (1000.0 / 3600.0); }

Instance load_instance(const std::string& path);
Instance parse_instance_json(const std::string& json_text);
std::string instance_to_json(const Instance& instance);
void save_instance(const Instance& instance, const std::string& path);

enum class PointDistribution { Uniform, Clustered };
enum class DepotPlacement { Center, Corner, Random };

struct GeneratorSpec {
  int n_points = 240;
  int n_workers = 12;
  PointDistribution distribution = PointDistribution::Uniform;
  int n_clusters = 3;
  double spread_m = 200.0;
  double bbox_m = 4000.0;  // square side, meters
  DepotPlacement depot_placement = DepotPlacement::Center;
  uint64_t seed = 0;
  double t_in_s = kDefaultInternalHandlingS;
  double t_ex_s = kDefaultExternalHandlingS;
  double speed_m_s = km_h_to_m_s(kDefaultSpeedKmH);
  std::string name = "synthetic";
};

GeneratorSpec load_generator_spec(const std::string& path);
Instance generate_instance(const GeneratorSpec& spec);

void export_assignment_geojson(const Instance& instance, const IntegerSolution& assignment,
                               const std::string& path);

std::string result_to_json(const Instance& instance, const std::string& algorithm,
                           uint64_t seed, const SolveResult& result);
void save_result_json(const Instance& instance, const std::string& algorithm,
                      uint64_t seed, const SolveResult& result, const std::string& path);

// worker,t_ow_s,t_int_s,t_tra_s,t_ext_s,t_ret_s,total_s (1-based worker)
std::string breakdown_csv(const Evaluation& evaluation);
void save_breakdown_csv(const Evaluation& evaluation, const std::string& path);

// algorithm,n_runs,min_s,max_s,mean_s,std_s
std::string stats_csv(const std::vector<RunStats>& stats);
void save_stats_csv(const std::vector<RunStats>& stats, const std::string& path);

}  // namespace lastmile
