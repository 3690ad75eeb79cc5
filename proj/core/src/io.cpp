#include "lastmile/io.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace lastmile {

using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
  }
  return doc;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

template <typename T>
T require(const json& doc, const std::string& field) {
  if (!doc.contains(field)) throw std::runtime_error("missing field: " + field);
  try {
    return doc.at(field).get<T>();
  } catch (const json::exception&) {
    throw std::runtime_error("bad value for field: " + field);
  }
}

}  // namespace

Instance parse_instance_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("invalid instance JSON: ") + e.what());
  }

  const std::string name = doc.value("name", "");
  const auto depot_arr = require<std::vector<double>>(doc, "depot");
  if (depot_arr.size() != 2) throw std::runtime_error("bad value for field: depot");
  const Point2 depot{depot_arr[0], depot_arr[1]};

  const bool has_ms = doc.contains("speed_m_s");
  const bool has_kmh = doc.contains("speed_km_h");
  if (has_ms == has_kmh) {
    throw std::runtime_error("exactly one of speed_m_s / speed_km_h must be present");
  }
  const double speed = has_ms ? require<double>(doc, "speed_m_s")
                              : km_h_to_m_s(require<double>(doc, "speed_km_h"));
  if (speed <= 0.0) throw std::runtime_error("non-positive value for field: speed");

  const double def_t_in = doc.value("default_t_in_s", kDefaultInternalHandlingS);
  const double def_t_ex = doc.value("default_t_ex_s", kDefaultExternalHandlingS);
  const int n_workers = require<int>(doc, "n_workers");

  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw std::runtime_error("missing field: points");
  }
  std::vector<DeliveryPoint> points(doc["points"].size());
  std::set<int> seen;
  for (const auto& p : doc["points"]) {
    DeliveryPoint dp;
    dp.id = require<int>(p, "id");
    dp.x = require<double>(p, "x");
    dp.y = require<double>(p, "y");
    dp.t_in = p.value("t_in_s", def_t_in);
    dp.t_ex = p.value("t_ex_s", def_t_ex);
    if (!seen.insert(dp.id).second) {
      throw std::runtime_error("duplicate point id: " + std::to_string(dp.id));
    }
    if (dp.id < 0 || dp.id >= static_cast<int>(points.size())) {
      throw std::runtime_error("point ids must form 0..N-1; bad id: " + std::to_string(dp.id));
    }
    points[static_cast<size_t>(dp.id)] = dp;
  }
  return Instance(depot, std::move(points), n_workers, speed, name);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str());
}

std::string instance_to_json(const Instance& instance) {
  json doc;
  doc["name"] = instance.name();
  doc["depot"] = {instance.depot().x, instance.depot().y};
  doc["speed_m_s"] = instance.speed();
  doc["default_t_in_s"] = kDefaultInternalHandlingS;
  doc["default_t_ex_s"] = kDefaultExternalHandlingS;
  doc["n_workers"] = instance.n_workers();
  doc["points"] = json::array();
  for (const auto& p : instance.points()) {
    doc["points"].push_back(
        {{"id", p.id}, {"x", p.x}, {"y", p.y}, {"t_in_s", p.t_in}, {"t_ex_s", p.t_ex}});
  }
  return doc.dump(2) + "\n";
}

void save_instance(const Instance& instance, const std::string& path) {
  write_text_file(path, instance_to_json(instance));
}

GeneratorSpec load_generator_spec(const std::string& path) {
  const json doc = read_json_file(path);
  GeneratorSpec spec;
  spec.n_points = doc.value("n_points", spec.n_points);
  spec.n_workers = doc.value("n_workers", spec.n_workers);
  const std::string dist = doc.value("distribution", "uniform");
  if (dist == "uniform") {
    spec.distribution = PointDistribution::Uniform;
  } else if (dist == "clustered") {
    spec.distribution = PointDistribution::Clustered;
  } else {
    throw std::runtime_error("bad value for field: distribution");
  }
  spec.n_clusters = doc.value("n_clusters", spec.n_clusters);
  spec.spread_m = doc.value("spread_m", spec.spread_m);
  spec.bbox_m = doc.value("bbox_m", spec.bbox_m);
  const std::string depot = doc.value("depot_placement", "center");
  if (depot == "center") {
    spec.depot_placement = DepotPlacement::Center;
  } else if (depot == "corner") {
    spec.depot_placement = DepotPlacement::Corner;
  } else if (depot == "random") {
    spec.depot_placement = DepotPlacement::Random;
  } else {
    throw std::runtime_error("bad value for field: depot_placement");
  }
  spec.seed = doc.value("seed", spec.seed);
  spec.t_in_s = doc.value("t_in_s", spec.t_in_s);
  spec.t_ex_s = doc.value("t_ex_s", spec.t_ex_s);
  if (doc.contains("speed_km_h")) {
    spec.speed_m_s = km_h_to_m_s(doc["speed_km_h"].get<double>());
  } else {
    spec.speed_m_s = doc.value("speed_m_s", spec.speed_m_s);
  }
  spec.name = doc.value("name", spec.name);
  return spec;
}

Instance generate_instance(const GeneratorSpec& spec) {
  if (spec.n_points < spec.n_workers || spec.n_workers < 1) {
    throw std::invalid_argument("generate_instance: need n_points >= n_workers >= 1");
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> coord(0.0, spec.bbox_m);

  std::vector<DeliveryPoint> points;
  points.reserve(static_cast<size_t>(spec.n_points));
  if (spec.distribution == PointDistribution::Uniform) {
    for (int i = 0; i < spec.n_points; ++i) {
      points.push_back({i, coord(rng), coord(rng), spec.t_in_s, spec.t_ex_s});
    }
  } else {
    std::vector<Point2> centers(static_cast<size_t>(spec.n_clusters));
    for (auto& c : centers) c = {coord(rng), coord(rng)};
    std::uniform_int_distribution<size_t> which(0, centers.size() - 1);
    std::normal_distribution<double> offset(0.0, spec.spread_m);
    for (int i = 0; i < spec.n_points; ++i) {
      const Point2& c = centers[which(rng)];
      points.push_back({i, c.x + offset(rng), c.y + offset(rng), spec.t_in_s, spec.t_ex_s});
    }
  }

  Point2 depot;
  switch (spec.depot_placement) {
    case DepotPlacement::Center: depot = {spec.bbox_m / 2.0, spec.bbox_m / 2.0}; break;
    case DepotPlacement::Corner: depot = {0.0, 0.0}; break;
    case DepotPlacement::Random: depot = {coord(rng), coord(rng)}; break;
  }
  return Instance(depot, std::move(points), spec.n_workers, spec.speed_m_s, spec.name);
}

void export_assignment_geojson(const Instance& instance, const IntegerSolution& assignment,
                               const std::string& path) {
  validate_assignment(instance, assignment);
  json fc;
  fc["type"] = "FeatureCollection";
  fc["features"] = json::array();
  for (const auto& p : instance.points()) {
    fc["features"].push_back(
        {{"type", "Feature"},
         {"geometry", {{"type", "Point"}, {"coordinates", {p.x, p.y}}}},
         {"properties",
          {{"point_id", p.id},
           {"worker", assignment.assignment[static_cast<size_t>(p.id)]}}}});
  }
  fc["features"].push_back(
      {{"type", "Feature"},
       {"geometry",
        {{"type", "Point"}, {"coordinates", {instance.depot().x, instance.depot().y}}}},
       {"properties", {{"role", "depot"}}}});
  write_text_file(path, fc.dump(2) + "\n");
}

std::string result_to_json(const Instance& instance, const std::string& algorithm,
                           uint64_t seed, const SolveResult& result) {
  json doc;
  doc["instance"] = instance.name();
  doc["algorithm"] = algorithm;
  doc["seed"] = seed;
  doc["fitness_s"] = result.best_evaluation.fitness;
  doc["total_time_s"] = result.best_evaluation.total_time;
  doc["evaluations"] = result.evaluations;
  doc["assignment"] = result.best_solution.assignment;
  if (result.best_circles) {
    doc["circles"] = json::array();
    for (const auto& c : result.best_circles->circles) {
      doc["circles"].push_back({{"cx", c.cx}, {"cy", c.cy}, {"r", c.r}});
    }
  }
  doc["per_worker"] = json::array();
  for (size_t w = 0; w < result.best_evaluation.per_worker.size(); ++w) {
    const auto& bd = result.best_evaluation.per_worker[w];
    doc["per_worker"].push_back({{"worker", static_cast<int>(w) + 1},
                                 {"t_ow_s", bd.t_ow},
                                 {"t_int_s", bd.t_int},
                                 {"t_tra_s", bd.t_tra},
                                 {"t_ext_s", bd.t_ext},
                                 {"t_ret_s", bd.t_ret},
                                 {"total_s", bd.total}});
  }
  return doc.dump(2) + "\n";
}

void save_result_json(const Instance& instance, const std::string& algorithm,
                      uint64_t seed, const SolveResult& result, const std::string& path) {
  write_text_file(path, result_to_json(instance, algorithm, seed, result));
}

std::string breakdown_csv(const Evaluation& evaluation) {
  std::ostringstream os;
  os << "worker,t_ow_s,t_int_s,t_tra_s,t_ext_s,t_ret_s,total_s\n";
  for (size_t w = 0; w < evaluation.per_worker.size(); ++w) {
    const auto& bd = evaluation.per_worker[w];
    os << (w + 1) << ',' << bd.t_ow << ',' << bd.t_int << ',' << bd.t_tra << ',' << bd.t_ext
       << ',' << bd.t_ret << ',' << bd.total << "\n";
  }
  return os.str();
}

void save_breakdown_csv(const Evaluation& evaluation, const std::string& path) {
  write_text_file(path, breakdown_csv(evaluation));
}

std::string stats_csv(const std::vector<RunStats>& stats) {
  std::ostringstream os;
  os << "algorithm,n_runs,min_s,max_s,mean_s,std_s\n";
  for (const auto& s : stats) {
    os << s.algorithm << ',' << s.n_runs << ',' << s.min_s << ',' << s.max_s << ','
       << s.mean_s << ',' << s.std_s << "\n";
  }
  return os.str();
}

void save_stats_csv(const std::vector<RunStats>& stats, const std::string& path) {
  write_text_file(path, stats_csv(stats));
}

}  // namespace lastmile
