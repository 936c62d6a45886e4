#include "mxpbf/report_json.hpp"

#include <cmath>

#include <json.hpp>

namespace mxpbf {

namespace {

nlohmann::json stat_value(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

nlohmann::json stats_array(const std::vector<double>& values) {
  nlohmann::json arr = nlohmann::json::array();
  for (double v : values) arr.push_back(stat_value(v));
  return arr;
}

nlohmann::json roc_json(const RocCurve& curve) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& [fpr, tpr] : curve.points) {
    points.push_back(nlohmann::json::array({fpr, tpr}));
  }
  return nlohmann::json{
      {"points", std::move(points)}, {"auc", curve.auc}, {"n_h0", curve.n_h0},
      {"n_h1", curve.n_h1}};
}

}  // namespace

std::string report_to_json(const ExperimentReport& report, bool include_timing, int indent) {
  nlohmann::json methods = nlohmann::json::array();
  for (const MethodRun& run : report.methods) {
    methods.push_back(nlohmann::json{{"name", run.name},
                                     {"h0_stats", stats_array(run.h0_stats)},
                                     {"h1_stats", stats_array(run.h1_stats)},
                                     {"roc", roc_json(run.roc)},
                                     {"rejection_rate_h1", run.rejection_rate_h1},
                                     {"rejection_rate_h0", run.rejection_rate_h0}});
  }
  nlohmann::json j{
      {"schema_version", 1},
      {"spec",
       {{"kind", report.spec.preset_name()},
        {"n", report.spec.n},
        {"p", report.spec.p},
        {"signal", report.spec.signal},
        {"seed", report.spec.seed}}},
      {"reps", report.reps},
      {"rules", {{"c_th", report.rules.c_th}, {"level", report.rules.level}}},
      {"methods", std::move(methods)},
      {"seed", report.seed}};
  if (include_timing) j["wall_time_seconds"] = report.wall_time_seconds;
  return j.dump(indent) + "\n";
}

std::string roc_to_json(const RocCurve& curve, int indent) {
  return roc_json(curve).dump(indent) + "\n";
}

}  // namespace mxpbf
