// mxpbf: two-sample mean / covariance testing CLI.
//
// Subcommands:
//   mean      mxPBF two-sample mean test on two CSV matrices
//   cov       mxPBF two-sample covariance test on two CSV matrices
//   simulate  seeded Monte Carlo experiment with ROC/AUC report (JSON)
//   roc       ROC curve + AUC from two statistic files
//
// Exit codes: 0 success, 1 test-level errors (bad data, degenerate input),
// 2 usage errors.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mxpbf/mxpbf.hpp"

namespace {

nlohmann::json json_stat(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw mxpbf::InvalidInputError("cannot open output file '" + out_path + "'");
  }
  out << text;
}

std::vector<std::string> split_methods(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct MeanArgs {
  std::string x_path, y_path, out_path;
  double alpha = 2.01;
  double c_th = 10.0;
  bool header = false;
  bool json = false;
  int threads = 0;
};

int run_mean(const MeanArgs& a) {
  const mxpbf::SampleMatrix x = mxpbf::read_sample_csv_file(a.x_path, a.header);
  const mxpbf::SampleMatrix y = mxpbf::read_sample_csv_file(a.y_path, a.header);
  std::cerr << "note: the mean test assumes equal covariance matrices across populations; "
               "this is not checked.\n";
  const mxpbf::MeanTestConfig cfg{a.alpha};
  const mxpbf::MeanTestResult res = mxpbf::mxpbf_mean(x, y, cfg, a.threads);
  const bool reject = mxpbf::decide_mean(res, a.c_th) == mxpbf::Decision::kRejectNull;
  if (a.json) {
    nlohmann::json j{{"schema_version", 1},
                     {"test", "mean"},
                     {"n1", x.rows()},
                     {"n2", y.rows()},
                     {"p", x.cols()},
                     {"alpha", a.alpha},
                     {"gamma", res.gamma},
                     {"c_th", a.c_th},
                     {"log_mxpbf", json_stat(res.log_mxpbf)},
                     {"argmax_column", res.argmax_index + 1},
                     {"decision", reject ? "reject" : "retain"},
                     {"skipped_columns", res.skipped_columns},
                     {"infinite_columns", res.infinite_columns}};
    emit(j.dump(2) + "\n", a.out_path);
  } else {
    std::ostringstream os;
    os << "mxPBF two-sample mean test\n"
       << "n1=" << x.rows() << " n2=" << y.rows() << " p=" << x.cols() << " alpha=" << a.alpha
       << " gamma=" << res.gamma << " c_th=" << a.c_th << "\n"
       << "log mxPBF = " << res.log_mxpbf << "  (argmax column " << res.argmax_index + 1 << ")\n"
       << "decision: " << (reject ? "reject H0 (means differ)" : "retain H0") << "\n";
    if (res.skipped_columns > 0) {
      os << "skipped degenerate columns: " << res.skipped_columns << "\n";
    }
    emit(os.str(), a.out_path);
  }
  return 0;
}

struct CovArgs {
  std::string x_path, y_path, out_path;
  double alpha = 2.01;
  double a0 = 0.01;
  double b0 = 0.01;
  double c_th = 10.0;
  bool center = true;
  bool header = false;
  bool json = false;
  bool full_matrix = false;
  std::size_t top_k = 10;
  int threads = 0;
};

int run_cov(const CovArgs& a) {
  const mxpbf::SampleMatrix x = mxpbf::read_sample_csv_file(a.x_path, a.header);
  const mxpbf::SampleMatrix y = mxpbf::read_sample_csv_file(a.y_path, a.header);
  mxpbf::CovTestConfig cfg;
  cfg.alpha = a.alpha;
  cfg.a0 = a.a0;
  cfg.b0 = cfg.b01 = cfg.b02 = a.b0;
  mxpbf::CovTestOptions opt;
  opt.center = a.center;
  opt.top_k = a.top_k;
  opt.threads = a.threads;
  opt.keep_full_matrix = a.full_matrix;
  const mxpbf::CovTestResult res = mxpbf::mxpbf_cov(x, y, cfg, opt);
  const bool reject = mxpbf::decide_cov(res, a.c_th) == mxpbf::Decision::kRejectNull;
  if (a.json) {
    nlohmann::json top = nlohmann::json::array();
    for (const auto& s : res.top_k) {
      top.push_back({{"i", s.i + 1}, {"j", s.j + 1}, {"log_pbf", json_stat(s.log_pbf)}});
    }
    nlohmann::json j{{"schema_version", 1},
                     {"test", "cov"},
                     {"n1", x.rows()},
                     {"n2", y.rows()},
                     {"p", x.cols()},
                     {"alpha", a.alpha},
                     {"a0", a.a0},
                     {"b0", a.b0},
                     {"c_th", a.c_th},
                     {"center", a.center},
                     {"gamma", res.gamma},
                     {"log_mxpbf", json_stat(res.log_mxpbf)},
                     {"argmax_pair",
                      nlohmann::json::array({res.argmax_pair.first + 1, res.argmax_pair.second + 1})},
                     {"decision", reject ? "reject" : "retain"},
                     {"evaluated_pairs", res.evaluated_pairs},
                     {"skipped_pairs", res.skipped_pairs},
                     {"zero_residual_pairs", res.zero_residual_pairs},
                     {"clamped_residuals", res.clamped_residuals},
                     {"top_k", std::move(top)}};
    if (res.full_matrix) {
      nlohmann::json m = nlohmann::json::array();
      for (double v : *res.full_matrix) {
        m.push_back(std::isnan(v) ? nlohmann::json(nullptr) : json_stat(v));
      }
      j["log_pbf_matrix_row_major"] = std::move(m);
    }
    emit(j.dump(2) + "\n", a.out_path);
  } else {
    std::ostringstream os;
    os << "mxPBF two-sample covariance test\n"
       << "n1=" << x.rows() << " n2=" << y.rows() << " p=" << x.cols() << " alpha=" << a.alpha
       << " a0=" << a.a0 << " b0=" << a.b0 << " gamma=" << res.gamma << " c_th=" << a.c_th
       << " center=" << (a.center ? "on" : "off") << "\n"
       << "log mxPBF = " << res.log_mxpbf << "  (argmax pair " << res.argmax_pair.first + 1 << ","
       << res.argmax_pair.second + 1 << ")\n"
       << "decision: " << (reject ? "reject H0 (covariances differ)" : "retain H0") << "\n"
       << "pairs evaluated=" << res.evaluated_pairs << " skipped=" << res.skipped_pairs << "\n";
    emit(os.str(), a.out_path);
  }
  return 0;
}

struct SimulateArgs {
  std::string preset;
  std::string methods = "mxpbf";
  std::string out_path;
  std::size_t p = 100;
  std::size_t n = 100;
  double signal = 0.0;
  std::size_t reps = 50;
  std::uint64_t seed = 0;
  double c_th = 10.0;
  double level = 0.05;
  int threads = 0;
  bool omit_timing = false;
};

int run_simulate(const SimulateArgs& a) {
  mxpbf::ScenarioSpec spec = mxpbf::ScenarioSpec::from_preset(a.preset);
  spec.p = a.p;
  spec.n = a.n;
  spec.signal = a.signal;
  spec.seed = a.seed;
  const mxpbf::DecisionRules rules{a.c_th, a.level};
  const mxpbf::ExperimentReport report =
      mxpbf::run_experiment(spec, split_methods(a.methods), a.reps, a.threads, rules);
  emit(mxpbf::report_to_json(report, !a.omit_timing), a.out_path);
  if (!a.out_path.empty()) {
    for (const auto& m : report.methods) {
      std::cerr << m.name << ": auc=" << m.roc.auc << " reject_h1=" << m.rejection_rate_h1
                << " reject_h0=" << m.rejection_rate_h0 << "\n";
    }
  }
  return 0;
}

struct RocArgs {
  std::string h0_path, h1_path, out_path;
  bool json = false;
};

int run_roc(const RocArgs& a) {
  const std::vector<double> h0 = mxpbf::read_statistics_file(a.h0_path);
  const std::vector<double> h1 = mxpbf::read_statistics_file(a.h1_path);
  const mxpbf::RocCurve curve = mxpbf::roc_from_samples(h0, h1);
  if (a.json) {
    emit(mxpbf::roc_to_json(curve), a.out_path);
  } else {
    std::ostringstream os;
    os << "# fpr\ttpr\n";
    for (const auto& [fpr, tpr] : curve.points) os << fpr << "\t" << tpr << "\n";
    os << "auc = " << curve.auc << "\n";
    emit(os.str(), a.out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mxPBF two-sample tests for high-dimensional means and covariances"};
  app.require_subcommand(1);

  MeanArgs mean_args;
  CLI::App* mean = app.add_subcommand("mean", "mxPBF two-sample mean test");
  mean->add_option("--x", mean_args.x_path, "CSV with population 1 (rows = observations)")
      ->required();
  mean->add_option("--y", mean_args.y_path, "CSV with population 2")->required();
  mean->add_option("--alpha", mean_args.alpha, "prior dispersion exponent (default 2.01)");
  mean->add_option("--c-th", mean_args.c_th, "Bayes factor threshold (default 10)");
  mean->add_flag("--header", mean_args.header, "skip one header line in the CSVs");
  mean->add_flag("--json", mean_args.json, "emit JSON");
  mean->add_option("--threads", mean_args.threads, "worker threads (0 = MXPBF_THREADS or all)");
  mean->add_option("--out", mean_args.out_path, "write output to a file instead of stdout");

  CovArgs cov_args;
  CLI::App* cov = app.add_subcommand("cov", "mxPBF two-sample covariance test");
  cov->add_option("--x", cov_args.x_path, "CSV with population 1 (rows = observations)")
      ->required();
  cov->add_option("--y", cov_args.y_path, "CSV with population 2")->required();
  cov->add_option("--alpha", cov_args.alpha, "prior dispersion exponent (default 2.01)");
  cov->add_option("--a0", cov_args.a0, "inverse-gamma shape (default 0.01)");
  cov->add_option("--b0", cov_args.b0, "inverse-gamma rate, applied to b0, b01, b02 (default 0.01)");
  cov->add_option("--c-th", cov_args.c_th, "Bayes factor threshold (default 10)");
  cov->add_flag("--center,!--no-center", cov_args.center,
                "subtract per-population column means first (default on)");
  cov->add_flag("--header", cov_args.header, "skip one header line in the CSVs");
  cov->add_flag("--json", cov_args.json, "emit JSON");
  cov->add_flag("--full-matrix", cov_args.full_matrix,
                "include the full p x p log-PBF matrix in JSON output (small p only)");
  cov->add_option("--top-k", cov_args.top_k, "retained top pairs (default 10)");
  cov->add_option("--threads", cov_args.threads, "worker threads (0 = MXPBF_THREADS or all)");
  cov->add_option("--out", cov_args.out_path, "write output to a file instead of stdout");

  SimulateArgs sim_args;
  CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo experiment with ROC/AUC report");
  sim->add_option("--preset", sim_args.preset,
                  "scenario preset, e.g. mean-h1r-sparse, cov-h1m-dense")
      ->required();
  sim->add_option("--p", sim_args.p, "number of variables (default 100)");
  sim->add_option("--n", sim_args.n, "observations per population (default 100)");
  sim->add_option("--signal", sim_args.signal, "signal magnitude (mu or rho; H1 presets)");
  sim->add_option("--reps", sim_args.reps, "replicates per hypothesis (default 50)");
  sim->add_option("--seed", sim_args.seed, "experiment seed");
  sim->add_option("--methods", sim_args.methods,
                  "comma-separated methods: mean = mxpbf,bs,sd; cov = mxpbf,sch,lc,clx");
  sim->add_option("--c-th", sim_args.c_th, "Bayes factor threshold (default 10)");
  sim->add_option("--level", sim_args.level, "frequentist significance level (default 0.05)");
  sim->add_option("--threads", sim_args.threads, "worker threads (0 = MXPBF_THREADS or all)");
  sim->add_option("--out", sim_args.out_path, "write the JSON report to a file");
  sim->add_flag("--omit-timing", sim_args.omit_timing,
                "omit wall_time_seconds so the report bytes are reproducible");

  RocArgs roc_args;
  CLI::App* roc = app.add_subcommand("roc", "ROC curve and AUC from two statistic files");
  roc->add_option("--h0", roc_args.h0_path, "statistics under H0, one per line")->required();
  roc->add_option("--h1", roc_args.h1_path, "statistics under H1, one per line")->required();
  roc->add_flag("--json", roc_args.json, "emit JSON");
  roc->add_option("--out", roc_args.out_path, "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (mean->parsed()) return run_mean(mean_args);
    if (cov->parsed()) return run_cov(cov_args);
    if (sim->parsed()) return run_simulate(sim_args);
    if (roc->parsed()) return run_roc(roc_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
