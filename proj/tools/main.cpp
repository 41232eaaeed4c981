// vexl: batch front door for variable-exponent Lebesgue and mixed-norm
// computations. Reads JSON instance files, prints machine-readable reports
// on stdout (JSON, CSV, or JSON-lines for search); diagnostics go to stderr.
//
// Exit codes: 0 success, 2 parse error, 3 invariant violation,
// 4 certification failure.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vexl/instance_io.hpp"
#include "vexl/lebesgue.hpp"
#include "vexl/mixed.hpp"
#include "vexl/properties.hpp"
#include "vexl/search.hpp"
#include "vexl/version.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitCertification = 4;

// Infinite values appear as the string "inf" in every report.
ordered_json num(double v) {
  if (std::isinf(v)) return ordered_json("inf");
  return ordered_json(v);
}

ordered_json num(vexl::XReal v) { return num(v.value()); }

ordered_json with_accuracy(double value, double accuracy) {
  ordered_json j;
  j["value"] = num(value);
  j["accuracy"] = num(accuracy);
  return j;
}

ordered_json report_head(const std::string& command, double tol) {
  ordered_json j;
  j["tool"] = "vexl";
  j["version"] = vexl::kVersion;
  j["command"] = command;
  j["tol"] = num(tol);
  return j;
}

ordered_json instance_json(const vexl::Partition& part, const vexl::ExponentPair& exps) {
  ordered_json cells = ordered_json::array();
  for (std::size_t i = 0; i < part.cell_count(); ++i) {
    ordered_json cell;
    cell["measure"] = part.measure(i);
    cell["p"] = num(exps.p(i));
    cell["q"] = num(exps.q(i));
    cells.push_back(std::move(cell));
  }
  return cells;
}

ordered_json sequence_json(const vexl::FunctionSequence& seq) {
  ordered_json rows = ordered_json::array();
  for (const auto& term : seq.terms()) rows.push_back(term.values());
  return rows;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::string csv_num(double v) { return vexl::format_number(v); }

struct CommonOpts {
  double tol = vexl::kDefaultTol;
  std::string output;  // "json" or "csv"; per-command default when empty
};

int cmd_norm(const std::string& path, const std::string& seq_name, const CommonOpts& opts) {
  vexl::InstanceFile file = vexl::load_instance_file(path);
  const vexl::FunctionSequence& seq = file.sequence(seq_name);

  vexl::NormResult norm = vexl::mixed_norm_detailed(seq, file.exponents, file.partition, opts.tol);
  double mu = norm.value.value();
  std::vector<vexl::InnerInfimumResult> inner;
  if (mu > 0.0)
    inner = vexl::inner_infima(seq, file.exponents, file.partition, mu, opts.tol / 10.0);

  if (opts.output == "csv") {
    std::cout << "name,branch,value,accuracy\n";
    std::cout << "norm,," << csv_num(mu) << "," << csv_num(norm.achieved_accuracy) << "\n";
    for (std::size_t nu = 0; nu < inner.size(); ++nu)
      std::cout << "inner_" << nu << "," << vexl::inner_branch_name(inner[nu].branch) << ","
                << csv_num(inner[nu].lambda.value()) << ","
                << csv_num(inner[nu].achieved_accuracy) << "\n";
    return kExitOk;
  }

  ordered_json j = report_head("norm", opts.tol);
  j["input"]["file"] = path;
  j["input"]["sequence"] = seq_name;
  j["input"]["cells"] = instance_json(file.partition, file.exponents);
  j["result"]["norm"] = with_accuracy(mu, norm.achieved_accuracy);
  ordered_json terms = ordered_json::array();
  for (std::size_t nu = 0; nu < inner.size(); ++nu) {
    ordered_json t;
    t["term"] = nu;
    t["branch"] = vexl::inner_branch_name(inner[nu].branch);
    t["lambda"] = with_accuracy(inner[nu].lambda.value(), inner[nu].achieved_accuracy);
    terms.push_back(std::move(t));
  }
  j["result"]["inner_infima_at_norm"] = std::move(terms);
  emit(j);
  return kExitOk;
}

int cmd_check_triangle(const std::string& path, const std::string& a, const std::string& b,
                       const CommonOpts& opts) {
  vexl::InstanceFile file = vexl::load_instance_file(path);
  const vexl::FunctionSequence& fa = file.sequence(a);
  const vexl::FunctionSequence& fb = file.sequence(b);

  vexl::NormResult nf = vexl::mixed_norm_detailed(fa, file.exponents, file.partition, opts.tol);
  vexl::NormResult ng = vexl::mixed_norm_detailed(fb, file.exponents, file.partition, opts.tol);
  vexl::NormResult ns =
      vexl::mixed_norm_detailed(add(fa, fb), file.exponents, file.partition, opts.tol);
  double residual = ns.value.value() - nf.value.value() - ng.value.value();
  vexl::Regime regime = vexl::classify_regime(file.exponents);
  const bool violated = residual > vexl::kViolationThreshold;
  const char* verdict = violated ? "VIOLATED" : "HOLDS";

  if (opts.output == "csv") {
    std::cout << "name,value\n";
    std::cout << "norm_a," << csv_num(nf.value.value()) << "\n";
    std::cout << "norm_b," << csv_num(ng.value.value()) << "\n";
    std::cout << "norm_sum," << csv_num(ns.value.value()) << "\n";
    std::cout << "residual," << csv_num(residual) << "\n";
    std::cout << "regime," << vexl::regime_name(regime.kind) << "\n";
    std::cout << "verdict," << verdict << "\n";
    return kExitOk;
  }

  ordered_json j = report_head("check-triangle", opts.tol);
  j["input"]["file"] = path;
  j["input"]["sequence_a"] = a;
  j["input"]["sequence_b"] = b;
  j["input"]["cells"] = instance_json(file.partition, file.exponents);
  j["result"]["norm_a"] = with_accuracy(nf.value.value(), nf.achieved_accuracy);
  j["result"]["norm_b"] = with_accuracy(ng.value.value(), ng.achieved_accuracy);
  j["result"]["norm_sum"] = with_accuracy(ns.value.value(), ns.achieved_accuracy);
  j["result"]["residual"] = with_accuracy(
      residual, nf.achieved_accuracy + ng.achieved_accuracy + ns.achieved_accuracy);
  j["result"]["regime"] = vexl::regime_name(regime.kind);
  j["result"]["violation_threshold"] = num(vexl::kViolationThreshold);
  j["result"]["verdict"] = verdict;
  emit(j);
  return kExitOk;
}

int cmd_reproduce_thm2(const CommonOpts& opts) {
  vexl::Instance inst = vexl::thm2_instance();
  vexl::NormResult nf =
      vexl::mixed_norm_detailed(inst.f, inst.exponents, inst.partition, opts.tol);
  vexl::NormResult ng =
      vexl::mixed_norm_detailed(inst.g, inst.exponents, inst.partition, opts.tol);
  vexl::NormResult ns = vexl::mixed_norm_detailed(add(inst.f, inst.g), inst.exponents,
                                                  inst.partition, opts.tol);
  const double expected[3] = {1.0, 1.0, 3.0};
  const double got[3] = {nf.value.value(), ng.value.value(), ns.value.value()};
  double max_err = 0.0;
  for (int i = 0; i < 3; ++i) max_err = std::max(max_err, std::abs(got[i] - expected[i]));
  const bool certified = max_err <= 1e-9;

  if (opts.output == "csv") {
    std::cout << "name,expected,computed,error\n";
    const char* names[3] = {"norm_f", "norm_g", "norm_f_plus_g"};
    for (int i = 0; i < 3; ++i)
      std::cout << names[i] << "," << csv_num(expected[i]) << "," << csv_num(got[i]) << ","
                << csv_num(std::abs(got[i] - expected[i])) << "\n";
  } else {
    ordered_json j = report_head("reproduce-thm2", opts.tol);
    j["input"]["cells"] = instance_json(inst.partition, inst.exponents);
    j["input"]["sequences"]["f"] = sequence_json(inst.f);
    j["input"]["sequences"]["g"] = sequence_json(inst.g);
    j["result"]["norm_f"] = with_accuracy(got[0], nf.achieved_accuracy);
    j["result"]["norm_g"] = with_accuracy(got[1], ng.achieved_accuracy);
    j["result"]["norm_f_plus_g"] = with_accuracy(got[2], ns.achieved_accuracy);
    j["result"]["expected"] = {1.0, 1.0, 3.0};
    j["result"]["max_error"] = num(max_err);
    j["result"]["certified"] = certified;
    emit(j);
  }
  if (!certified) {
    std::cerr << "certification failed: max error " << max_err << " exceeds 1e-9\n";
    return kExitCertification;
  }
  return kExitOk;
}

int cmd_bounded_q(const std::vector<double>& grid, const CommonOpts& opts) {
  vexl::BoundedQSweep sweep = vexl::bounded_q_threshold(grid, opts.tol);

  if (opts.output == "json") {
    ordered_json j = report_head("bounded-q", opts.tol);
    ordered_json rows = ordered_json::array();
    for (const auto& row : sweep.rows) {
      ordered_json r;
      r["q0"] = num(row.q0);
      r["residual"] = num(row.residual);
      r["verdict"] = row.residual > vexl::kViolationThreshold ? "VIOLATED" : "HOLDS";
      rows.push_back(std::move(r));
    }
    j["result"]["rows"] = std::move(rows);
    if (const vexl::SweepRow* hit = sweep.first_violating_row()) {
      j["result"]["first_violation"]["q0"] = num(hit->q0);
      j["result"]["first_violation"]["residual"] = num(hit->residual);
    } else {
      j["result"]["first_violation"] = nullptr;
    }
    emit(j);
    return kExitOk;
  }

  // Default output is the sweep table as CSV.
  std::cout << "q0,residual,verdict\n";
  for (const auto& row : sweep.rows)
    std::cout << csv_num(row.q0) << "," << csv_num(row.residual) << ","
              << (row.residual > vexl::kViolationThreshold ? "VIOLATED" : "HOLDS") << "\n";
  return kExitOk;
}

vexl::GenConfig parse_gen_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw vexl::ParseError("cannot open config '" + path + "'");
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw vexl::ParseError(std::string("invalid config JSON: ") + e.what());
  }
  vexl::GenConfig cfg;
  try {
    auto int_pair = [&](const char* key, std::pair<int, int> def) {
      if (!doc.contains(key)) return def;
      return std::pair<int, int>{doc[key].at(0).get<int>(), doc[key].at(1).get<int>()};
    };
    auto double_pair = [&](const char* key, std::pair<double, double> def) {
      if (!doc.contains(key)) return def;
      return std::pair<double, double>{doc[key].at(0).get<double>(), doc[key].at(1).get<double>()};
    };
    auto weights = [&](const char* key, vexl::ExponentWeights def) {
      if (!doc.contains(key)) return def;
      vexl::ExponentWeights w;
      w.atom_one = doc[key].value("atom_one", 0.0);
      w.atom_inf = doc[key].value("atom_inf", 0.0);
      w.log_uniform = doc[key].value("log_uniform", 0.0);
      return w;
    };
    cfg.cell_count_range = int_pair("cell_count", cfg.cell_count_range);
    cfg.seq_len_range = int_pair("seq_len", cfg.seq_len_range);
    cfg.p_weights = weights("p_weights", cfg.p_weights);
    cfg.q_weights = weights("q_weights", cfg.q_weights);
    cfg.value_range = double_pair("value_range", cfg.value_range);
    cfg.measure_range = double_pair("measure_range", cfg.measure_range);
    if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("regime_filter")) {
      std::string f = doc["regime_filter"].get<std::string>();
      if (f == "none")
        cfg.regime_filter = vexl::RegimeFilter::None;
      else if (f == "constant_q")
        cfg.regime_filter = vexl::RegimeFilter::ConstantQ;
      else if (f == "q_le_p")
        cfg.regime_filter = vexl::RegimeFilter::QleP;
      else if (f == "holder_conjugate")
        cfg.regime_filter = vexl::RegimeFilter::HolderConjugate;
      else
        throw vexl::ParseError("unknown regime_filter '" + f + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw vexl::ParseError(std::string("bad config shape: ") + e.what());
  }
  return cfg;
}

int cmd_search(const std::optional<std::string>& config_path, std::optional<std::uint64_t> seed,
               std::size_t budget, const CommonOpts& opts) {
  vexl::GenConfig cfg;
  if (config_path) cfg = parse_gen_config(*config_path);
  if (seed) cfg.seed = *seed;

  auto witnesses = vexl::search_violations(cfg, budget);

  if (opts.output == "csv") {
    std::cout << "rank,instance_seed,residual,norm_f,norm_g,norm_sum\n";
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      const auto& w = witnesses[i];
      std::cout << i << "," << w.instance_seed << "," << csv_num(w.residual) << ","
                << csv_num(w.norm_f) << "," << csv_num(w.norm_g) << "," << csv_num(w.norm_sum)
                << "\n";
    }
  } else {
    // One self-contained JSON witness per line.
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      const auto& w = witnesses[i];
      ordered_json j;
      j["rank"] = i;
      j["instance_seed"] = w.instance_seed;
      j["residual"] = num(w.residual);
      j["norm_f"] = num(w.norm_f);
      j["norm_g"] = num(w.norm_g);
      j["norm_sum"] = num(w.norm_sum);
      j["cells"] = instance_json(w.instance.partition, w.instance.exponents);
      j["f"] = sequence_json(w.instance.f);
      j["g"] = sequence_json(w.instance.g);
      std::cout << j.dump() << "\n";
    }
  }
  std::cerr << "search: " << witnesses.size() << " witness(es) from " << budget
            << " instance(s), seed " << cfg.seed << "\n";
  return kExitOk;
}

int cmd_identity_check(std::uint64_t seed, std::size_t samples, const CommonOpts& opts) {
  vexl::IdentityFuzzReport report = vexl::run_identity_fuzz(seed, samples);

  if (opts.output == "csv") {
    std::cout << "family,samples,max_residual,failures\n";
    std::cout << "phi_identity," << report.samples << "," << csv_num(report.max_phi_residual)
              << "," << report.phi_failures << "\n";
    std::cout << "hol1," << report.samples << "," << csv_num(report.max_hol1_residual) << ","
              << report.hol1_failures << "\n";
    std::cout << "hol2," << report.samples << "," << csv_num(report.max_hol2_residual) << ","
              << report.hol2_failures << "\n";
  } else {
    ordered_json j = report_head("identity-check", vexl::kDefaultTol);
    j["seed"] = seed;
    j["samples"] = report.samples;
    j["threshold"] = num(report.threshold);
    j["phi_identity"]["max_residual"] = num(report.max_phi_residual);
    j["phi_identity"]["failures"] = report.phi_failures;
    j["hol1"]["max_residual"] = num(report.max_hol1_residual);
    j["hol1"]["failures"] = report.hol1_failures;
    j["hol2"]["max_residual"] = num(report.max_hol2_residual);
    j["hol2"]["failures"] = report.hol2_failures;
    j["ok"] = report.ok();
    emit(j);
  }
  if (!report.ok()) {
    std::cerr << "identity-check failed: residuals above " << report.threshold << "\n";
    return kExitCertification;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variable-exponent Lebesgue / mixed-norm calculator"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string file, seq_name, seq_a, seq_b;
  std::vector<double> grid;
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed_flag;
  std::uint64_t identity_seed = 0;
  std::size_t budget = 100;
  std::size_t samples = 100000;

  auto add_common = [&](CLI::App* cmd, const char* default_output) {
    cmd->add_option("--tol", opts.tol, "bisection tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--output", opts.output, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_val(default_output);
  };

  CLI::App* norm = app.add_subcommand("norm", "mixed norm of a named sequence");
  norm->add_option("file", file, "instance file")->required();
  norm->add_option("sequence", seq_name, "sequence name")->required();
  add_common(norm, "json");

  CLI::App* tri = app.add_subcommand("check-triangle", "triangle inequality verdict");
  tri->add_option("file", file, "instance file")->required();
  tri->add_option("seq-a", seq_a, "first sequence")->required();
  tri->add_option("seq-b", seq_b, "second sequence")->required();
  add_common(tri, "json");

  CLI::App* thm2 = app.add_subcommand("reproduce-thm2",
                                      "certify the (1, 1, 3) counterexample norms");
  add_common(thm2, "json");

  CLI::App* bq = app.add_subcommand("bounded-q", "triangle residual sweep over finite q0");
  bq->add_option("--grid", grid, "ascending q0 grid")->delimiter(',');
  add_common(bq, "csv");

  CLI::App* search = app.add_subcommand("search", "randomized violation search");
  search->add_option("--config", config_path, "generator config JSON");
  search->add_option("--seed", seed_flag, "override generator seed");
  search->add_option("--budget", budget, "instances to evaluate")->check(CLI::PositiveNumber);
  add_common(search, "json");

  CLI::App* idc = app.add_subcommand("identity-check",
                                     "fuzz the scalar identity and Hoelder forms");
  idc->add_option("--seed", identity_seed, "fuzz seed");
  idc->add_option("--budget", samples, "samples per family")->check(CLI::PositiveNumber);
  add_common(idc, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (app.got_subcommand(norm)) return cmd_norm(file, seq_name, opts);
    if (app.got_subcommand(tri)) return cmd_check_triangle(file, seq_a, seq_b, opts);
    if (app.got_subcommand(thm2)) return cmd_reproduce_thm2(opts);
    if (app.got_subcommand(bq)) {
      if (grid.empty())
        for (int q = 2; q <= 64; ++q) grid.push_back(q);
      return cmd_bounded_q(grid, opts);
    }
    if (app.got_subcommand(search)) return cmd_search(config_path, seed_flag, budget, opts);
    if (app.got_subcommand(idc)) return cmd_identity_check(identity_seed, samples, opts);
  } catch (const vexl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const vexl::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
