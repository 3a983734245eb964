// Command-line front end: law builders, domination checks, Monte Carlo
// estimation, exact enumeration, and threshold reports.
//
// Exit codes: 0 success (and "holds" for checks), 1 checked property fails,
// 2 usage or runtime error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "perc/builders.hpp"
#include "perc/domination.hpp"
#include "perc/exact_oracle.hpp"
#include "perc/exact_rational.hpp"
#include "perc/law_io.hpp"
#include "perc/monte_carlo.hpp"
#include "perc/thresholds.hpp"
#include "perc/version.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
  std::uint64_t seed = 1;
  int workers = 0;  // 0: hardware concurrency
  std::int64_t budget = std::int64_t{1} << 26;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::vector<double> parse_grid(const std::string& text) {
  // "lo:hi:step" or a comma-separated list.
  const auto c1 = text.find(':');
  if (c1 != std::string::npos) {
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos)
      throw std::invalid_argument("grid '" + text + "' must be lo:hi:step or a comma list");
    const double lo = std::stod(text.substr(0, c1));
    const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(text.substr(c2 + 1));
    if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
    std::vector<double> grid;
    for (double x = lo; x <= hi + 0.5 * step; x += step) grid.push_back(std::min(x, hi));
    return grid;
  }
  std::vector<double> grid;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    grid.push_back(std::stod(comma == std::string::npos ? text.substr(start)
                                                        : text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return grid;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    out.push_back(std::stoi(comma == std::string::npos ? text.substr(start)
                                                       : text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

json estimate_to_json(const perc::Estimate& e) {
  return json{{"model", e.model},     {"d", e.dim},
              {"n", e.n},             {"semantics", e.semantics},
              {"p_hat", e.p_hat},     {"stderr", e.stderr_},
              {"ci_low", e.ci_low},   {"ci_high", e.ci_high},
              {"samples", e.samples}, {"seed", e.seed},
              {"version", perc::kVersion}};
}

std::string estimates_to_csv(const std::vector<perc::Estimate>& rows) {
  std::string out = perc::Estimate::csv_header() + "\n";
  for (const auto& e : rows) out += e.csv_row() + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"site-wise domination toolkit for local percolation models on Z^d"};
  app.set_version_flag("--version", perc::kVersion);
  app.set_config("--config");
  app.fallthrough();
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--seed", common.seed, "RNG seed");
  app.add_option("--workers", common.workers, "worker threads (0 = hardware)");
  app.add_option("--budget", common.budget, "exact enumeration budget (configurations)");

  int exit_code = 0;

  // ---- hitting-profile ----
  {
    auto* cmd = app.add_subcommand("hitting-profile", "boundary-hitting profile of a law");
    auto law = std::make_shared<std::string>();
    auto dim = std::make_shared<int>(2);
    auto out = std::make_shared<std::string>();
    auto emit_law = std::make_shared<std::string>();
    cmd->add_option("--law", *law, "law spec (e.g. dng:0.5)")->required();
    cmd->add_option("--d", *dim, "dimension")->required();
    cmd->add_option("-o,--output", *out, "output path (default stdout)");
    cmd->add_option("--emit-law", *emit_law, "also write the law itself (.json or .csv)");
    cmd->callback([law, dim, out, emit_law]() {
      const perc::LocalLaw l = perc::parse_law_spec(*law, *dim);
      const perc::HittingProfile prof = perc::hitting_profile(l);
      json doc;
      doc["dim"] = l.dim;
      doc["law"] = *law;
      doc["expected_degree"] = perc::expected_degree(l);
      doc["hit"] = json::array();
      for (perc::mask_t a = 0; a < l.mask_count(); ++a)
        doc["hit"].push_back({{"mask", a},
                              {"directions", perc::masks::direction_names(a, l.dim)},
                              {"value", prof.hit[a]}});
      emit(doc.dump(2) + "\n", *out);
      if (!emit_law->empty()) perc::save_law_file(l, *emit_law);
    });
  }

  // ---- check-domination ----
  {
    auto* cmd = app.add_subcommand("check-domination",
                                   "site-wise hitting comparison hit_P <= hit_Q");
    auto p = std::make_shared<std::string>();
    auto q = std::make_shared<std::string>();
    auto dim = std::make_shared<int>(2);
    auto mode = std::make_shared<std::string>("weak");
    auto range = std::make_shared<std::string>("proper");
    auto tol = std::make_shared<double>(1e-9);
    auto exact = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--p", *p, "dominated law spec")->required();
    cmd->add_option("--q", *q, "dominating law spec")->required();
    cmd->add_option("--d", *dim, "dimension")->required();
    cmd->add_option("--mode", *mode, "weak|strict")->check(CLI::IsMember({"weak", "strict"}));
    cmd->add_option("--range", *range, "proper|all")->check(CLI::IsMember({"proper", "all"}));
    cmd->add_option("--tol", *tol, "comparison tolerance (float mode)");
    cmd->add_flag("--exact", *exact, "exact rationals (specs with iid/dng/aon/cornerstick)");
    cmd->add_option("-o,--output", *out, "output path (default stdout)");
    cmd->callback([&exit_code, p, q, dim, mode, range, tol, exact, out]() {
      const auto cmp_mode =
          *mode == "strict" ? perc::ComparisonMode::strict : perc::ComparisonMode::weak;
      const auto cmp_range =
          *range == "all" ? perc::MaskRange::all : perc::MaskRange::proper_nonempty;
      perc::DominationReport report;
      if (*exact) {
        report = perc::check_local_domination_exact(perc::parse_rational_law_spec(*p, *dim),
                                                    perc::parse_rational_law_spec(*q, *dim),
                                                    cmp_mode, cmp_range);
      } else {
        report = perc::check_local_domination(perc::parse_law_spec(*p, *dim),
                                              perc::parse_law_spec(*q, *dim), cmp_mode, *tol,
                                              cmp_range);
      }
      emit(perc::domination_report_to_json(report, *dim), *out);
      if (!report.holds) exit_code = 1;
    });
  }

  // ---- check-pairwise ----
  {
    auto* cmd = app.add_subcommand(
        "check-pairwise", "bidirectional pair condition P[A]P[B] <= Q[A and B]");
    auto p = std::make_shared<std::string>();
    auto q = std::make_shared<std::string>();
    auto dim = std::make_shared<int>(2);
    auto tol = std::make_shared<double>(1e-9);
    auto exact = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--p", *p, "independent-side law spec")->required();
    cmd->add_option("--q", *q, "joint-side law spec")->required();
    cmd->add_option("--d", *dim, "dimension")->required();
    cmd->add_option("--tol", *tol, "comparison tolerance (float mode)");
    cmd->add_flag("--exact", *exact, "exact rationals");
    cmd->add_option("-o,--output", *out, "output path (default stdout)");
    cmd->callback([&exit_code, p, q, dim, tol, exact, out]() {
      perc::PairwiseReport report;
      if (*exact) {
        report = perc::check_pairwise_domination_exact(
            perc::parse_rational_law_spec(*p, *dim), perc::parse_rational_law_spec(*q, *dim));
      } else {
        report = perc::check_pairwise_domination(perc::parse_law_spec(*p, *dim),
                                                 perc::parse_law_spec(*q, *dim), *tol);
      }
      emit(perc::pairwise_report_to_json(report, *dim), *out);
      if (!report.holds) exit_code = 1;
    });
  }

  // ---- check-stochastic ----
  {
    auto* cmd = app.add_subcommand("check-stochastic",
                                   "Strassen stochastic domination P <=_st Q (d <= 3)");
    auto p = std::make_shared<std::string>();
    auto q = std::make_shared<std::string>();
    auto dim = std::make_shared<int>(2);
    auto exact = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--p", *p, "dominated law spec")->required();
    cmd->add_option("--q", *q, "dominating law spec")->required();
    cmd->add_option("--d", *dim, "dimension")->required();
    cmd->add_flag("--exact", *exact, "exact rationals");
    cmd->add_option("-o,--output", *out, "output path (default stdout)");
    cmd->callback([&exit_code, p, q, dim, exact, out]() {
      perc::StochasticResult result;
      if (*exact) {
        result = perc::check_stochastic_domination_exact(
            perc::parse_rational_law_spec(*p, *dim), perc::parse_rational_law_spec(*q, *dim));
      } else {
        result = perc::check_stochastic_domination(perc::parse_law_spec(*p, *dim),
                                                   perc::parse_law_spec(*q, *dim));
      }
      emit(perc::stochastic_result_to_json(result, *dim), *out);
      if (!result.dominated) exit_code = 1;
    });
  }

  // ---- reduce-exchangeable ----
  {
    auto* cmd = app.add_subcommand("reduce-exchangeable",
                                   "mass-moving reduction of a degree distribution");
    auto dim = std::make_shared<int>(2);
    auto alphas = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("--d", *dim, "dimension")->required();
    cmd->add_option("--alphas", *alphas, "degree weights alpha_0,...,alpha_2d")->required();
    cmd->add_option("-o,--output", *out, "output path (default stdout)");
    cmd->callback([dim, alphas, out]() {
      perc::DegreeDistribution dd(*dim, parse_grid(*alphas));
      json doc;
      doc["chain"] = json::array();
      doc["chain"].push_back(dd.alphas);
      while (auto next = perc::exchangeable_reduce_step(dd)) {
        dd = std::move(*next);
        doc["chain"].push_back(dd.alphas);
      }
      doc["mean"] = dd.mean();
      doc["range"] = dd.range();
      doc["terminal"] = dd.alphas;
      emit(doc.dump(2) + "\n", *out);
    });
  }

  // ---- estimate ----
  {
    auto* cmd = app.add_subcommand("estimate", "Monte Carlo one-arm estimate");
    auto law = std::make_shared<std::string>();
    auto bond = std::make_shared<double>(std::nan(""));
    auto dim = std::make_shared<int>(2);
    auto n = std::make_shared<int>(8);
    auto sem = std::make_shared<std::string>("directed");
    auto samples = std::make_shared<double>(100000);
    auto out = std::make_shared<std::string>();
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("--law", *law, "law spec");
    cmd->add_option("--bond", *bond, "undirected bond parameter instead of a law");
    cmd->add_option("--d", *dim, "dimension")->required();
    cmd->add_option("--n", *n, "box radius")->required();
    cmd->add_option("--sem", *sem, "directed|union|bidirectional|site:<p>");
    cmd->add_option("--samples", *samples, "sample count (accepts 1e6)");
    cmd->add_flag("--json", *as_json, "JSON instead of CSV");
    cmd->add_option("-o,--output", *out, "output path (default stdout)");
    cmd->callback([&common, law, bond, dim, n, sem, samples, out, as_json]() {
      perc::Estimate e;
      if (!std::isnan(*bond)) {
        e = perc::estimate_one_arm_bond(*bond, *dim, *n, static_cast<std::int64_t>(*samples),
                                        common.seed, common.workers);
      } else {
        if (law->empty())
          throw std::invalid_argument("estimate needs --law or --bond");
        const perc::EdgeSemantics semantics = perc::parse_semantics(*sem);
        e = perc::estimate_one_arm(perc::parse_law_spec(*law, *dim), *n, semantics,
                                   static_cast<std::int64_t>(*samples), common.seed,
                                   common.workers, *law);
      }
      emit(*as_json ? estimate_to_json(e).dump(2) + "\n" : estimates_to_csv({e}), *out);
    });
  }

  // ---- scan ----
  {
    auto* cmd = app.add_subcommand("scan", "one-arm estimates along a parameter grid");
    auto family = std::make_shared<std::string>();
    auto grid = std::make_shared<std::string>();
    auto dim = std::make_shared<int>(2);
    auto n = std::make_shared<int>(8);
    auto sem = std::make_shared<std::string>("directed");
    auto samples = std::make_shared<double>(100000);
    auto crn = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--family", *family, "family spec (iid, dng, ..., mix:<law>)")->required();
    cmd->add_option("--grid", *grid, "lo:hi:step or comma list")->required();
    cmd->add_option("--d", *dim, "dimension")->required();
    cmd->add_option("--n", *n, "box radius")->required();
    cmd->add_option("--sem", *sem, "directed|union|bidirectional|site:<p>");
    cmd->add_option("--samples", *samples, "samples per grid point");
    cmd->add_flag("--crn", *crn, "common random numbers across the grid");
    cmd->add_option("-o,--output", *out, "output path (default stdout)");
    cmd->callback([&common, family, grid, dim, n, sem, samples, crn, out]() {
      const auto fam = perc::parse_family_spec(*family, *dim);
      const auto rows = perc::scan_parameter(fam, parse_grid(*grid), *n,
                                             perc::parse_semantics(*sem),
                                             static_cast<std::int64_t>(*samples), common.seed,
                                             common.workers, *crn);
      emit(estimates_to_csv(rows), *out);
    });
  }

  // ---- fit-decay ----
  {
    auto* cmd = app.add_subcommand("fit-decay", "exponential decay fit over box radii");
    auto law = std::make_shared<std::string>();
    auto dim = std::make_shared<int>(2);
    auto radii = std::make_shared<std::string>();
    auto sem = std::make_shared<std::string>("directed");
    auto samples = std::make_shared<double>(100000);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--law", *law, "law spec")->required();
    cmd->add_option("--d", *dim, "dimension")->required();
    cmd->add_option("--radii", *radii, "box radii, e.g. 4,8,12,16,20")->required();
    cmd->add_option("--sem", *sem, "directed|union|bidirectional|site:<p>");
    cmd->add_option("--samples", *samples, "samples per radius");
    cmd->add_option("-o,--output", *out, "output path (default stdout)");
    cmd->callback([&common, law, dim, radii, sem, samples, out]() {
      const auto fit = perc::fit_decay(perc::parse_law_spec(*law, *dim),
                                       parse_int_list(*radii), perc::parse_semantics(*sem),
                                       static_cast<std::int64_t>(*samples), common.seed,
                                       common.workers);
      json doc;
      doc["c_hat"] = fit.c_hat;
      doc["intercept"] = fit.intercept;
      doc["r_squared"] = fit.r_squared;
      doc["radii"] = fit.radii;
      doc["log_p_hat"] = fit.log_p_hat;
      emit(doc.dump(2) + "\n", *out);
    });
  }

  // ---- pseudo-critical ----
  {
    auto* cmd = app.add_subcommand("pseudo-critical",
                                   "bisection for the finite-box crossing parameter");
    auto family = std::make_shared<std::string>();
    auto dim = std::make_shared<int>(2);
    auto n = std::make_shared<int>(32);
    auto sem = std::make_shared<std::string>("directed");
    auto opts = std::make_shared<perc::PseudoCriticalOptions>();
    auto samples = std::make_shared<double>(100000);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--family", *family, "family spec")->required();
    cmd->add_option("--d", *dim, "dimension")->required();
    cmd->add_option("--n", *n, "box radius")->required();
    cmd->add_option("--sem", *sem, "directed|union|bidirectional|site:<p>");
    cmd->add_option("--threshold", opts->threshold, "one-arm probability to cross");
    cmd->add_option("--tol", opts->tol, "final bracket width");
    cmd->add_option("--samples", *samples, "samples per evaluation");
    cmd->add_option("--lo", opts->lo, "bracket lower end (default: family domain)");
    cmd->add_option("--hi", opts->hi, "bracket upper end (default: family domain)");
    cmd->add_flag("--crn", opts->common_random_numbers, "same seed for every evaluation");
    cmd->add_option("-o,--output", *out, "output path (default stdout)");
    cmd->callback([&common, family, dim, n, sem, opts, samples, out]() {
      opts->samples = static_cast<std::int64_t>(*samples);
      opts->seed = common.seed;
      opts->workers = common.workers;
      const auto fam = perc::parse_family_spec(*family, *dim);
      const double pc = perc::pseudo_critical(fam, *n, perc::parse_semantics(*sem), *opts);
      json doc;
      doc["family"] = *family;
      doc["d"] = *dim;
      doc["n"] = *n;
      doc["threshold"] = opts->threshold;
      doc["pseudo_critical"] = pc;
      emit(doc.dump(2) + "\n", *out);
    });
  }

  // ---- verify-interpolation ----
  {
    auto* cmd = app.add_subcommand(
        "verify-interpolation", "exhaustive monotonicity of the site-replacement family");
    auto p = std::make_shared<std::string>();
    auto q = std::make_shared<std::string>();
    auto dim = std::make_shared<int>(1);
    auto n = std::make_shared<int>(1);
    auto sem = std::make_shared<std::string>("directed");
    auto tol = std::make_shared<double>(1e-12);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--p", *p, "baseline law spec")->required();
    cmd->add_option("--q", *q, "upgraded law spec")->required();
    cmd->add_option("--d", *dim, "dimension")->required();
    cmd->add_option("--n", *n, "box radius")->required();
    cmd->add_option("--sem", *sem, "directed|union|bidirectional");
    cmd->add_option("--tol", *tol, "monotonicity tolerance");
    cmd->add_option("-o,--output", *out, "output path (default stdout)");
    cmd->callback([&common, &exit_code, p, q, dim, n, sem, tol, out]() {
      perc::OracleOptions oracle{common.budget};
      const auto result = perc::verify_interpolation_monotonicity(
          perc::parse_law_spec(*p, *dim), perc::parse_law_spec(*q, *dim), *n,
          perc::parse_semantics(*sem), *tol, oracle);
      json doc;
      doc["holds"] = result.holds;
      if (result.counterexample) {
        const auto& ce = *result.counterexample;
        doc["counterexample"] = {{"u", ce.u},
                                 {"added", ce.added},
                                 {"value_before", ce.value_before},
                                 {"value_after", ce.value_after}};
      }
      emit(doc.dump(2) + "\n", *out);
      if (!result.holds) exit_code = 1;
    });
  }

  // ---- exact ----
  {
    auto* cmd = app.add_subcommand("exact", "exact one-arm probability by enumeration");
    auto law = std::make_shared<std::string>();
    auto bond = std::make_shared<double>(std::nan(""));
    auto dim = std::make_shared<int>(1);
    auto n = std::make_shared<int>(1);
    auto sem = std::make_shared<std::string>("directed");
    auto out = std::make_shared<std::string>();
    cmd->add_option("--law", *law, "law spec");
    cmd->add_option("--bond", *bond, "undirected bond parameter instead of a law");
    cmd->add_option("--d", *dim, "dimension")->required();
    cmd->add_option("--n", *n, "box radius")->required();
    cmd->add_option("--sem", *sem, "directed|union|bidirectional|site:<p>");
    cmd->add_option("-o,--output", *out, "output path (default stdout)");
    cmd->callback([&common, law, bond, dim, n, sem, out]() {
      perc::OracleOptions oracle{common.budget};
      perc::ExactResult result;
      std::string model = *law;
      if (!std::isnan(*bond)) {
        result = perc::exact_bond_one_arm(*bond, *dim, *n, oracle);
        model = "bond";
      } else {
        const perc::EdgeSemantics semantics = perc::parse_semantics(*sem);
        perc::LocalLaw l = law->empty() && semantics.kind == perc::GraphSemantics::site_iid
                               ? perc::make_aon(*dim, 1.0)
                               : perc::parse_law_spec(*law, *dim);
        result = perc::exact_one_arm(l, *n, semantics, oracle);
      }
      json doc;
      doc["model"] = model;
      doc["d"] = *dim;
      doc["n"] = *n;
      doc["semantics"] = *sem;
      doc["value"] = result.value;
      doc["configurations"] = result.configurations;
      emit(doc.dump(2) + "\n", *out);
    });
  }

  // ---- report-thresholds ----
  {
    auto* cmd = app.add_subcommand("report-thresholds",
                                   "percolation threshold report per k-subset model");
    auto dim = std::make_shared<int>(3);
    auto pc = std::make_shared<double>(std::nan(""));
    auto out = std::make_shared<std::string>();
    cmd->add_option("--d", *dim, "dimension")->required();
    cmd->add_option("--pc-upper", *pc, "override the built-in p_c upper bound");
    cmd->add_option("-o,--output", *out, "output path (default stdout)");
    cmd->callback([dim, pc, out]() {
      const auto report = perc::report_thresholds(
          *dim, std::isnan(*pc) ? std::nullopt : std::optional<double>(*pc));
      emit(report.text(), *out);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
