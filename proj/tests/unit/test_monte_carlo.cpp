#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "perc/monte_carlo.hpp"

using namespace perc;

namespace {
constexpr double kZ = 1.959963984540054;  // 97.5% normal quantile

int count_fields(const std::string& row) {
  int commas = 0;
  for (char c : row) commas += c == ',';
  return commas + 1;
}
}  // namespace

TEST_CASE("estimate matches the d=1 closed form") {
  const double p = 0.5, want = 2 * p * p - p * p * p * p;  // 0.4375
  const Estimate e =
      estimate_one_arm(make_iid(1, p), 1, EdgeSemantics::directed(), 40000, 3, 1, "iid:0.5");
  CHECK(std::abs(e.p_hat - want) < 4 * std::sqrt(want * (1 - want) / 40000));
  CHECK(e.stderr_ == doctest::Approx(std::sqrt(e.p_hat * (1 - e.p_hat) / 40000)));
  CHECK(e.ci_low < e.p_hat);
  CHECK(e.ci_high > e.p_hat);
  CHECK(e.ci_low >= 0.0);
  CHECK(e.ci_high <= 1.0);
  CHECK(e.samples == 40000);
  CHECK(e.seed == 3);
  CHECK(e.model == "iid:0.5");
  CHECK(e.dim == 1);
  CHECK(e.n == 1);
  CHECK(e.semantics == "directed");
}

TEST_CASE("estimates do not depend on the worker count") {
  for (auto sem : {EdgeSemantics::directed(), EdgeSemantics::site_iid(0.6)}) {
    const Estimate one = estimate_one_arm(make_dng(2, 0.5), 6, sem, 5000, 11, 1);
    const Estimate four = estimate_one_arm(make_dng(2, 0.5), 6, sem, 5000, 11, 4);
    const Estimate three = estimate_one_arm(make_dng(2, 0.5), 6, sem, 5000, 11, 3);
    CHECK(one.p_hat == four.p_hat);
    CHECK(one.p_hat == three.p_hat);
    CHECK(one.ci_low == four.ci_low);
    CHECK(one.ci_high == four.ci_high);
  }
  const Estimate b1 = estimate_one_arm_bond(0.5, 2, 6, 5000, 11, 1);
  const Estimate b4 = estimate_one_arm_bond(0.5, 2, 6, 5000, 11, 4);
  CHECK(b1.p_hat == b4.p_hat);
}

TEST_CASE("wilson interval closed form at certainty") {
  const Estimate e = estimate_one_arm_bond(1.0, 1, 1, 100, 1, 1);
  CHECK(e.p_hat == 1.0);
  CHECK(e.ci_high == doctest::Approx(1.0));
  CHECK(e.ci_low == doctest::Approx(1.0 / (1.0 + kZ * kZ / 100)));

  const Estimate z = estimate_one_arm_bond(0.0, 1, 1, 100, 1, 1);
  CHECK(z.p_hat == 0.0);
  CHECK(z.ci_low == doctest::Approx(0.0));
  CHECK(z.ci_high == doctest::Approx(1.0 - 1.0 / (1.0 + kZ * kZ / 100)));
}

TEST_CASE("csv output shape") {
  CHECK(Estimate::csv_header() ==
        "model,d,n,semantics,p_hat,stderr,ci_low,ci_high,samples,seed,version");
  const Estimate e =
      estimate_one_arm(make_iid(1, 0.5), 1, EdgeSemantics::directed(), 100, 1, 1, "iid:0.5");
  const std::string row = e.csv_row();
  CHECK(count_fields(row) == count_fields(Estimate::csv_header()));
  CHECK(row.substr(0, 8) == "iid:0.5,");

  SUBCASE("model names containing commas are quoted") {
    Estimate q = e;
    q.model = "exch:0.5,0,0.5";
    const std::string quoted = q.csv_row();
    CHECK(quoted.substr(0, 16) == "\"exch:0.5,0,0.5\"");
  }
}

TEST_CASE("scan walks the grid") {
  LawFamily fam{"iid", 1, 0.0, 1.0, [](double p) { return make_iid(1, p); }};
  const std::vector<double> grid{0.2, 0.5, 0.8};
  const auto rows = scan_parameter(fam, grid, 2, EdgeSemantics::directed(), 4000, 17);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].p_hat < rows[1].p_hat);
  CHECK(rows[1].p_hat < rows[2].p_hat);
  CHECK(rows[0].model.substr(0, 4) == "iid:");

  SUBCASE("common random numbers reuse the seed, fresh runs do not") {
    const auto crn = scan_parameter(fam, {0.5, 0.5}, 2, EdgeSemantics::directed(), 4000, 17,
                                    0, true);
    CHECK(crn[0].p_hat == crn[1].p_hat);
    const auto fresh = scan_parameter(fam, {0.5, 0.5}, 2, EdgeSemantics::directed(), 4000,
                                      17, 0, false);
    CHECK(fresh[0].seed != fresh[1].seed);
  }
}

TEST_CASE("decay fit recovers the d=1 exact slope") {
  const double p = 0.5;
  const std::vector<int> radii{1, 2, 3, 4, 5, 6, 7, 8};
  // independent oracle: least squares on the exact one-arm values
  std::vector<double> exact_log;
  for (int n : radii)
    exact_log.push_back(std::log(2 * std::pow(p, n + 1) - std::pow(p, 2 * (n + 1))));
  double mx = 0, my = 0;
  for (size_t i = 0; i < radii.size(); ++i) {
    mx += radii[i];
    my += exact_log[i];
  }
  mx /= radii.size();
  my /= radii.size();
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < radii.size(); ++i) {
    sxx += (radii[i] - mx) * (radii[i] - mx);
    sxy += (radii[i] - mx) * (exact_log[i] - my);
  }
  const double c_exact = -sxy / sxx;

  const DecayFit fit =
      fit_decay(make_iid(1, p), radii, EdgeSemantics::directed(), 30000, 23, 1);
  CHECK(fit.radii.size() == radii.size());
  CHECK(fit.c_hat == doctest::Approx(c_exact).epsilon(0.08));
  CHECK(fit.r_squared > 0.98);
  CHECK(fit.c_hat > 0.5);  // subcritical: genuine exponential decay
}

TEST_CASE("decay fit error paths") {
  CHECK_THROWS_AS(
      fit_decay(make_iid(1, 0.5), {1, 2}, EdgeSemantics::directed(), 100, 1, 1),
      insufficient_data_error);
  // p so small that no run ever reaches the boundary: every radius is dropped
  CHECK_THROWS_AS(
      fit_decay(make_iid(1, 0.01), {3, 4, 5}, EdgeSemantics::directed(), 200, 1, 1),
      insufficient_data_error);
}

TEST_CASE("pseudo-critical bisection on the d=1 closed form") {
  LawFamily fam{"iid", 1, 0.0, 1.0, [](double p) { return make_iid(1, p); }};
  PseudoCriticalOptions opts;
  opts.threshold = 0.5;
  opts.tol = 0.02;
  opts.samples = 20000;
  opts.seed = 5;
  opts.workers = 1;
  const double pc = pseudo_critical(fam, 4, EdgeSemantics::directed(), opts);
  // root of 2p^5 - p^10 = 1/2: p = (1 - sqrt(1/2))^(1/5)
  const double want = std::pow(1.0 - std::sqrt(0.5), 0.2);
  CHECK(std::abs(pc - want) < 0.035);

  SUBCASE("failing brackets name the endpoint") {
    opts.lo = 0.9;
    opts.hi = 0.95;
    CHECK_THROWS_WITH_AS(pseudo_critical(fam, 4, EdgeSemantics::directed(), opts),
                         doctest::Contains("lower endpoint"), bracket_error);
    opts.lo = 0.01;
    opts.hi = 0.05;
    CHECK_THROWS_WITH_AS(pseudo_critical(fam, 4, EdgeSemantics::directed(), opts),
                         doctest::Contains("upper endpoint"), bracket_error);
  }
}
