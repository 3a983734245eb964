#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "perc/builders.hpp"
#include "perc/law_io.hpp"
#include "perc/thresholds.hpp"

using namespace perc;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/perc_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
  void write(const std::string& text) const {
    std::ofstream out(path, std::ios::binary);
    out << text;
  }
};

bool laws_equal(const LocalLaw& a, const LocalLaw& b, double tol = 0.0) {
  if (a.dim != b.dim) return false;
  for (mask_t s = 0; s < a.mask_count(); ++s)
    if (std::abs(a[s] - b[s]) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("json law round-trip") {
  const LocalLaw law = make_dng(2, 0.55);
  CHECK(laws_equal(law_from_json(law_to_json(law)), law));

  SUBCASE("ordering string is validated") {
    std::string doc = law_to_json(law);
    const auto pos = doc.find("+x,-x");
    REQUIRE(pos != std::string::npos);
    doc.replace(pos, 5, "-x,+x");
    CHECK_THROWS_AS(law_from_json(doc), std::invalid_argument);
  }
  SUBCASE("probs length must match the dimension") {
    CHECK_THROWS_AS(law_from_json(R"({"dim":2,"probs":[0.5,0.5],)"
                                  R"("ordering":"+x,-x,+y,-y"})"),
                    std::invalid_argument);
  }
}

TEST_CASE("csv law round-trip") {
  const LocalLaw law = make_corner_stick(0.2);
  const std::string csv = law_to_csv(law);
  CHECK(csv.substr(0, 17) == "mask,probability\n");
  CHECK(laws_equal(law_from_csv(csv, 2), law));
  // only support rows are written: corner/stick has 6
  int rows = -1;  // header
  for (char c : csv) rows += c == '\n';
  CHECK(rows == 6);
}

TEST_CASE("law files dispatch on extension") {
  const LocalLaw law = make_iid(2, 0.3);
  {
    TempFile f("roundtrip.json");
    save_law_file(law, f.path);
    CHECK(laws_equal(load_law_file(f.path), law));
    CHECK(laws_equal(load_law_file(f.path, 2), law));
    CHECK_THROWS_AS(load_law_file(f.path, 3), std::invalid_argument);  // dim cross-check
  }
  {
    TempFile f("roundtrip.csv");
    save_law_file(law, f.path);
    CHECK(laws_equal(load_law_file(f.path, 2), law));
    CHECK_THROWS_AS(load_law_file(f.path), std::invalid_argument);  // CSV needs the dim
  }
  CHECK_THROWS_AS(load_law_file("/tmp/perc_missing.json"), std::runtime_error);
  CHECK_THROWS_AS(save_law_file(law, "/tmp/perc_test.xml"), std::invalid_argument);
}

TEST_CASE("law spec mini-language") {
  CHECK(laws_equal(parse_law_spec("iid:0.5", 2), make_iid(2, 0.5)));
  CHECK(laws_equal(parse_law_spec("dng:0.5", 3), make_dng(3, 0.5)));
  CHECK(laws_equal(parse_law_spec("aon:0.25", 1), make_aon(1, 0.25)));
  CHECK(laws_equal(parse_law_spec("cornerstick:0.2", 2), make_corner_stick(0.2)));
  CHECK(laws_equal(parse_law_spec("soft_opposite:0.3", 2), make_soft_opposite(0.3)));
  CHECK(laws_equal(parse_law_spec("soft_perpendicular:0.3", 2),
                   make_soft_perpendicular(0.3)));
  CHECK(laws_equal(parse_law_spec("mix:0.7:dng:0.5", 2),
                   mix_with_empty(make_dng(2, 0.5), 0.7)));
  CHECK(laws_equal(parse_law_spec("exch:0.5,0,0,0,0.5", 2),
                   make_exchangeable(DegreeDistribution(2, {0.5, 0, 0, 0, 0.5}))));

  TempFile f("spec.json");
  save_law_file(make_dng(2, 0.4), f.path);
  CHECK(laws_equal(parse_law_spec("file:" + f.path, 2), make_dng(2, 0.4)));

  CHECK_THROWS_AS(parse_law_spec("bogus:1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_law_spec("iid", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_law_spec("iid:abc", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_law_spec("iid:1.5", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_law_spec("cornerstick:0.2", 3), std::invalid_argument);
}

TEST_CASE("exact law specs") {
  const RationalLaw law = parse_rational_law_spec("iid:1/2", 2);
  CHECK(law.probs[0] == rational(1, 16));
  CHECK(parse_rational_law_spec("dng:0.5", 2).probs[0b0011] == rational(1, 6));
  CHECK_THROWS_AS(parse_rational_law_spec("soft_opposite:0.3", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational_law_spec("iid:", 2), std::invalid_argument);

  // non-canonical mpq input (6/48) must not poison exact comparisons
  const RationalLaw cs = make_corner_stick_exact(rational(6, 48));
  CHECK(cs.probs[0b0011] == rational(1, 4));
  CHECK(hitting_profile_exact(cs)[0b1100] == rational(3, 4));
}

TEST_CASE("family specs") {
  const LawFamily fam = parse_family_spec("dng", 2);
  CHECK(fam.param_lo == 0.0);
  CHECK(fam.param_hi == 1.0);
  CHECK(laws_equal(fam.build(0.5), make_dng(2, 0.5)));

  CHECK(parse_family_spec("cornerstick", 2).param_hi == 0.25);
  const LawFamily mix = parse_family_spec("mix:dng:0.5", 2);
  CHECK(laws_equal(mix.build(0.7), mix_with_empty(make_dng(2, 0.5), 0.7)));
  CHECK_THROWS_AS(parse_family_spec("exch", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("mix:", 2), std::invalid_argument);
}

TEST_CASE("report JSON serializers name directions") {
  const auto report = check_local_domination(make_dng(2, 0.5), make_iid(2, 0.5));
  const std::string json = domination_report_to_json(report, 2);
  CHECK(json.find("\"holds\": false") != std::string::npos);
  CHECK(json.find("+x") != std::string::npos);

  const auto st = check_stochastic_domination(make_iid(2, 0.5), make_dng(2, 0.5));
  const std::string stj = stochastic_result_to_json(st, 2);
  CHECK(stj.find("witness_upset") != std::string::npos);
}

TEST_CASE("threshold report quotes the published bounds") {
  const auto r3 = report_thresholds(3);
  CHECK(r3.pc_upper == doctest::Approx(0.347297));
  CHECK(r3.text().find("2dp > 2.083782") != std::string::npos);
  CHECK(r3.citation.find("0.347297") != std::string::npos);

  const auto r4 = report_thresholds(4);
  CHECK(r4.text().find("2dp > 2.2305") != std::string::npos);
  CHECK(r4.bng_min_k == 6);
  CHECK(r4.bng_no_perc_max_k == 2);

  const auto r5 = report_thresholds(5);
  CHECK(r5.bng_min_k == 6);
  CHECK(r5.bng_no_perc_max_k == 3);

  const auto r2 = report_thresholds(2);
  CHECK(r2.pc_upper == doctest::Approx(0.5));
  CHECK(r2.bng_no_perc_max_k == 2);

  SUBCASE("per-k taxonomy shape") {
    CHECK(r3.per_k.size() == 6);
    CHECK(r3.per_k[0].dng == "does not percolate");  // k = 1
    CHECK(r3.per_k[2].dng == "percolates");          // k = 3 > 2.0838
    CHECK(r3.per_k[1].dng == "open");                // k = 2
    CHECK(r3.per_k[4].bng == "percolates");          // k = 5 >= bng_min_k
    CHECK(r3.per_k[1].bng == "does not percolate");  // k = 2 <= floor(sqrt(6))
  }
  SUBCASE("missing dimension needs an explicit bound") {
    CHECK_THROWS_AS(report_thresholds(7), std::invalid_argument);
    const auto r7 = report_thresholds(7, 0.16);
    CHECK(r7.pc_upper == doctest::Approx(0.16));
    CHECK(r7.per_k.size() == 14);
  }
}
