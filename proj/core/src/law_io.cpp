#include "perc/law_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace perc {

namespace {

using nlohmann::json;

std::string canonical_ordering(int dim) {
  std::string s;
  for (int dir = 0; dir < masks::bits(dim); ++dir) {
    if (dir) s += ",";
    s += masks::direction_name(dir);
  }
  return s;
}

json mask_entry(mask_t a, int dim) {
  return json{{"mask", a}, {"directions", masks::direction_names(a, dim)}};
}

}  // namespace

std::string law_to_json(const LocalLaw& law) {
  json doc;
  doc["dim"] = law.dim;
  doc["probs"] = law.probs;
  doc["ordering"] = canonical_ordering(law.dim);
  return doc.dump(2) + "\n";
}

LocalLaw law_from_json(const std::string& text) {
  const json doc = json::parse(text);
  if (!doc.contains("dim") || !doc.contains("probs"))
    throw std::invalid_argument("law JSON needs 'dim' and 'probs'");
  const int dim = doc["dim"].get<int>();
  masks::check_dim(dim);
  if (doc.contains("ordering") && doc["ordering"].get<std::string>() != canonical_ordering(dim))
    throw std::invalid_argument("law JSON 'ordering' does not match the canonical direction "
                                "order (" + canonical_ordering(dim) + ")");
  return LocalLaw(dim, doc["probs"].get<std::vector<double>>());
}

std::string law_to_csv(const LocalLaw& law) {
  std::string out = "mask,probability\n";
  char buf[64];
  for (mask_t a = 0; a < law.mask_count(); ++a) {
    if (law.probs[a] <= 0.0) continue;
    std::snprintf(buf, sizeof buf, "%u,%.17g\n", a, law.probs[a]);
    out += buf;
  }
  return out;
}

LocalLaw law_from_csv(const std::string& text, int dim) {
  masks::check_dim(dim);
  std::vector<double> probs(masks::count(dim), 0.0);
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (first && line.rfind("mask", 0) == 0) {
      first = false;
      continue;
    }
    first = false;
    unsigned long a = 0;
    double w = 0.0;
    if (std::sscanf(line.c_str(), "%lu,%lf", &a, &w) != 2)
      throw std::invalid_argument("bad law CSV line: '" + line + "'");
    if (a >= masks::count(dim))
      throw std::invalid_argument("law CSV mask " + std::to_string(a) + " out of range for d=" +
                                  std::to_string(dim));
    probs[a] = w;
  }
  return LocalLaw(dim, std::move(probs));
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open law file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

LocalLaw load_law_file(const std::string& path, int dim_hint) {
  const std::string text = read_file(path);
  if (ends_with(path, ".json")) {
    LocalLaw law = law_from_json(text);
    if (dim_hint >= 0 && law.dim != dim_hint)
      throw std::invalid_argument("law file '" + path + "' has d=" + std::to_string(law.dim) +
                                  ", expected d=" + std::to_string(dim_hint));
    return law;
  }
  if (ends_with(path, ".csv")) {
    if (dim_hint < 0)
      throw std::invalid_argument("CSV law '" + path + "' needs an explicit dimension");
    return law_from_csv(text, dim_hint);
  }
  throw std::invalid_argument("law file '" + path + "' must end in .json or .csv");
}

void save_law_file(const LocalLaw& law, const std::string& path) {
  if (!ends_with(path, ".json") && !ends_with(path, ".csv"))
    throw std::invalid_argument("law file '" + path + "' must end in .json or .csv");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write law file '" + path + "'");
  out << (ends_with(path, ".csv") ? law_to_csv(law) : law_to_json(law));
}

std::string domination_report_to_json(const DominationReport& report, int dim) {
  json doc;
  doc["holds"] = report.holds;
  doc["strict"] = report.strict;
  doc["violations"] = json::array();
  for (const auto& v : report.violations) {
    json entry = mask_entry(v.mask, dim);
    entry["lhs"] = v.lhs;
    entry["rhs"] = v.rhs;
    doc["violations"].push_back(std::move(entry));
  }
  doc["equalities"] = json::array();
  for (const auto a : report.equalities) doc["equalities"].push_back(mask_entry(a, dim));
  return doc.dump(2) + "\n";
}

std::string pairwise_report_to_json(const PairwiseReport& report, int dim) {
  json doc;
  doc["holds"] = report.holds;
  doc["violations"] = json::array();
  for (const auto& v : report.violations) {
    json entry;
    entry["a"] = mask_entry(v.a, dim);
    entry["b"] = mask_entry(v.b, dim);
    entry["lhs"] = v.lhs;
    entry["rhs"] = v.rhs;
    doc["violations"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string stochastic_result_to_json(const StochasticResult& result, int dim) {
  json doc;
  doc["dominated"] = result.dominated;
  doc["witness_upset"] = json::array();
  for (const auto a : result.witness_upset) doc["witness_upset"].push_back(mask_entry(a, dim));
  if (!result.dominated) {
    doc["p_mass"] = result.p_mass;
    doc["q_mass"] = result.q_mass;
  }
  return doc.dump(2) + "\n";
}

}  // namespace perc
