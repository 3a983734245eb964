#include "perc/builders.hpp"

#include <stdexcept>

#include "perc/law_io.hpp"

namespace perc {

namespace {

double parse_number(const std::string& text, const std::string& what) {
  try {
    size_t pos = 0;
    const double x = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + " '" + text + "'");
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const std::string item =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    out.push_back(parse_number(item, "list entry"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void require_d2(const std::string& name, int dim) {
  if (dim != 2)
    throw std::invalid_argument("law '" + name + "' is defined for d=2, got d=" +
                                std::to_string(dim));
}

constexpr const char* kKnownLaws =
    "iid, dng, aon, exch, cornerstick, soft_opposite, soft_perpendicular, mix, file";

}  // namespace

LocalLaw parse_law_spec(const std::string& spec, int dim) {
  const size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (name != "file" && rest.empty())
    throw std::invalid_argument("law spec '" + spec + "' is missing parameters");

  if (name == "iid") return make_iid(dim, parse_number(rest, "probability"));
  if (name == "dng") return make_dng(dim, parse_number(rest, "probability"));
  if (name == "aon") return make_aon(dim, parse_number(rest, "probability"));
  if (name == "exch")
    return make_exchangeable(DegreeDistribution(dim, parse_list(rest)));
  if (name == "cornerstick") {
    require_d2(name, dim);
    return make_corner_stick(parse_number(rest, "corner weight"));
  }
  if (name == "soft_opposite") {
    require_d2(name, dim);
    return make_soft_opposite(parse_number(rest, "stick weight"));
  }
  if (name == "soft_perpendicular") {
    require_d2(name, dim);
    return make_soft_perpendicular(parse_number(rest, "corner weight"));
  }
  if (name == "mix") {
    const size_t split = rest.find(':');
    if (split == std::string::npos)
      throw std::invalid_argument("mix law needs 'mix:<p>:<inner spec>'");
    const double p = parse_number(rest.substr(0, split), "mixing weight");
    return mix_with_empty(parse_law_spec(rest.substr(split + 1), dim), p);
  }
  if (name == "file") {
    if (rest.empty()) throw std::invalid_argument("file law needs 'file:<path>'");
    return load_law_file(rest, dim);
  }
  throw std::invalid_argument("unknown law '" + name + "' (known: " + kKnownLaws + ")");
}

RationalLaw parse_rational_law_spec(const std::string& spec, int dim) {
  const size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (rest.empty())
    throw std::invalid_argument("law spec '" + spec + "' is missing parameters");

  if (name == "iid") return make_iid_exact(dim, parse_rational(rest));
  if (name == "dng") return make_dng_exact(dim, parse_rational(rest));
  if (name == "aon") return make_aon_exact(dim, parse_rational(rest));
  if (name == "cornerstick") {
    require_d2(name, dim);
    return make_corner_stick_exact(parse_rational(rest));
  }
  throw std::invalid_argument("unknown exact law '" + name +
                              "' (known: iid, dng, aon, cornerstick)");
}

LawFamily parse_family_spec(const std::string& spec, int dim) {
  LawFamily family;
  family.name = spec;
  family.dim = dim;
  family.param_lo = 0.0;
  family.param_hi = 1.0;

  if (spec == "iid") {
    family.build = [dim](double p) { return make_iid(dim, p); };
  } else if (spec == "dng") {
    family.build = [dim](double p) { return make_dng(dim, p); };
  } else if (spec == "aon") {
    family.build = [dim](double p) { return make_aon(dim, p); };
  } else if (spec == "cornerstick") {
    require_d2(spec, dim);
    family.param_hi = 0.25;
    family.build = [](double alpha) { return make_corner_stick(alpha); };
  } else if (spec == "soft_opposite") {
    require_d2(spec, dim);
    family.build = [](double eps) { return make_soft_opposite(eps); };
  } else if (spec == "soft_perpendicular") {
    require_d2(spec, dim);
    family.build = [](double eps) { return make_soft_perpendicular(eps); };
  } else if (spec.rfind("mix:", 0) == 0) {
    const std::string inner = spec.substr(4);
    if (inner.empty()) throw std::invalid_argument("mix family needs 'mix:<inner spec>'");
    const LocalLaw base = parse_law_spec(inner, dim);  // fail fast on bad inner specs
    family.build = [base](double p) { return mix_with_empty(base, p); };
  } else {
    throw std::invalid_argument(
        "unknown family '" + spec +
        "' (known: iid, dng, aon, cornerstick, soft_opposite, soft_perpendicular, "
        "mix:<inner law>)");
  }
  return family;
}

}  // namespace perc
