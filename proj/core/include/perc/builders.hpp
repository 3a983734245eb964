#pragma once

#include <string>

#include "perc/exact_rational.hpp"
#include "perc/local_law.hpp"
#include "perc/monte_carlo.hpp"

namespace perc {

// Law builder mini-language, "name:param[:param...]":
//   iid:0.5        dng:0.5        aon:0.25
//   exch:0.5,0,0,0,0.5            (alphas for |N(o)| = 0..2d)
//   cornerstick:0.17              (d = 2)
//   soft_opposite:0.3             (d = 2)
//   soft_perpendicular:0.3        (d = 2)
//   mix:0.7:dng:0.5               (p * inner + (1-p) * delta_empty)
//   file:laws/q.json              (JSON or CSV on disk)
LocalLaw parse_law_spec(const std::string& spec, int dim);

// Exact-rational subset of the mini-language: iid, dng, aon, cornerstick,
// with parameters like "1/3" or exact decimals. d <= kMaxExactDim.
RationalLaw parse_rational_law_spec(const std::string& spec, int dim);

// Families for scans and bisection: same names minus file/exch, parameterized
// by their scalar (iid/dng/aon/soft by p or eps on [0,1], cornerstick by
// alpha on [0,1/4], mix:INNER by the mixing weight).
LawFamily parse_family_spec(const std::string& spec, int dim);

}  // namespace perc
