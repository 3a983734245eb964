#include "perc/thresholds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace perc {

const std::vector<CriticalBound>& builtin_critical_bounds() {
  static const std::vector<CriticalBound> table = {
      {2, 0.5, "p_c(2) = 1/2 exactly (Kesten 1980)", ""},
      {3, 0.347297, "p_c(3) <= 0.347297 (rigorous upper bound, percolation literature)",
       "2.083782"},
      {4, 0.2788, "p_c(4) <= 0.2788 (rigorous upper bound, percolation literature)", "2.2305"},
      {5, 0.2284, "p_c(5) <= 0.2284 (rigorous upper bound, percolation literature)", ""},
  };
  return table;
}

namespace {

std::string format_threshold(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7g", x);
  return buf;
}

}  // namespace

ThresholdReport report_thresholds(int dim, std::optional<double> pc_upper) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  ThresholdReport rep;
  rep.dim = dim;
  rep.dng_threshold_text.clear();
  if (pc_upper) {
    if (!(*pc_upper > 0.0 && *pc_upper < 1.0))
      throw std::invalid_argument("p_c upper bound must lie in (0,1)");
    rep.pc_upper = *pc_upper;
    rep.citation = "caller-supplied p_c upper bound";
  } else {
    const CriticalBound* found = nullptr;
    for (const auto& row : builtin_critical_bounds())
      if (row.dim == dim) found = &row;
    if (!found)
      throw std::invalid_argument("no built-in p_c bound for d=" + std::to_string(dim) +
                                  "; supply one explicitly");
    rep.pc_upper = found->pc_upper;
    rep.citation = found->citation;
    rep.dng_threshold_text = found->dng_threshold_text;
  }
  const int b = 2 * dim;
  const double dng_threshold = b * rep.pc_upper;
  if (rep.dng_threshold_text.empty()) rep.dng_threshold_text = format_threshold(dng_threshold);
  const double bng_threshold = 1.0 + b * std::sqrt(rep.pc_upper);
  rep.bng_min_k = static_cast<int>(std::floor(bng_threshold)) + 1;
  rep.bng_no_perc_max_k = static_cast<int>(std::floor(std::sqrt(static_cast<double>(b))));

  for (int k = 1; k <= b; ++k) {
    KStatus status;
    status.k = k;
    if (k > dng_threshold)
      status.dng = "percolates";
    else if (k <= 1)
      status.dng = "does not percolate";
    else
      status.dng = "open";
    // The union graph contains the directed one, so it inherits every
    // percolation claim; nothing here rules it out.
    status.ung = k > dng_threshold ? "percolates" : "open";
    if (k >= rep.bng_min_k)
      status.bng = "percolates";
    else if (k <= rep.bng_no_perc_max_k)
      status.bng = "does not percolate";
    else
      status.bng = "open";
    rep.per_k.push_back(std::move(status));
  }
  return rep;
}

std::string ThresholdReport::text() const {
  std::string out;
  out += "critical thresholds for d=" + std::to_string(dim) + " (2d = " +
         std::to_string(2 * dim) + ")\n";
  out += "  p_c upper bound: " + format_threshold(pc_upper) + "  [" + citation + "]\n";
  out += "  DnG percolates for 2dp > " + dng_threshold_text + "\n";
  out += "  UnG percolates for 2dp > " + dng_threshold_text + "\n";
  out += "  BnG percolates for integer 2dp >= " + std::to_string(bng_min_k) + "\n";
  out += "  BnG does not percolate for 2dp <= " + std::to_string(bng_no_perc_max_k) + "\n";
  out += "  k-subset status (k = 2dp):\n";
  for (const auto& s : per_k) {
    out += "    k=" + std::to_string(s.k) + ": DnG " + s.dng + ", UnG " + s.ung + ", BnG " +
           s.bng + "\n";
  }
  return out;
}

}  // namespace perc
