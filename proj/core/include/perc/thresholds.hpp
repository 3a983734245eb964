#pragma once

#include <optional>
#include <string>
#include <vector>

namespace perc {

// Published upper bounds for the bond percolation critical point of Z^d.
struct CriticalBound {
  int dim;
  double pc_upper;
  std::string citation;
  // Verbatim threshold text for the "DnG percolates for 2dp > ..." line, kept
  // as quoted in the source when it differs from the recomputed product.
  std::string dng_threshold_text;
};

const std::vector<CriticalBound>& builtin_critical_bounds();  // d = 2..5

struct KStatus {
  int k;
  std::string dng;  // "percolates" / "does not percolate" / "open"
  std::string ung;
  std::string bng;
};

struct ThresholdReport {
  int dim;
  double pc_upper;
  std::string citation;
  std::string dng_threshold_text;   // e.g. "2.083782"
  int bng_min_k = 0;                // smallest integer 2dp with k > 1 + 2d sqrt(pc)
  int bng_no_perc_max_k = 0;        // floor(sqrt(2d)): k^2 <= 2d blocks percolation
  std::vector<KStatus> per_k;       // k = 1..2d
  std::string text() const;
};

// Threshold report for dimension d using the built-in p_c upper bound table,
// or a caller-supplied bound for dimensions outside it.
ThresholdReport report_thresholds(int dim, std::optional<double> pc_upper = std::nullopt);

}  // namespace perc
