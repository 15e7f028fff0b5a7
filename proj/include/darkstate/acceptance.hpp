#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "darkstate/config.hpp"

namespace darkstate {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
  double total_seconds = 0;
};

// Indices of strict local minima whose prominence (height of the lower
// enclosing saddle above the minimum) is at least min_prominence. Separates
// genuine survival valleys from interference ripple on a sampled curve.
std::vector<std::size_t> prominent_minima(const std::vector<double>& y,
                                          double min_prominence);

// Ripple on the sampled fig6/fig10 grids stays below prominence 0.19 while
// the survival valleys exceed 0.49; 0.35 splits the two populations.
inline constexpr double valley_prominence = 0.35;

// Runs the full physics acceptance suite, printing one line per criterion to
// `progress` as results arrive (pass nullptr for silence).
AcceptanceReport run_acceptance(const ParsedConfig& cfg, unsigned jobs,
                                std::ostream* progress);

}  // namespace darkstate
