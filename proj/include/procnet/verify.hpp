#pragma once

// Cross-checks tying the modules together over a bounded word corpus: every
// constructive operation re-verified by an independent checker, class-level
// facts compared pairwise, and the covering-run construction replayed.

#include "procnet/diamond.hpp"
#include "procnet/net.hpp"

namespace procnet {

struct verify_options {
  std::size_t word_len = 4;    // corpus: all firing sequences up to here
  std::size_t enum_bound = 4;  // bound for the covering-run construction
  std::size_t direct_len = 3;  // word length cap for the direct-search cross-check
  count_t mult_cap = 4;
  search_budget budget;
};

struct check_outcome {
  std::string name;
  bool passed = true;
  bool bounded = false;  // a sub-check was cut short by a budget or cap
  std::string detail;    // first failure, or a short summary
};

// The per-net suite; one outcome per named property.
std::vector<check_outcome> verify_net(const net& n,
                                      const verify_options& opts = {});

bool all_passed(const std::vector<check_outcome>& outcomes);

}  // namespace procnet
