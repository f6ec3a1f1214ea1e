#pragma once

// Semantic conflicts: transition multisets whose members are individually
// enabled (with multiplicity) while the whole is not, searched over the
// reachable markings, plus the structural no-shared-preplace property.

#include "procnet/net.hpp"

namespace procnet {

enum class verdict { holds, fails, bounded };

struct conflict_witness {
  word path;      // firing sequence reaching the marking
  marking at;     // the marking itself
  step offending; // the multiset in conflict (or sharing preplaces)
};

struct conflict_report {
  verdict result = verdict::holds;
  std::vector<conflict_witness> witnesses;  // non-empty iff fails
  bool search_truncated = false;
};

// G is in conflict at m: not enabled as a whole, but every restriction to a
// single member (keeping its multiplicity) is.
bool is_conflict(const net& n, const marking& m, const step& g);

// No two-element multiset {t,u} (t = u allowed) is in conflict at any
// reachable marking.
conflict_report binary_conflict_free(const net& n, const search_budget& budget = {});

// No multiset at all is in conflict. Candidate multiplicities per transition
// are bounded by the largest enabled multiplicity at the marking (which makes
// the check exact) and additionally by mult_cap as a safety net; a marking
// that exceeds the cap demotes a clean verdict to bounded.
conflict_report conflict_free(const net& n, const search_budget& budget = {},
                              count_t mult_cap = 4);

// Whenever a two-element step is enabled at a reachable marking, its members
// share no preplace. A transition concurrently enabled with itself always
// violates this.
conflict_report structural_conflict_net(const net& n, const search_budget& budget = {});

}  // namespace procnet
