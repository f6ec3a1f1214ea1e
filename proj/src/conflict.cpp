#include "procnet/conflict.hpp"

#include <functional>
#include <optional>

namespace procnet {

bool is_conflict(const net& n, const marking& m, const step& g) {
  if (g.empty() || enabled(n, m, g)) return false;
  for (const auto& [t, k] : g) {
    step alone;
    alone.add(t, k);
    if (!enabled(n, m, alone)) return false;
  }
  return true;
}

namespace {

conflict_report scan_markings(
    const net& n, const search_budget& budget,
    const std::function<std::optional<step>(const marking&)>& check) {
  require_valid(n);
  conflict_report report;
  reach_set reached = reachable_markings(n, budget);
  report.search_truncated = !reached.complete;
  for (const auto& [m, path] : reached.markings) {
    if (auto g = check(m)) {
      report.result = verdict::fails;
      report.witnesses.push_back({path, m, *g});
      return report;
    }
  }
  report.result = report.search_truncated ? verdict::bounded : verdict::holds;
  return report;
}

}  // namespace

conflict_report binary_conflict_free(const net& n, const search_budget& budget) {
  return scan_markings(n, budget, [&](const marking& m) -> std::optional<step> {
    for (auto t = n.transitions.begin(); t != n.transitions.end(); ++t)
      for (auto u = t; u != n.transitions.end(); ++u) {
        step g;
        g.add(*t);
        g.add(*u);
        if (is_conflict(n, m, g)) return g;
      }
    return std::nullopt;
  });
}

conflict_report conflict_free(const net& n, const search_budget& budget,
                              count_t mult_cap) {
  bool capped = false;
  conflict_report report =
      scan_markings(n, budget, [&](const marking& m) -> std::optional<step> {
        // Largest enabled multiplicity per transition; a conflict's members
        // stay within it, so enumerating up to the bound is exact.
        std::vector<std::pair<std::string, count_t>> bounds;
        for (const auto& t : n.transitions) {
          count_t k = 0;
          while (leq(scale(k + 1, preset(n, t)), m)) ++k;
          if (k > mult_cap) {
            capped = true;
            k = mult_cap;
          }
          if (k > 0) bounds.push_back({t, k});
        }
        std::optional<step> found;
        step current;
        std::function<void(std::size_t)> enumerate = [&](std::size_t i) {
          if (found) return;
          if (i == bounds.size()) {
            if (is_conflict(n, m, current)) found = current;
            return;
          }
          const auto& [t, bound] = bounds[i];
          for (count_t k = 0; k <= bound && !found; ++k) {
            step next = current;
            next.add(t, k);
            std::swap(current, next);
            enumerate(i + 1);
            std::swap(current, next);
          }
        };
        enumerate(0);
        return found;
      });
  if (capped && report.result == verdict::holds) report.result = verdict::bounded;
  report.search_truncated = report.search_truncated || capped;
  return report;
}

conflict_report structural_conflict_net(const net& n, const search_budget& budget) {
  return scan_markings(n, budget, [&](const marking& m) -> std::optional<step> {
    for (auto t = n.transitions.begin(); t != n.transitions.end(); ++t)
      for (auto u = t; u != n.transitions.end(); ++u) {
        step g;
        g.add(*t);
        g.add(*u);
        if (!enabled(n, m, g)) continue;
        if (!intersection_of(preset(n, *t), preset(n, *u)).empty()) return g;
      }
    return std::nullopt;
  });
}

}  // namespace procnet
