#pragma once

// Brute-force reference implementations used to cross-check the library.
// They work straight off the net/process data and avoid the library's own
// semantic routines so a bug cannot hide on both sides.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "procnet/net.hpp"
#include "procnet/process.hpp"

namespace oracles {

using count_map = std::map<std::string, procnet::count_t>;

inline count_map raw_marking(const procnet::multiset<std::string>& m) {
  count_map out;
  for (const auto& [k, c] : m) out[k] = c;
  return out;
}

inline bool raw_enabled(const procnet::net& n, const count_map& m,
                        const std::string& t) {
  for (const auto& p : n.places) {
    auto it = n.arcs.find({p, t});
    if (it == n.arcs.end()) continue;
    auto have = m.find(p);
    if (have == m.end() || have->second < it->second) return false;
  }
  return true;
}

inline count_map raw_fire(const procnet::net& n, count_map m,
                          const std::string& t) {
  for (const auto& p : n.places) {
    auto in = n.arcs.find({p, t});
    if (in != n.arcs.end()) {
      m[p] -= in->second;
      if (m[p] == 0) m.erase(p);
    }
    auto out = n.arcs.find({t, p});
    if (out != n.arcs.end()) m[p] += out->second;
  }
  return m;
}

// All firing sequences up to max_len, one transition at a time.
inline std::vector<procnet::word> brute_firing_sequences(
    const procnet::net& n, std::size_t max_len) {
  std::vector<procnet::word> out;
  std::vector<std::pair<procnet::word, count_map>> layer;
  layer.emplace_back(procnet::word{}, raw_marking(n.initial));
  out.push_back({});
  for (std::size_t len = 0; len < max_len; ++len) {
    std::vector<std::pair<procnet::word, count_map>> next;
    for (const auto& [w, m] : layer) {
      for (const auto& t : n.transitions) {
        if (!raw_enabled(n, m, t)) continue;
        auto w2 = w;
        w2.push_back(t);
        out.push_back(w2);
        next.emplace_back(std::move(w2), raw_fire(n, m, t));
      }
    }
    if (next.empty()) break;
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Markings reachable by single transitions within the bounds.
inline std::set<count_map> brute_reachable(const procnet::net& n,
                                           std::size_t max_markings = 100000) {
  std::set<count_map> seen;
  std::vector<count_map> queue{raw_marking(n.initial)};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto m = queue[i];
    for (const auto& t : n.transitions) {
      if (!raw_enabled(n, m, t)) continue;
      auto m2 = raw_fire(n, m, t);
      if (seen.count(m2)) continue;
      if (seen.size() >= max_markings) return seen;
      seen.insert(m2);
      queue.push_back(m2);
    }
  }
  return seen;
}

// Does some bijection between word positions and process transitions respect
// labels and causal order?  Tries every label-preserving assignment.
inline bool brute_compatible(const procnet::net& n, const procnet::gr_process& p,
                             const procnet::word& w) {
  (void)n;
  if (w.size() != p.transition_label.size()) return false;
  std::vector<int> ids;
  for (const auto& [id, label] : p.transition_label) {
    (void)label;
    ids.push_back(id);
  }
  // before[e] = events that must come before e (its producers' producers...).
  std::map<int, std::set<int>> prev;
  for (const auto& [id, label] : p.transition_label) {
    (void)label;
    std::set<int> before;
    // walk consumed places back to their producers, transitively
    std::vector<int> stack{id};
    std::set<int> seen;
    while (!stack.empty()) {
      int e = stack.back();
      stack.pop_back();
      for (const auto& [place, trans] : p.consume) {
        if (trans != e) continue;
        for (const auto& [t2, place2] : p.produce) {
          if (place2 != place) continue;
          if (t2 != id) before.insert(t2);
          if (seen.insert(t2).second) stack.push_back(t2);
        }
      }
    }
    prev[id] = before;
  }
  std::sort(ids.begin(), ids.end());
  std::vector<int> perm = ids;
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = i;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      if (p.transition_label.at(perm[i]) != w[i]) ok = false;
    }
    for (const auto& [e, before] : prev) {
      if (!ok) break;
      for (int b : before) {
        if (pos[b] >= pos[e]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracles
