#include "procnet/net.hpp"

#include <deque>
#include <stdexcept>

namespace procnet {

std::vector<std::string> validate(const net& n) {
  std::vector<std::string> out;
  for (const auto& p : n.places)
    if (n.transitions.count(p))
      out.push_back("node '" + p + "' declared as both place and transition");
  for (const auto& [arc, w] : n.arcs) {
    const auto& [from, to] = arc;
    bool pt = n.places.count(from) && n.transitions.count(to);
    bool tp = n.transitions.count(from) && n.places.count(to);
    if (!pt && !tp)
      out.push_back("arc " + from + " -> " + to +
                    " does not join a known place and transition");
    if (w <= 0)
      out.push_back("arc " + from + " -> " + to + " has non-positive weight");
  }
  for (const auto& [p, k] : n.initial) {
    if (!n.places.count(p)) out.push_back("marked node '" + p + "' is not a place");
    if (k < 0) out.push_back("place '" + p + "' has negative token count");
  }
  for (const auto& t : n.transitions)
    if (preset(n, t).empty())
      out.push_back("transition '" + t + "' has an empty preset");
  return out;
}

void require_valid(const net& n) {
  auto violations = validate(n);
  if (!violations.empty()) throw std::invalid_argument(violations.front());
}

multiset<std::string> preset(const net& n, const std::string& x) {
  multiset<std::string> out;
  for (const auto& [arc, w] : n.arcs)
    if (arc.second == x) out.add(arc.first, w);
  return out;
}

multiset<std::string> postset(const net& n, const std::string& x) {
  multiset<std::string> out;
  for (const auto& [arc, w] : n.arcs)
    if (arc.first == x) out.add(arc.second, w);
  return out;
}

multiset<std::string> preset(const net& n, const multiset<std::string>& xs) {
  multiset<std::string> out;
  for (const auto& [x, k] : xs)
    out = sum_of(out, scale(k, preset(n, x)));
  return out;
}

multiset<std::string> postset(const net& n, const multiset<std::string>& xs) {
  multiset<std::string> out;
  for (const auto& [x, k] : xs)
    out = sum_of(out, scale(k, postset(n, x)));
  return out;
}

bool enabled(const net& n, const marking& m, const step& g) {
  if (g.empty()) return false;
  return leq(preset(n, g), m);
}

marking fire_step(const net& n, const marking& m, const step& g) {
  if (!enabled(n, m, g))
    throw std::domain_error("step " + to_string(g) + " is not enabled at " +
                            to_string(m));
  return sum_of(difference(m, preset(n, g)), postset(n, g));
}

fire_outcome fire_word(const net& n, const marking& m, const word& w) {
  marking cur = m;
  for (std::size_t i = 0; i < w.size(); ++i) {
    step g;
    g.add(w[i]);
    if (!n.transitions.count(w[i]) || !enabled(n, cur, g))
      return {false, cur, i};
    cur = fire_step(n, cur, g);
  }
  return {true, cur, w.size()};
}

bool is_firing_sequence(const net& n, const word& w) {
  return fire_word(n, n.initial, w).fired;
}

std::string word_text(const word& w) {
  std::string out;
  for (const auto& t : w) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out.empty() ? "(empty)" : out;
}

std::vector<marking> replay(const net& n, const word& w) {
  std::vector<marking> out;
  out.reserve(w.size() + 1);
  marking cur = n.initial;
  out.push_back(cur);
  for (const auto& t : w) {
    step g;
    g.add(t);
    cur = fire_step(n, cur, g);
    out.push_back(cur);
  }
  return out;
}

std::vector<word> firing_sequences(const net& n, std::size_t max_len) {
  std::vector<word> out;
  out.push_back({});
  std::vector<std::pair<word, marking>> frontier{{word{}, n.initial}};
  for (std::size_t len = 0; len < max_len && !frontier.empty(); ++len) {
    std::vector<std::pair<word, marking>> next;
    for (const auto& [w, m] : frontier) {
      for (const auto& t : n.transitions) {
        step g;
        g.add(t);
        if (!enabled(n, m, g)) continue;
        word w2 = w;
        w2.push_back(t);
        next.emplace_back(std::move(w2), fire_step(n, m, g));
      }
    }
    for (const auto& [w, m] : next) out.push_back(w);
    frontier = std::move(next);
  }
  return out;
}

reach_set reachable_markings(const net& n, const search_budget& budget) {
  reach_set out;
  std::map<marking, std::size_t> seen;
  std::deque<std::pair<marking, word>> queue;
  seen.emplace(n.initial, 0);
  queue.push_back({n.initial, {}});
  out.markings.push_back({n.initial, {}});
  while (!queue.empty()) {
    auto [m, path] = queue.front();
    queue.pop_front();
    if (path.size() >= budget.max_depth) {
      out.complete = false;
      continue;
    }
    for (const auto& t : n.transitions) {
      step g;
      g.add(t);
      if (!enabled(n, m, g)) continue;
      marking m2 = fire_step(n, m, g);
      if (seen.count(m2)) continue;
      if (out.markings.size() >= budget.max_markings) {
        out.complete = false;
        return out;
      }
      word path2 = path;
      path2.push_back(t);
      seen.emplace(m2, out.markings.size());
      out.markings.push_back({m2, path2});
      queue.push_back({m2, path2});
    }
  }
  return out;
}

}  // namespace procnet
