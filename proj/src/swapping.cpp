#include "procnet/swapping.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>

#include "procnet/seqequiv.hpp"

namespace procnet {

gr_process apply_swap(const gr_process& p, const swap_move& move) {
  auto a = p.place_label.find(move.place_a);
  auto b = p.place_label.find(move.place_b);
  if (a == p.place_label.end() || b == p.place_label.end())
    throw std::domain_error("swap move names an unknown place");
  if (a->second != b->second)
    throw std::domain_error("swap requires equal place labels");
  if (move.place_a == move.place_b) return p;
  causal_index causal(p);
  if (causal.place_comparable(move.place_a, move.place_b))
    throw std::domain_error("swap requires causally incomparable places");
  gr_process q = p;
  auto ca = p.consumer_of(move.place_a);
  auto cb = p.consumer_of(move.place_b);
  if (ca) q.consume.erase({move.place_a, *ca});
  if (cb) q.consume.erase({move.place_b, *cb});
  if (cb) q.consume.insert({move.place_a, *cb});
  if (ca) q.consume.insert({move.place_b, *ca});
  return q;
}

std::vector<swap_move> swap_moves(const gr_process& p) {
  std::vector<swap_move> out;
  causal_index causal(p);
  for (auto a = p.place_label.begin(); a != p.place_label.end(); ++a)
    for (auto b = std::next(a); b != p.place_label.end(); ++b) {
      if (a->second != b->second) continue;
      if (causal.place_comparable(a->first, b->first)) continue;
      out.push_back({a->first, b->first});
    }
  return out;
}

bool one_step_equiv(const gr_process& p, const gr_process& q) {
  if (!p.place_label.empty() && isomorphic(p, q)) return true;  // identity swap
  for (const auto& move : swap_moves(p))
    if (isomorphic(apply_swap(p, move), q)) return true;
  return false;
}

namespace {

multiset<std::string> transition_labels(const gr_process& p) {
  multiset<std::string> out;
  for (const auto& [_, l] : p.transition_label) out.add(l);
  return out;
}

multiset<std::string> place_labels(const gr_process& p) {
  multiset<std::string> out;
  for (const auto& [_, l] : p.place_label) out.add(l);
  return out;
}

}  // namespace

std::optional<swap_chain> swap_star_equiv(const gr_process& p, const gr_process& q) {
  // Swaps only reroute consume arcs, so the label profiles never change;
  // processes with different profiles cannot meet, skip the search.
  if (transition_labels(p) != transition_labels(q) ||
      place_labels(p) != place_labels(q))
    return std::nullopt;
  std::string target = canonical_form(q);
  // Breadth-first over literal processes, deduplicated by canonical form;
  // parent links recover the move list.
  std::vector<gr_process> nodes{p};
  std::vector<std::pair<std::size_t, swap_move>> parent{{0, {}}};
  std::map<std::string, std::size_t> seen{{canonical_form(p), 0}};
  std::deque<std::size_t> queue{0};
  std::optional<std::size_t> hit;
  if (canonical_form(p) == target) hit = 0;
  while (!hit && !queue.empty()) {
    std::size_t at = queue.front();
    queue.pop_front();
    for (const auto& move : swap_moves(nodes[at])) {
      gr_process next = apply_swap(nodes[at], move);
      std::string cert = canonical_form(next);
      if (seen.count(cert)) continue;
      std::size_t id = nodes.size();
      seen.emplace(cert, id);
      nodes.push_back(std::move(next));
      parent.push_back({at, move});
      if (cert == target) {
        hit = id;
        break;
      }
      queue.push_back(id);
    }
  }
  if (!hit) return std::nullopt;
  std::vector<swap_move> moves;
  for (std::size_t at = *hit; at != 0; at = parent[at].first)
    moves.push_back(parent[at].second);
  std::reverse(moves.begin(), moves.end());
  auto iso = isomorphic(nodes[*hit], q);
  if (!iso) throw std::logic_error("canonical-form hit without isomorphism");
  return swap_chain{p, q, std::move(moves), std::move(*iso)};
}

bool verify_swap_chain(const net& n, const swap_chain& chain) {
  if (!validate_process(chain.start, n).empty()) return false;
  gr_process cur = chain.start;
  for (const auto& move : chain.moves) {
    try {
      cur = apply_swap(cur, move);
    } catch (const std::domain_error&) {
      return false;
    }
    if (!validate_process(cur, n).empty()) return false;
  }
  return check_iso(cur, chain.finish, chain.final_iso);
}

namespace {

bool bd_le_direct(const net& n, const gr_process& p, const gr_process& q) {
  // Some extension of p must be swap-equivalent to a prefix of q; prefixes
  // range over causally closed transition subsets.
  std::vector<int> qtrans;
  for (const auto& [t, _] : q.transition_label) qtrans.push_back(t);
  multiset<std::string> plabels = transition_labels(p);
  for (std::uint64_t mask = 0; mask < (1ull << qtrans.size()); ++mask) {
    std::set<int> keep;
    for (std::size_t i = 0; i < qtrans.size(); ++i)
      if (mask & (1ull << i)) keep.insert(qtrans[i]);
    gr_process prefix;
    try {
      prefix = prefix_from_transitions(q, keep);
    } catch (const std::invalid_argument&) {
      continue;  // not causally closed
    }
    multiset<std::string> qlabels = transition_labels(prefix);
    if (!leq(plabels, qlabels)) continue;
    multiset<std::string> todo = difference(qlabels, plabels);
    for (const auto& ext :
         enumerate_extensions(n, p, static_cast<std::size_t>(todo.size()), &todo))
      if (swap_star_equiv(ext, prefix)) return true;
  }
  return false;
}

}  // namespace

bool bd_le(const net& n, const gr_process& p, const gr_process& q, bd_strategy strategy) {
  if (strategy == bd_strategy::direct_search) return bd_le_direct(n, p, q);
  return fs_le(n, some_linearization(p), some_linearization(q));
}

bool bd_equiv(const net& n, const gr_process& p, const gr_process& q) {
  return bd_le(n, p, q) && bd_le(n, q, p);
}

std::vector<std::vector<std::size_t>> bd_classes(const net& n,
                                                 const std::vector<gr_process>& ps) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::optional<std::size_t>> assigned(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (assigned[i]) continue;
    assigned[i] = out.size();
    out.push_back({i});
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (assigned[j]) continue;
      if (bd_equiv(n, ps[i], ps[j])) {
        assigned[j] = *assigned[i];
        out.back().push_back(j);
      }
    }
  }
  return out;
}

}  // namespace procnet
