#include "procnet/compat.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace procnet {

namespace {

// Direct causal predecessors lifted to transitive ones, per transition.
std::map<int, std::set<int>> transition_predecessors(const gr_process& p) {
  causal_index causal(p);
  std::map<int, std::set<int>> preds;
  for (const auto& [t, _] : p.transition_label) {
    preds[t];
    for (const auto& [u, _2] : p.transition_label)
      if (causal.trans_before(u, t)) preds[t].insert(u);
  }
  return preds;
}

}  // namespace

std::optional<pos_witness> compatible(const gr_process& p, const word& sigma) {
  if (p.transition_label.size() != sigma.size()) return std::nullopt;
  auto preds = transition_predecessors(p);
  std::vector<int> ids;
  for (const auto& [t, _] : p.transition_label) ids.push_back(t);
  std::map<int, std::size_t> assignment;
  std::set<int> used;
  std::function<bool(std::size_t)> fill = [&](std::size_t index) {
    if (index == sigma.size()) return true;
    for (int t : ids) {
      if (used.count(t)) continue;
      if (p.transition_label.at(t) != sigma[index]) continue;
      bool ready = std::all_of(preds[t].begin(), preds[t].end(),
                               [&](int u) { return used.count(u) != 0; });
      if (!ready) continue;
      used.insert(t);
      assignment[t] = index;
      if (fill(index + 1)) return true;
      used.erase(t);
      assignment.erase(t);
    }
    return false;
  };
  if (!fill(0)) return std::nullopt;
  return pos_witness{assignment};
}

std::vector<word> linearizations(const net& n, const gr_process& p) {
  auto preds = transition_predecessors(p);
  std::vector<int> ids;
  for (const auto& [t, _] : p.transition_label) ids.push_back(t);
  std::set<word> out;
  std::set<int> used;
  word current;
  std::function<void()> emit = [&]() {
    if (current.size() == ids.size()) {
      out.insert(current);
      return;
    }
    for (int t : ids) {
      if (used.count(t)) continue;
      bool ready = std::all_of(preds[t].begin(), preds[t].end(),
                               [&](int u) { return used.count(u) != 0; });
      if (!ready) continue;
      used.insert(t);
      current.push_back(p.transition_label.at(t));
      emit();
      current.pop_back();
      used.erase(t);
    }
  };
  emit();
  for (const auto& w : out)
    if (!is_firing_sequence(n, w))
      throw std::logic_error("linearization does not replay through the token game");
  return {out.begin(), out.end()};
}

word some_linearization(const gr_process& p) {
  auto preds = transition_predecessors(p);
  std::set<int> remaining;
  for (const auto& [t, _] : p.transition_label) remaining.insert(t);
  word out;
  while (!remaining.empty()) {
    int pick = -1;
    for (int t : remaining) {
      bool ready = std::all_of(preds[t].begin(), preds[t].end(),
                               [&](int u) { return remaining.count(u) == 0; });
      if (ready) {
        pick = t;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("cyclic causality in linearization");
    remaining.erase(pick);
    out.push_back(p.transition_label.at(pick));
  }
  return out;
}

namespace {

struct fifo_state {
  gr_process p;
  // Creation rank per place: initial places first in id order, produced
  // places by the position of their producer.
  std::map<int, std::pair<int, int>> rank;
  int next_place = 0;
  int next_trans = 0;
};

fifo_state seed_fifo(const gr_process& p, const pos_witness& w) {
  fifo_state st;
  st.p = p;
  for (const auto& [s, _] : p.place_label) {
    auto producer = p.producer_of(s);
    if (producer)
      st.rank[s] = {1 + static_cast<int>(w.at.at(*producer)), s};
    else
      st.rank[s] = {0, s};
    st.next_place = std::max(st.next_place, s + 1);
  }
  for (const auto& [t, _] : p.transition_label)
    st.next_trans = std::max(st.next_trans, t + 1);
  return st;
}

void fifo_append(const net& n, fifo_state& st, const std::string& t, int word_pos) {
  std::set<int> ends = end_places(st.p);
  int tid = st.next_trans++;
  st.p.transition_label[tid] = t;
  for (const auto& [label, k] : preset(n, t)) {
    std::vector<int> cands;
    for (int s : ends)
      if (st.p.place_label.at(s) == label) cands.push_back(s);
    std::sort(cands.begin(), cands.end(),
              [&](int a, int b) { return st.rank.at(a) < st.rank.at(b); });
    if (static_cast<count_t>(cands.size()) < k)
      throw std::logic_error("token shortfall while appending '" + t + "'");
    for (count_t i = 0; i < k; ++i) {
      st.p.consume.insert({cands[i], tid});
      ends.erase(cands[i]);
    }
  }
  for (const auto& [label, k] : postset(n, t))
    for (count_t i = 0; i < k; ++i) {
      int pid = st.next_place++;
      st.p.place_label[pid] = label;
      st.p.produce.insert({tid, pid});
      st.rank[pid] = {1 + word_pos, pid};
    }
}

}  // namespace

gr_process extend_process_along(const net& n, const gr_process& p_small,
                                const word& sigma_small, const word& sigma_big) {
  auto witness = compatible(p_small, sigma_small);
  if (!witness)
    throw std::invalid_argument("word is not a linearization of the given process");
  if (sigma_big.size() < sigma_small.size() ||
      !std::equal(sigma_small.begin(), sigma_small.end(), sigma_big.begin()))
    throw std::invalid_argument("extension word does not extend the base word");
  if (!is_firing_sequence(n, sigma_big))
    throw std::invalid_argument("extension word is not a firing sequence");
  fifo_state st = seed_fifo(p_small, *witness);
  for (std::size_t i = sigma_small.size(); i < sigma_big.size(); ++i)
    fifo_append(n, st, sigma_big[i], static_cast<int>(i));
  return st.p;
}

gr_process process_of(const net& n, const word& sigma) {
  if (!is_firing_sequence(n, sigma))
    throw std::invalid_argument("not a firing sequence");
  return extend_process_along(n, empty_process(n), {}, sigma);
}

gr_process process_prefix_for(const gr_process& p, const word& sigma,
                              const word& sigma_prefix) {
  auto witness = compatible(p, sigma);
  if (!witness)
    throw std::invalid_argument("word is not a linearization of the given process");
  if (sigma_prefix.size() > sigma.size() ||
      !std::equal(sigma_prefix.begin(), sigma_prefix.end(), sigma.begin()))
    throw std::invalid_argument("given word is not a prefix of the linearization");
  std::set<int> keep;
  for (const auto& [t, index] : witness->at)
    if (index < sigma_prefix.size()) keep.insert(t);
  return prefix_from_transitions(p, keep);
}

word linearize_extension(const gr_process& p_small, const gr_process& p_big,
                         const word& lin_small) {
  if (!is_prefix(p_small, p_big))
    throw std::invalid_argument("first process is not a prefix of the second");
  if (!compatible(p_small, lin_small))
    throw std::invalid_argument("word is not a linearization of the prefix");
  auto preds = transition_predecessors(p_big);
  std::set<int> remaining;
  for (const auto& [t, _] : p_big.transition_label)
    if (!p_small.transition_label.count(t)) remaining.insert(t);
  word out = lin_small;
  while (!remaining.empty()) {
    int pick = -1;
    for (int t : remaining) {
      bool ready = std::all_of(preds[t].begin(), preds[t].end(),
                               [&](int u) { return remaining.count(u) == 0; });
      if (ready) {
        pick = t;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("cyclic causality in extension");
    remaining.erase(pick);
    out.push_back(p_big.transition_label.at(pick));
  }
  return out;
}

prefix_down match_prefix_down(const gr_process& p_small, const gr_process& p_big,
                              const word& sigma) {
  if (!is_prefix(p_small, p_big))
    throw std::invalid_argument("first process is not a prefix of the second");
  auto witness = compatible(p_big, sigma);
  if (!witness)
    throw std::invalid_argument("word is not a linearization of the larger process");
  std::size_t cut = 0;
  for (const auto& [t, _] : p_small.transition_label)
    cut = std::max(cut, witness->at.at(t) + 1);
  word sigma2(sigma.begin(), sigma.begin() + cut);
  gr_process mid = process_prefix_for(p_big, sigma, sigma2);
  word lin_small = some_linearization(p_small);
  word sigma1 = linearize_extension(p_small, mid, lin_small);
  return {lin_small, sigma1, sigma2};
}

}  // namespace procnet
