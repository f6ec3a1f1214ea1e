#include "procnet/seqequiv.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace procnet {

adjacency_chain identity_chain(const word& w) { return {w, w, {}}; }

adjacency_chain lift_with_suffix(adjacency_chain chain, const word& suffix) {
  chain.start.insert(chain.start.end(), suffix.begin(), suffix.end());
  chain.finish.insert(chain.finish.end(), suffix.begin(), suffix.end());
  return chain;
}

adjacency_chain concat_chains(adjacency_chain a, const adjacency_chain& b) {
  if (a.finish != b.start)
    throw std::invalid_argument("chain concatenation endpoints do not meet");
  a.finish = b.finish;
  a.steps.insert(a.steps.end(), b.steps.begin(), b.steps.end());
  return a;
}

adjacency_chain reversed_chain(const adjacency_chain& chain) {
  adjacency_chain out{chain.finish, chain.start, {}};
  for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
    transposition step = *it;
    std::swap(step.first, step.second);
    out.steps.push_back(std::move(step));
  }
  return out;
}

namespace {

step pair_step(const std::string& t, const std::string& u) {
  step g;
  g.add(t);
  g.add(u);
  return g;
}

}  // namespace

bool verify_chain(const net& n, const adjacency_chain& chain) {
  if (!is_firing_sequence(n, chain.start)) return false;
  word w = chain.start;
  for (const auto& step : chain.steps) {
    if (step.pos + 1 >= w.size()) return false;
    if (w[step.pos] != step.first || w[step.pos + 1] != step.second) return false;
    word prefix(w.begin(), w.begin() + step.pos);
    auto outcome = fire_word(n, n.initial, prefix);
    if (!outcome.fired || outcome.reached != step.enabling) return false;
    if (!enabled(n, step.enabling, pair_step(step.first, step.second))) return false;
    std::swap(w[step.pos], w[step.pos + 1]);
  }
  return w == chain.finish;
}

bool adjacent(const net& n, const word& sigma, const word& rho) {
  if (!is_firing_sequence(n, sigma))
    throw std::invalid_argument("first word is not a firing sequence");
  if (sigma.size() != rho.size()) return false;
  auto markings = replay(n, sigma);
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
    word swapped = sigma;
    std::swap(swapped[i], swapped[i + 1]);
    if (swapped != rho) continue;
    if (enabled(n, markings[i], pair_step(sigma[i], sigma[i + 1]))) return true;
  }
  return false;
}

namespace {

multiset<std::string> parikh(const word& w) {
  multiset<std::string> out;
  for (const auto& t : w) out.add(t);
  return out;
}

// Legal transposition positions of w, given its prefix markings.
std::vector<std::size_t> moves_of(const net& n, const word& w,
                                  const std::vector<marking>& markings) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) continue;  // exchanging equal letters goes nowhere
    if (enabled(n, markings[i], pair_step(w[i], w[i + 1]))) out.push_back(i);
  }
  return out;
}

// Breadth-first closure over transposition moves from start. Stops early
// when target is reached (if given). Returns parent links for certificates.
struct closure {
  std::map<word, std::pair<word, std::size_t>> parent;  // word -> (from, pos)
  std::vector<word> order;
  bool found_target = false;
};

closure transposition_closure(const net& n, const word& start, const word* target) {
  closure out;
  out.parent.emplace(start, std::make_pair(word{}, 0));
  out.order.push_back(start);
  if (target && start == *target) {
    out.found_target = true;
    return out;
  }
  std::deque<word> queue{start};
  while (!queue.empty()) {
    word w = queue.front();
    queue.pop_front();
    auto markings = replay(n, w);
    for (std::size_t i : moves_of(n, w, markings)) {
      word next = w;
      std::swap(next[i], next[i + 1]);
      if (out.parent.count(next)) continue;
      out.parent.emplace(next, std::make_pair(w, i));
      out.order.push_back(next);
      if (target && next == *target) {
        out.found_target = true;
        return out;
      }
      queue.push_back(next);
    }
  }
  return out;
}

adjacency_chain chain_from_closure(const net& n, const closure& cls, const word& start,
                                   const word& finish) {
  std::vector<std::pair<word, std::size_t>> path;  // (word before step, pos)
  word cur = finish;
  while (cur != start) {
    const auto& [from, pos] = cls.parent.at(cur);
    path.push_back({from, pos});
    cur = from;
  }
  std::reverse(path.begin(), path.end());
  adjacency_chain chain{start, finish, {}};
  for (const auto& [w, pos] : path) {
    word prefix(w.begin(), w.begin() + pos);
    transposition step;
    step.pos = pos;
    step.first = w[pos];
    step.second = w[pos + 1];
    step.enabling = fire_word(n, n.initial, prefix).reached;
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

}  // namespace

std::optional<adjacency_chain> seq_star_equiv(const net& n, const word& sigma,
                                              const word& rho) {
  if (!is_firing_sequence(n, sigma) || !is_firing_sequence(n, rho))
    throw std::invalid_argument("both words must be firing sequences");
  if (sigma.size() != rho.size() || parikh(sigma) != parikh(rho)) return std::nullopt;
  closure cls = transposition_closure(n, sigma, &rho);
  if (!cls.found_target) return std::nullopt;
  return chain_from_closure(n, cls, sigma, rho);
}

bool fs_le(const net& n, const word& sigma, const word& rho) {
  if (!is_firing_sequence(n, sigma) || !is_firing_sequence(n, rho))
    throw std::invalid_argument("both words must be firing sequences");
  auto sigma_parikh = parikh(sigma);
  for (std::size_t len = sigma.size(); len <= rho.size(); ++len) {
    word prefix(rho.begin(), rho.begin() + len);
    if (!leq(sigma_parikh, parikh(prefix))) continue;
    // Search the transposition class of the prefix for a word extending sigma.
    closure cls = transposition_closure(n, prefix, nullptr);
    for (const auto& member : cls.order)
      if (std::equal(sigma.begin(), sigma.end(), member.begin())) return true;
  }
  return false;
}

bool fs_equiv(const net& n, const word& sigma, const word& rho) {
  return fs_le(n, sigma, rho) && fs_le(n, rho, sigma);
}

std::set<word> fs_downset(const net& n, const word& rho) {
  if (!is_firing_sequence(n, rho))
    throw std::invalid_argument("word must be a firing sequence");
  std::set<word> out;
  for (std::size_t len = 0; len <= rho.size(); ++len) {
    word prefix(rho.begin(), rho.begin() + len);
    for (const word& member : transposition_closure(n, prefix, nullptr).order)
      for (std::size_t cut = 0; cut <= member.size(); ++cut)
        out.insert(word(member.begin(), member.begin() + cut));
  }
  return out;
}

bool prefix_agree(const word& sigma, const word& rho, std::size_t n) {
  if (sigma == rho) return true;
  if (sigma.size() != rho.size() || sigma.size() < n) return false;
  return std::equal(sigma.begin(), sigma.begin() + n, rho.begin());
}

word reorder_after_prefix(const net& n, const word& sigma1, const word& sigma2,
                          const word& sigma3) {
  if (sigma2.size() > sigma3.size() ||
      !std::equal(sigma2.begin(), sigma2.end(), sigma3.begin()))
    throw std::invalid_argument("second word is not a prefix of the third");
  if (!is_firing_sequence(n, sigma3))
    throw std::invalid_argument("third word is not a firing sequence");
  if (!seq_star_equiv(n, sigma1, sigma2))
    throw std::invalid_argument("first two words are not transposition-equivalent");
  word out = sigma1;
  out.insert(out.end(), sigma3.begin() + sigma2.size(), sigma3.end());
  return out;
}

std::pair<word, word> localize_swaps(const net& n, const word& prefix,
                                     const word& rho_dagger, const word& rho) {
  if (prefix.size() > rho_dagger.size() ||
      !std::equal(prefix.begin(), prefix.end(), rho_dagger.begin()))
    throw std::invalid_argument("first word is not a prefix of the second");
  auto chain = seq_star_equiv(n, rho_dagger, rho);
  if (!chain)
    throw std::invalid_argument("words are not transposition-equivalent");
  std::size_t cut = prefix.size();
  for (const auto& step : chain->steps) cut = std::max(cut, step.pos + 2);
  word sigma_prime(rho_dagger.begin(), rho_dagger.begin() + cut);
  word rho_prime(rho.begin(), rho.begin() + cut);
  return {sigma_prime, rho_prime};
}

word_table build_word_table(const net& n, std::size_t max_len) {
  word_table table;
  table.words = firing_sequences(n, max_len);
  for (std::size_t i = 0; i < table.words.size(); ++i)
    table.index.emplace(table.words[i], i);
  // Union-find over one-transposition neighbourhoods; lengths are preserved,
  // so classes stay inside the enumerated set.
  std::vector<std::size_t> root(table.words.size());
  for (std::size_t i = 0; i < root.size(); ++i) root[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (root[x] != x) {
      root[x] = root[root[x]];
      x = root[x];
    }
    return x;
  };
  for (std::size_t i = 0; i < table.words.size(); ++i) {
    const word& w = table.words[i];
    auto markings = replay(n, w);
    for (std::size_t pos : moves_of(n, w, markings)) {
      word next = w;
      std::swap(next[pos], next[pos + 1]);
      root[find(i)] = find(table.index.at(next));
    }
  }
  table.cls.resize(table.words.size());
  std::map<std::size_t, std::size_t> compress;
  for (std::size_t i = 0; i < table.words.size(); ++i) {
    std::size_t r = find(i);
    auto it = compress.emplace(r, compress.size()).first;
    table.cls[i] = it->second;
  }
  table.class_count = compress.size();
  return table;
}

}  // namespace procnet
