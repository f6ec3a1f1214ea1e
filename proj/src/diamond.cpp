#include "procnet/diamond.hpp"

#include <algorithm>
#include <utility>

#include "procnet/compat.hpp"
#include "procnet/swapping.hpp"

namespace procnet {

namespace {

void require_binary_conflict_free(const net& n, const search_budget& budget) {
  conflict_report r = binary_conflict_free(n, budget);
  if (r.result == verdict::fails)
    throw binary_conflict_error(r.witnesses.front());
}

// The lazy body of commute_out: every pair is re-checked against the marking,
// so the chain is sound even when the upfront scan ran out of budget.
adjacency_chain commute_out_impl(const net& n, const word& sigma,
                                 const std::string& t, const word& rho) {
  if (!n.transitions.count(t))
    throw std::invalid_argument("unknown transition: " + t);
  if (std::find(rho.begin(), rho.end(), t) != rho.end())
    throw std::invalid_argument("transition " + t +
                                " occurs in the word it is commuted past");
  fire_outcome base = fire_word(n, n.initial, sigma);
  if (!base.fired)
    throw std::invalid_argument("not a firing sequence: " + word_text(sigma));
  step single_t;
  single_t.add(t);
  if (!enabled(n, base.reached, single_t))
    throw std::invalid_argument("not a firing sequence: " +
                                word_text(sigma) + " " + t);

  adjacency_chain chain;
  chain.start = sigma;
  chain.start.push_back(t);
  chain.start.insert(chain.start.end(), rho.begin(), rho.end());
  chain.finish = sigma;
  chain.finish.insert(chain.finish.end(), rho.begin(), rho.end());
  chain.finish.push_back(t);

  marking at = base.reached;  // marking after sigma plus the passed letters
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const std::string& u = rho[i];
    step single_u;
    single_u.add(u);
    if (!n.transitions.count(u) || !enabled(n, at, single_u))
      throw std::invalid_argument("not a firing sequence: " +
                                  word_text(sigma) + " " + word_text(rho));
    step pair;
    pair.add(t);
    pair.add(u);
    if (!enabled(n, at, pair)) {
      conflict_witness w;
      w.path = sigma;
      w.path.insert(w.path.end(), rho.begin(), rho.begin() + i);
      w.at = at;
      w.offending = pair;
      throw binary_conflict_error(std::move(w));
    }
    chain.steps.push_back({sigma.size() + i, t, u, at});
    at = fire_step(n, at, single_u);
  }
  return chain;
}

adjacency_chain commute_in_impl(const net& n, const word& sigma,
                                const std::string& t, const word& rho1,
                                const word& rho2) {
  return lift_with_suffix(commute_out_impl(n, sigma, t, rho1), rho2);
}

diamond close_diamond_impl(const net& n, const word& sigma,
                           const word& sigma_prime) {
  if (!is_firing_sequence(n, sigma))
    throw std::invalid_argument("not a firing sequence: " + word_text(sigma));
  if (!is_firing_sequence(n, sigma_prime))
    throw std::invalid_argument("not a firing sequence: " +
                                word_text(sigma_prime));

  // Invariant: cert rewrites done.mu into sigma_prime.mu_prime, where done is
  // the consumed part of sigma and mu is what is left of sigma_prime. Letters
  // of sigma still present in mu are cancelled at their first occurrence, so
  // commutation never pushes a letter past its own copy.
  word done;
  word mu = sigma_prime;
  word mu_prime;
  adjacency_chain cert = identity_chain(sigma_prime);
  for (const std::string& t : sigma) {
    auto hit = std::find(mu.begin(), mu.end(), t);
    if (hit != mu.end()) {
      word mu1(mu.begin(), hit);
      word mu2(hit + 1, mu.end());
      cert = concat_chains(commute_in_impl(n, done, t, mu1, mu2), cert);
      mu = std::move(mu1);
      mu.insert(mu.end(), mu2.begin(), mu2.end());
    } else {
      cert = concat_chains(commute_out_impl(n, done, t, mu),
                           lift_with_suffix(std::move(cert), {t}));
      mu_prime.push_back(t);
    }
    done.push_back(t);
  }
  return {std::move(mu), std::move(mu_prime), std::move(cert)};
}

}  // namespace

binary_conflict_error::binary_conflict_error(conflict_witness w)
    : std::runtime_error("net not binary-conflict-free: " +
                         to_string(w.offending) + " in conflict at " +
                         to_string(w.at) + " (reached by " + word_text(w.path) +
                         ")"),
      witness_(std::move(w)) {}

adjacency_chain commute_out(const net& n, const word& sigma,
                            const std::string& t, const word& rho,
                            const search_budget& budget) {
  require_valid(n);
  require_binary_conflict_free(n, budget);
  return commute_out_impl(n, sigma, t, rho);
}

adjacency_chain swap_pair(const net& n, const word& sigma, const std::string& t,
                          const std::string& u, const search_budget& budget) {
  return commute_out(n, sigma, t, {u}, budget);
}

adjacency_chain commute_in(const net& n, const word& sigma, const std::string& t,
                           const word& rho1, const word& rho2,
                           const search_budget& budget) {
  require_valid(n);
  require_binary_conflict_free(n, budget);
  adjacency_chain chain = commute_in_impl(n, sigma, t, rho1, rho2);
  if (!is_firing_sequence(n, chain.finish))
    throw std::invalid_argument("not a firing sequence: " +
                                word_text(chain.finish));
  return chain;
}

diamond close_diamond(const net& n, const word& sigma, const word& sigma_prime,
                      const search_budget& budget) {
  require_valid(n);
  require_binary_conflict_free(n, budget);
  return close_diamond_impl(n, sigma, sigma_prime);
}

largest_result largest_fs_process(const net& n, std::size_t enum_bound,
                                  const search_budget& budget) {
  require_valid(n);
  require_binary_conflict_free(n, budget);
  largest_result out;
  std::vector<word> words = firing_sequences(n, enum_bound);
  for (const word& sigma : words) {
    diamond d = close_diamond_impl(n, out.rho, sigma);
    out.rho.insert(out.rho.end(), d.mu.begin(), d.mu.end());
    coverage_item item;
    item.sigma = sigma;
    item.sigma_ext = sigma;
    item.sigma_ext.insert(item.sigma_ext.end(), d.mu_prime.begin(),
                          d.mu_prime.end());
    item.rho_prefix = out.rho.size();
    item.chain = reversed_chain(d.chain);
    out.coverage.push_back(std::move(item));
  }
  for (const word& sigma : words) {
    if (sigma.size() < enum_bound) continue;
    marking end = fire_word(n, n.initial, sigma).reached;
    for (const auto& t : n.transitions) {
      step g;
      g.add(t);
      if (enabled(n, end, g)) {
        out.truncated = true;
        break;
      }
    }
    if (out.truncated) break;
  }
  return out;
}

bd_cover largest_bd_witness(const net& n, std::size_t enum_bound,
                            const search_budget& budget) {
  largest_result run = largest_fs_process(n, enum_bound, budget);
  bd_cover out;
  out.largest = process_of(n, run.rho);
  out.truncated = run.truncated;
  for (const gr_process& q : enumerate_processes(n, enum_bound)) {
    ++out.checked;
    if (!bd_le(n, q, out.largest)) out.all_below = false;
  }
  return out;
}

}  // namespace procnet
