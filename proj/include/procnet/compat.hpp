#pragma once

// Compatibility between processes and firing sequences: position witnesses,
// linearization sets, deterministic process construction from a word, and the
// prefix/extension matching constructions used by the order-preserving
// correspondence between word classes and process classes.

#include <optional>

#include "procnet/process.hpp"

namespace procnet {

struct pos_witness {
  std::map<int, std::size_t> at;  // occurrence transition -> word index
};

// A bijection pos with label(t) = sigma[pos(t)] and causal order implying
// index order, or nullopt when none exists.
std::optional<pos_witness> compatible(const gr_process& p, const word& sigma);

// All words compatible with p, i.e. its causal linear extensions; every word
// is replayed through the token game and a failure raises std::logic_error.
std::vector<word> linearizations(const net& n, const gr_process& p);

// One deterministic member of linearizations: repeatedly fire the smallest
// ready transition id. For a process built by process_of(sigma) this
// reproduces sigma itself.
word some_linearization(const gr_process& p);

// The process of a firing sequence, one transition per letter. Token
// selection is first-in-first-out: among end places carrying the needed
// label, the earliest-created one is consumed (initial places count as
// created first, in place-identifier order).
gr_process process_of(const net& n, const word& sigma);

// Grows p_small along the extra letters of sigma_big (which must extend
// sigma_small, a linearization of p_small); the result has p_small as a
// prefix and sigma_big among its linearizations.
gr_process extend_process_along(const net& n, const gr_process& p_small,
                                const word& sigma_small, const word& sigma_big);

// The prefix of p spanned by the transitions at indices < |sigma_prefix| of
// the position witness for sigma; sigma_prefix is among its linearizations.
gr_process process_prefix_for(const gr_process& p, const word& sigma,
                              const word& sigma_prefix);

// A linearization of p_big extending lin_small, obtained by appending the
// labels of the added transitions in causal order.
word linearize_extension(const gr_process& p_small, const gr_process& p_big,
                         const word& lin_small);

// For p_small a prefix of p_big and sigma a linearization of p_big: words
// lin_small <= sigma1 (equivalent by transpositions to) sigma2 <= sigma,
// where sigma2 cuts sigma after the last position used by p_small and
// sigma1 relinearizes that cut starting with lin_small.
struct prefix_down {
  word lin_small;
  word sigma1;
  word sigma2;
};
prefix_down match_prefix_down(const gr_process& p_small, const gr_process& p_big,
                              const word& sigma);

}  // namespace procnet
