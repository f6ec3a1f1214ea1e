#pragma once

// The swapping transformation on processes: exchanging the outgoing arcs of
// two concurrent, equally-labeled places, the equivalence it generates, and
// the induced prefix-based order whose classes are the net's run semantics.

#include <optional>

#include "procnet/compat.hpp"
#include "procnet/process.hpp"

namespace procnet {

struct swap_move {
  int place_a = 0;
  int place_b = 0;
};

// Exchanges the consumers of the two places. Requires equal labels and
// causal incomparability (throws std::domain_error otherwise). place_a ==
// place_b is legal and yields the process unchanged.
gr_process apply_swap(const gr_process& p, const swap_move& move);

// All non-trivial legal moves (place_a < place_b).
std::vector<swap_move> swap_moves(const gr_process& p);

// One swap apart up to isomorphism. Reflexive for any process with at least
// one place (the identity swap qualifies).
bool one_step_equiv(const gr_process& p, const gr_process& q);

// Certificate for swap-closure equivalence: moves applied in order to start,
// then an isomorphism onto finish.
struct swap_chain {
  gr_process start, finish;
  std::vector<swap_move> moves;
  iso_witness final_iso;
};

std::optional<swap_chain> swap_star_equiv(const gr_process& p, const gr_process& q);
// Replays the moves (revalidating each) and checks the closing isomorphism;
// with the net given, every intermediate process is also validated.
bool verify_swap_chain(const net& n, const swap_chain& chain);

enum class bd_strategy {
  via_sequences,  // linearize both processes and compare the word preorder
  direct_search,  // search prefixes of q and extensions of p for a swap match
};

// p below q: some extension of p is swap-equivalent to a prefix of q.
bool bd_le(const net& n, const gr_process& p, const gr_process& q,
           bd_strategy strategy = bd_strategy::via_sequences);
bool bd_equiv(const net& n, const gr_process& p, const gr_process& q);

// Partitions the given processes into bd_equiv classes; each class lists
// indexes into the input, classes ordered by smallest member.
std::vector<std::vector<std::size_t>> bd_classes(const net& n,
                                                 const std::vector<gr_process>& ps);

}  // namespace procnet
