#pragma once

// Goltz-Reisig processes: acyclic occurrence nets labeled into a net, with
// every place produced and consumed at most once. Node identifiers are opaque
// ints, places and transitions in separate id spaces.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "procnet/net.hpp"

namespace procnet {

struct gr_process {
  std::map<int, std::string> place_label;       // occurrence place -> net place
  std::map<int, std::string> transition_label;  // occurrence transition -> net transition
  std::set<std::pair<int, int>> consume;        // (place, transition) arcs
  std::set<std::pair<int, int>> produce;        // (transition, place) arcs
  std::set<int> initial;                        // initial cut

  std::optional<int> producer_of(int place) const;
  std::optional<int> consumer_of(int place) const;
  std::vector<int> preset_of(int transition) const;   // sorted
  std::vector<int> postset_of(int transition) const;  // sorted

  bool operator==(const gr_process&) const = default;
};

// Checks every defining clause: arc endpoints exist, each place has at most
// one producer and one consumer, the flow is acyclic, the initial cut is
// exactly the producer-free places, labels name net nodes, the labeled image
// of the initial cut is the net's initial marking, and each transition's
// pre/postset maps onto the preset/postset of its label (counted with
// multiplicity). Returns violations; empty means valid.
std::vector<std::string> validate_process(const gr_process& p, const net& n);
void require_valid_process(const gr_process& p, const net& n);

// The process with no transitions: one place per token of the initial
// marking, ids 0,1,... assigned in place-identifier order.
gr_process empty_process(const net& n);

std::set<int> end_places(const gr_process& p);  // places without consumer
marking end_marking(const gr_process& p);       // their labeled image

// Strict causal order on nodes, precomputed from the arcs.
class causal_index {
 public:
  explicit causal_index(const gr_process& p);
  bool place_before(int p, int q) const;       // strict
  bool place_comparable(int p, int q) const;   // p before q or q before p
  bool trans_before(int t, int u) const;       // strict
  // Longest arc-path length from an initial place; an isomorphism invariant.
  int place_depth(int p) const;
  int trans_depth(int t) const;

 private:
  std::map<int, std::set<int>> place_succ_;  // strictly later places
  std::map<int, std::set<int>> trans_succ_;  // strictly later transitions
  std::map<int, int> place_depth_, trans_depth_;
};

// The sub-process spanned by a causally closed transition set: its places are
// the initial cut plus the postsets of kept transitions, arcs restricted.
// Throws std::invalid_argument if ts is not causally closed or unknown.
gr_process prefix_from_transitions(const gr_process& p, const std::set<int>& ts);

// Literal prefix relation on shared node ids (same initial cut, restricted
// arcs and labels).
bool is_prefix(const gr_process& smaller, const gr_process& larger);

// No transition of the net is enabled at the marking the process ends in.
bool is_maximal(const gr_process& p, const net& n);

struct iso_witness {
  std::map<int, int> place_map;
  std::map<int, int> transition_map;
};

// Label/arc/initial-cut preserving bijection, or nullopt. Decided through
// canonical forms; the returned witness is independently checkable.
std::optional<iso_witness> isomorphic(const gr_process& p, const gr_process& q);
bool check_iso(const gr_process& p, const gr_process& q, const iso_witness& w);

// Complete isomorphism invariant: equal strings iff isomorphic. Computed by
// iterated neighbourhood refinement with individualization backtracking.
std::string canonical_form(const gr_process& p);

// All processes of the net with at most max_transitions transitions, one
// representative per isomorphism class, in a deterministic order. Explores
// every token choice, deduplicating via canonical forms.
std::vector<gr_process> enumerate_processes(const net& n, std::size_t max_transitions);

// Like enumerate_processes but growing a given process; every result has
// base as a literal prefix. target_labels, when non-null, restricts the
// added transitions to exactly that label multiset.
std::vector<gr_process> enumerate_extensions(const net& n, const gr_process& base,
                                             std::size_t max_added,
                                             const multiset<std::string>* target_labels);

}  // namespace procnet
