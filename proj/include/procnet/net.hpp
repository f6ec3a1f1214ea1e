#pragma once

// Place/transition nets with weighted arcs, the step-based token game, and
// bounded exploration of firing sequences and reachable markings.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "procnet/multiset.hpp"

namespace procnet {

using marking = multiset<std::string>;
using step = multiset<std::string>;
using word = std::vector<std::string>;

struct net {
  std::string name;
  std::set<std::string> places;
  std::set<std::string> transitions;
  // Arc weights, keyed (source, target); only strictly positive weights stored.
  std::map<std::pair<std::string, std::string>, count_t> arcs;
  marking initial;

  count_t weight(const std::string& from, const std::string& to) const {
    auto it = arcs.find({from, to});
    return it == arcs.end() ? 0 : it->second;
  }

  bool operator==(const net&) const = default;
};

// Structural well-formedness: disjoint node sets, arcs between known nodes of
// opposite kinds, positive weights, marked places known, and every transition
// with a non-empty preset. Returns human-readable violations; empty means valid.
std::vector<std::string> validate(const net& n);
void require_valid(const net& n);  // throws std::invalid_argument on violation

multiset<std::string> preset(const net& n, const std::string& x);
multiset<std::string> postset(const net& n, const std::string& x);
// Multiset extension: sum of element presets weighted by multiplicity.
multiset<std::string> preset(const net& n, const multiset<std::string>& xs);
multiset<std::string> postset(const net& n, const multiset<std::string>& xs);

// A step fires when the summed preset fits the marking.
bool enabled(const net& n, const marking& m, const step& g);
marking fire_step(const net& n, const marking& m, const step& g);

struct fire_outcome {
  bool fired = false;            // whole word replayed
  marking reached;               // final marking when fired
  std::size_t failed_index = 0;  // first position that could not fire otherwise
};
fire_outcome fire_word(const net& n, const marking& m, const word& w);

bool is_firing_sequence(const net& n, const word& w);
// Markings before each position plus the final one (size |w| + 1).
std::vector<marking> replay(const net& n, const word& w);

std::string word_text(const word& w);  // space-separated, "(empty)" if empty

// All firing sequences of length <= max_len from the initial marking,
// in shortlex order (prefix-closed by construction).
std::vector<word> firing_sequences(const net& n, std::size_t max_len);

struct search_budget {
  std::size_t max_markings = 100000;
  std::size_t max_depth = 1000;
};

struct reach_set {
  // Discovery order (breadth-first, transitions in identifier order), each
  // marking with a shortest witness word reaching it.
  std::vector<std::pair<marking, word>> markings;
  bool complete = true;  // false when the budget cut the search short
};
reach_set reachable_markings(const net& n, const search_budget& budget = {});

}  // namespace procnet
