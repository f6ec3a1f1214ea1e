#pragma once

// Equivalence of firing sequences up to transpositions of concurrently
// enabled neighbours, the induced prefix preorder, and replayable
// transposition-chain certificates.

#include <optional>
#include <set>
#include <utility>

#include "procnet/net.hpp"

namespace procnet {

struct transposition {
  std::size_t pos = 0;        // exchanged with pos + 1
  std::string first, second;  // letters at pos/pos+1 before the exchange
  marking enabling;           // marking before pos; enables the pair as a step
};

// start rewrites to finish by the listed transpositions, each justified by a
// concurrently enabled two-element step.
struct adjacency_chain {
  word start, finish;
  std::vector<transposition> steps;
};

adjacency_chain identity_chain(const word& w);
// Appends suffix to every word in the chain; step annotations are unaffected.
adjacency_chain lift_with_suffix(adjacency_chain chain, const word& suffix);
// Joins two chains with a.finish == b.start.
adjacency_chain concat_chains(adjacency_chain a, const adjacency_chain& b);
adjacency_chain reversed_chain(const adjacency_chain& chain);
// Full independent replay: start is a firing sequence, every step transposes
// the recorded letters, its recorded marking is correct and enables the pair,
// and the rewrite ends in finish.
bool verify_chain(const net& n, const adjacency_chain& chain);

// One transposition apart: the words share a prefix, then exchange two
// letters enabled together as a step, then share the tail. The first word
// must be a firing sequence; the clauses decide the second.
bool adjacent(const net& n, const word& sigma, const word& rho);

// Transposition-chain equivalence, with certificate. Breadth-first search
// over transposition moves, so the chain is as short as possible.
std::optional<adjacency_chain> seq_star_equiv(const net& n, const word& sigma,
                                              const word& rho);

// sigma is below rho when some extension of sigma is transposition-equivalent
// to a prefix of rho. Both arguments must be firing sequences.
bool fs_le(const net& n, const word& sigma, const word& rho);
// Kernel of fs_le.
bool fs_equiv(const net& n, const word& sigma, const word& rho);
// Every firing sequence below rho: the prefixes of the members of the
// transposition classes of rho's prefixes. Finite, since nothing below rho
// is longer than rho. One closure per prefix, so bulk fs_le queries against
// a fixed rho should go through here.
std::set<word> fs_downset(const net& n, const word& rho);

// Words equal, or of equal length >= n agreeing on the first n letters.
bool prefix_agree(const word& sigma, const word& rho, std::size_t n);

// For sigma1 equivalent to sigma2 and sigma2 a prefix of sigma3: transports
// the tail, returning sigma1 + (sigma3 minus sigma2), again a firing
// sequence equivalent to sigma3.
word reorder_after_prefix(const net& n, const word& sigma1, const word& sigma2,
                          const word& sigma3);

// For prefix <= rho_dagger equivalent to rho: cuts both words after the last
// position any transposition in the witnessing chain touches (at least
// |prefix|), giving equivalent prefixes (sigma_prime, rho_prime) with
// prefix <= sigma_prime <= rho_dagger and rho_prime <= rho.
std::pair<word, word> localize_swaps(const net& n, const word& prefix,
                                     const word& rho_dagger, const word& rho);

// Precomputed equivalence classes of all firing sequences up to a length:
// words in shortlex order, index lookup, and a class id per word.
struct word_table {
  std::vector<word> words;
  std::map<word, std::size_t> index;
  std::vector<std::size_t> cls;
  std::size_t class_count = 0;
};
word_table build_word_table(const net& n, std::size_t max_len);

}  // namespace procnet
