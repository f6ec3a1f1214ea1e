#pragma once

// Small random nets for property sweeps: bounded size, every transition
// consuming something, and a corpus filter that keeps the number of firing
// sequences at desk scale.

#include <cstdint>
#include <random>

#include "procnet/net.hpp"

namespace procnet {

inline constexpr std::uint32_t default_corpus_seed = 124175;

struct random_net_options {
  std::size_t max_places = 4;
  std::size_t max_transitions = 4;
  count_t max_weight = 2;
  count_t max_tokens = 2;
  std::size_t word_len = 5;          // filter horizon
  std::size_t max_word_count = 40;   // redraw when |FS up to word_len| exceeds
};

// One structurally valid draw; the word-count filter is not applied here.
net random_net(std::mt19937& rng, const random_net_options& opts = {});

// count nets passing the word-count filter, deterministic for a given seed
// across platforms (no distribution objects involved).
std::vector<net> random_corpus(std::uint32_t seed, std::size_t count,
                               const random_net_options& opts = {});

}  // namespace procnet
