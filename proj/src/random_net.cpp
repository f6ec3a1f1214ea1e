#include "procnet/random_net.hpp"

namespace procnet {

namespace {

// mt19937 output is pinned by the standard; distributions are not, so draw
// by modulo to keep corpora identical across library implementations.
std::size_t pick(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng()) % (hi - lo + 1);
}

}  // namespace

net random_net(std::mt19937& rng, const random_net_options& opts) {
  net n;
  n.name = "random";
  std::size_t place_count = pick(rng, 1, opts.max_places);
  std::size_t trans_count = pick(rng, 1, opts.max_transitions);
  std::vector<std::string> places;
  for (std::size_t i = 0; i < place_count; ++i) {
    std::string id = "p" + std::to_string(i + 1);
    places.push_back(id);
    n.places.insert(id);
    count_t tokens =
        static_cast<count_t>(pick(rng, 0, static_cast<std::size_t>(opts.max_tokens)));
    n.initial.add(id, tokens);
  }
  for (std::size_t i = 0; i < trans_count; ++i) {
    std::string id = "t" + std::to_string(i + 1);
    n.transitions.insert(id);
    std::size_t mandatory = pick(rng, 0, place_count - 1);
    for (std::size_t k = 0; k < place_count; ++k) {
      bool take = k == mandatory || pick(rng, 0, 2) == 0;
      if (take) {
        count_t w = static_cast<count_t>(
            pick(rng, 1, static_cast<std::size_t>(opts.max_weight)));
        n.arcs[{places[k], id}] = w;
      }
    }
    for (std::size_t k = 0; k < place_count; ++k) {
      if (pick(rng, 0, 2) != 0) continue;
      count_t w = static_cast<count_t>(
          pick(rng, 1, static_cast<std::size_t>(opts.max_weight)));
      n.arcs[{id, places[k]}] = w;
    }
  }
  return n;
}

std::vector<net> random_corpus(std::uint32_t seed, std::size_t count,
                               const random_net_options& opts) {
  std::mt19937 rng(seed);
  std::vector<net> out;
  while (out.size() < count) {
    net n = random_net(rng, opts);
    if (firing_sequences(n, opts.word_len).size() > opts.max_word_count)
      continue;
    n.name = "random" + std::to_string(out.size() + 1);
    out.push_back(std::move(n));
  }
  return out;
}

}  // namespace procnet
