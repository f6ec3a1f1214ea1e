#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "procnet/diamond.hpp"

using namespace procnet;

namespace {

word w(std::initializer_list<const char*> letters) {
  word out;
  for (const char* l : letters) out.emplace_back(l);
  return out;
}

}  // namespace

TEST_CASE("swapping one pair") {
  auto l = testnets::loops_net();

  auto chain = swap_pair(l, {}, "a", "b");
  CHECK(chain.start == w({"a", "b"}));
  CHECK(chain.finish == w({"b", "a"}));
  REQUIRE(chain.steps.size() == 1);
  CHECK(chain.steps[0].pos == 0);
  CHECK(verify_chain(l, chain));

  auto shifted = swap_pair(l, w({"a"}), "a", "b");
  CHECK(shifted.start == w({"a", "a", "b"}));
  CHECK(shifted.finish == w({"a", "b", "a"}));
  REQUIRE(shifted.steps.size() == 1);
  CHECK(shifted.steps[0].pos == 1);
  CHECK(verify_chain(l, shifted));

  CHECK_THROWS_AS(swap_pair(l, {}, "a", "a"), std::invalid_argument);
  CHECK_THROWS_AS(swap_pair(l, {}, "a", "nosuch"), std::invalid_argument);
  CHECK_THROWS_AS(swap_pair(testnets::single_net(), w({"t"}), "t", "t"),
                  std::invalid_argument);
}

TEST_CASE("conflicted nets are refused up front") {
  auto n = testnets::contested_net();

  CHECK_THROWS_AS(swap_pair(n, {}, "a", "b"), binary_conflict_error);
  try {
    swap_pair(n, {}, "a", "b");
    FAIL("expected a binary conflict");
  } catch (const binary_conflict_error& e) {
    CHECK(e.witness().path == w({"a"}));
    CHECK(e.witness().offending == step{{"b", 1}, {"c", 1}});
    CHECK(std::string(e.what()).find("binary-conflict-free") != std::string::npos);
    CHECK(std::string(e.what()).find("b:1, c:1") != std::string::npos);
  }

  CHECK_THROWS_AS(commute_out(n, {}, "a", w({"b"})), binary_conflict_error);
  CHECK_THROWS_AS(close_diamond(n, w({"a"}), w({"b"})), binary_conflict_error);
  CHECK_THROWS_AS(largest_fs_process(n, 2), binary_conflict_error);
  CHECK_THROWS_AS(largest_bd_witness(n, 2), binary_conflict_error);
}

TEST_CASE("commuting a transition out") {
  auto l = testnets::loops_net();

  auto chain = commute_out(l, {}, "a", w({"b", "b"}));
  CHECK(chain.start == w({"a", "b", "b"}));
  CHECK(chain.finish == w({"b", "b", "a"}));
  CHECK(chain.steps.size() == 2);
  CHECK(verify_chain(l, chain));

  auto mid = commute_out(l, w({"b"}), "a", w({"b"}));
  CHECK(mid.start == w({"b", "a", "b"}));
  CHECK(mid.finish == w({"b", "b", "a"}));
  CHECK(chain.steps.size() == 2);
  CHECK(verify_chain(l, mid));

  auto trivial = commute_out(l, {}, "a", {});
  CHECK(trivial.start == w({"a"}));
  CHECK(trivial.finish == w({"a"}));
  CHECK(trivial.steps.empty());

  CHECK_THROWS_AS(commute_out(l, {}, "a", w({"b", "a"})), std::invalid_argument);
  CHECK_THROWS_AS(commute_out(l, {}, "nosuch", w({"b"})), std::invalid_argument);
  auto s = testnets::single_net();
  CHECK_THROWS_AS(commute_out(s, w({"t"}), "t", {}), std::invalid_argument);
}

TEST_CASE("commuting a transition in") {
  auto l = testnets::loops_net();

  auto chain = commute_in(l, {}, "a", w({"b"}), w({"b"}));
  CHECK(chain.start == w({"a", "b", "b"}));
  CHECK(chain.finish == w({"b", "a", "b"}));
  CHECK(chain.steps.size() == 1);
  CHECK(verify_chain(l, chain));

  auto full = commute_in(l, {}, "a", w({"b", "b"}), {});
  CHECK(full.start == w({"a", "b", "b"}));
  CHECK(full.finish == w({"b", "b", "a"}));
  CHECK(verify_chain(l, full));

  CHECK_THROWS_AS(commute_in(l, {}, "a", w({"a"}), {}), std::invalid_argument);
}

TEST_CASE("closing diamonds") {
  auto l = testnets::loops_net();

  auto d1 = close_diamond(l, w({"a"}), w({"b"}));
  CHECK(d1.mu == w({"b"}));
  CHECK(d1.mu_prime == w({"a"}));
  CHECK(d1.chain.start == w({"a", "b"}));
  CHECK(d1.chain.finish == w({"b", "a"}));
  CHECK(verify_chain(l, d1.chain));

  auto d2 = close_diamond(l, w({"a", "b"}), w({"b", "a"}));
  CHECK(d2.mu.empty());
  CHECK(d2.mu_prime.empty());
  CHECK(verify_chain(l, d2.chain));

  auto d3 = close_diamond(l, {}, w({"a", "b"}));
  CHECK(d3.mu == w({"a", "b"}));
  CHECK(d3.mu_prime.empty());
  CHECK(d3.chain.steps.empty());

  auto d4 = close_diamond(l, w({"a", "b"}), {});
  CHECK(d4.mu.empty());
  CHECK(d4.mu_prime == w({"a", "b"}));
  CHECK(d4.chain.steps.empty());

  auto d5 = close_diamond(l, w({"a", "a"}), w({"b"}));
  CHECK(d5.mu == w({"b"}));
  CHECK(d5.mu_prime == w({"a", "a"}));
  CHECK(d5.chain.start == w({"a", "a", "b"}));
  CHECK(d5.chain.finish == w({"b", "a", "a"}));
  CHECK(verify_chain(l, d5.chain));

  // shared letters cancel first-in-first-out instead of being commuted
  auto d6 = close_diamond(l, w({"a", "a", "b"}), w({"a", "b", "a"}));
  CHECK(d6.mu.empty());
  CHECK(d6.mu_prime.empty());
  CHECK(verify_chain(l, d6.chain));
  CHECK(d6.chain.start == w({"a", "a", "b"}));
  CHECK(d6.chain.finish == w({"a", "b", "a"}));

  CHECK_THROWS_AS(close_diamond(l, w({"nosuch"}), {}), std::invalid_argument);
  auto s = testnets::single_net();
  CHECK_THROWS_AS(close_diamond(s, w({"t", "t"}), {}), std::invalid_argument);
}

TEST_CASE("diamond closures join every pair of sequences") {
  auto l = testnets::loops_net();
  auto words = firing_sequences(l, 3);
  for (const auto& sigma : words)
    for (const auto& rho : words) {
      auto d = close_diamond(l, sigma, rho);
      auto left = sigma;
      left.insert(left.end(), d.mu.begin(), d.mu.end());
      auto right = rho;
      right.insert(right.end(), d.mu_prime.begin(), d.mu_prime.end());
      CHECK(d.chain.start == left);
      CHECK(d.chain.finish == right);
      CHECK(verify_chain(l, d.chain));
    }
}

TEST_CASE("largest run covers the enumerated sequences") {
  auto l = testnets::loops_net();
  auto run = largest_fs_process(l, 2);
  CHECK(run.rho == w({"a", "b", "a", "b"}));
  CHECK(run.truncated);
  REQUIRE(run.coverage.size() == 7);
  CHECK(run.coverage[0].sigma.empty());
  CHECK(run.coverage[1].sigma == w({"a"}));
  CHECK(run.coverage.back().sigma == w({"b", "b"}));

  std::size_t last_prefix = 0;
  for (const auto& item : run.coverage) {
    // sigma extends to sigma_ext, whose chain lands on a prefix of the run
    CHECK(item.sigma_ext.size() >= item.sigma.size());
    CHECK(std::equal(item.sigma.begin(), item.sigma.end(),
                     item.sigma_ext.begin()));
    CHECK(item.chain.start == item.sigma_ext);
    CHECK(item.rho_prefix >= last_prefix);
    last_prefix = item.rho_prefix;
    word prefix(run.rho.begin(), run.rho.begin() + item.rho_prefix);
    CHECK(item.chain.finish == prefix);
    CHECK(verify_chain(l, item.chain));
    CHECK(fs_le(l, item.sigma, run.rho));
  }

  auto s = testnets::single_net();
  auto tiny = largest_fs_process(s, 5);
  CHECK(tiny.rho == w({"t"}));
  CHECK(!tiny.truncated);
  CHECK(tiny.coverage.size() == 2);

  auto d = testnets::double_net();
  auto dd = largest_fs_process(d, 3);
  CHECK(dd.rho == w({"t"}));
  CHECK(!dd.truncated);
}

TEST_CASE("largest run beats every small process") {
  auto l = testnets::loops_net();
  auto cover = largest_bd_witness(l, 2);
  CHECK(cover.all_below);
  CHECK(cover.checked == 6);
  CHECK(cover.truncated);
  CHECK(validate_process(cover.largest, l).empty());
  CHECK(cover.largest.transition_label.size() == 4);

  auto s = testnets::single_net();
  auto tiny = largest_bd_witness(s, 3);
  CHECK(tiny.all_below);
  CHECK(tiny.checked == 2);
  CHECK(!tiny.truncated);
}

TEST_CASE("bounded conflict scans still let constructions run") {
  auto s = testnets::single_net();
  // with this budget the scan is cut short; the operation proceeds anyway
  auto chain = commute_out(s, {}, "t", {}, {.max_markings = 1});
  CHECK(chain.start == w({"t"}));
  CHECK(chain.steps.empty());

  auto run = largest_fs_process(s, 5, {.max_markings = 1});
  CHECK(run.rho == w({"t"}));
}
