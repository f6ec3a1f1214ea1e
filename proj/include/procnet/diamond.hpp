#pragma once

// Completing diamonds: commuting an enabled transition past an independent
// word with a transposition-chain certificate, joining any two firing
// sequences of a binary-conflict-free net, and folding every word or process
// up to a bound into a single covering run.
//
// Each operation first runs the bounded binary-conflict-free scan and refuses
// nets that fail it. The scan may be cut short by the budget, so enabledness
// of every two-element step is re-checked during construction as well; a
// certificate that comes back is sound regardless of the budget.

#include <stdexcept>

#include "procnet/conflict.hpp"
#include "procnet/process.hpp"
#include "procnet/seqequiv.hpp"

namespace procnet {

// Raised when the net has a binary conflict, found either by the upfront
// scan or when a commutation needs a two-element step that the marking
// refuses while both members fire individually.
class binary_conflict_error : public std::runtime_error {
 public:
  explicit binary_conflict_error(conflict_witness w);
  const conflict_witness& witness() const { return witness_; }

 private:
  conflict_witness witness_;
};

// Chain sigma.t.u -> sigma.u.t by the single transposition at |sigma|.
// Requires t != u and sigma.t, sigma.u to be firing sequences.
adjacency_chain swap_pair(const net& n, const word& sigma, const std::string& t,
                          const std::string& u,
                          const search_budget& budget = {});

// Chain sigma.t.rho -> sigma.rho.t, one transposition per letter of rho.
// Requires sigma.t and sigma.rho to be firing sequences and t not to occur
// in rho.
adjacency_chain commute_out(const net& n, const word& sigma,
                            const std::string& t, const word& rho,
                            const search_budget& budget = {});

// Chain sigma.t.rho1.rho2 -> sigma.rho1.t.rho2: commute_out over rho1 lifted
// with the untouched suffix rho2. Requires sigma.rho1.t.rho2 to be a firing
// sequence and t not to occur in rho1.
adjacency_chain commute_in(const net& n, const word& sigma, const std::string& t,
                           const word& rho1, const word& rho2,
                           const search_budget& budget = {});

// Extensions joining two firing sequences: sigma.mu and sigma_prime.mu_prime
// are transposition-equivalent, certified by chain (oriented from sigma.mu to
// sigma_prime.mu_prime). Matching letters are cancelled first, so no letter
// is ever commuted past its own copy.
struct diamond {
  word mu, mu_prime;
  adjacency_chain chain;
};
diamond close_diamond(const net& n, const word& sigma, const word& sigma_prime,
                      const search_budget& budget = {});

// How one enumerated word sits below the accumulated run: sigma extends to
// sigma_ext, and chain rewrites sigma_ext into the first rho_prefix letters
// of the run.
struct coverage_item {
  word sigma;
  word sigma_ext;
  std::size_t rho_prefix = 0;
  adjacency_chain chain;
};

struct largest_result {
  word rho;                             // run every enumerated word embeds into
  std::vector<coverage_item> coverage;  // per enumerated word, shortlex order
  bool truncated = false;  // the length bound cut the enumeration short
};

// Folds every firing sequence of length <= enum_bound into one run by
// repeatedly closing diamonds, so each enumerated word sits below the run in
// the word preorder.
largest_result largest_fs_process(const net& n, std::size_t enum_bound,
                                  const search_budget& budget = {});

// The process of the accumulated run, compared against every process with at
// most enum_bound transitions; all_below records whether each one sits below
// it in the swap-based order.
struct bd_cover {
  gr_process largest;
  std::size_t checked = 0;
  bool all_below = true;
  bool truncated = false;
};
bd_cover largest_bd_witness(const net& n, std::size_t enum_bound,
                            const search_budget& budget = {});

}  // namespace procnet
