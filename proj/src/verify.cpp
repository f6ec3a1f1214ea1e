#include "procnet/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "procnet/compat.hpp"
#include "procnet/seqequiv.hpp"
#include "procnet/swapping.hpp"

namespace procnet {

namespace {

constexpr std::size_t word_cap = 120;

struct corpus {
  std::vector<word> words;
  std::vector<gr_process> procs;
  std::vector<std::string> canon;
  word_table table;
  std::vector<std::vector<char>> le;  // word order matrix
  bool capped = false;
};

corpus build_corpus(const net& n, const verify_options& opts) {
  corpus c;
  c.words = firing_sequences(n, opts.word_len);
  if (c.words.size() > word_cap) {
    c.words.resize(word_cap);
    c.capped = true;
  }
  c.table = build_word_table(n, opts.word_len);
  c.procs.reserve(c.words.size());
  c.canon.reserve(c.words.size());
  for (const word& w : c.words) {
    c.procs.push_back(process_of(n, w));
    c.canon.push_back(canonical_form(c.procs.back()));
  }
  c.le.assign(c.words.size(), std::vector<char>(c.words.size(), 0));
  for (std::size_t j = 0; j < c.words.size(); ++j) {
    std::set<word> below = fs_downset(n, c.words[j]);
    for (std::size_t i = 0; i < c.words.size(); ++i)
      c.le[i][j] = below.count(c.words[i]) ? 1 : 0;
  }
  return c;
}

bool word_prefix(const word& shorter, const word& longer) {
  return shorter.size() <= longer.size() &&
         std::equal(shorter.begin(), shorter.end(), longer.begin());
}

std::string pair_text(const word& a, const word& b) {
  return word_text(a) + " / " + word_text(b);
}

check_outcome check_round_trip(const net& n, const corpus& c) {
  check_outcome out{"round-trip", true, c.capped, ""};
  std::vector<marking> finals;
  for (std::size_t i = 0; i < c.words.size(); ++i) {
    const word& w = c.words[i];
    const gr_process& p = c.procs[i];
    std::vector<std::string> bad = validate_process(p, n);
    if (!bad.empty()) {
      out.passed = false;
      out.detail = word_text(w) + ": " + bad.front();
      return out;
    }
    if (!compatible(p, w)) {
      out.passed = false;
      out.detail = word_text(w) + ": word not among its process linearizations";
      return out;
    }
    if (some_linearization(p) != w) {
      out.passed = false;
      out.detail = word_text(w) + ": canonical linearization does not reproduce it";
      return out;
    }
    if (end_marking(p) != fire_word(n, n.initial, w).reached) {
      out.passed = false;
      out.detail = word_text(w) + ": end marking mismatch";
      return out;
    }
  }
  out.detail = std::to_string(c.words.size()) + " words";
  return out;
}

check_outcome check_class_match(const net& n, const corpus& c) {
  check_outcome out{"word-classes-vs-process-classes", true, c.capped, ""};
  // Union swap-equivalent canonical forms; the first chain found is replayed.
  std::map<std::string, std::size_t> rep;  // canonical form -> proc index
  std::vector<std::size_t> rep_index;
  std::vector<std::size_t> proc_class(c.words.size());
  for (std::size_t i = 0; i < c.words.size(); ++i) {
    auto [it, fresh] = rep.emplace(c.canon[i], rep_index.size());
    if (fresh) rep_index.push_back(i);
    proc_class[i] = it->second;
  }
  std::vector<std::size_t> parent(rep_index.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  bool replayed = false;
  for (std::size_t a = 0; a < rep_index.size(); ++a)
    for (std::size_t b = a + 1; b < rep_index.size(); ++b) {
      if (find(a) == find(b)) continue;
      const gr_process& p = c.procs[rep_index[a]];
      const gr_process& q = c.procs[rep_index[b]];
      if (auto chain = swap_star_equiv(p, q)) {
        if (!replayed) {
          replayed = true;
          if (!verify_swap_chain(n, *chain)) {
            out.passed = false;
            out.detail = "swap chain failed to replay for " +
                         pair_text(c.words[rep_index[a]], c.words[rep_index[b]]);
            return out;
          }
        }
        parent[find(a)] = find(b);
      }
    }
  for (std::size_t i = 0; i < c.words.size(); ++i)
    for (std::size_t j = i + 1; j < c.words.size(); ++j) {
      bool words_same =
          c.table.cls[c.table.index.at(c.words[i])] ==
          c.table.cls[c.table.index.at(c.words[j])];
      bool procs_same = find(proc_class[i]) == find(proc_class[j]);
      if (words_same != procs_same) {
        out.passed = false;
        out.detail = pair_text(c.words[i], c.words[j]) +
                     (words_same ? ": equivalent words, inequivalent processes"
                                 : ": inequivalent words, equivalent processes");
        return out;
      }
    }
  out.detail = std::to_string(c.table.class_count) + " word classes";
  return out;
}

check_outcome check_order_match(const net& n, const corpus& c,
                                const verify_options& opts) {
  check_outcome out{"word-order-vs-process-order", true, c.capped, ""};
  // bd_le orders processes through chosen linearizations; batching the
  // downsets of the targets computes the same relation one column at a time.
  std::vector<word> lin;
  lin.reserve(c.procs.size());
  for (const gr_process& p : c.procs) lin.push_back(some_linearization(p));
  for (std::size_t j = 0; j < c.words.size(); ++j) {
    std::set<word> below = fs_downset(n, lin[j]);
    for (std::size_t i = 0; i < c.words.size(); ++i) {
      bool bd = below.count(lin[i]) != 0;
      if (bd != static_cast<bool>(c.le[i][j])) {
        out.passed = false;
        out.detail = pair_text(c.words[i], c.words[j]) +
                     ": word order and process order disagree";
        return out;
      }
    }
  }
  std::set<std::pair<std::string, std::string>> seen;
  std::size_t direct_checked = 0;
  for (std::size_t i = 0; i < c.words.size(); ++i)
    for (std::size_t j = 0; j < c.words.size(); ++j) {
      if (c.words[i].size() > opts.direct_len ||
          c.words[j].size() > opts.direct_len)
        continue;
      if (!seen.emplace(c.canon[i], c.canon[j]).second) continue;
      bool direct = bd_le(n, c.procs[i], c.procs[j], bd_strategy::direct_search);
      ++direct_checked;
      if (direct != static_cast<bool>(c.le[i][j])) {
        out.passed = false;
        out.detail = pair_text(c.words[i], c.words[j]) +
                     ": direct prefix/extension search disagrees";
        return out;
      }
    }
  out.detail = std::to_string(direct_checked) + " direct comparisons";
  return out;
}

check_outcome check_preorder_laws(const net& n, const corpus& c) {
  check_outcome out{"preorder-laws", true, c.capped, ""};
  const std::size_t count = c.words.size();
  for (std::size_t i = 0; i < count; ++i)
    if (!c.le[i][i]) {
      out.passed = false;
      out.detail = word_text(c.words[i]) + ": not below itself";
      return out;
    }
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (!c.le[i][j]) continue;
      for (std::size_t k = 0; k < count; ++k)
        if (c.le[j][k] && !c.le[i][k]) {
          out.passed = false;
          out.detail = word_text(c.words[i]) + " <= " + word_text(c.words[j]) +
                       " <= " + word_text(c.words[k]) + " but not transitively";
          return out;
        }
    }
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      bool kernel = c.le[i][j] && c.le[j][i];
      bool equiv = seq_star_equiv(n, c.words[i], c.words[j]).has_value();
      if (kernel != equiv) {
        out.passed = false;
        out.detail = pair_text(c.words[i], c.words[j]) +
                     ": kernel and transposition closure disagree";
        return out;
      }
    }
  out.detail = std::to_string(count) + " words";
  return out;
}

check_outcome check_constructions(const net& n, const corpus& c) {
  check_outcome out{"prefix-extension-constructions", true, c.capped, ""};
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < c.words.size(); ++i)
    classes[c.table.cls[c.table.index.at(c.words[i])]].push_back(i);
  auto fail = [&](const std::string& detail) {
    out.passed = false;
    out.detail = detail;
  };
  for (std::size_t i = 0; i < c.words.size() && out.passed; ++i) {
    const word& sigma = c.words[i];
    const gr_process& p = c.procs[i];
    for (std::size_t k = 0; k <= sigma.size() && out.passed; ++k) {
      word prefix(sigma.begin(), sigma.begin() + k);
      gr_process pre = process_prefix_for(p, sigma, prefix);
      if (!validate_process(pre, n).empty() || !is_prefix(pre, p) ||
          !compatible(pre, prefix)) {
        fail("prefix of process for " + word_text(sigma) + " at " +
             std::to_string(k) + " malformed");
        break;
      }
      gr_process ext = extend_process_along(n, pre, prefix, sigma);
      if (!validate_process(ext, n).empty() || !is_prefix(pre, ext) ||
          !compatible(ext, sigma)) {
        fail("extension along " + word_text(sigma) + " at " +
             std::to_string(k) + " malformed");
        break;
      }
      word lin_small = some_linearization(pre);
      word lin = linearize_extension(pre, p, lin_small);
      if (!word_prefix(lin_small, lin) || !compatible(p, lin)) {
        fail("relinearization of " + word_text(sigma) + " at " +
             std::to_string(k) + " malformed");
        break;
      }
      prefix_down pd = match_prefix_down(pre, p, sigma);
      if (!word_prefix(pd.sigma2, sigma) ||
          !word_prefix(pd.lin_small, pd.sigma1) ||
          !seq_star_equiv(n, pd.sigma1, pd.sigma2)) {
        fail("prefix matching for " + word_text(sigma) + " at " +
             std::to_string(k) + " malformed");
        break;
      }
      std::size_t used = 0;
      for (std::size_t m : classes[c.table.cls[c.table.index.at(prefix)]]) {
        if (++used > 2) break;
        const word& variant = c.words[m];
        word reordered = reorder_after_prefix(n, variant, prefix, sigma);
        if (!word_prefix(variant, reordered) ||
            !is_firing_sequence(n, reordered) ||
            !seq_star_equiv(n, reordered, sigma)) {
          fail("reordering after " + word_text(prefix) + " via " +
               word_text(variant) + " malformed");
          break;
        }
      }
      if (!out.passed) break;
      used = 0;
      for (std::size_t m : classes[c.table.cls[c.table.index.at(sigma)]]) {
        if (++used > 2) break;
        const word& rho = c.words[m];
        auto [sigma_prime, rho_prime] = localize_swaps(n, prefix, sigma, rho);
        if (!word_prefix(prefix, sigma_prime) ||
            !word_prefix(sigma_prime, sigma) || !word_prefix(rho_prime, rho) ||
            !seq_star_equiv(n, sigma_prime, rho_prime)) {
          fail("localization below " + word_text(sigma) + " at " +
               std::to_string(k) + " malformed");
          break;
        }
      }
    }
  }
  if (out.passed) out.detail = std::to_string(c.words.size()) + " words";
  return out;
}

check_outcome check_covering_run(const net& n, const verify_options& opts) {
  check_outcome out{"covering-run", true, false, ""};
  try {
    largest_result r = largest_fs_process(n, opts.enum_bound, opts.budget);
    out.bounded = r.truncated;
    std::size_t last_prefix = 0;
    for (const coverage_item& item : r.coverage) {
      if (!word_prefix(item.sigma, item.sigma_ext) ||
          item.chain.start != item.sigma_ext ||
          item.rho_prefix < last_prefix || item.rho_prefix > r.rho.size() ||
          item.chain.finish !=
              word(r.rho.begin(), r.rho.begin() + item.rho_prefix)) {
        out.passed = false;
        out.detail = "coverage of " + word_text(item.sigma) + " malformed";
        return out;
      }
      last_prefix = item.rho_prefix;
      if (!verify_chain(n, item.chain)) {
        out.passed = false;
        out.detail = "coverage chain for " + word_text(item.sigma) +
                     " failed to replay";
        return out;
      }
      // The verified chain is itself the word-order witness; recompute from
      // scratch only while the closure sizes stay reasonable.
      if (r.rho.size() <= 12 && !fs_le(n, item.sigma, r.rho)) {
        out.passed = false;
        out.detail = word_text(item.sigma) + " not below the covering run";
        return out;
      }
    }
    out.detail = "run " + word_text(r.rho) + " covers " +
                 std::to_string(r.coverage.size()) + " words";
  } catch (const binary_conflict_error& e) {
    const conflict_witness& w = e.witness();
    fire_outcome path = fire_word(n, n.initial, w.path);
    if (w.offending.size() != 2 || !path.fired || path.reached != w.at ||
        !is_conflict(n, w.at, w.offending)) {
      out.passed = false;
      out.detail = "binary conflict witness does not replay";
      return out;
    }
    conflict_report scan = binary_conflict_free(n, opts.budget);
    if (scan.result == verdict::holds) {
      out.passed = false;
      out.detail = "construction found a conflict the scan missed";
      return out;
    }
    out.detail = "refused: " + to_string(w.offending) + " in conflict after " +
                 word_text(w.path);
  }
  return out;
}

check_outcome check_structural_collapse(const net& n,
                                        const verify_options& opts) {
  check_outcome out{"structural-collapse", true, false, ""};
  conflict_report s = structural_conflict_net(n, opts.budget);
  if (s.result == verdict::bounded) out.bounded = true;
  if (s.result != verdict::holds) {
    out.detail = "not a structural conflict net; nothing to collapse";
    return out;
  }
  conflict_report binary = binary_conflict_free(n, opts.budget);
  conflict_report full = conflict_free(n, opts.budget, opts.mult_cap);
  if (binary.result == verdict::bounded || full.result == verdict::bounded) {
    out.bounded = true;
    out.detail = "conflict scans budget-bounded; collapse not decided";
    return out;
  }
  if ((binary.result == verdict::holds) != (full.result == verdict::holds)) {
    out.passed = false;
    out.detail = "binary verdict " + std::string(binary.result == verdict::holds
                     ? "holds" : "fails") + " but full verdict differs";
    return out;
  }
  out.detail = binary.result == verdict::holds
                   ? "conflict-free both ways"
                   : "conflicts found both ways";
  return out;
}

}  // namespace

std::vector<check_outcome> verify_net(const net& n,
                                      const verify_options& opts) {
  require_valid(n);
  corpus c = build_corpus(n, opts);
  std::vector<check_outcome> out;
  out.push_back(check_round_trip(n, c));
  out.push_back(check_class_match(n, c));
  out.push_back(check_order_match(n, c, opts));
  out.push_back(check_preorder_laws(n, c));
  out.push_back(check_constructions(n, c));
  out.push_back(check_covering_run(n, opts));
  out.push_back(check_structural_collapse(n, opts));
  return out;
}

bool all_passed(const std::vector<check_outcome>& outcomes) {
  for (const auto& o : outcomes)
    if (!o.passed) return false;
  return true;
}

}  // namespace procnet
