// procnet: analyses of place/transition nets, their processes, and the
// equivalences identifying runs up to concurrency.
//
// Exit codes: 0 success or property holds, 1 property fails (witness
// printed), 2 parse or validation error, 3 search budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "procnet/compat.hpp"
#include "procnet/conflict.hpp"
#include "procnet/diamond.hpp"
#include "procnet/net.hpp"
#include "procnet/process.hpp"
#include "procnet/random_net.hpp"
#include "procnet/seqequiv.hpp"
#include "procnet/swapping.hpp"
#include "procnet/textio.hpp"
#include "procnet/verify.hpp"

namespace {

using namespace procnet;

struct cli_options {
  std::string net_path;
  std::vector<std::string> word_args;
  std::vector<std::string> files;
  std::string left_text, right_text;
  std::size_t max_len = 4;
  std::size_t marking_budget = 100000;
  count_t mult_cap = 4;
  std::size_t random_count = 0;
  bool want_certificate = false;
  bool want_json = false;
  bool direct = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, 0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

net load_net(const cli_options& o) { return parse_net(slurp(o.net_path)); }

gr_process load_process(const std::string& path, const net& n) {
  gr_process p = process_from_json(nlohmann::json::parse(slurp(path)));
  require_valid_process(p, n);
  return p;
}

search_budget budget_of(const cli_options& o) {
  return {o.marking_budget, 1000};
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

word checked_word(const net& n, const std::string& text) {
  word w = parse_word(text);
  fire_outcome r = fire_word(n, n.initial, w);
  if (!r.fired)
    throw std::invalid_argument("not a firing sequence: " + word_text(w) +
                                " (stuck at index " +
                                std::to_string(r.failed_index) + ")");
  return w;
}

void print_witnesses(const conflict_report& report) {
  for (const auto& w : report.witnesses)
    std::cout << "witness: " << to_string(w.offending) << " at "
              << to_string(w.at) << " (reached by " << word_text(w.path)
              << ")\n";
}

int report_code(std::initializer_list<verdict> verdicts) {
  int code = 0;
  for (verdict v : verdicts) {
    if (v == verdict::fails) return 1;
    if (v == verdict::bounded) code = 3;
  }
  return code;
}

int run_validate(const cli_options& o) {
  net n = load_net(o);
  if (o.want_json) {
    emit({{"name", n.name},
          {"places", n.places.size()},
          {"transitions", n.transitions.size()},
          {"arcs", n.arcs.size()},
          {"initial", json_of(n.initial)}});
  } else {
    std::cout << "net " << n.name << ": valid (" << n.places.size()
              << " places, " << n.transitions.size() << " transitions, "
              << n.arcs.size() << " arcs)\n";
  }
  return 0;
}

int run_fire(const cli_options& o) {
  net n = load_net(o);
  fire_outcome r = fire_word(n, n.initial, o.word_args);
  if (o.want_json) {
    emit({{"fired", r.fired},
          {"marking", json_of(r.reached)},
          {"failed_index", r.failed_index}});
  } else if (r.fired) {
    std::cout << "reached " << to_string(r.reached) << "\n";
  } else {
    std::cout << "stuck at index " << r.failed_index << " in "
              << to_string(r.reached) << "\n";
  }
  return r.fired ? 0 : 1;
}

int run_enum_fs(const cli_options& o) {
  net n = load_net(o);
  std::vector<word> words = firing_sequences(n, o.max_len);
  if (o.want_json) {
    nlohmann::json out = nlohmann::json::array();
    for (const word& w : words) out.push_back(json_of(w));
    emit({{"words", out}});
  } else {
    for (const word& w : words) std::cout << word_text(w) << "\n";
  }
  return 0;
}

int run_lin(const cli_options& o) {
  net n = load_net(o);
  gr_process p = load_process(o.files.at(0), n);
  std::vector<word> words = linearizations(n, p);
  if (o.want_json) {
    nlohmann::json out = nlohmann::json::array();
    for (const word& w : words) out.push_back(json_of(w));
    emit({{"linearizations", out}});
  } else {
    for (const word& w : words) std::cout << word_text(w) << "\n";
  }
  return 0;
}

int run_process_of(const cli_options& o) {
  net n = load_net(o);
  fire_outcome r = fire_word(n, n.initial, o.word_args);
  if (!r.fired) {
    std::cout << "not a firing sequence: stuck at index " << r.failed_index
              << "\n";
    return 1;
  }
  emit(json_of(process_of(n, o.word_args)));
  return 0;
}

int run_equiv_seq(const cli_options& o) {
  net n = load_net(o);
  word left = checked_word(n, o.left_text);
  word right = checked_word(n, o.right_text);
  auto chain = seq_star_equiv(n, left, right);
  if (o.want_json) {
    nlohmann::json out = {{"equivalent", chain.has_value()}};
    if (chain && o.want_certificate) out["chain"] = json_of(*chain);
    emit(out);
  } else if (chain) {
    std::cout << "equivalent (" << chain->steps.size() << " transpositions)\n";
    if (o.want_certificate) emit(json_of(*chain));
  } else {
    std::cout << "not equivalent\n";
  }
  return chain ? 0 : 1;
}

int run_le_seq(const cli_options& o) {
  net n = load_net(o);
  word left = checked_word(n, o.left_text);
  word right = checked_word(n, o.right_text);
  bool below = fs_le(n, left, right);
  if (o.want_json)
    emit({{"below", below}});
  else
    std::cout << (below ? "below" : "not below") << "\n";
  return below ? 0 : 1;
}

int run_equiv_proc(const cli_options& o) {
  net n = load_net(o);
  gr_process p = load_process(o.files.at(0), n);
  gr_process q = load_process(o.files.at(1), n);
  auto chain = swap_star_equiv(p, q);
  if (o.want_json) {
    nlohmann::json out = {{"equivalent", chain.has_value()}};
    if (chain && o.want_certificate) out["chain"] = json_of(*chain);
    emit(out);
  } else if (chain) {
    std::cout << "equivalent (" << chain->moves.size() << " swaps)\n";
    if (o.want_certificate) emit(json_of(*chain));
  } else {
    std::cout << "not equivalent\n";
  }
  return chain ? 0 : 1;
}

int run_le_proc(const cli_options& o) {
  net n = load_net(o);
  gr_process p = load_process(o.files.at(0), n);
  gr_process q = load_process(o.files.at(1), n);
  bool below = bd_le(n, p, q,
                     o.direct ? bd_strategy::direct_search
                              : bd_strategy::via_sequences);
  if (o.want_json)
    emit({{"below", below}});
  else
    std::cout << (below ? "below" : "not below") << "\n";
  return below ? 0 : 1;
}

int run_conflicts(const cli_options& o) {
  net n = load_net(o);
  conflict_report binary = binary_conflict_free(n, budget_of(o));
  conflict_report general = conflict_free(n, budget_of(o), o.mult_cap);
  if (o.want_json) {
    emit({{"binary", json_of(binary)}, {"general", json_of(general)}});
  } else {
    std::cout << "binary: " << verdict_text(binary.result) << "\n";
    print_witnesses(binary);
    std::cout << "general: " << verdict_text(general.result) << "\n";
    print_witnesses(general);
  }
  return report_code({binary.result, general.result});
}

int run_structural(const cli_options& o) {
  net n = load_net(o);
  conflict_report report = structural_conflict_net(n, budget_of(o));
  if (o.want_json) {
    emit({{"structural", json_of(report)}});
  } else {
    std::cout << "structural: " << verdict_text(report.result) << "\n";
    print_witnesses(report);
  }
  return report_code({report.result});
}

int run_largest(const cli_options& o) {
  net n = load_net(o);
  try {
    largest_result r = largest_fs_process(n, o.max_len, budget_of(o));
    gr_process p = process_of(n, r.rho);
    if (o.want_json) {
      emit({{"witness", json_of(r)},
            {"process", json_of(p)},
            {"dot", to_dot(p)}});
    } else {
      std::cout << "run: " << word_text(r.rho) << "\n";
      std::cout << "covers: " << r.coverage.size() << " words\n";
      std::cout << "truncated: " << (r.truncated ? "yes" : "no") << "\n";
      if (o.want_certificate) emit(json_of(r));
    }
    return 0;
  } catch (const binary_conflict_error& e) {
    if (o.want_json)
      emit({{"error", "binary conflict"}, {"witness", json_of(e.witness())}});
    else
      std::cout << e.what() << "\n";
    return 1;
  }
}

int run_export_dot(const cli_options& o) {
  net n = load_net(o);
  if (o.files.empty())
    std::cout << to_dot(n);
  else
    std::cout << to_dot(load_process(o.files.at(0), n));
  return 0;
}

std::uint32_t corpus_seed() {
  const char* env = std::getenv("PROCNET_SEED");
  if (!env || !*env) return default_corpus_seed;
  char* end = nullptr;
  unsigned long value = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0')
    throw std::invalid_argument("PROCNET_SEED must be an unsigned integer");
  return static_cast<std::uint32_t>(value);
}

int run_verify(const cli_options& o) {
  std::vector<net> nets;
  if (!o.net_path.empty()) nets.push_back(load_net(o));
  if (o.random_count > 0) {
    for (net& n : random_corpus(corpus_seed(), o.random_count))
      nets.push_back(std::move(n));
  }
  if (nets.empty())
    throw std::invalid_argument("verify needs --net and/or --random N");
  verify_options vo;
  vo.word_len = o.max_len;
  vo.enum_bound = o.max_len;
  vo.mult_cap = o.mult_cap;
  vo.budget = budget_of(o);
  bool any_failed = false;
  nlohmann::json all = nlohmann::json::array();
  for (const net& n : nets) {
    std::vector<check_outcome> outcomes = verify_net(n, vo);
    if (o.want_json) {
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : outcomes)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"bounded", c.bounded},
                          {"detail", c.detail}});
      all.push_back({{"net", n.name}, {"checks", checks}});
    } else {
      std::cout << "net " << n.name << "\n";
      for (const auto& c : outcomes) {
        std::cout << "  " << c.name << ": "
                  << (c.passed ? (c.bounded ? "pass (bounded)" : "pass")
                               : "FAIL");
        if (!c.detail.empty()) std::cout << " - " << c.detail;
        std::cout << "\n";
      }
    }
    if (!all_passed(outcomes)) {
      any_failed = true;
      std::cerr << "failing net description:\n" << print_net(n);
    }
  }
  if (o.want_json) emit(all);
  return any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"place/transition net semantics toolkit"};
  app.require_subcommand(1);
  cli_options o;

  auto add_net = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--net", o.net_path, "net description file")
                    ->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.want_json, "machine-readable output");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--marking-budget", o.marking_budget,
                    "cap on explored markings");
  };

  auto* validate_cmd = app.add_subcommand("validate", "parse and check a net");
  add_net(validate_cmd);
  add_json(validate_cmd);

  auto* fire_cmd = app.add_subcommand("fire", "replay a word from the initial marking");
  add_net(fire_cmd);
  add_json(fire_cmd);
  fire_cmd->add_option("word", o.word_args, "transition identifiers");

  auto* enum_cmd = app.add_subcommand("enum-fs", "list firing sequences up to a length");
  add_net(enum_cmd);
  add_json(enum_cmd);
  enum_cmd->add_option("--max-len", o.max_len, "length bound");

  auto* lin_cmd = app.add_subcommand("lin", "list the linearizations of a process");
  add_net(lin_cmd);
  add_json(lin_cmd);
  lin_cmd->add_option("process", o.files, "process JSON file")
      ->expected(1)
      ->check(CLI::ExistingFile);

  auto* proc_cmd = app.add_subcommand("process-of", "build the process of a word");
  add_net(proc_cmd);
  add_json(proc_cmd);
  proc_cmd->add_option("word", o.word_args, "transition identifiers");

  auto* eqs_cmd = app.add_subcommand("equiv-seq", "transposition equivalence of two words");
  add_net(eqs_cmd);
  add_json(eqs_cmd);
  eqs_cmd->add_option("--left", o.left_text, "first word")->required();
  eqs_cmd->add_option("--right", o.right_text, "second word")->required();
  eqs_cmd->add_flag("--certificate", o.want_certificate, "print the chain");

  auto* les_cmd = app.add_subcommand("le-seq", "word order: left below right");
  add_net(les_cmd);
  add_json(les_cmd);
  les_cmd->add_option("--left", o.left_text, "first word")->required();
  les_cmd->add_option("--right", o.right_text, "second word")->required();

  auto* eqp_cmd = app.add_subcommand("equiv-proc", "swap equivalence of two processes");
  add_net(eqp_cmd);
  add_json(eqp_cmd);
  eqp_cmd->add_option("processes", o.files, "two process JSON files")
      ->expected(2)
      ->check(CLI::ExistingFile);
  eqp_cmd->add_flag("--certificate", o.want_certificate, "print the chain");

  auto* lep_cmd = app.add_subcommand("le-proc", "process order: first below second");
  add_net(lep_cmd);
  add_json(lep_cmd);
  lep_cmd->add_option("processes", o.files, "two process JSON files")
      ->expected(2)
      ->check(CLI::ExistingFile);
  lep_cmd->add_flag("--direct", o.direct,
                    "search prefixes and extensions instead of linearizing");

  auto* con_cmd = app.add_subcommand("conflicts", "scan reachable markings for conflicts");
  add_net(con_cmd);
  add_json(con_cmd);
  add_budget(con_cmd);
  con_cmd->add_option("--mult-cap", o.mult_cap, "multiplicity cap per transition");

  auto* str_cmd = app.add_subcommand("structural", "no enabled pair shares a preplace");
  add_net(str_cmd);
  add_json(str_cmd);
  add_budget(str_cmd);

  auto* lar_cmd = app.add_subcommand("largest", "fold all words into one covering run");
  add_net(lar_cmd);
  add_json(lar_cmd);
  add_budget(lar_cmd);
  lar_cmd->add_option("--max-len", o.max_len, "enumeration length bound");
  lar_cmd->add_flag("--certificate", o.want_certificate, "print the witness");

  auto* ver_cmd = app.add_subcommand("verify", "run the cross-check suite");
  add_net(ver_cmd, false);
  add_json(ver_cmd);
  add_budget(ver_cmd);
  ver_cmd->add_option("--max-len", o.max_len, "word corpus length bound");
  ver_cmd->add_option("--mult-cap", o.mult_cap, "multiplicity cap per transition");
  ver_cmd->add_option("--random", o.random_count,
                      "also verify this many random nets (seed: PROCNET_SEED)");

  auto* dot_cmd = app.add_subcommand("export-dot", "render a net or process as DOT");
  add_net(dot_cmd);
  dot_cmd->add_option("process", o.files, "process JSON file")
      ->expected(-1)
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return run_validate(o);
    if (*fire_cmd) return run_fire(o);
    if (*enum_cmd) return run_enum_fs(o);
    if (*lin_cmd) return run_lin(o);
    if (*proc_cmd) return run_process_of(o);
    if (*eqs_cmd) return run_equiv_seq(o);
    if (*les_cmd) return run_le_seq(o);
    if (*eqp_cmd) return run_equiv_proc(o);
    if (*lep_cmd) return run_le_proc(o);
    if (*con_cmd) return run_conflicts(o);
    if (*str_cmd) return run_structural(o);
    if (*lar_cmd) return run_largest(o);
    if (*ver_cmd) return run_verify(o);
    if (*dot_cmd) return run_export_dot(o);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
