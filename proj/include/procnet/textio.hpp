#pragma once

// Text formats: the line-oriented net description language, a canonical
// printer for it, DOT export for nets and processes, and JSON serialization
// of processes, certificates and reports.

#include <stdexcept>

#include "json.hpp"
#include "procnet/conflict.hpp"
#include "procnet/diamond.hpp"
#include "procnet/process.hpp"
#include "procnet/seqequiv.hpp"
#include "procnet/swapping.hpp"

namespace procnet {

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0, column_ = 0;
};

// Line-oriented net descriptions, '#' starts a comment:
//   net NAME
//   place ID [tokens N]
//   trans ID [in ID[:W] ...] [out ID[:W] ...]
// Weights default to 1 and token counts to 0. Duplicate declarations are
// rejected. Syntax problems raise parse_error with their position; a parsed
// net that violates the structural rules (say, an empty preset) raises
// parse_error with the violation text and line 0.
net parse_net(const std::string& text);

// Canonical text form; parse_net(print_net(n)) == n for valid nets.
std::string print_net(const net& n);

word parse_word(const std::string& text);  // split on whitespace

std::string verdict_text(verdict v);  // holds, fails, bounded

// DOT digraphs: places as circles showing their token count, transitions as
// boxes, arcs labeled with weights. Process nodes show their labels instead
// of token counts.
std::string to_dot(const net& n);
std::string to_dot(const gr_process& p);

nlohmann::json json_of(const multiset<std::string>& m);
nlohmann::json json_of(const word& w);
nlohmann::json json_of(const gr_process& p);
nlohmann::json json_of(const transposition& t);
nlohmann::json json_of(const adjacency_chain& chain);
nlohmann::json json_of(const iso_witness& iso);
nlohmann::json json_of(const swap_chain& chain);
nlohmann::json json_of(const conflict_witness& w);
nlohmann::json json_of(const conflict_report& report);
nlohmann::json json_of(const diamond& d);
nlohmann::json json_of(const largest_result& r);

// Inverse of json_of for the process interchange format. Shape errors raise
// parse_error; label consistency against a net is checked separately by
// validate_process.
gr_process process_from_json(const nlohmann::json& j);

}  // namespace procnet
