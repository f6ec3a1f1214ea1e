#include "procnet/textio.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace procnet {

namespace {

struct token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

std::vector<token> tokenize(const std::string& line) {
  std::vector<token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "net" || s == "place" || s == "trans" || s == "in" ||
         s == "out" || s == "tokens";
}

std::string checked_id(const token& tk, std::size_t line_no) {
  if (tk.text.empty() || is_keyword(tk.text) ||
      tk.text.find(':') != std::string::npos)
    throw parse_error(line_no, tk.column,
                      "'" + tk.text + "' cannot be used as an identifier");
  return tk.text;
}

count_t checked_count(const std::string& text, std::size_t line_no,
                      std::size_t column, count_t least) {
  count_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value < least)
    throw parse_error(line_no, column,
                      std::string("expected a ") +
                          (least > 0 ? "positive" : "non-negative") +
                          " integer, got '" + text + "'");
  return value;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

parse_error::parse_error(std::size_t line, std::size_t column,
                         const std::string& message)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) +
                                         ", column " + std::to_string(column) +
                                         ": " + message),
      line_(line),
      column_(column) {}

net parse_net(const std::string& text) {
  net n;
  bool named = false;
  std::set<std::string> declared;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const token& head = tokens.front();
    if (head.text == "net") {
      if (named)
        throw parse_error(line_no, head.column, "duplicate net declaration");
      if (tokens.size() != 2)
        throw parse_error(line_no, head.column, "expected: net NAME");
      n.name = checked_id(tokens[1], line_no);
      named = true;
      continue;
    }
    if (!named)
      throw parse_error(line_no, head.column,
                        "expected 'net NAME' before '" + head.text + "'");
    if (head.text == "place") {
      if (tokens.size() != 2 && tokens.size() != 4)
        throw parse_error(line_no, head.column,
                          "expected: place ID [tokens N]");
      std::string id = checked_id(tokens[1], line_no);
      if (!declared.insert(id).second)
        throw parse_error(line_no, tokens[1].column,
                          "duplicate declaration of '" + id + "'");
      if (tokens.size() == 4) {
        if (tokens[2].text != "tokens")
          throw parse_error(line_no, tokens[2].column,
                            "expected 'tokens', got '" + tokens[2].text + "'");
        n.initial.add(id, checked_count(tokens[3].text, line_no,
                                        tokens[3].column, 0));
      }
      n.places.insert(id);
    } else if (head.text == "trans") {
      if (tokens.size() < 2)
        throw parse_error(line_no, head.column,
                          "expected: trans ID [in ...] [out ...]");
      std::string id = checked_id(tokens[1], line_no);
      if (!declared.insert(id).second)
        throw parse_error(line_no, tokens[1].column,
                          "duplicate declaration of '" + id + "'");
      n.transitions.insert(id);
      enum class section { none, in, out };
      section mode = section::none;
      bool seen_in = false, seen_out = false;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const token& tk = tokens[i];
        if (tk.text == "in") {
          if (seen_in || seen_out)
            throw parse_error(line_no, tk.column, "misplaced 'in' section");
          seen_in = true;
          mode = section::in;
        } else if (tk.text == "out") {
          if (seen_out)
            throw parse_error(line_no, tk.column, "duplicate 'out' section");
          seen_out = true;
          mode = section::out;
        } else if (mode == section::none) {
          throw parse_error(line_no, tk.column,
                            "expected 'in' or 'out' before arc list");
        } else {
          std::string name = tk.text;
          count_t weight = 1;
          if (auto colon = tk.text.find(':'); colon != std::string::npos) {
            name = tk.text.substr(0, colon);
            weight = checked_count(tk.text.substr(colon + 1), line_no,
                                   tk.column + colon + 1, 1);
          }
          if (name.empty() || is_keyword(name))
            throw parse_error(line_no, tk.column,
                              "'" + name + "' cannot be used as an identifier");
          auto key = mode == section::in ? std::make_pair(name, id)
                                         : std::make_pair(id, name);
          if (!n.arcs.emplace(key, weight).second)
            throw parse_error(line_no, tk.column,
                              "duplicate arc for '" + name + "'");
        }
      }
    } else {
      throw parse_error(line_no, head.column,
                        "unknown directive '" + head.text + "'");
    }
  }
  if (!named) throw parse_error(0, 0, "missing 'net NAME' declaration");
  std::vector<std::string> violations = validate(n);
  if (!violations.empty()) throw parse_error(0, 0, violations.front());
  return n;
}

std::string print_net(const net& n) {
  std::ostringstream out;
  out << "net " << (n.name.empty() ? "unnamed" : n.name) << "\n";
  for (const auto& p : n.places) {
    out << "place " << p;
    if (count_t k = n.initial.count(p)) out << " tokens " << k;
    out << "\n";
  }
  for (const auto& t : n.transitions) {
    out << "trans " << t;
    multiset<std::string> pre = preset(n, t);
    multiset<std::string> post = postset(n, t);
    if (!pre.empty()) {
      out << " in";
      for (const auto& [p, w] : pre) {
        out << ' ' << p;
        if (w != 1) out << ':' << w;
      }
    }
    if (!post.empty()) {
      out << " out";
      for (const auto& [p, w] : post) {
        out << ' ' << p;
        if (w != 1) out << ':' << w;
      }
    }
    out << "\n";
  }
  return out.str();
}

word parse_word(const std::string& text) {
  word out;
  std::istringstream in(text);
  std::string letter;
  while (in >> letter) out.push_back(letter);
  return out;
}

std::string verdict_text(verdict v) {
  switch (v) {
    case verdict::holds:
      return "holds";
    case verdict::fails:
      return "fails";
    case verdict::bounded:
      return "bounded";
  }
  return "unknown";
}

std::string to_dot(const net& n) {
  std::ostringstream out;
  out << "digraph " << dot_quote(n.name.empty() ? "net" : n.name) << " {\n";
  out << "  rankdir=LR;\n";
  for (const auto& p : n.places) {
    std::string label = dot_quote(p);
    // token count on its own line; the \n stays a DOT escape, not a quoted one
    if (count_t k = n.initial.count(p))
      label.insert(label.size() - 1, "\\n" + std::to_string(k));
    out << "  " << dot_quote(p) << " [shape=circle, label=" << label << "];\n";
  }
  for (const auto& t : n.transitions)
    out << "  " << dot_quote(t) << " [shape=box];\n";
  for (const auto& [arc, w] : n.arcs)
    out << "  " << dot_quote(arc.first) << " -> " << dot_quote(arc.second)
        << " [label=\"" << w << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const gr_process& p) {
  std::ostringstream out;
  out << "digraph process {\n";
  out << "  rankdir=LR;\n";
  for (const auto& [s, label] : p.place_label)
    out << "  \"s" << s << "\" [shape=circle, label=" <<
        dot_quote("s" + std::to_string(s) + ":" + label) << "];\n";
  for (const auto& [t, label] : p.transition_label)
    out << "  \"e" << t << "\" [shape=box, label=" <<
        dot_quote("e" + std::to_string(t) + ":" + label) << "];\n";
  for (const auto& [s, t] : p.consume)
    out << "  \"s" << s << "\" -> \"e" << t << "\" [label=\"1\"];\n";
  for (const auto& [t, s] : p.produce)
    out << "  \"e" << t << "\" -> \"s" << s << "\" [label=\"1\"];\n";
  out << "}\n";
  return out.str();
}

nlohmann::json json_of(const multiset<std::string>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [x, k] : m) j[x] = k;
  return j;
}

nlohmann::json json_of(const word& w) {
  return nlohmann::json(w);
}

nlohmann::json json_of(const gr_process& p) {
  nlohmann::json j;
  j["places"] = nlohmann::json::array();
  for (const auto& [id, label] : p.place_label)
    j["places"].push_back({{"id", id}, {"label", label}});
  j["transitions"] = nlohmann::json::array();
  for (const auto& [id, label] : p.transition_label)
    j["transitions"].push_back({{"id", id}, {"label", label}});
  j["consume"] = nlohmann::json::array();
  for (const auto& [s, t] : p.consume) j["consume"].push_back({s, t});
  j["produce"] = nlohmann::json::array();
  for (const auto& [t, s] : p.produce) j["produce"].push_back({t, s});
  j["initial"] = nlohmann::json(std::vector<int>(p.initial.begin(),
                                                 p.initial.end()));
  return j;
}

nlohmann::json json_of(const transposition& t) {
  return {{"pos", t.pos},
          {"first", t.first},
          {"second", t.second},
          {"marking", json_of(t.enabling)}};
}

nlohmann::json json_of(const adjacency_chain& chain) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : chain.steps) steps.push_back(json_of(s));
  return {{"start", json_of(chain.start)},
          {"finish", json_of(chain.finish)},
          {"steps", steps}};
}

nlohmann::json json_of(const iso_witness& iso) {
  nlohmann::json places = nlohmann::json::array();
  for (const auto& [from, to] : iso.place_map) places.push_back({from, to});
  nlohmann::json transitions = nlohmann::json::array();
  for (const auto& [from, to] : iso.transition_map)
    transitions.push_back({from, to});
  return {{"places", places}, {"transitions", transitions}};
}

nlohmann::json json_of(const swap_chain& chain) {
  nlohmann::json moves = nlohmann::json::array();
  for (const auto& m : chain.moves)
    moves.push_back({{"a", m.place_a}, {"b", m.place_b}});
  return {{"start", json_of(chain.start)},
          {"finish", json_of(chain.finish)},
          {"moves", moves},
          {"isomorphism", json_of(chain.final_iso)}};
}

nlohmann::json json_of(const conflict_witness& w) {
  return {{"path", json_of(w.path)},
          {"marking", json_of(w.at)},
          {"step", json_of(w.offending)}};
}

nlohmann::json json_of(const conflict_report& report) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(json_of(w));
  return {{"result", verdict_text(report.result)},
          {"witnesses", witnesses},
          {"search_truncated", report.search_truncated}};
}

nlohmann::json json_of(const diamond& d) {
  return {{"mu", json_of(d.mu)},
          {"mu_prime", json_of(d.mu_prime)},
          {"chain", json_of(d.chain)}};
}

nlohmann::json json_of(const largest_result& r) {
  nlohmann::json coverage = nlohmann::json::array();
  for (const auto& item : r.coverage)
    coverage.push_back({{"sigma", json_of(item.sigma)},
                        {"sigma_ext", json_of(item.sigma_ext)},
                        {"rho_prefix", item.rho_prefix},
                        {"chain", json_of(item.chain)}});
  return {{"rho", json_of(r.rho)},
          {"truncated", r.truncated},
          {"coverage", coverage}};
}

gr_process process_from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& m) -> void { throw parse_error(0, 0, m); };
  if (!j.is_object()) fail("process document must be a JSON object");
  gr_process p;
  auto read_nodes = [&](const char* key, std::map<int, std::string>& into) {
    if (!j.contains(key) || !j[key].is_array())
      fail(std::string("missing array field '") + key + "'");
    for (const auto& entry : j[key]) {
      if (!entry.is_object() || !entry.contains("id") ||
          !entry["id"].is_number_integer() || !entry.contains("label") ||
          !entry["label"].is_string())
        fail(std::string(key) + " entries need an integer id and a string label");
      int id = entry["id"].get<int>();
      if (!into.emplace(id, entry["label"].get<std::string>()).second)
        fail(std::string("duplicate ") + key + " id " + std::to_string(id));
    }
  };
  read_nodes("places", p.place_label);
  read_nodes("transitions", p.transition_label);
  auto read_arcs = [&](const char* key, std::set<std::pair<int, int>>& into,
                       const std::map<int, std::string>& from_side,
                       const std::map<int, std::string>& to_side) {
    if (!j.contains(key) || !j[key].is_array())
      fail(std::string("missing array field '") + key + "'");
    for (const auto& entry : j[key]) {
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number_integer() || !entry[1].is_number_integer())
        fail(std::string(key) + " entries must be [from, to] id pairs");
      int from = entry[0].get<int>();
      int to = entry[1].get<int>();
      if (!from_side.count(from) || !to_side.count(to))
        fail(std::string(key) + " arc references an undeclared node");
      if (!into.emplace(from, to).second)
        fail(std::string("duplicate ") + key + " arc");
    }
  };
  read_arcs("consume", p.consume, p.place_label, p.transition_label);
  read_arcs("produce", p.produce, p.transition_label, p.place_label);
  if (!j.contains("initial") || !j["initial"].is_array())
    fail("missing array field 'initial'");
  for (const auto& entry : j["initial"]) {
    if (!entry.is_number_integer())
      fail("initial entries must be place ids");
    int id = entry.get<int>();
    if (!p.place_label.count(id)) fail("initial references an undeclared place");
    if (!p.initial.insert(id).second) fail("duplicate initial place");
  }
  return p;
}

}  // namespace procnet
