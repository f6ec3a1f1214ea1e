#include "procnet/process.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace procnet {

std::optional<int> gr_process::producer_of(int place) const {
  for (const auto& [t, s] : produce)
    if (s == place) return t;
  return std::nullopt;
}

std::optional<int> gr_process::consumer_of(int place) const {
  for (const auto& [s, t] : consume)
    if (s == place) return t;
  return std::nullopt;
}

std::vector<int> gr_process::preset_of(int transition) const {
  std::vector<int> out;
  for (const auto& [s, t] : consume)
    if (t == transition) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> gr_process::postset_of(int transition) const {
  std::vector<int> out;
  for (const auto& [t, s] : produce)
    if (t == transition) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Kahn topological pass over the bipartite arc graph; returns false on a cycle.
bool topo_order(const gr_process& p, std::vector<std::pair<bool, int>>* order) {
  // nodes: (true, place id) and (false, transition id)
  std::map<std::pair<bool, int>, int> indeg;
  std::map<std::pair<bool, int>, std::vector<std::pair<bool, int>>> succ;
  for (const auto& [s, _] : p.place_label) indeg[{true, s}];
  for (const auto& [t, _] : p.transition_label) indeg[{false, t}];
  for (const auto& [s, t] : p.consume) {
    succ[{true, s}].push_back({false, t});
    indeg[{false, t}]++;
  }
  for (const auto& [t, s] : p.produce) {
    succ[{false, t}].push_back({true, s});
    indeg[{true, s}]++;
  }
  std::deque<std::pair<bool, int>> ready;
  for (const auto& [node, d] : indeg)
    if (d == 0) ready.push_back(node);
  std::size_t done = 0;
  while (!ready.empty()) {
    auto node = ready.front();
    ready.pop_front();
    if (order) order->push_back(node);
    ++done;
    for (const auto& nxt : succ[node])
      if (--indeg[nxt] == 0) ready.push_back(nxt);
  }
  return done == indeg.size();
}

}  // namespace

std::vector<std::string> validate_process(const gr_process& p, const net& n) {
  std::vector<std::string> out;
  auto pname = [](int id) { return "place #" + std::to_string(id); };
  auto tname = [](int id) { return "transition #" + std::to_string(id); };

  for (int s : p.initial)
    if (!p.place_label.count(s)) out.push_back("initial cut lists unknown " + pname(s));
  for (const auto& [s, t] : p.consume) {
    if (!p.place_label.count(s)) out.push_back("consume arc from unknown " + pname(s));
    if (!p.transition_label.count(t)) out.push_back("consume arc to unknown " + tname(t));
  }
  for (const auto& [t, s] : p.produce) {
    if (!p.transition_label.count(t)) out.push_back("produce arc from unknown " + tname(t));
    if (!p.place_label.count(s)) out.push_back("produce arc to unknown " + pname(s));
  }
  if (!out.empty()) return out;  // later clauses assume known endpoints

  std::map<int, int> producers, consumers;
  for (const auto& [t, s] : p.produce) producers[s]++;
  for (const auto& [s, t] : p.consume) consumers[s]++;
  for (const auto& [s, _] : p.place_label) {
    if (producers[s] > 1) out.push_back(pname(s) + " has more than one producer");
    if (consumers[s] > 1) out.push_back(pname(s) + " has more than one consumer");
  }
  for (const auto& [s, _] : p.place_label) {
    bool root = producers[s] == 0;
    if (root != (p.initial.count(s) != 0))
      out.push_back(pname(s) + (root ? " lacks a producer but is not in the initial cut"
                                     : " has a producer but is in the initial cut"));
  }
  if (!topo_order(p, nullptr)) out.push_back("arc relation has a cycle");

  for (const auto& [s, l] : p.place_label)
    if (!n.places.count(l)) out.push_back(pname(s) + " labeled with unknown net place '" + l + "'");
  for (const auto& [t, l] : p.transition_label)
    if (!n.transitions.count(l))
      out.push_back(tname(t) + " labeled with unknown net transition '" + l + "'");
  if (!out.empty()) return out;

  multiset<std::string> cut_image;
  for (int s : p.initial) cut_image.add(p.place_label.at(s));
  if (cut_image != n.initial)
    out.push_back("initial cut maps to " + to_string(cut_image) + ", expected " +
                  to_string(n.initial));

  for (const auto& [t, l] : p.transition_label) {
    multiset<std::string> pre_image, post_image;
    for (int s : p.preset_of(t)) pre_image.add(p.place_label.at(s));
    for (int s : p.postset_of(t)) post_image.add(p.place_label.at(s));
    if (pre_image != preset(n, l))
      out.push_back(tname(t) + " preset maps to " + to_string(pre_image) +
                    ", expected " + to_string(preset(n, l)));
    if (post_image != postset(n, l))
      out.push_back(tname(t) + " postset maps to " + to_string(post_image) +
                    ", expected " + to_string(postset(n, l)));
  }
  return out;
}

void require_valid_process(const gr_process& p, const net& n) {
  auto violations = validate_process(p, n);
  if (!violations.empty()) throw std::invalid_argument(violations.front());
}

gr_process empty_process(const net& n) {
  gr_process p;
  int next = 0;
  for (const auto& [place, k] : n.initial)
    for (count_t i = 0; i < k; ++i) {
      p.place_label[next] = place;
      p.initial.insert(next);
      ++next;
    }
  return p;
}

std::set<int> end_places(const gr_process& p) {
  std::set<int> out;
  for (const auto& [s, _] : p.place_label) out.insert(s);
  for (const auto& [s, _] : p.consume) out.erase(s);
  return out;
}

marking end_marking(const gr_process& p) {
  marking out;
  for (int s : end_places(p)) out.add(p.place_label.at(s));
  return out;
}

causal_index::causal_index(const gr_process& p) {
  std::vector<std::pair<bool, int>> order;
  if (!topo_order(p, &order))
    throw std::invalid_argument("causal index requires an acyclic process");

  std::map<int, int> consumer;
  std::map<int, std::vector<int>> postset;
  for (const auto& [s, t] : p.consume) consumer[s] = t;
  for (const auto& [t, s] : p.produce) postset[t].push_back(s);

  // Walk the topological order backwards, accumulating successor sets and
  // forwards for longest-path depths.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto [is_place, id] = *it;
    if (is_place) {
      auto& set = place_succ_[id];
      auto c = consumer.find(id);
      if (c != consumer.end()) {
        trans_succ_[c->second];  // ensure entry
        for (int s : postset[c->second]) {
          set.insert(s);
          const auto& deeper = place_succ_[s];
          set.insert(deeper.begin(), deeper.end());
        }
      }
    } else {
      auto& set = trans_succ_[id];
      for (int s : postset[id]) {
        auto c = consumer.find(s);
        if (c != consumer.end()) {
          set.insert(c->second);
          const auto& deeper = trans_succ_[c->second];
          set.insert(deeper.begin(), deeper.end());
        }
      }
    }
  }
  std::map<int, int> producer;
  for (const auto& [t, s] : p.produce) producer[s] = t;
  std::map<int, std::vector<int>> preset;
  for (const auto& [s, t] : p.consume) preset[t].push_back(s);
  for (const auto& [is_place, id] : order) {
    if (is_place) {
      auto prod = producer.find(id);
      place_depth_[id] = prod == producer.end() ? 0 : trans_depth_[prod->second] + 1;
    } else {
      int d = 0;
      for (int s : preset[id]) d = std::max(d, place_depth_[s] + 1);
      trans_depth_[id] = d;
    }
  }
}

bool causal_index::place_before(int p, int q) const {
  auto it = place_succ_.find(p);
  return it != place_succ_.end() && it->second.count(q);
}

bool causal_index::place_comparable(int p, int q) const {
  return place_before(p, q) || place_before(q, p);
}

bool causal_index::trans_before(int t, int u) const {
  auto it = trans_succ_.find(t);
  return it != trans_succ_.end() && it->second.count(u);
}

int causal_index::place_depth(int p) const { return place_depth_.at(p); }
int causal_index::trans_depth(int t) const { return trans_depth_.at(t); }

gr_process prefix_from_transitions(const gr_process& p, const std::set<int>& ts) {
  for (int t : ts)
    if (!p.transition_label.count(t))
      throw std::invalid_argument("prefix over unknown transition #" + std::to_string(t));
  causal_index causal(p);
  for (const auto& [u, _] : p.transition_label) {
    if (ts.count(u)) continue;
    for (int t : ts)
      if (causal.trans_before(u, t))
        throw std::invalid_argument("transition set is not causally closed: #" +
                                    std::to_string(u) + " precedes kept #" +
                                    std::to_string(t));
  }
  gr_process out;
  out.initial = p.initial;
  std::set<int> keep_places(p.initial.begin(), p.initial.end());
  for (const auto& [t, s] : p.produce)
    if (ts.count(t)) keep_places.insert(s);
  for (int s : keep_places) out.place_label[s] = p.place_label.at(s);
  for (int t : ts) out.transition_label[t] = p.transition_label.at(t);
  for (const auto& [s, t] : p.consume)
    if (keep_places.count(s) && ts.count(t)) out.consume.insert({s, t});
  for (const auto& [t, s] : p.produce)
    if (ts.count(t)) out.produce.insert({t, s});
  return out;
}

bool is_prefix(const gr_process& smaller, const gr_process& larger) {
  if (smaller.initial != larger.initial) return false;
  for (const auto& [s, l] : smaller.place_label) {
    auto it = larger.place_label.find(s);
    if (it == larger.place_label.end() || it->second != l) return false;
  }
  for (const auto& [t, l] : smaller.transition_label) {
    auto it = larger.transition_label.find(t);
    if (it == larger.transition_label.end() || it->second != l) return false;
  }
  // Places must be exactly the initial cut plus kept postsets.
  std::set<int> expected(smaller.initial.begin(), smaller.initial.end());
  for (const auto& [t, s] : larger.produce)
    if (smaller.transition_label.count(t)) expected.insert(s);
  std::set<int> actual;
  for (const auto& [s, _] : smaller.place_label) actual.insert(s);
  if (expected != actual) return false;
  // Arcs must be the full restriction of the larger process's arcs.
  std::set<std::pair<int, int>> consume, produce;
  for (const auto& [s, t] : larger.consume)
    if (actual.count(s) && smaller.transition_label.count(t)) consume.insert({s, t});
  for (const auto& [t, s] : larger.produce)
    if (smaller.transition_label.count(t)) produce.insert({t, s});
  return consume == smaller.consume && produce == smaller.produce;
}

bool is_maximal(const gr_process& p, const net& n) {
  marking end = end_marking(p);
  for (const auto& t : n.transitions) {
    step g;
    g.add(t);
    if (enabled(n, end, g)) return false;
  }
  return true;
}

namespace {

// Canonicalization state in dense index space.
struct canon_graph {
  std::vector<int> place_ids, trans_ids;        // sorted original ids
  std::vector<std::string> place_lab, trans_lab;
  std::vector<int> producer, consumer;          // trans index or -1, per place
  std::vector<std::vector<int>> pre, post;      // place indexes, per transition

  explicit canon_graph(const gr_process& p) {
    std::map<int, int> pidx, tidx;
    for (const auto& [s, l] : p.place_label) {
      pidx[s] = static_cast<int>(place_ids.size());
      place_ids.push_back(s);
      place_lab.push_back(l);
    }
    for (const auto& [t, l] : p.transition_label) {
      tidx[t] = static_cast<int>(trans_ids.size());
      trans_ids.push_back(t);
      trans_lab.push_back(l);
    }
    producer.assign(place_ids.size(), -1);
    consumer.assign(place_ids.size(), -1);
    pre.resize(trans_ids.size());
    post.resize(trans_ids.size());
    for (const auto& [s, t] : p.consume) {
      consumer[pidx[s]] = tidx[t];
      pre[tidx[t]].push_back(pidx[s]);
    }
    for (const auto& [t, s] : p.produce) {
      producer[pidx[s]] = tidx[t];
      post[tidx[t]].push_back(pidx[s]);
    }
  }
};

struct coloring {
  std::vector<int> place, trans;

  // Splits color classes by the colors of neighbours until stable.
  void refine(const canon_graph& g) {
    for (;;) {
      std::size_t before = distinct();
      std::map<std::tuple<int, int, int>, int> pkeys;
      std::vector<std::tuple<int, int, int>> pkey(g.place_ids.size());
      for (std::size_t i = 0; i < g.place_ids.size(); ++i) {
        pkey[i] = {place[i], g.producer[i] < 0 ? -1 : trans[g.producer[i]],
                   g.consumer[i] < 0 ? -1 : trans[g.consumer[i]]};
        pkeys[pkey[i]];
      }
      std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> tkeys;
      std::vector<std::tuple<int, std::vector<int>, std::vector<int>>> tkey(g.trans_ids.size());
      for (std::size_t j = 0; j < g.trans_ids.size(); ++j) {
        std::vector<int> pc, qc;
        for (int s : g.pre[j]) pc.push_back(place[s]);
        for (int s : g.post[j]) qc.push_back(place[s]);
        std::sort(pc.begin(), pc.end());
        std::sort(qc.begin(), qc.end());
        tkey[j] = {trans[j], std::move(pc), std::move(qc)};
        tkeys[tkey[j]];
      }
      int next = 0;
      for (auto& [_, id] : pkeys) id = next++;
      for (auto& [_, id] : tkeys) id = next++;
      for (std::size_t i = 0; i < pkey.size(); ++i) place[i] = pkeys[pkey[i]];
      for (std::size_t j = 0; j < tkey.size(); ++j) trans[j] = tkeys[tkey[j]];
      if (distinct() == before) return;
    }
  }

  std::size_t distinct() const {
    std::set<int> seen(place.begin(), place.end());
    seen.insert(trans.begin(), trans.end());
    return seen.size();
  }

  bool discrete() const {
    return distinct() == place.size() + trans.size();
  }
};

struct canon_result {
  std::string cert;
  std::vector<int> place_order, trans_order;  // original ids in canonical order
};

std::string cert_of(const canon_graph& g, const coloring& c) {
  // c is discrete: orderings by color.
  std::vector<int> porder(g.place_ids.size()), torder(g.trans_ids.size());
  for (std::size_t i = 0; i < porder.size(); ++i) porder[i] = static_cast<int>(i);
  for (std::size_t j = 0; j < torder.size(); ++j) torder[j] = static_cast<int>(j);
  std::sort(porder.begin(), porder.end(), [&](int a, int b) { return c.place[a] < c.place[b]; });
  std::sort(torder.begin(), torder.end(), [&](int a, int b) { return c.trans[a] < c.trans[b]; });
  std::vector<int> tpos(torder.size());
  for (std::size_t j = 0; j < torder.size(); ++j) tpos[torder[j]] = static_cast<int>(j);
  std::ostringstream os;
  os << "T|";
  for (int j : torder) os << g.trans_lab[j] << ';';
  os << "P|";
  for (int i : porder) {
    os << g.place_lab[i] << ':'
       << (g.producer[i] < 0 ? -1 : tpos[g.producer[i]]) << ':'
       << (g.consumer[i] < 0 ? -1 : tpos[g.consumer[i]]) << ';';
  }
  return os.str();
}

void search_canon(const canon_graph& g, coloring c, canon_result* best) {
  c.refine(g);
  if (c.discrete()) {
    std::string cert = cert_of(g, c);
    if (best->cert.empty() || cert < best->cert) {
      best->cert = cert;
      std::vector<int> porder(g.place_ids.size()), torder(g.trans_ids.size());
      for (std::size_t i = 0; i < porder.size(); ++i) porder[i] = static_cast<int>(i);
      for (std::size_t j = 0; j < torder.size(); ++j) torder[j] = static_cast<int>(j);
      std::sort(porder.begin(), porder.end(),
                [&](int a, int b) { return c.place[a] < c.place[b]; });
      std::sort(torder.begin(), torder.end(),
                [&](int a, int b) { return c.trans[a] < c.trans[b]; });
      best->place_order.clear();
      best->trans_order.clear();
      for (int i : porder) best->place_order.push_back(g.place_ids[i]);
      for (int j : torder) best->trans_order.push_back(g.trans_ids[j]);
    }
    return;
  }
  // Individualize each member of the first non-singleton place class, or
  // failing that, transition class.
  std::map<int, std::vector<int>> pclasses, tclasses;
  for (std::size_t i = 0; i < c.place.size(); ++i)
    pclasses[c.place[i]].push_back(static_cast<int>(i));
  for (std::size_t j = 0; j < c.trans.size(); ++j)
    tclasses[c.trans[j]].push_back(static_cast<int>(j));
  int fresh = static_cast<int>(c.place.size() + c.trans.size()) + 1;
  for (const auto& [_, members] : pclasses) {
    if (members.size() < 2) continue;
    for (int i : members) {
      coloring c2 = c;
      c2.place[i] = fresh;
      search_canon(g, std::move(c2), best);
    }
    return;
  }
  for (const auto& [_, members] : tclasses) {
    if (members.size() < 2) continue;
    for (int j : members) {
      coloring c2 = c;
      c2.trans[j] = fresh;
      search_canon(g, std::move(c2), best);
    }
    return;
  }
}

canon_result canonicalize(const gr_process& p) {
  canon_graph g(p);
  coloring c;
  // Seed colors from (kind, label); refinement separates the rest.
  std::map<std::pair<bool, std::string>, int> seed;
  for (const auto& l : g.place_lab) seed[{true, l}];
  for (const auto& l : g.trans_lab) seed[{false, l}];
  int next = 0;
  for (auto& [_, id] : seed) id = next++;
  c.place.resize(g.place_lab.size());
  c.trans.resize(g.trans_lab.size());
  for (std::size_t i = 0; i < g.place_lab.size(); ++i) c.place[i] = seed[{true, g.place_lab[i]}];
  for (std::size_t j = 0; j < g.trans_lab.size(); ++j) c.trans[j] = seed[{false, g.trans_lab[j]}];
  canon_result best;
  search_canon(g, std::move(c), &best);
  return best;
}

}  // namespace

std::string canonical_form(const gr_process& p) { return canonicalize(p).cert; }

bool check_iso(const gr_process& p, const gr_process& q, const iso_witness& w) {
  if (w.place_map.size() != p.place_label.size() ||
      w.transition_map.size() != p.transition_label.size())
    return false;
  if (p.place_label.size() != q.place_label.size() ||
      p.transition_label.size() != q.transition_label.size())
    return false;
  std::set<int> pts, tts;
  for (const auto& [s, img] : w.place_map) {
    auto lab = p.place_label.find(s);
    auto qlab = q.place_label.find(img);
    if (lab == p.place_label.end() || qlab == q.place_label.end()) return false;
    if (lab->second != qlab->second) return false;
    pts.insert(img);
  }
  for (const auto& [t, img] : w.transition_map) {
    auto lab = p.transition_label.find(t);
    auto qlab = q.transition_label.find(img);
    if (lab == p.transition_label.end() || qlab == q.transition_label.end()) return false;
    if (lab->second != qlab->second) return false;
    tts.insert(img);
  }
  if (pts.size() != q.place_label.size() || tts.size() != q.transition_label.size())
    return false;  // not a bijection
  std::set<int> initial_image;
  for (int s : p.initial) initial_image.insert(w.place_map.at(s));
  if (initial_image != q.initial) return false;
  std::set<std::pair<int, int>> consume_image, produce_image;
  for (const auto& [s, t] : p.consume)
    consume_image.insert({w.place_map.at(s), w.transition_map.at(t)});
  for (const auto& [t, s] : p.produce)
    produce_image.insert({w.transition_map.at(t), w.place_map.at(s)});
  return consume_image == q.consume && produce_image == q.produce;
}

std::optional<iso_witness> isomorphic(const gr_process& p, const gr_process& q) {
  if (p.place_label.size() != q.place_label.size() ||
      p.transition_label.size() != q.transition_label.size())
    return std::nullopt;
  canon_result cp = canonicalize(p);
  canon_result cq = canonicalize(q);
  if (cp.cert != cq.cert) return std::nullopt;
  iso_witness w;
  for (std::size_t i = 0; i < cp.place_order.size(); ++i)
    w.place_map[cp.place_order[i]] = cq.place_order[i];
  for (std::size_t j = 0; j < cp.trans_order.size(); ++j)
    w.transition_map[cp.trans_order[j]] = cq.trans_order[j];
  if (!check_iso(p, q, w))
    throw std::logic_error("canonical orders produced a non-isomorphism");
  return w;
}

namespace {

// One grow step: all ways to append a transition labeled t, taking tokens
// from the current end places.
std::vector<gr_process> grow_by(const net& n, const gr_process& p, const std::string& t) {
  multiset<std::string> need = preset(n, t);
  std::set<int> ends = end_places(p);
  // Candidate places per needed label, ascending id.
  std::vector<std::pair<std::vector<int>, count_t>> slots;
  for (const auto& [label, k] : need) {
    std::vector<int> cands;
    for (int s : ends)
      if (p.place_label.at(s) == label) cands.push_back(s);
    if (static_cast<count_t>(cands.size()) < k) return {};
    slots.push_back({std::move(cands), k});
  }
  int next_place = p.place_label.empty() ? 0 : p.place_label.rbegin()->first + 1;
  int next_trans = p.transition_label.empty() ? 0 : p.transition_label.rbegin()->first + 1;
  std::vector<gr_process> out;
  std::vector<std::vector<int>> chosen(slots.size());
  // Enumerate k-combinations per slot in lexicographic id order.
  auto build = [&]() {
    gr_process q = p;
    q.transition_label[next_trans] = t;
    for (const auto& grp : chosen)
      for (int s : grp) q.consume.insert({s, next_trans});
    int pid = next_place;
    for (const auto& [label, k] : postset(n, t))
      for (count_t i = 0; i < k; ++i) {
        q.place_label[pid] = label;
        q.produce.insert({next_trans, pid});
        ++pid;
      }
    out.push_back(std::move(q));
  };
  std::function<void(std::size_t)> pick = [&](std::size_t slot) {
    if (slot == slots.size()) {
      build();
      return;
    }
    const auto& [cands, k] = slots[slot];
    std::vector<int> idx(k);
    std::function<void(std::size_t, std::size_t)> comb = [&](std::size_t at, std::size_t from) {
      if (at == static_cast<std::size_t>(k)) {
        chosen[slot].clear();
        for (std::size_t x = 0; x < static_cast<std::size_t>(k); ++x)
          chosen[slot].push_back(cands[idx[x]]);
        pick(slot + 1);
        return;
      }
      for (std::size_t i = from; i + (k - at) <= cands.size(); ++i) {
        idx[at] = i;
        comb(at + 1, i + 1);
      }
    };
    comb(0, 0);
  };
  pick(0);
  return out;
}

}  // namespace

std::vector<gr_process> enumerate_extensions(const net& n, const gr_process& base,
                                             std::size_t max_added,
                                             const multiset<std::string>* target_labels) {
  std::vector<gr_process> out;
  std::set<std::string> seen;
  struct item {
    gr_process p;
    multiset<std::string> added;
  };
  std::deque<item> queue;
  queue.push_back({base, {}});
  seen.insert(canonical_form(base));
  auto matches_target = [&](const multiset<std::string>& added) {
    return !target_labels || added == *target_labels;
  };
  if (matches_target({})) out.push_back(base);
  while (!queue.empty()) {
    item cur = std::move(queue.front());
    queue.pop_front();
    if (cur.added.size() >= static_cast<count_t>(max_added)) continue;
    for (const auto& t : n.transitions) {
      if (target_labels && cur.added.count(t) >= target_labels->count(t)) continue;
      for (auto& q : grow_by(n, cur.p, t)) {
        std::string cert = canonical_form(q);
        if (!seen.insert(cert).second) continue;
        multiset<std::string> added = cur.added;
        added.add(t);
        if (matches_target(added)) out.push_back(q);
        queue.push_back({std::move(q), std::move(added)});
      }
    }
  }
  return out;
}

std::vector<gr_process> enumerate_processes(const net& n, std::size_t max_transitions) {
  return enumerate_extensions(n, empty_process(n), max_transitions, nullptr);
}

}  // namespace procnet
