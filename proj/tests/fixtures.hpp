#pragma once

// Small nets shared by the unit and acceptance tests.

#include "procnet/net.hpp"

namespace testnets {

// Three transitions a, b, c compete for two tokens on p1; d recycles one
// token back.  Has step conflicts but no binary ones at the start marking.
inline procnet::net contested_net() {
  procnet::net n;
  n.name = "contested";
  n.places = {"p1", "p2", "p3", "p4", "p5", "p6"};
  n.transitions = {"a", "b", "c", "d"};
  n.initial = procnet::multiset<std::string>{
      {"p1", 2}, {"p2", 1}, {"p3", 1}, {"p4", 1}, {"p5", 1}};
  n.arcs[{"p1", "a"}] = 1;
  n.arcs[{"p2", "a"}] = 1;
  n.arcs[{"a", "p6"}] = 1;
  n.arcs[{"p1", "b"}] = 1;
  n.arcs[{"p3", "b"}] = 1;
  n.arcs[{"b", "p6"}] = 1;
  n.arcs[{"p1", "c"}] = 1;
  n.arcs[{"p4", "c"}] = 1;
  n.arcs[{"c", "p6"}] = 1;
  n.arcs[{"p5", "d"}] = 1;
  n.arcs[{"p6", "d"}] = 1;
  n.arcs[{"d", "p1"}] = 1;
  return n;
}

// Two independent self-loops; a and b can fire forever in any order.
inline procnet::net loops_net() {
  procnet::net n;
  n.name = "loops";
  n.places = {"s", "p"};
  n.transitions = {"a", "b"};
  n.initial = procnet::multiset<std::string>{{"s", 1}, {"p", 1}};
  n.arcs[{"s", "a"}] = 1;
  n.arcs[{"a", "s"}] = 1;
  n.arcs[{"p", "b"}] = 1;
  n.arcs[{"b", "p"}] = 1;
  return n;
}

// One transition that fires exactly once.
inline procnet::net single_net() {
  procnet::net n;
  n.name = "single";
  n.places = {"s"};
  n.transitions = {"t"};
  n.initial = procnet::multiset<std::string>{{"s", 1}};
  n.arcs[{"s", "t"}] = 1;
  return n;
}

// Weighted arc: t wants both tokens at once, so the step {t, t} would need
// four.
inline procnet::net double_net() {
  procnet::net n;
  n.name = "double";
  n.places = {"s"};
  n.transitions = {"t"};
  n.initial = procnet::multiset<std::string>{{"s", 2}};
  n.arcs[{"s", "t"}] = 2;
  return n;
}

// Two tokens on s and t takes one, so the step {t, t} is enabled and shares
// a preplace with itself.
inline procnet::net self_pair_net() {
  procnet::net n;
  n.name = "selfpair";
  n.places = {"s"};
  n.transitions = {"t"};
  n.initial = procnet::multiset<std::string>{{"s", 2}};
  n.arcs[{"s", "t"}] = 1;
  return n;
}

}  // namespace testnets
