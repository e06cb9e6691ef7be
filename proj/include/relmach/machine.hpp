#pragma once

#include <string>
#include <vector>

#include "relmach/rel.hpp"

namespace relmach {

/// Sparse partial map from (symbol, state) to a sorted set of target
/// indices; indexed table[symbol][state]. An absent rule is an empty set.
using RuleMap = std::vector<std::vector<std::vector<int>>>;

RuleMap empty_rules(std::size_t symbols, std::size_t states);

/// One-way non-deterministic automaton: one step relation on Q per symbol.
struct Nfa {
  Carrier states;
  Carrier alphabet;
  std::vector<Rel> step;  // step[x] holds (b, a) iff a goes to b on x

  friend bool operator==(const Nfa&, const Nfa&) = default;
};

/// Automaton with output. Next-state and output sets are independent maps;
/// a transition picks one element of each.
struct Mealy {
  Carrier states;
  Carrier alphabet;
  RuleMap next;  // next[x][q]: successor states
  RuleMap out;   // out[x][q]: emitted symbols

  friend bool operator==(const Mealy&, const Mealy&) = default;
};

/// Two-way automaton over a fixed read-only word. A left move consumes the
/// cell left of the head, a right move the cell to its right. Left- and
/// right-moving behaviour are separate partial maps, so a state may be
/// left-moving, right-moving, both, or neither.
struct TwoWayAutomaton {
  Carrier states;
  Carrier alphabet;
  RuleMap left;   // left[x][q]: states after moving left over x in state q
  RuleMap right;  // right[x][q]: states after moving right over x in state q

  friend bool operator==(const TwoWayAutomaton&, const TwoWayAutomaton&) = default;
};

/// Bounded Turing machine: the head sits between cells and cannot leave the
/// word. Every move rewrites the cell it passes over; state change and
/// rewrite are independent sets, a move picks one element of each.
struct Btm {
  Carrier states;
  Carrier alphabet;
  RuleMap left_next;   // state sets for left moves
  RuleMap left_out;    // rewrite sets for left moves
  RuleMap right_next;  // state sets for right moves
  RuleMap right_out;   // rewrite sets for right moves

  friend bool operator==(const Btm&, const Btm&) = default;
};

/// States with at least one left (resp. right) rule on some symbol.
std::vector<bool> left_moving_states(const TwoWayAutomaton& m);
std::vector<bool> right_moving_states(const TwoWayAutomaton& m);

/// Single-symbol step relations of the two directional halves.
Rel left_step(const TwoWayAutomaton& m, int symbol);
Rel right_step(const TwoWayAutomaton& m, int symbol);

/// Replaces every step relation by its converse (arrow reversal).
Nfa reverse_nfa(const Nfa& m);

/// Exchanges the roles of states and symbols: the dual machine has the old
/// alphabet as states and vice versa, with next'(q, x) = out(x, q) and
/// out'(q, x) = next(x, q). An involution.
Mealy mealy_dual(const Mealy& m);

/// Forgets the outputs.
Nfa underlying_nfa(const Mealy& m);

/// Exchanges the left- and right-moving halves.
TwoWayAutomaton swap_directions(const TwoWayAutomaton& m);

struct SplitResult {
  TwoWayAutomaton machine;
  std::vector<int> to_original;  // new state index -> original state index
};

/// Splits every state that is both left- and right-moving into a
/// left-moving copy and a right-moving copy, rewriting rule targets to the
/// copies that exist. The result has disjoint left/right-moving state sets.
SplitResult split_to_birget(const TwoWayAutomaton& m);

/// The single-letter two-way automaton whose states are (symbol, state)
/// pairs and whose moves carry the rewrite in the state component. State
/// (x, q) has index q + |Q| * x.
TwoWayAutomaton btm_to_letter_automaton(const Btm& m);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> errors;
  std::vector<std::string> notes;  // derived facts: determinism, moving state sets
};

ValidationReport validate(const Nfa& m);
ValidationReport validate(const Mealy& m);
ValidationReport validate(const TwoWayAutomaton& m);
ValidationReport validate(const Btm& m);

}  // namespace relmach
