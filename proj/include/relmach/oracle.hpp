#pragma once

#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relmach/codec.hpp"
#include "relmach/machine.hpp"
#include "relmach/square.hpp"

namespace relmach {

/// Brute-force simulators. These never go through the square compositions
/// or the closed-form letter squares; they enumerate configuration graphs
/// directly and are the reference the algebraic path is checked against.

/// The word's image under the transition homomorphism: t of the empty word
/// is the identity, and t(uv) = compose(t(u), t(v)), so the rightmost
/// letter acts first.
Rel nfa_hom(const Nfa& m, std::span<const int> word);

struct TransitionMonoid {
  std::vector<Rel> elements;            // element 0 is the identity
  std::vector<std::vector<int>> words;  // shortlex-minimal representative per element
  std::vector<std::vector<int>> table;  // table[i][j] = index of elements[i] * elements[j]
  bool complete = true;                 // false when the element cap was hit
};

/// Closure of the step relations under composition, enumerated breadth
/// first so representatives come out shortlex-minimal.
TransitionMonoid transition_monoid(const Nfa& m, std::size_t max_elements = 10000);

/// Runs the machine over the input right to left, writing each output at
/// the position read. Non-determinism yields a set of results.
std::set<std::pair<std::vector<int>, int>> mealy_run(const Mealy& m, std::span<const int> input,
                                                     int start);

/// Global transition relations of a fixed word, read off the configuration
/// graph. Requires a non-empty word. Entries are restricted by the moving
/// state sets at both endpoints, and turns require at least one actual move
/// (the closed-form letter squares count bounces, not stays).
Square twoway_oracle(const TwoWayAutomaton& m, std::span<const int> word);

/// Computation relations for tape length n on the carrier C_n, read off the
/// full rewrite configuration graph. Zero-step computations count, so both
/// turn relations contain the identity. For n = 0 this is the formal
/// identity square on C_0.
Square btm_oracle(const Btm& m, int n);

/// Configuration-graph edge lists for debugging, one line per step in the
/// form "state@head:word -> state@head:word".
std::vector<std::string> config_edges(const TwoWayAutomaton& m, std::span<const int> word);
std::vector<std::string> config_edges(const Btm& m, int n);

}  // namespace relmach
