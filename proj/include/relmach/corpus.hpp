#pragma once

#include "relmach/machine.hpp"

namespace relmach::corpus {

/// Three states {a,b,c}, two function symbols {f,g}: f sends everything to
/// b, g is the cycle a->c->b->a.
Nfa three_state_machine();

/// Two-state machine with both symbols sending everything to a, and its
/// arrow reversal.
Nfa collapse_machine();
Nfa collapse_machine_reversed();

/// Binary left-shift with carry: states {n,c}, alphabet {0,1}. Reading the
/// input right to left it doubles the binary value, the end state reports
/// overflow. Self-dual under the state/alphabet exchange n<->0, c<->1.
Mealy carry_machine();

/// The next-state half of the carry machine.
Nfa carry_underlying_machine();

/// One state, one symbol, identity step.
Nfa identity_only_machine();

/// Two-way machine with states {p,q} on one symbol: p and q step right into
/// q, and q steps back left into p. q is both left- and right-moving.
TwoWayAutomaton machine_e();

/// Bounded Turing machine over {0,1} with a single state that moves right
/// flipping every cell it passes over. No left moves.
Btm flip_machine();

}  // namespace relmach::corpus
