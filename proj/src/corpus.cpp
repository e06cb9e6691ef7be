#include "relmach/corpus.hpp"

namespace relmach::corpus {

namespace {

Carrier carrier(std::vector<std::string> labels) { return Carrier(std::move(labels)); }

}  // namespace

Nfa three_state_machine() {
  const Carrier q = carrier({"a", "b", "c"});
  const Carrier sigma = carrier({"f", "g"});
  const Rel f = Rel::from_pairs(q, q, {{1, 0}, {1, 1}, {1, 2}});
  const Rel g = Rel::from_pairs(q, q, {{2, 0}, {0, 1}, {1, 2}});
  return Nfa{q, sigma, {f, g}};
}

Nfa collapse_machine() {
  const Carrier q = carrier({"a", "b"});
  const Carrier sigma = carrier({"f", "g"});
  const Rel step = Rel::from_pairs(q, q, {{0, 0}, {0, 1}});
  return Nfa{q, sigma, {step, step}};
}

Nfa collapse_machine_reversed() { return reverse_nfa(collapse_machine()); }

Mealy carry_machine() {
  const Carrier q = carrier({"n", "c"});
  const Carrier sigma = carrier({"0", "1"});
  Mealy m{q, sigma, empty_rules(2, 2), empty_rules(2, 2)};
  // next: 0 keeps/clears the carry, 1 sets it from n and keeps it from c
  m.next[0][0] = {0};  // 0,n -> n
  m.next[0][1] = {0};  // 0,c -> n
  m.next[1][0] = {1};  // 1,n -> c
  m.next[1][1] = {1};  // 1,c -> c
  // out: the shifted bit
  m.out[0][0] = {0};  // 0,n -> 0
  m.out[0][1] = {1};  // 0,c -> 1
  m.out[1][0] = {0};  // 1,n -> 0
  m.out[1][1] = {1};  // 1,c -> 1
  return m;
}

Nfa carry_underlying_machine() { return underlying_nfa(carry_machine()); }

Nfa identity_only_machine() {
  const Carrier q = carrier({"s"});
  const Carrier sigma = carrier({"x"});
  return Nfa{q, sigma, {Rel::identity(q)}};
}

TwoWayAutomaton machine_e() {
  const Carrier q = carrier({"p", "q"});
  const Carrier sigma = carrier({"x"});
  TwoWayAutomaton m{q, sigma, empty_rules(1, 2), empty_rules(1, 2)};
  m.right[0][0] = {1};  // p steps right into q
  m.right[0][1] = {1};  // q steps right into q
  m.left[0][1] = {0};   // q steps left into p
  return m;
}

Btm flip_machine() {
  const Carrier q = carrier({"s"});
  const Carrier sigma = carrier({"0", "1"});
  Btm m{q,
        sigma,
        empty_rules(2, 1),
        empty_rules(2, 1),
        empty_rules(2, 1),
        empty_rules(2, 1)};
  m.right_next[0][0] = {0};
  m.right_out[0][0] = {1};  // scanning 0 rightward writes 1
  m.right_next[1][0] = {0};
  m.right_out[1][0] = {0};  // scanning 1 rightward writes 0
  return m;
}

}  // namespace relmach::corpus
