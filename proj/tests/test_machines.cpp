#include <doctest.h>

#include <algorithm>

#include "relmach/corpus.hpp"
#include "relmach/machine.hpp"
#include "relmach/oracle.hpp"
#include "relmach/verify.hpp"

using namespace relmach;

TEST_CASE("validation reports determinism and moving state sets") {
  const auto nfa_report = validate(corpus::three_state_machine());
  CHECK(nfa_report.ok);
  CHECK(nfa_report.notes.at(0) == "deterministic");

  const auto flip_report = validate(corpus::flip_machine());
  CHECK(flip_report.ok);
  CHECK(flip_report.notes.at(0) == "Q_l = {}");
  CHECK(flip_report.notes.at(1) == "Q_r = {s}");

  // Out-of-range rule target.
  TwoWayAutomaton bad = corpus::machine_e();
  bad.right[0][0].push_back(9);
  const auto bad_report = validate(bad);
  CHECK_FALSE(bad_report.ok);
  CHECK(bad_report.errors.at(0).find("9") != std::string::npos);
}

TEST_CASE("reverse_nfa flips every arrow") {
  const Nfa m = corpus::collapse_machine();
  CHECK(reverse_nfa(m) == corpus::collapse_machine_reversed());
  CHECK(reverse_nfa(reverse_nfa(m)) == m);

  Nfa empty{Carrier(std::vector<std::string>{"a"}), Carrier(std::vector<std::string>{"x"}), {}};
  empty.step.push_back(Rel(empty.states, empty.states));
  CHECK(reverse_nfa(empty) == empty);

  verify::Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Nfa r = verify::random_nfa(rng, 4, 3);
    const Nfa rev = reverse_nfa(r);
    for (std::size_t x = 0; x < r.alphabet.size(); ++x) {
      CHECK(rev.step[x] == converse(r.step[x]));
    }
  }
}

TEST_CASE("mealy dual is an involution and fixes the carry machine up to renaming") {
  const Mealy carry = corpus::carry_machine();
  CHECK(mealy_dual(mealy_dual(carry)) == carry);

  // The dual machine has states {0,1} and alphabet {n,c}; look for a
  // bijection phi: dual states -> original states whose inverse renames the
  // alphabet, carrying next to next and out to out.
  const Mealy d = mealy_dual(carry);
  REQUIRE(d.states.size() == 2);
  bool found = false;
  for (int flip = 0; flip < 2; ++flip) {
    auto phi = [&](int s) { return flip ? 1 - s : s; };  // dual state -> original state
    bool ok = true;
    for (std::size_t x = 0; x < d.alphabet.size(); ++x) {
      for (std::size_t q = 0; q < d.states.size(); ++q) {
        // dual symbol x names original state phi^{-1}... the pairing is its
        // own inverse here, so phi renames both directions.
        std::vector<int> next_mapped, out_mapped;
        for (int t : d.next[x][q]) next_mapped.push_back(phi(t));
        for (int t : d.out[x][q]) out_mapped.push_back(phi(t));
        std::sort(next_mapped.begin(), next_mapped.end());
        std::sort(out_mapped.begin(), out_mapped.end());
        // The pairing renames the dual symbol x to an original symbol and
        // the dual state q to an original state with the same flip.
        const auto ox = static_cast<std::size_t>(phi(static_cast<int>(x)));
        const auto oq = static_cast<std::size_t>(phi(static_cast<int>(q)));
        if (carry.next[ox][oq] != next_mapped || carry.out[ox][oq] != out_mapped) {
          ok = false;
        }
      }
    }
    found = found || ok;
  }
  CHECK(found);

  // Single-state, single-symbol identity machine is literally self-dual.
  Mealy unit{Carrier(std::vector<std::string>{"s"}), Carrier(std::vector<std::string>{"s"}),
             empty_rules(1, 1), empty_rules(1, 1)};
  unit.next[0][0] = {0};
  unit.out[0][0] = {0};
  CHECK(mealy_dual(unit) == unit);

  verify::Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    Mealy m{Carrier(static_cast<std::size_t>(rng.between(1, 3))),
            Carrier(static_cast<std::size_t>(rng.between(1, 3))), {}, {}};
    m.next = empty_rules(m.alphabet.size(), m.states.size());
    m.out = empty_rules(m.alphabet.size(), m.states.size());
    for (std::size_t x = 0; x < m.alphabet.size(); ++x) {
      for (std::size_t q = 0; q < m.states.size(); ++q) {
        if (rng.coin()) m.next[x][q] = {rng.below(static_cast<int>(m.states.size()))};
        if (rng.coin()) m.out[x][q] = {rng.below(static_cast<int>(m.alphabet.size()))};
      }
    }
    CHECK(mealy_dual(mealy_dual(m)) == m);
  }
}

TEST_CASE("split_to_birget separates two-sided states") {
  // Machine E: q is both left- and right-moving, p only right-moving.
  const TwoWayAutomaton e = corpus::machine_e();
  const SplitResult split = split_to_birget(e);
  CHECK(split.machine.states.size() == 3);
  CHECK(split.machine.states.label(0) == "p");
  CHECK(split.machine.states.label(1) == "q_l");
  CHECK(split.machine.states.label(2) == "q_r");
  CHECK(split.to_original == std::vector<int>{0, 1, 1});

  const auto ql = left_moving_states(split.machine);
  const auto qr = right_moving_states(split.machine);
  for (std::size_t i = 0; i < ql.size(); ++i) CHECK_FALSE((ql[i] && qr[i]));

  // Already-disjoint machines are untouched.
  TwoWayAutomaton disjoint = e;
  disjoint.left[0][1].clear();
  const SplitResult id_split = split_to_birget(disjoint);
  CHECK(id_split.machine == disjoint);
  CHECK(id_split.to_original == std::vector<int>{0, 1});

  verify::Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoWayAutomaton m = verify::random_twoway(rng, 4, 3);
    const SplitResult s = split_to_birget(m);
    const auto l = left_moving_states(s.machine);
    const auto r = right_moving_states(s.machine);
    for (std::size_t i = 0; i < l.size(); ++i) CHECK_FALSE((l[i] && r[i]));
  }
}

TEST_CASE("letter automaton of a bounded machine") {
  const Btm flip = corpus::flip_machine();
  const TwoWayAutomaton letter = btm_to_letter_automaton(flip);
  CHECK(letter.states.size() == 2);  // |alphabet| * |states|
  CHECK(letter.alphabet.size() == 1);
  // (0,s) at index 0, (1,s) at index 1; right moves swap them, no left moves.
  CHECK(letter.right[0][0] == std::vector<int>{1});
  CHECK(letter.right[0][1] == std::vector<int>{0});
  CHECK(letter.left[0][0].empty());
  CHECK(letter.left[0][1].empty());

  Btm none{Carrier(std::vector<std::string>{"s"}), Carrier(std::vector<std::string>{"0"}),
           empty_rules(1, 1), empty_rules(1, 1), empty_rules(1, 1), empty_rules(1, 1)};
  const TwoWayAutomaton empty_letter = btm_to_letter_automaton(none);
  const auto ql = left_moving_states(empty_letter);
  const auto qr = right_moving_states(empty_letter);
  CHECK(std::none_of(ql.begin(), ql.end(), [](bool b) { return b; }));
  CHECK(std::none_of(qr.begin(), qr.end(), [](bool b) { return b; }));

  verify::Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Btm m = verify::random_btm(rng, 3, 2);
    CHECK(btm_to_letter_automaton(m).states.size() == m.states.size() * m.alphabet.size());
  }
}

namespace {

// Unrestricted single-word square of a two-way machine: reflexive
// reachability, no moving-set restrictions. This is the semantics a bounded
// machine's length-1 computation relations must have after packing the
// rewrites into letter-automaton states.
Square unrestricted_square(const TwoWayAutomaton& m, int symbol) {
  const int nq = static_cast<int>(m.states.size());
  const Carrier& c = m.states;
  std::vector<std::pair<std::size_t, std::size_t>> pl, lt, rt, pr;
  for (int q = 0; q < nq; ++q) {
    // positions 0 and 1 around the single cell
    std::vector<std::vector<bool>> seen(2, std::vector<bool>(static_cast<std::size_t>(nq)));
    struct Node {
      int pos, state;
    };
    std::vector<Node> stack;
    auto push = [&](int pos, int state) {
      if (!seen[static_cast<std::size_t>(pos)][static_cast<std::size_t>(state)]) {
        seen[static_cast<std::size_t>(pos)][static_cast<std::size_t>(state)] = true;
        stack.push_back({pos, state});
      }
    };
    auto expand = [&](const Node& n) {
      if (n.pos == 0) {
        for (int t : m.right[static_cast<std::size_t>(symbol)][static_cast<std::size_t>(n.state)])
          push(1, t);
      } else {
        for (int t : m.left[static_cast<std::size_t>(symbol)][static_cast<std::size_t>(n.state)])
          push(0, t);
      }
    };
    for (int start_pos = 0; start_pos < 2; ++start_pos) {
      for (auto& row : seen) std::fill(row.begin(), row.end(), false);
      stack.clear();
      push(start_pos, q);
      while (!stack.empty()) {
        const Node n = stack.back();
        stack.pop_back();
        expand(n);
      }
      for (int p = 0; p < nq; ++p) {
        const auto up = static_cast<std::size_t>(p);
        const auto uq = static_cast<std::size_t>(q);
        if (start_pos == 0 && seen[0][up]) lt.emplace_back(up, uq);
        if (start_pos == 0 && seen[1][up]) pr.emplace_back(up, uq);
        if (start_pos == 1 && seen[0][up]) pl.emplace_back(up, uq);
        if (start_pos == 1 && seen[1][up]) rt.emplace_back(up, uq);
      }
    }
  }
  return Square(c, Rel::from_pairs(c, c, pl), Rel::from_pairs(c, c, lt),
                Rel::from_pairs(c, c, rt), Rel::from_pairs(c, c, pr));
}

}  // namespace

TEST_CASE("letter automaton carries the length-1 computation relations") {
  verify::Rng rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const Btm m = verify::random_btm(rng, 3, 2);
    const TwoWayAutomaton letter = btm_to_letter_automaton(m);
    const Square packed = unrestricted_square(letter, 0);
    const Square reference = btm_oracle(m, 1);
    // Same indexing by construction; only the carrier handles differ.
    CHECK(packed.pass_left.pairs() == reference.pass_left.pairs());
    CHECK(packed.left_turn.pairs() == reference.left_turn.pairs());
    CHECK(packed.right_turn.pairs() == reference.right_turn.pairs());
    CHECK(packed.pass_right.pairs() == reference.pass_right.pairs());
  }
}

TEST_CASE("swap_directions exchanges the moving halves") {
  const TwoWayAutomaton e = corpus::machine_e();
  const TwoWayAutomaton s = swap_directions(e);
  CHECK(s.left == e.right);
  CHECK(s.right == e.left);
  CHECK(swap_directions(s) == e);
}
