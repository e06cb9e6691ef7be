#include <doctest.h>

#include "relmach/corpus.hpp"
#include "relmach/oracle.hpp"
#include "relmach/verify.hpp"

using namespace relmach;

namespace {

std::vector<int> w(std::initializer_list<int> symbols) { return std::vector<int>(symbols); }

}  // namespace

TEST_CASE("transition homomorphism of one-way machines") {
  const Nfa m = corpus::three_state_machine();
  CHECK(nfa_hom(m, w({})) == Rel::identity(m.states));
  CHECK(nfa_hom(m, w({0})) == m.step[0]);
  // g then f read as the word "gf": rightmost letter first.
  CHECK(nfa_hom(m, w({1, 0})) ==
        Rel::from_pairs(m.states, m.states, {{0, 0}, {0, 1}, {0, 2}}));
  CHECK_THROWS_AS(nfa_hom(m, w({5})), std::invalid_argument);

  verify::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Nfa r = verify::random_nfa(rng, 4, 3);
    auto u = verify::random_word(rng, static_cast<int>(r.alphabet.size()), 0, 3);
    const auto v = verify::random_word(rng, static_cast<int>(r.alphabet.size()), 0, 3);
    auto uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(nfa_hom(r, uv) == compose(nfa_hom(r, u), nfa_hom(r, v)));
  }
}

TEST_CASE("transition monoid enumeration") {
  const auto carry = transition_monoid(corpus::carry_underlying_machine());
  CHECK(carry.complete);
  CHECK(carry.elements.size() == 3);

  const auto unit = transition_monoid(corpus::identity_only_machine());
  CHECK(unit.complete);
  CHECK(unit.elements.size() == 1);
  CHECK(unit.elements[0] == Rel::identity(unit.elements[0].dom()));

  const auto sec2 = transition_monoid(corpus::three_state_machine());
  CHECK(sec2.complete);
  CHECK(sec2.elements.size() == 6);
  // Identity row and column reproduce the element list.
  for (std::size_t i = 0; i < sec2.elements.size(); ++i) {
    CHECK(sec2.table[0][i] == static_cast<int>(i));
    CHECK(sec2.table[i][0] == static_cast<int>(i));
  }

  const auto capped = transition_monoid(corpus::three_state_machine(), 2);
  CHECK_FALSE(capped.complete);

  verify::Rng rng(57);
  for (int trial = 0; trial < 30; ++trial) {
    const Nfa m = verify::random_nfa(rng, 3, 2);
    const auto monoid = transition_monoid(m);
    REQUIRE(monoid.complete);
    // Closure: every tabled product is one of the returned elements, and
    // matches the composed relations.
    for (std::size_t i = 0; i < monoid.elements.size(); ++i) {
      for (std::size_t j = 0; j < monoid.elements.size(); ++j) {
        const int k = monoid.table[i][j];
        CHECK(compose(monoid.elements[i], monoid.elements[j]) ==
              monoid.elements[static_cast<std::size_t>(k)]);
      }
    }
  }
}

TEST_CASE("mealy run reproduces the carry trace") {
  const Mealy carry = corpus::carry_machine();
  using Result = std::set<std::pair<std::vector<int>, int>>;

  const Result full = mealy_run(carry, w({1, 0, 1, 1, 0, 1}), 0);
  CHECK(full == Result{{w({0, 1, 1, 0, 1, 0}), 1}});

  CHECK(mealy_run(carry, w({}), 0) == Result{{w({}), 0}});
  CHECK(mealy_run(carry, w({1}), 0) == Result{{w({0}), 1}});
}

TEST_CASE("two-way oracle on the worked machine") {
  const TwoWayAutomaton e = corpus::machine_e();
  const Square s = twoway_oracle(e, w({0}));
  const Carrier& c = e.states;
  CHECK(s.pass_right == Rel::from_pairs(c, c, {{1, 0}, {1, 1}}));
  CHECK(s.right_turn == Rel::from_pairs(c, c, {{1, 1}}));
  CHECK(s.pass_left.empty());
  CHECK(s.left_turn.empty());

  TwoWayAutomaton none = e;
  none.left = empty_rules(1, 2);
  none.right = empty_rules(1, 2);
  CHECK(twoway_oracle(none, w({0})) == zero_square(c));

  CHECK_THROWS_AS(twoway_oracle(e, w({})), std::invalid_argument);
}

TEST_CASE("oracles are monotone under added rules") {
  verify::Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    TwoWayAutomaton m = verify::random_twoway(rng, 3, 2);
    TwoWayAutomaton more = m;
    // add one extra rule if there is room
    const int x = rng.below(static_cast<int>(m.alphabet.size()));
    const int q = rng.below(static_cast<int>(m.states.size()));
    const int t = rng.below(static_cast<int>(m.states.size()));
    auto& cell = (rng.coin() ? more.left : more.right)[static_cast<std::size_t>(x)]
                                                      [static_cast<std::size_t>(q)];
    if (std::find(cell.begin(), cell.end(), t) == cell.end()) {
      cell.push_back(t);
      std::sort(cell.begin(), cell.end());
    }
    const auto word = verify::random_word(rng, static_cast<int>(m.alphabet.size()), 1, 3);
    const Square before = twoway_oracle(m, word);
    const Square after = twoway_oracle(more, word);
    CHECK(subset(before.pass_left, after.pass_left));
    CHECK(subset(before.left_turn, after.left_turn));
    CHECK(subset(before.right_turn, after.right_turn));
    CHECK(subset(before.pass_right, after.pass_right));
  }

  for (int trial = 0; trial < 50; ++trial) {
    Btm m = verify::random_btm(rng, 3, 2);
    Btm more = m;
    const int x = rng.below(static_cast<int>(m.alphabet.size()));
    const int q = rng.below(static_cast<int>(m.states.size()));
    auto& next = (rng.coin() ? more.left_next : more.right_next);
    auto& out = (&next == &more.left_next) ? more.left_out : more.right_out;
    auto& ncell = next[static_cast<std::size_t>(x)][static_cast<std::size_t>(q)];
    auto& ocell = out[static_cast<std::size_t>(x)][static_cast<std::size_t>(q)];
    if (ncell.empty()) ncell = {rng.below(static_cast<int>(m.states.size()))};
    if (ocell.empty()) ocell = {rng.below(static_cast<int>(m.alphabet.size()))};
    const int n = rng.between(1, 2);
    const Square before = btm_oracle(m, n);
    const Square after = btm_oracle(more, n);
    CHECK(subset(before.pass_left, after.pass_left));
    CHECK(subset(before.left_turn, after.left_turn));
    CHECK(subset(before.right_turn, after.right_turn));
    CHECK(subset(before.pass_right, after.pass_right));
  }
}

TEST_CASE("bounded-machine oracle") {
  const Btm flip = corpus::flip_machine();
  const Square s2 = btm_oracle(flip, 2);
  const CnCodec codec(flip.states, flip.alphabet, 2);
  auto enc = [&](std::initializer_list<int> word) {
    return codec.encode(0, std::vector<int>(word));
  };
  const Carrier& c = codec.carrier();
  CHECK(s2.pass_right ==
        Rel::from_pairs(c, c,
                        {{enc({1, 0}), enc({0, 1})},
                         {enc({0, 1}), enc({1, 0})},
                         {enc({0, 0}), enc({1, 1})},
                         {enc({1, 1}), enc({0, 0})}}));
  CHECK(s2.pass_left.empty());
  CHECK(s2.left_turn == Rel::identity(c));
  CHECK(s2.right_turn == Rel::identity(c));

  // Formal length-0 square.
  CHECK(btm_oracle(flip, 0) == identity_square(CnCodec(flip.states, flip.alphabet, 0).carrier()));

  // No rules: only zero-step computations.
  Btm none = flip;
  none.right_next = empty_rules(2, 1);
  none.right_out = empty_rules(2, 1);
  const Square s1 = btm_oracle(none, 1);
  const Carrier c1 = CnCodec(none.states, none.alphabet, 1).carrier();
  CHECK(s1.pass_left.empty());
  CHECK(s1.pass_right.empty());
  CHECK(s1.left_turn == Rel::identity(c1));
  CHECK(s1.right_turn == Rel::identity(c1));
}

TEST_CASE("config edge dump names configurations") {
  const auto edges = config_edges(corpus::machine_e(), w({0}));
  REQUIRE(!edges.empty());
  bool found = false;
  for (const auto& e : edges) {
    if (e == "p@0:x -> q@1:x") found = true;
  }
  CHECK(found);
}
