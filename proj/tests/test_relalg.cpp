#include <doctest.h>

#include "relmach/corpus.hpp"
#include "relmach/rel.hpp"
#include "relmach/verify.hpp"

using namespace relmach;

namespace {

Rel pairs(const Carrier& c, std::vector<std::pair<std::size_t, std::size_t>> p) {
  return Rel::from_pairs(c, c, p);
}

}  // namespace

TEST_CASE("compose follows the function convention") {
  const Nfa m = corpus::three_state_machine();
  const Rel& f = m.step[0];
  const Rel& g = m.step[1];

  CHECK(compose(g, f) == pairs(m.states, {{0, 0}, {0, 1}, {0, 2}}));

  const Rel id = Rel::identity(m.states);
  CHECK(compose(f, id) == f);
  CHECK(compose(id, f) == f);
  CHECK(compose(Rel(m.states, m.states), f).empty());

  const Carrier other(4);
  CHECK_THROWS_AS(compose(f, Rel(other, other)), std::invalid_argument);
}

TEST_CASE("union of relations") {
  const Carrier c(3);
  const Rel r = pairs(c, {{1, 0}});
  const Rel s = pairs(c, {{2, 1}});
  CHECK(unite(r, Rel(c, c)) == r);
  CHECK(unite(r, r) == r);
  CHECK(unite(r, s) == pairs(c, {{1, 0}, {2, 1}}));
  CHECK_THROWS_AS(unite(r, Rel(Carrier(2), Carrier(2))), std::invalid_argument);
}

TEST_CASE("star is the reflexive-transitive closure") {
  const Carrier c(3);
  CHECK(star(Rel(c, c)) == Rel::identity(c));
  CHECK(star(Rel::identity(c)) == Rel::identity(c));
  CHECK(star(pairs(c, {{1, 0}, {2, 1}})) ==
        pairs(c, {{0, 0}, {1, 1}, {2, 2}, {1, 0}, {2, 1}, {2, 0}}));
  CHECK_THROWS_AS(star(Rel(Carrier(2), Carrier(3))), std::invalid_argument);
}

TEST_CASE("converse flips pairs") {
  const Nfa m = corpus::three_state_machine();
  const Carrier c(2);
  CHECK(converse(pairs(c, {{1, 0}})) == pairs(c, {{0, 1}}));
  CHECK(converse(Rel::identity(c)) == Rel::identity(c));
  CHECK(converse(m.step[0]) == pairs(m.states, {{0, 1}, {1, 1}, {2, 1}}));
}

TEST_CASE("restriction idempotents") {
  const Carrier c(3);
  CHECK(restriction(c, std::vector<std::size_t>{}).empty());
  CHECK(restriction(c, std::vector<std::size_t>{0, 1, 2}) == Rel::identity(c));

  // Double restriction by a set missing the target annihilates.
  const Carrier q(2);  // p = 0, q = 1
  const Rel k = pairs(q, {{0, 1}});
  const Rel ql = restriction(q, std::vector<std::size_t>{1});
  CHECK(compose(ql, compose(k, ql)).empty());

  CHECK_THROWS_AS(restriction(c, std::vector<std::size_t>{7}), std::invalid_argument);
}

TEST_CASE("empty carrier is legal") {
  const Carrier none(0);
  const Rel r(none, none);
  CHECK(star(r) == r);
  CHECK(compose(r, r) == r);
  CHECK(converse(r) == r);
  CHECK(Rel::identity(none) == r);
}

TEST_CASE("relation algebra laws on random relations") {
  verify::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Carrier ca(static_cast<std::size_t>(rng.between(0, 4)));
    const Carrier cb(static_cast<std::size_t>(rng.between(0, 4)));
    const Carrier cc(static_cast<std::size_t>(rng.between(0, 4)));
    const Carrier cd(static_cast<std::size_t>(rng.between(0, 4)));
    const Rel r = verify::random_rel(rng, ca, cb);
    const Rel s = verify::random_rel(rng, cb, cc);
    const Rel t = verify::random_rel(rng, cc, cd);

    CHECK(compose(compose(t, s), r) == compose(t, compose(s, r)));
    CHECK(compose(Rel::identity(cb), r) == r);
    CHECK(compose(r, Rel::identity(ca)) == r);
    CHECK(converse(compose(s, r)) == compose(converse(r), converse(s)));
    CHECK(converse(converse(r)) == r);

    const Rel s2 = verify::random_rel(rng, cb, cc);
    const Rel r2 = verify::random_rel(rng, ca, cb);
    CHECK(compose(unite(s, s2), r) == unite(compose(s, r), compose(s2, r)));
    CHECK(compose(s, unite(r, r2)) == unite(compose(s, r), compose(s, r2)));
  }
}

TEST_CASE("star laws and the shift identity") {
  verify::Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Carrier c(static_cast<std::size_t>(rng.between(0, 5)));
    const Rel r = verify::random_rel(rng, c, c);
    const Rel x = verify::random_rel(rng, c, c);
    const Rel y = verify::random_rel(rng, c, c);

    const Rel rs = star(r);
    CHECK(star(rs) == rs);
    CHECK(subset(r, rs));
    CHECK(subset(Rel::identity(c), rs));
    CHECK(compose(rs, rs) == rs);
    CHECK(compose(x, star(compose(y, x))) == compose(star(compose(x, y)), x));
  }
}
