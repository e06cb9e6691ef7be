#include "relmach/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "relmach/algebra.hpp"
#include "relmach/corpus.hpp"
#include "relmach/oracle.hpp"
#include "relmach/serialize.hpp"

namespace relmach::verify {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Carrier state_carrier(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
  return Carrier(std::move(labels));
}

Carrier symbol_carrier(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Carrier(std::move(labels));
}

std::vector<int> random_nonempty_subset(Rng& rng, int n) {
  const int mask = 1 + rng.below((1 << n) - 1);
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (mask & (1 << i)) out.push_back(i);
  }
  return out;
}

}  // namespace

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int Rng::below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

int Rng::between(int lo, int hi) { return lo + below(hi - lo + 1); }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t criterion, std::uint64_t trial) {
  return splitmix(splitmix(splitmix(seed) ^ criterion) ^ trial);
}

Nfa random_nfa(Rng& rng, int max_states, int max_symbols) {
  const int nq = rng.between(1, max_states);
  const int ns = rng.between(1, max_symbols);
  Nfa m{state_carrier(nq), symbol_carrier(ns), {}};
  for (int x = 0; x < ns; ++x) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (int q = 0; q < nq; ++q) {
      if (!rng.coin()) continue;
      for (int b : random_nonempty_subset(rng, nq)) {
        pairs.emplace_back(static_cast<std::size_t>(b), static_cast<std::size_t>(q));
      }
    }
    m.step.push_back(Rel::from_pairs(m.states, m.states, pairs));
  }
  return m;
}

TwoWayAutomaton random_twoway(Rng& rng, int max_states, int max_symbols) {
  const int nq = rng.between(1, max_states);
  const int ns = rng.between(1, max_symbols);
  TwoWayAutomaton m{state_carrier(nq), symbol_carrier(ns),
                    empty_rules(static_cast<std::size_t>(ns), static_cast<std::size_t>(nq)),
                    empty_rules(static_cast<std::size_t>(ns), static_cast<std::size_t>(nq))};
  for (int x = 0; x < ns; ++x) {
    for (int q = 0; q < nq; ++q) {
      if (rng.coin()) m.left[x][q] = random_nonempty_subset(rng, nq);
      if (rng.coin()) m.right[x][q] = random_nonempty_subset(rng, nq);
    }
  }
  return m;
}

Btm random_btm(Rng& rng, int max_states, int max_symbols) {
  const int nq = rng.between(1, max_states);
  const int ns = rng.between(1, max_symbols);
  const auto uq = static_cast<std::size_t>(nq);
  const auto us = static_cast<std::size_t>(ns);
  Btm m{state_carrier(nq), symbol_carrier(ns), empty_rules(us, uq), empty_rules(us, uq),
        empty_rules(us, uq), empty_rules(us, uq)};
  for (int x = 0; x < ns; ++x) {
    for (int q = 0; q < nq; ++q) {
      if (rng.coin()) {
        m.left_next[x][q] = random_nonempty_subset(rng, nq);
        m.left_out[x][q] = random_nonempty_subset(rng, ns);
      }
      if (rng.coin()) {
        m.right_next[x][q] = random_nonempty_subset(rng, nq);
        m.right_out[x][q] = random_nonempty_subset(rng, ns);
      }
    }
  }
  return m;
}

Rel random_rel(Rng& rng, const Carrier& dom, const Carrier& cod) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t b = 0; b < cod.size(); ++b) {
    for (std::size_t a = 0; a < dom.size(); ++a) {
      if (rng.coin()) pairs.emplace_back(b, a);
    }
  }
  return Rel::from_pairs(dom, cod, pairs);
}

Square random_square(Rng& rng, const Carrier& c) {
  return Square(c, random_rel(rng, c, c), random_rel(rng, c, c), random_rel(rng, c, c),
                random_rel(rng, c, c));
}

std::vector<int> random_word(Rng& rng, int alphabet_size, int min_len, int max_len) {
  const int len = rng.between(min_len, max_len);
  std::vector<int> word(static_cast<std::size_t>(len));
  for (auto& x : word) x = rng.below(alphabet_size);
  return word;
}

namespace {

using TrialFn = std::function<std::optional<std::string>(Rng&, int)>;

int effective(int user, int fallback) { return user > 0 ? user : fallback; }

std::optional<Failure> run_trials(int trials, int threads, std::uint64_t seed, int criterion,
                                  const TrialFn& fn) {
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = static_cast<int>(std::clamp(hw, 1u, 8u));
  }
  threads = std::min(threads, std::max(trials, 1));

  std::mutex mutex;
  std::optional<Failure> first;
  auto work = [&](int offset) {
    for (int t = offset; t < trials; t += threads) {
      {
        std::lock_guard<std::mutex> lock(mutex);
        if (first && first->trial < t) return;
      }
      const std::uint64_t trial_seed = mix_seed(seed, static_cast<std::uint64_t>(criterion),
                                                static_cast<std::uint64_t>(t));
      Rng rng(trial_seed);
      auto result = fn(rng, t);
      if (result) {
        std::lock_guard<std::mutex> lock(mutex);
        if (!first || t < first->trial) first = Failure{t, trial_seed, std::move(*result)};
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
  }
  return first;
}

std::string machine_text(const AnyMachine& m) { return machine_to_json(m).dump(); }

std::string word_text(const Carrier& alphabet, std::span<const int> word) {
  std::string out;
  for (int x : word) out += alphabet.label(static_cast<std::size_t>(x));
  return out.empty() ? "(empty)" : out;
}

std::string square_diff(const char* lhs_name, const Square& lhs, const char* rhs_name,
                        const Square& rhs) {
  return std::string(lhs_name) + ":\n" + square_to_text(lhs, "  ") + rhs_name + ":\n" +
         square_to_text(rhs, "  ");
}

/// Deterministic one-bit corruption used by the harness self-check: the
/// suite must detect a broken vertical composition.
Square corrupt_square(Square s) {
  if (s.carrier.size() == 0) return s;
  auto pairs = s.left_turn.pairs();
  if (!pairs.empty() && pairs.front() == std::pair<std::size_t, std::size_t>{0, 0}) {
    pairs.erase(pairs.begin());
  } else {
    pairs.emplace_back(0, 0);
  }
  return Square(s.carrier, s.pass_left, Rel::from_pairs(s.carrier, s.carrier, pairs),
                s.right_turn, s.pass_right);
}

struct Harness {
  bool corrupt = false;

  Square vc(const Square& second, const Square& first) const {
    Square s = vcompose(second, first);
    return corrupt ? corrupt_square(s) : s;
  }

  TInftyElem compose_lengths_h(const CodecFamily& family, const TInftyElem& left,
                               const TInftyElem& right) const {
    if (!corrupt) return compose_lengths(family, left, right);
    const CnCodec lc = family.at(left.tape_len);
    const CnCodec rc = family.at(right.tape_len);
    return TInftyElem{vc(lift_square_l(lc, left.square, right.tape_len),
                         lift_square_r(rc, right.square, left.tape_len)),
                      left.tape_len + right.tape_len};
  }

  TInftyElem computation_square_h(const Btm& m, int n) const {
    if (!corrupt) return computation_square(m, n);
    const CodecFamily family{m.states, m.alphabet};
    TInftyElem acc{identity_square(family.at(0).carrier()), 0};
    if (n == 0) return acc;
    const TInftyElem letter{execution_letter(m), 1};
    for (int i = 0; i < n; ++i) acc = compose_lengths_h(family, acc, letter);
    return acc;
  }
};

// ---- criterion bodies ----------------------------------------------------

std::optional<std::string> carry_trace_trial(Rng&, int) {
  const Mealy carry = corpus::carry_machine();
  const std::vector<int> input{1, 0, 1, 1, 0, 1};
  const auto results = mealy_run(carry, input, 0);
  const std::set<std::pair<std::vector<int>, int>> expected{{{0, 1, 1, 0, 1, 0}, 1}};
  if (results != expected) {
    std::string got;
    for (const auto& [word, state] : results) {
      got += " (" + word_text(carry.alphabet, word) + "," + carry.states.label(
                 static_cast<std::size_t>(state)) + ")";
    }
    return "carry run on 101101 from n: expected {(011010,c)}, got{" + got + " }";
  }
  return std::nullopt;
}

std::optional<std::string> hom_trial(Rng& rng, int, const Options& opts) {
  const Nfa m = random_nfa(rng, effective(opts.max_states, 5), effective(opts.max_symbols, 3));
  const int max_len = effective(opts.max_length, 4);
  const auto u = random_word(rng, static_cast<int>(m.alphabet.size()), 0, max_len);
  const auto v = random_word(rng, static_cast<int>(m.alphabet.size()), 0, max_len);
  auto uv = u;
  uv.insert(uv.end(), v.begin(), v.end());
  if (nfa_hom(m, uv) != compose(nfa_hom(m, u), nfa_hom(m, v))) {
    return "t(uv) != t(u)t(v) for u=" + word_text(m.alphabet, u) +
           " v=" + word_text(m.alphabet, v) + "\nmachine: " + machine_text(m);
  }
  return std::nullopt;
}

std::optional<std::string> reversal_trial(Rng& rng, int, const Options& opts) {
  const Nfa m = random_nfa(rng, effective(opts.max_states, 5), effective(opts.max_symbols, 3));
  const Nfa rev = reverse_nfa(m);
  const auto w = random_word(rng, static_cast<int>(m.alphabet.size()), 0,
                             effective(opts.max_length, 4));
  auto wr = w;
  std::reverse(wr.begin(), wr.end());
  if (nfa_hom(rev, w) != converse(nfa_hom(m, wr))) {
    return "reversed machine disagrees with converse on w=" + word_text(m.alphabet, w) +
           "\nmachine: " + machine_text(m);
  }
  return std::nullopt;
}

std::optional<std::string> resolution_trial(Rng& rng, int, const Options& opts) {
  const TwoWayAutomaton m =
      random_twoway(rng, effective(opts.max_states, 4), effective(opts.max_symbols, 3));
  for (int x = 0; x < static_cast<int>(m.alphabet.size()); ++x) {
    const std::vector<int> w{x};
    const Square algebraic = resolution_letter(m, x);
    const Square simulated = twoway_oracle(m, w);
    if (algebraic != simulated) {
      return "letter square differs from simulator on symbol " + m.alphabet.label(
                 static_cast<std::size_t>(x)) +
             "\nmachine: " + machine_text(m) + "\n" +
             square_diff("formula", algebraic, "simulator", simulated);
    }
  }
  return std::nullopt;
}

std::optional<std::string> word_square_trial(Rng& rng, int, const Options& opts,
                                             const Harness& h) {
  const TwoWayAutomaton m =
      random_twoway(rng, effective(opts.max_states, 4), effective(opts.max_symbols, 3));
  const TwoWayAutomaton swapped = swap_directions(m);
  const int ns = static_cast<int>(m.alphabet.size());
  const int max_len = effective(opts.max_length, 5);

  std::vector<Square> letters, letters_swapped;
  for (int x = 0; x < ns; ++x) {
    letters.push_back(resolution_letter(m, x));
    letters_swapped.push_back(resolution_letter(swapped, x));
  }

  std::vector<int> word;
  std::optional<std::string> failure;
  // Depth-first over all words up to max_len, extending squares one letter
  // at a time. `mirror` tracks the swapped machine's square of the
  // reversed word, which the dual must match.
  std::function<void(const Square&, const Square&)> walk = [&](const Square& sq,
                                                               const Square& mirror) {
    if (failure) return;
    if (!word.empty()) {
      const Square simulated = twoway_oracle(m, word);
      if (sq != simulated) {
        failure = "word square differs from simulator on w=" + word_text(m.alphabet, word) +
                  "\nmachine: " + machine_text(m) + "\n" +
                  square_diff("formula", sq, "simulator", simulated);
        return;
      }
      if (dual(sq) != mirror) {
        failure = "dual mismatch on w=" + word_text(m.alphabet, word) +
                  ": dual(square(m,w)) != square(swap(m), reverse(w))\nmachine: " +
                  machine_text(m);
        return;
      }
    }
    if (static_cast<int>(word.size()) == max_len) return;
    for (int x = 0; x < ns && !failure; ++x) {
      word.push_back(x);
      const Square next = word.size() == 1 ? letters[static_cast<std::size_t>(x)]
                                           : h.vc(sq, letters[static_cast<std::size_t>(x)]);
      const Square next_mirror = word.size() == 1
                                     ? letters_swapped[static_cast<std::size_t>(x)]
                                     : h.vc(letters_swapped[static_cast<std::size_t>(x)], mirror);
      walk(next, next_mirror);
      word.pop_back();
    }
  };
  const Square seed = identity_square(m.states);
  walk(seed, seed);
  return failure;
}

std::optional<std::string> split_trial(Rng& rng, int, const Options& opts) {
  const TwoWayAutomaton m =
      random_twoway(rng, effective(opts.max_states, 4), effective(opts.max_symbols, 3));
  const SplitResult split = split_to_birget(m);

  const auto ql = left_moving_states(split.machine);
  const auto qr = right_moving_states(split.machine);
  for (std::size_t q = 0; q < ql.size(); ++q) {
    if (ql[q] && qr[q]) {
      return "split machine still has a two-sided state\nmachine: " + machine_text(m);
    }
  }

  auto project = [&](const Rel& r) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [b, a] : r.pairs()) {
      pairs.emplace_back(static_cast<std::size_t>(split.to_original[b]),
                         static_cast<std::size_t>(split.to_original[a]));
    }
    return Rel::from_pairs(m.states, m.states, pairs);
  };

  const int ns = static_cast<int>(m.alphabet.size());
  const int max_len = effective(opts.max_length, 3);
  std::vector<int> word;
  std::optional<std::string> failure;
  std::function<void()> walk = [&]() {
    if (failure) return;
    if (!word.empty()) {
      const Square original = twoway_oracle(m, word);
      const Square through = twoway_oracle(split.machine, word);
      const Square projected(m.states, project(through.pass_left), project(through.left_turn),
                             project(through.right_turn), project(through.pass_right));
      if (projected != original) {
        failure = "split machine's projected square differs on w=" +
                  word_text(m.alphabet, word) + "\nmachine: " + machine_text(m) + "\n" +
                  square_diff("projected", projected, "original", original);
        return;
      }
    }
    if (static_cast<int>(word.size()) == max_len) return;
    for (int x = 0; x < ns && !failure; ++x) {
      word.push_back(x);
      walk();
      word.pop_back();
    }
  };
  walk();
  return failure;
}

std::optional<std::string> proposition_trial(Rng& rng, int, const Options& opts) {
  const Btm m = random_btm(rng, effective(opts.max_states, 3), effective(opts.max_symbols, 2));
  const int n = rng.between(1, effective(opts.max_length, 3));
  const Square s = btm_oracle(m, n);
  const Rel& L = s.pass_left;
  const Rel& R = s.pass_right;
  const Rel& Tl = s.left_turn;
  const Rel& Tr = s.right_turn;

  const struct {
    const char* name;
    Rel lhs;
    Rel rhs;
  } identities[] = {
      {"pass_left", L, Tl * L * star(R * L) * Tr},
      {"pass_right", R, Tr * R * star(L * R) * Tl},
      {"left_turn", Tl, Tl * star(L * R) * Tl},
      {"right_turn", Tr, Tr * star(R * L) * Tr},
  };
  for (const auto& id : identities) {
    if (id.lhs != id.rhs) {
      return std::string("computation-relation identity fails for ") + id.name +
             " at n=" + std::to_string(n) + "\nmachine: " + machine_text(m) +
             "\nlhs: " + rel_to_text(id.lhs) + "\nrhs: " + rel_to_text(id.rhs);
    }
  }
  return std::nullopt;
}

std::optional<std::string> execution_trial(Rng& rng, int, const Options& opts) {
  const Btm m = random_btm(rng, effective(opts.max_states, 3), effective(opts.max_symbols, 2));
  const Square algebraic = execution_letter(m);
  const Square simulated = btm_oracle(m, 1);
  if (algebraic != simulated) {
    return "execution-formula square differs from simulator at n=1\nmachine: " +
           machine_text(m) + "\n" + square_diff("formula", algebraic, "simulator", simulated);
  }
  return std::nullopt;
}

std::optional<std::string> lift_trial(Rng& rng, int, const Options& opts) {
  const int nq = rng.between(1, effective(opts.max_states, 3));
  const int ns = rng.between(1, effective(opts.max_symbols, 2));
  const CodecFamily family{state_carrier(nq), symbol_carrier(ns)};

  // Homomorphism laws for both lifts.
  {
    const int base = rng.between(0, 2);
    const int pad = rng.between(0, 2);
    const CnCodec codec = family.at(base);
    const Rel x = random_rel(rng, codec.carrier(), codec.carrier());
    const Rel y = random_rel(rng, codec.carrier(), codec.carrier());
    if (lift_r(codec, compose(x, y), pad) != compose(lift_r(codec, x, pad), lift_r(codec, y, pad)))
      return "lift_r is not a homomorphism (base " + std::to_string(base) + ", pad " +
             std::to_string(pad) + ")";
    if (lift_l(codec, compose(x, y), pad) != compose(lift_l(codec, x, pad), lift_l(codec, y, pad)))
      return "lift_l is not a homomorphism (base " + std::to_string(base) + ", pad " +
             std::to_string(pad) + ")";
    const Rel id = Rel::identity(codec.carrier());
    const CnCodec lifted = family.at(base + pad);
    if (lift_r(codec, id, pad) != Rel::identity(lifted.carrier()) ||
        lift_l(codec, id, pad) != Rel::identity(lifted.carrier()))
      return "lift does not preserve the identity";
  }

  // Stitching: composing an appended lift with a prepended lift enumerates
  // exactly the pairs glued on the shared middle state.
  {
    const int n = rng.between(0, 2);
    const int m = rng.between(0, 2);
    const CnCodec cn = family.at(n);
    const CnCodec cm = family.at(m);
    const CnCodec cnm = family.at(n + m);
    const Rel y = random_rel(rng, cn.carrier(), cn.carrier());
    const Rel x = random_rel(rng, cm.carrier(), cm.carrier());
    const Rel composite = compose(lift_l(cn, y, m), lift_r(cm, x, n));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [yb, ya] : y.pairs()) {
      const auto [q2, z] = cn.decode(yb);
      const auto [q1y, yw] = cn.decode(ya);
      for (const auto& [xb, xa] : x.pairs()) {
        const auto [q1x, v] = cm.decode(xb);
        const auto [q0, u] = cm.decode(xa);
        if (q1x != q1y) continue;
        auto zv = z;
        zv.insert(zv.end(), v.begin(), v.end());
        auto yu = yw;
        yu.insert(yu.end(), u.begin(), u.end());
        pairs.emplace_back(cnm.encode(q2, zv), cnm.encode(q0, yu));
      }
    }
    const Rel expected = Rel::from_pairs(cnm.carrier(), cnm.carrier(), pairs);
    if (composite != expected) {
      return "stitched lift composite differs from direct enumeration (n=" + std::to_string(n) +
             ", m=" + std::to_string(m) + ")\ncomposite: " + rel_to_text(composite) +
             "\nexpected: " + rel_to_text(expected);
    }
  }
  return std::nullopt;
}

std::optional<std::string> length_composition_trial(Rng& rng, int, const Options& opts,
                                                    const Harness& h) {
  const Btm m = random_btm(rng, effective(opts.max_states, 3), effective(opts.max_symbols, 2));
  const CodecFamily family{m.states, m.alphabet};
  const int max_n = effective(opts.max_length, 3);

  std::vector<TInftyElem> t;
  for (int n = 0; n <= std::max(max_n, 4); ++n) t.push_back(h.computation_square_h(m, n));

  for (int n = 0; n <= max_n; ++n) {
    const Square simulated = btm_oracle(m, n);
    if (t[static_cast<std::size_t>(n)].square != simulated) {
      return "composed computation square differs from simulator at n=" + std::to_string(n) +
             "\nmachine: " + machine_text(m) + "\n" +
             square_diff("composed", t[static_cast<std::size_t>(n)].square, "simulator",
                         simulated);
    }
  }
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 4; ++b) {
      const TInftyElem joined =
          h.compose_lengths_h(family, t[static_cast<std::size_t>(a)],
                              t[static_cast<std::size_t>(b)]);
      if (joined.square != t[static_cast<std::size_t>(a + b)].square) {
        return "length homomorphism fails at a=" + std::to_string(a) +
               " b=" + std::to_string(b) + "\nmachine: " + machine_text(m);
      }
    }
  }
  // Both factor orders give the relations of the combined length.
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      const auto ab = h.compose_lengths_h(family, t[static_cast<std::size_t>(a)],
                                          t[static_cast<std::size_t>(b)]);
      const auto ba = h.compose_lengths_h(family, t[static_cast<std::size_t>(b)],
                                          t[static_cast<std::size_t>(a)]);
      if (ab.square != t[static_cast<std::size_t>(a + b)].square ||
          ba.square != t[static_cast<std::size_t>(a + b)].square) {
        return "factor orders disagree at a=" + std::to_string(a) + " b=" + std::to_string(b) +
               "\nmachine: " + machine_text(m);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> monoid_law_trial(Rng& rng, int, const Options& opts,
                                            const Harness& h) {
  const Btm m = random_btm(rng, effective(opts.max_states, 3), effective(opts.max_symbols, 2));
  const CodecFamily family{m.states, m.alphabet};
  const int a = rng.between(0, 2);
  const int b = rng.between(0, 2);
  const int c = rng.between(0, std::max(0, 4 - a - b));
  const TInftyElem ta = h.computation_square_h(m, a);
  const TInftyElem tb = h.computation_square_h(m, b);
  const TInftyElem tc = h.computation_square_h(m, c);

  const TInftyElem left = h.compose_lengths_h(family, h.compose_lengths_h(family, ta, tb), tc);
  const TInftyElem right = h.compose_lengths_h(family, ta, h.compose_lengths_h(family, tb, tc));
  if (left.square != right.square || left.tape_len != right.tape_len) {
    return "length composition is not associative at (" + std::to_string(a) + "," +
           std::to_string(b) + "," + std::to_string(c) + ")\nmachine: " + machine_text(m);
  }
  const TInftyElem unit{identity_square(family.at(0).carrier()), 0};
  const TInftyElem lu = h.compose_lengths_h(family, unit, ta);
  const TInftyElem ru = h.compose_lengths_h(family, ta, unit);
  if (lu.square != ta.square || ru.square != ta.square) {
    return "length-0 square is not an identity at a=" + std::to_string(a) +
           "\nmachine: " + machine_text(m);
  }
  return std::nullopt;
}

std::optional<std::string> interchange_check(const Harness& h, const Square& a, const Square& b,
                                             const Square& c, const Square& d) {
  const Square lhs = hcompose(h.vc(a, c), h.vc(b, d));
  const Square rhs = h.vc(hcompose(a, b), hcompose(c, d));
  if (lhs != rhs) {
    return square_diff("h(v(a,c), v(b,d))", lhs, "v(h(a,b), h(c,d))", rhs);
  }
  return std::nullopt;
}

std::optional<std::string> interchange_trial(Rng& rng, int trial, const Harness& h) {
  if (trial == 0) {
    // Exhaustive sweep on the one-point carrier: every assignment of the
    // sixteen entries across the four squares.
    const Carrier one(1);
    auto square_of = [&](int bits) {
      auto entry = [&](int bit) {
        return bit ? Rel::identity(one) : Rel(one, one);
      };
      return Square(one, entry(bits & 1), entry(bits & 2), entry(bits & 4), entry(bits & 8));
    };
    for (int bits = 0; bits < (1 << 16); ++bits) {
      const Square a = square_of(bits & 0xf);
      const Square b = square_of((bits >> 4) & 0xf);
      const Square c = square_of((bits >> 8) & 0xf);
      const Square d = square_of((bits >> 12) & 0xf);
      if (auto diff = interchange_check(h, a, b, c, d)) {
        return "interchange law fails exhaustively at assignment " + std::to_string(bits) +
               "\n" + *diff;
      }
    }
  }
  const Carrier c(static_cast<std::size_t>(rng.between(1, 3)));
  const Square qa = random_square(rng, c);
  const Square qb = random_square(rng, c);
  const Square qc = random_square(rng, c);
  const Square qd = random_square(rng, c);
  if (auto diff = interchange_check(h, qa, qb, qc, qd)) {
    return "interchange law fails on a random quadruple (carrier " +
           std::to_string(c.size()) + ")\n" + *diff;
  }
  return std::nullopt;
}

std::optional<std::string> horizontal_idempotence_trial(Rng& rng, int, const Options& opts) {
  const Btm m = random_btm(rng, effective(opts.max_states, 3), effective(opts.max_symbols, 2));
  const int n = rng.between(0, effective(opts.max_length, 2));
  const Square s = btm_oracle(m, n);
  const Square twice = hcompose(s, s);
  if (twice != s) {
    return "computation square is not horizontally idempotent at n=" + std::to_string(n) +
           "\nmachine: " + machine_text(m) + "\n" + square_diff("h(s,s)", twice, "s", s);
  }
  return std::nullopt;
}

/// Direct configuration search over Btm rules, kept independent of the
/// oracle's graph encoding: configs are explicit (word, pos, state) tuples.
std::set<std::pair<int, std::vector<int>>> reachable_at_boundary(const Btm& m,
                                                                 const std::vector<int>& word,
                                                                 int start_pos, int start_state,
                                                                 int end_pos) {
  using Config = std::tuple<std::vector<int>, int, int>;
  std::set<Config> seen;
  std::vector<Config> queue{{word, start_pos, start_state}};
  seen.insert(queue.front());
  const int n = static_cast<int>(word.size());
  while (!queue.empty()) {
    auto [w, pos, q] = queue.back();
    queue.pop_back();
    auto push = [&](std::vector<int> w2, int pos2, int q2) {
      Config c{std::move(w2), pos2, q2};
      if (seen.insert(c).second) queue.push_back(std::move(c));
    };
    if (pos < n) {
      const auto x = static_cast<std::size_t>(w[static_cast<std::size_t>(pos)]);
      const auto uq = static_cast<std::size_t>(q);
      for (int z : m.right_out[x][uq]) {
        for (int cstate : m.right_next[x][uq]) {
          auto w2 = w;
          w2[static_cast<std::size_t>(pos)] = z;
          push(std::move(w2), pos + 1, cstate);
        }
      }
    }
    if (pos > 0) {
      const auto x = static_cast<std::size_t>(w[static_cast<std::size_t>(pos - 1)]);
      const auto uq = static_cast<std::size_t>(q);
      for (int y : m.left_out[x][uq]) {
        for (int bstate : m.left_next[x][uq]) {
          auto w2 = w;
          w2[static_cast<std::size_t>(pos - 1)] = y;
          push(std::move(w2), pos - 1, bstate);
        }
      }
    }
  }
  std::set<std::pair<int, std::vector<int>>> out;
  for (const auto& [w, pos, q] : seen) {
    if (pos == end_pos) out.emplace(q, w);
  }
  return out;
}

std::optional<std::string> extraction_trial(Rng& rng, int, const Options& opts) {
  const Btm m = random_btm(rng, effective(opts.max_states, 3), effective(opts.max_symbols, 2));
  const int n = rng.between(1, effective(opts.max_length, 3));
  const CnCodec codec(m.states, m.alphabet, n);
  const Square s = btm_oracle(m, n);
  const int q = rng.below(static_cast<int>(m.states.size()));
  const auto u = random_word(rng, static_cast<int>(m.alphabet.size()), n, n);

  // pass_right pins configurations at the left boundary, pass_left at the
  // right boundary.
  const struct {
    const Rel& rel;
    int src_pos;
    int dst_pos;
  } cases[] = {{s.pass_right, 0, n}, {s.pass_left, n, 0}, {s.left_turn, 0, 0}};
  for (const auto& c : cases) {
    const auto forward = extract(codec, c.rel, FixedEnd::source, q, u);
    if (forward != reachable_at_boundary(m, u, c.src_pos, q, c.dst_pos)) {
      return "extract(source) disagrees with direct search at n=" + std::to_string(n) +
             " u=" + word_text(m.alphabet, u) + "\nmachine: " + machine_text(m);
    }
    // Fixing the target end must enumerate exactly the sources that reach it.
    const auto backward = extract(codec, c.rel, FixedEnd::target, q, u);
    std::set<std::pair<int, std::vector<int>>> expected;
    for (std::size_t i = 0; i < codec.carrier().size(); ++i) {
      const auto [p, v] = codec.decode(i);
      const auto reached = reachable_at_boundary(m, v, c.src_pos, p, c.dst_pos);
      if (reached.count({q, u})) expected.emplace(p, v);
    }
    if (backward != expected) {
      return "extract(target) disagrees with direct search at n=" + std::to_string(n) +
             " u=" + word_text(m.alphabet, u) + "\nmachine: " + machine_text(m);
    }
  }
  return std::nullopt;
}

std::optional<std::string> kernel_budget_trial(Rng& rng, int) {
  const Carrier c(1024);
  const Rel r = random_rel(rng, c, c);
  const auto t0 = std::chrono::steady_clock::now();
  const Rel composed = compose(r, r);
  const auto t1 = std::chrono::steady_clock::now();
  const Rel closed = star(r);
  const auto t2 = std::chrono::steady_clock::now();
  if (composed.pair_count() == 0 && closed.pair_count() == 0) {
    return "kernel produced empty results on a dense random relation";
  }
  const double compose_s = std::chrono::duration<double>(t1 - t0).count();
  const double star_s = std::chrono::duration<double>(t2 - t1).count();
  if (compose_s >= 1.0 || star_s >= 1.0) {
    return "kernel over budget: compose " + std::to_string(compose_s) + "s, star " +
           std::to_string(star_s) + "s on 1024x1024";
  }
  return std::nullopt;
}

}  // namespace

std::vector<CriterionResult> run_all(const Options& opts) {
  const Harness h{opts.corrupt_vcompose};

  struct Entry {
    int id;
    const char* name;
    int default_trials;
    bool randomized;
    TrialFn fn;
  };
  const std::vector<Entry> entries = {
      {1, "carry machine trace", 1, false, carry_trace_trial},
      {2, "transition homomorphism", 500, true,
       [&](Rng& rng, int t) { return hom_trial(rng, t, opts); }},
      {3, "arrow reversal symmetry", 500, true,
       [&](Rng& rng, int t) { return reversal_trial(rng, t, opts); }},
      {4, "letter squares match the simulator", 200, true,
       [&](Rng& rng, int t) { return resolution_trial(rng, t, opts); }},
      {5, "word squares match the simulator; direction-swap dual", 200, true,
       [&](Rng& rng, int t) { return word_square_trial(rng, t, opts, h); }},
      {6, "state splitting preserves global relations", 100, true,
       [&](Rng& rng, int t) { return split_trial(rng, t, opts); }},
      {7, "computation-relation self identities", 200, true,
       [&](Rng& rng, int t) { return proposition_trial(rng, t, opts); }},
      {8, "execution formula matches the simulator at length 1", 200, true,
       [&](Rng& rng, int t) { return execution_trial(rng, t, opts); }},
      {9, "tape padding lifts: homomorphisms and stitching", 200, true,
       [&](Rng& rng, int t) { return lift_trial(rng, t, opts); }},
      {10, "length composition matches the simulator; both orders agree", 100, true,
       [&](Rng& rng, int t) { return length_composition_trial(rng, t, opts, h); }},
      {11, "length-tagged monoid laws", 100, true,
       [&](Rng& rng, int t) { return monoid_law_trial(rng, t, opts, h); }},
      {12, "interchange law", 1000, true,
       [&](Rng& rng, int t) { return interchange_trial(rng, t, h); }},
      {13, "horizontal idempotence of computation squares", 100, true,
       [&](Rng& rng, int t) { return horizontal_idempotence_trial(rng, t, opts); }},
      {14, "extraction agrees with direct search", 100, true,
       [&](Rng& rng, int t) { return extraction_trial(rng, t, opts); }},
      {15, "kernel performance budget", 1, false, kernel_budget_trial},
  };

  std::vector<CriterionResult> results;
  for (const auto& entry : entries) {
    CriterionResult r;
    r.id = entry.id;
    r.name = entry.name;
    const int trials = entry.randomized
                           ? (opts.trials >= 0 ? opts.trials : entry.default_trials)
                           : entry.default_trials;
    if (entry.randomized && trials == 0) {
      r.skipped = true;
      results.push_back(std::move(r));
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    auto failure = run_trials(trials, opts.threads, opts.seed, entry.id, entry.fn);
    const auto t1 = std::chrono::steady_clock::now();
    r.trials_run = trials;
    r.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (failure) {
      r.passed = false;
      r.counterexample = std::move(failure);
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace relmach::verify
