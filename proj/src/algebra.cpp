#include "relmach/algebra.hpp"

#include <stdexcept>

namespace relmach {

Square empty_word_square(const TwoWayAutomaton& m) {
  const Carrier& c = m.states;
  return Square(c, restriction(c, left_moving_states(m)), Rel(c, c), Rel(c, c),
                restriction(c, right_moving_states(m)));
}

Square resolution_letter(const TwoWayAutomaton& m, int symbol) {
  if (symbol < 0 || static_cast<std::size_t>(symbol) >= m.alphabet.size()) {
    throw std::invalid_argument("resolution_letter: unknown symbol index");
  }
  const Carrier& c = m.states;
  const Rel j = right_step(m, symbol);
  const Rel k = left_step(m, symbol);
  const Rel ql = restriction(c, left_moving_states(m));
  const Rel qr = restriction(c, right_moving_states(m));
  const Rel jk = j * k;
  const Rel kj = k * j;
  return Square(c,
                ql * k * star(jk) * ql,
                ql * kj * star(kj) * qr,
                qr * jk * star(jk) * ql,
                qr * j * star(kj) * qr);
}

Square word_square(const TwoWayAutomaton& m, std::span<const int> word) {
  if (word.empty()) {
    throw std::invalid_argument("word_square: empty word (use empty_word_square)");
  }
  Square acc = resolution_letter(m, word[0]);
  for (std::size_t i = 1; i < word.size(); ++i) {
    acc = vcompose(acc, resolution_letter(m, word[i]));
  }
  return acc;
}

Square execution_letter(const Btm& m) {
  const TwoWayAutomaton letter = btm_to_letter_automaton(m);
  const CnCodec codec(m.states, m.alphabet, 1);
  const Carrier& c = codec.carrier();

  // The letter automaton packs (x, q) at index q + |Q|*x, which is exactly
  // the C_1 index of (q, x); only the carrier labels change.
  auto reindex = [&](const Rel& r) { return Rel::from_pairs(c, c, r.pairs()); };
  const Rel j = reindex(right_step(letter, 0));
  const Rel k = reindex(left_step(letter, 0));
  const Rel jk = j * k;
  const Rel kj = k * j;
  return Square(c, k * star(jk), star(kj), star(jk), j * star(kj));
}

Rel lift_r(const CnCodec& source, const Rel& s, int pad) {
  if (pad < 0) throw std::invalid_argument("lift_r: negative pad");
  if (s.dom() != source.carrier() || s.cod() != source.carrier()) {
    throw std::invalid_argument("lift_r: relation does not live on the source codec");
  }
  const CnCodec target(source.states(), source.alphabet(), source.word_length() + pad);
  // Prepended words are the high digits, so the lift is block-diagonal.
  std::size_t blocks = 1;
  for (int i = 0; i < pad; ++i) blocks *= source.alphabet().size();
  const std::size_t block_size = source.carrier().size();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [b, a] : s.pairs()) {
    for (std::size_t w = 0; w < blocks; ++w) {
      pairs.emplace_back(b + w * block_size, a + w * block_size);
    }
  }
  return Rel::from_pairs(target.carrier(), target.carrier(), pairs);
}

Rel lift_l(const CnCodec& source, const Rel& s, int pad) {
  if (pad < 0) throw std::invalid_argument("lift_l: negative pad");
  if (s.dom() != source.carrier() || s.cod() != source.carrier()) {
    throw std::invalid_argument("lift_l: relation does not live on the source codec");
  }
  const CnCodec target(source.states(), source.alphabet(), source.word_length() + pad);
  std::size_t suffixes = 1;
  for (int i = 0; i < pad; ++i) suffixes *= source.alphabet().size();
  const std::size_t nq = source.states().size();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [b, a] : s.pairs()) {
    const std::size_t bq = b % nq, bw = b / nq;
    const std::size_t aq = a % nq, aw = a / nq;
    for (std::size_t w = 0; w < suffixes; ++w) {
      pairs.emplace_back(bq + nq * (bw * suffixes + w), aq + nq * (aw * suffixes + w));
    }
  }
  return Rel::from_pairs(target.carrier(), target.carrier(), pairs);
}

Square lift_square_r(const CnCodec& source, const Square& s, int pad) {
  const CnCodec target(source.states(), source.alphabet(), source.word_length() + pad);
  return Square(target.carrier(), lift_r(source, s.pass_left, pad),
                lift_r(source, s.left_turn, pad), lift_r(source, s.right_turn, pad),
                lift_r(source, s.pass_right, pad));
}

Square lift_square_l(const CnCodec& source, const Square& s, int pad) {
  const CnCodec target(source.states(), source.alphabet(), source.word_length() + pad);
  return Square(target.carrier(), lift_l(source, s.pass_left, pad),
                lift_l(source, s.left_turn, pad), lift_l(source, s.right_turn, pad),
                lift_l(source, s.pass_right, pad));
}

TInftyElem compose_lengths(const CodecFamily& family, const TInftyElem& left,
                           const TInftyElem& right) {
  const CnCodec left_codec = family.at(left.tape_len);
  const CnCodec right_codec = family.at(right.tape_len);
  if (left.square.carrier != left_codec.carrier() ||
      right.square.carrier != right_codec.carrier()) {
    throw std::invalid_argument("compose_lengths: square does not match its tape length");
  }
  const Square lifted_left = lift_square_l(left_codec, left.square, right.tape_len);
  const Square lifted_right = lift_square_r(right_codec, right.square, left.tape_len);
  return TInftyElem{vcompose(lifted_left, lifted_right), left.tape_len + right.tape_len};
}

TInftyElem computation_square(const Btm& m, int n) {
  if (n < 0) throw std::invalid_argument("computation_square: negative tape length");
  const CodecFamily family{m.states, m.alphabet};
  TInftyElem acc{identity_square(family.at(0).carrier()), 0};
  if (n == 0) return acc;
  const TInftyElem letter{execution_letter(m), 1};
  for (int i = 0; i < n; ++i) acc = compose_lengths(family, acc, letter);
  return acc;
}

std::set<std::pair<int, std::vector<int>>> extract(const CnCodec& codec, const Rel& s,
                                                   FixedEnd fixed_end, int state,
                                                   std::span<const int> word) {
  if (s.dom() != codec.carrier() || s.cod() != codec.carrier()) {
    throw std::invalid_argument("extract: relation does not live on the codec carrier");
  }
  const std::size_t pinned = codec.encode(state, word);
  std::set<std::pair<int, std::vector<int>>> out;
  for (std::size_t i = 0; i < codec.carrier().size(); ++i) {
    const bool hit = fixed_end == FixedEnd::source ? s.contains(i, pinned) : s.contains(pinned, i);
    if (hit) out.insert(codec.decode(i));
  }
  return out;
}

}  // namespace relmach
