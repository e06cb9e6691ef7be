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

/// The square of the empty word: restrictions to the left/right-moving
/// state sets on the pass slots, empty turns. It is idempotent and acts as
/// the identity on every global transition square of the machine.
Square empty_word_square(const TwoWayAutomaton& m);

/// Global transition relations of a single letter, by the resolution
/// formula over the step relations j = right step, k = left step:
///
///   pass_left  = 1_Ql k (jk)* 1_Ql     left_turn  = 1_Ql (kj)(kj)* 1_Qr
///   right_turn = 1_Qr (jk)(jk)* 1_Ql   pass_right = 1_Qr j (kj)* 1_Qr
Square resolution_letter(const TwoWayAutomaton& m, int symbol);

/// Global transition relations of a non-empty word: the vertical
/// composition of its letter squares, rightmost letter as the first
/// (right) factor.
Square word_square(const TwoWayAutomaton& m, std::span<const int> word);

/// Computation relations of tape length 1, by the execution formula: the
/// resolution formula of the letter automaton without the boundary
/// restrictions, with zero-step computations folded into the turns:
///
///   pass_left = k (jk)*   left_turn = (kj)*   right_turn = (jk)*
///   pass_right = j (kj)*
///
/// Indices live on C_1 through the codec.
Square execution_letter(const Btm& m);

/// Tape padding embeddings between the relation monoids on C_n. lift_r
/// prepends every word of length pad on the left of both sides of a pair;
/// lift_l appends on the right. Both are monoid homomorphisms.
Rel lift_r(const CnCodec& source, const Rel& s, int pad);
Rel lift_l(const CnCodec& source, const Rel& s, int pad);

/// Componentwise lifts of whole squares.
Square lift_square_r(const CnCodec& source, const Square& s, int pad);
Square lift_square_l(const CnCodec& source, const Square& s, int pad);

/// A square tagged with its tape length; element of the union-over-lengths
/// monoid whose product lifts both factors to the combined length and
/// composes vertically.
struct TInftyElem {
  Square square;
  int tape_len = 0;
};

/// Shared (state, alphabet) context for length-tagged composition.
struct CodecFamily {
  Carrier states;
  Carrier alphabet;

  CnCodec at(int n) const { return CnCodec(states, alphabet, n); }
};

/// Product of length-tagged squares: left is the left tape part, right the
/// right part. The left factor is lifted by appending, the right factor by
/// prepending, and the results compose vertically with the lifted left
/// square as the second (left) factor.
TInftyElem compose_lengths(const CodecFamily& family, const TInftyElem& left,
                           const TInftyElem& right);

/// Computation relations of tape length n built algebraically: the n-fold
/// length-composition of the execution-formula square. Length 0 is the
/// identity square on C_0.
TInftyElem computation_square(const Btm& m, int n);

enum class FixedEnd { source, target };

/// Reads specific computations out of a computation relation: pins (q, u)
/// at the source (or target) end and decodes the image (or preimage) set.
std::set<std::pair<int, std::vector<int>>> extract(const CnCodec& codec, const Rel& s,
                                                   FixedEnd fixed_end, int state,
                                                   std::span<const int> word);

}  // namespace relmach
