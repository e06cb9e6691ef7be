#pragma once

#include <utility>

#include "relmach/rel.hpp"

namespace relmach {

/// An endomorphism square: four relations on one carrier, laid out as the
/// 2x2 matrix
///
///     ( pass_left   left_turn  )
///     ( right_turn  pass_right )
///
/// For a two-way machine on a word this holds the four global transition
/// relations (right-to-left pass, left-boundary turn, right-boundary turn,
/// left-to-right pass); for a bounded Turing machine on a tape length it
/// holds the four computation relations.
struct Square {
  Carrier carrier;
  Rel pass_left;
  Rel left_turn;
  Rel right_turn;
  Rel pass_right;

  Square(Carrier c, Rel pl, Rel lt, Rel rt, Rel pr);

  friend bool operator==(const Square& a, const Square& b) {
    return a.pass_left == b.pass_left && a.left_turn == b.left_turn &&
           a.right_turn == b.right_turn && a.pass_right == b.pass_right;
  }
  friend bool operator!=(const Square& a, const Square& b) { return !(a == b); }
};

/// Passes are identities, turns are empty: the unit of vertical composition.
Square identity_square(const Carrier& c);

/// All four entries empty.
Square zero_square(const Carrier& c);

/// Vertical (feedback) composition, the matrix product with Kleene-star
/// feedback. With second = ((e f),(g h)) and first = ((a b),(c d)):
///
///   pass_left  = e (bg)* a
///   left_turn  = f | e (bg)* b h
///   right_turn = c | d (gb)* g a
///   pass_right = d (gb)* h
///
/// `first` is the right matrix factor, i.e. the factor applied first.
Square vcompose(const Square& second, const Square& first);

/// Horizontal composition: the same sum-over-paths construction with the
/// squares placed side by side. The frozen edge mapping is the one vcompose
/// uses for its own diagram — pass_left on the outgoing left edge,
/// right_turn on the top edge, left_turn on the bottom edge, pass_right on
/// the right edge — so the shared edge is left.pass_right (upward) against
/// right.pass_left (downward). With left = (c top, a left, b bottom,
/// d shared) and right = (t top, r shared, s bottom, u right):
///
///   right_turn = t (dr)* c          (top edge)
///   pass_left  = a | b (rd)* r c    (left edge)
///   left_turn  = b (rd)* s          (bottom edge)
///   pass_right = u | t (dr)* d s    (right edge)
///
/// Under this mapping the horizontal idempotence of computation squares is
/// exactly their four self-composition identities.
Square hcompose(const Square& left, const Square& right);

/// Swaps pass_left with pass_right and left_turn with right_turn. This is
/// the compact-closed dual on endomorphism squares; it is an involution and
/// contravariant over vcompose.
Square dual(const Square& s);

}  // namespace relmach
