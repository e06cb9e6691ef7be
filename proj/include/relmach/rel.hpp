#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "relmach/bitmatrix.hpp"
#include "relmach/carrier.hpp"

namespace relmach {

/// A binary relation between two finite carriers.
///
/// Pairs follow the function convention throughout: (b, a) means a maps to b,
/// so a pair is always written target first. Composition applies the right
/// factor first, exactly like function application. Internally a relation is
/// a bit matrix with one row per target and one column per source.
///
/// Values are immutable once built; every operation returns a fresh relation.
class Rel {
 public:
  /// The empty relation between dom and cod.
  Rel(Carrier dom, Carrier cod)
      : dom_(std::move(dom)), cod_(std::move(cod)), bits_(cod_.size(), dom_.size()) {}

  static Rel identity(const Carrier& c);

  /// Builds from (target, source) pairs; indices are range-checked.
  static Rel from_pairs(Carrier dom, Carrier cod,
                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  const Carrier& dom() const { return dom_; }
  const Carrier& cod() const { return cod_; }

  bool contains(std::size_t target, std::size_t source) const {
    return bits_.get(target, source);
  }

  bool empty() const { return !bits_.any(); }
  std::size_t pair_count() const { return bits_.count(); }

  /// All pairs, sorted lexicographically by (target, source) index.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  const BitMatrix& bits() const { return bits_; }

  friend bool operator==(const Rel& a, const Rel& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Rel& a, const Rel& b) { return !(a == b); }

 private:
  friend Rel compose(const Rel&, const Rel&);
  friend Rel unite(const Rel&, const Rel&);
  friend Rel converse(const Rel&);
  friend bool subset(const Rel&, const Rel&);

  Carrier dom_;
  Carrier cod_;
  BitMatrix bits_;
};

/// s after r: (c,a) in the result iff some b has (c,b) in s and (b,a) in r.
/// Requires s.dom == r.cod.
Rel compose(const Rel& s, const Rel& r);

/// Set union; requires equal carriers on both sides.
Rel unite(const Rel& r, const Rel& s);

/// Reflexive-transitive closure of a square relation, computed by repeated
/// squaring of (identity | r) until the fixpoint.
Rel star(const Rel& r);

/// Flips every pair: (a,b) in the result iff (b,a) in r.
Rel converse(const Rel& r);

/// The partial identity 1_A for a subset A of the carrier.
Rel restriction(const Carrier& c, const std::vector<std::size_t>& members);
Rel restriction(const Carrier& c, const std::vector<bool>& members);

/// True iff every pair of r is a pair of s (same carriers required).
bool subset(const Rel& r, const Rel& s);

inline Rel operator*(const Rel& s, const Rel& r) { return compose(s, r); }
inline Rel operator|(const Rel& r, const Rel& s) { return unite(r, s); }

}  // namespace relmach
