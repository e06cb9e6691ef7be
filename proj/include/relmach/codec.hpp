#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "relmach/carrier.hpp"

namespace relmach {

/// Bijection between (state, word of length n) pairs and a dense index
/// range. A pair (q, u) maps to q + |Q| * value(u), where value reads u in
/// base |alphabet| with the leftmost symbol most significant. The generated
/// carrier labels are "[q,u]".
class CnCodec {
 public:
  CnCodec(Carrier states, Carrier alphabet, int n);

  int word_length() const { return n_; }
  std::size_t word_count() const { return word_count_; }
  const Carrier& states() const { return states_; }
  const Carrier& alphabet() const { return alphabet_; }
  const Carrier& carrier() const { return carrier_; }

  std::size_t encode(int state, std::span<const int> word) const;
  std::size_t encode_value(int state, std::size_t word_value) const;
  std::pair<int, std::vector<int>> decode(std::size_t index) const;

  std::size_t word_value(std::span<const int> word) const;
  std::vector<int> word_of_value(std::size_t value) const;

 private:
  Carrier states_;
  Carrier alphabet_;
  int n_ = 0;
  std::size_t word_count_ = 1;
  Carrier carrier_;
};

}  // namespace relmach
