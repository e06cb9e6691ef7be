#include "relmach/codec.hpp"

#include <stdexcept>
#include <string>

namespace relmach {

CnCodec::CnCodec(Carrier states, Carrier alphabet, int n)
    : states_(std::move(states)), alphabet_(std::move(alphabet)), n_(n) {
  if (n < 0) throw std::invalid_argument("codec: negative word length");
  for (int i = 0; i < n_; ++i) word_count_ *= alphabet_.size();

  std::vector<std::string> labels;
  labels.reserve(word_count_ * states_.size());
  for (std::size_t w = 0; w < word_count_; ++w) {
    std::string word;
    for (int v : word_of_value(w)) word += alphabet_.label(static_cast<std::size_t>(v));
    for (std::size_t q = 0; q < states_.size(); ++q) {
      labels.push_back("[" + states_.label(q) + "," + word + "]");
    }
  }
  carrier_ = Carrier(std::move(labels));
}

std::size_t CnCodec::word_value(std::span<const int> word) const {
  if (word.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("codec: word length mismatch");
  }
  std::size_t value = 0;
  for (int s : word) {
    if (s < 0 || static_cast<std::size_t>(s) >= alphabet_.size()) {
      throw std::invalid_argument("codec: symbol index out of range");
    }
    value = value * alphabet_.size() + static_cast<std::size_t>(s);
  }
  return value;
}

std::vector<int> CnCodec::word_of_value(std::size_t value) const {
  if (n_ > 0 && alphabet_.size() == 0) {
    throw std::invalid_argument("codec: no words over an empty alphabet");
  }
  std::vector<int> word(static_cast<std::size_t>(n_));
  for (int i = n_ - 1; i >= 0; --i) {
    word[static_cast<std::size_t>(i)] = static_cast<int>(value % alphabet_.size());
    value /= alphabet_.size();
  }
  return word;
}

std::size_t CnCodec::encode(int state, std::span<const int> word) const {
  return encode_value(state, word_value(word));
}

std::size_t CnCodec::encode_value(int state, std::size_t word_value) const {
  if (state < 0 || static_cast<std::size_t>(state) >= states_.size()) {
    throw std::invalid_argument("codec: state index out of range");
  }
  return static_cast<std::size_t>(state) + states_.size() * word_value;
}

std::pair<int, std::vector<int>> CnCodec::decode(std::size_t index) const {
  if (index >= carrier_.size()) throw std::out_of_range("codec: index out of range");
  const int state = static_cast<int>(index % states_.size());
  return {state, word_of_value(index / states_.size())};
}

}  // namespace relmach
