#include "relmach/carrier.hpp"

#include <stdexcept>
#include <unordered_set>

namespace relmach {

Carrier::Carrier(std::vector<std::string> labels) : size_(labels.size()) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument("carrier: duplicate label '" + l + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::string Carrier::label(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("carrier: index out of range");
  if (labels_) return (*labels_)[i];
  return std::to_string(i);
}

std::optional<std::size_t> Carrier::index_of(const std::string& label) const {
  if (!labels_) return std::nullopt;
  for (std::size_t i = 0; i < labels_->size(); ++i) {
    if ((*labels_)[i] == label) return i;
  }
  return std::nullopt;
}

bool operator==(const Carrier& a, const Carrier& b) {
  if (a.size_ != b.size_) return false;
  if (a.labels_ == b.labels_) return true;
  if (!a.labels_ || !b.labels_) return !a.labels_ && !b.labels_;
  return *a.labels_ == *b.labels_;
}

}  // namespace relmach
