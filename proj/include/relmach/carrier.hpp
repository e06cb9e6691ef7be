#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace relmach {

/// A finite indexed ground set. Relations are defined between carriers;
/// the optional labels are used for display and serialization only.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::size_t size) : size_(size) {}
  explicit Carrier(std::vector<std::string> labels);

  std::size_t size() const { return size_; }
  bool labeled() const { return labels_ != nullptr; }

  /// Element name; falls back to the decimal index when unlabeled.
  std::string label(std::size_t i) const;

  const std::vector<std::string>* labels() const { return labels_.get(); }

  std::optional<std::size_t> index_of(const std::string& label) const;

  friend bool operator==(const Carrier& a, const Carrier& b);
  friend bool operator!=(const Carrier& a, const Carrier& b) { return !(a == b); }

 private:
  std::size_t size_ = 0;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

}  // namespace relmach
