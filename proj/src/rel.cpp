#include "relmach/rel.hpp"

#include <stdexcept>

namespace relmach {

Rel Rel::identity(const Carrier& c) {
  Rel r(c, c);
  r.bits_ = BitMatrix::identity(c.size());
  return r;
}

Rel Rel::from_pairs(Carrier dom, Carrier cod,
                    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Rel r(std::move(dom), std::move(cod));
  for (const auto& [target, source] : pairs) {
    if (target >= r.cod_.size() || source >= r.dom_.size()) {
      throw std::invalid_argument("rel: pair (" + std::to_string(target) + "," +
                                  std::to_string(source) + ") out of range");
    }
    r.bits_.set(target, source);
  }
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> Rel::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(pair_count());
  bits_.for_each_set([&](std::size_t t, std::size_t s) { out.emplace_back(t, s); });
  return out;
}

Rel compose(const Rel& s, const Rel& r) {
  if (s.dom() != r.cod()) {
    throw std::invalid_argument("compose: inner carriers differ");
  }
  Rel out(r.dom_, s.cod_);
  out.bits_ = BitMatrix::product(s.bits_, r.bits_);
  return out;
}

Rel unite(const Rel& r, const Rel& s) {
  if (r.dom() != s.dom() || r.cod() != s.cod()) {
    throw std::invalid_argument("unite: carriers differ");
  }
  Rel out = r;
  out.bits_.or_with(s.bits_);
  return out;
}

Rel star(const Rel& r) {
  if (r.dom() != r.cod()) {
    throw std::invalid_argument("star: relation is not square");
  }
  Rel s = unite(Rel::identity(r.dom()), r);
  for (;;) {
    Rel next = compose(s, s);
    if (next == s) return s;
    s = std::move(next);
  }
}

Rel converse(const Rel& r) {
  Rel out(r.cod_, r.dom_);
  out.bits_ = r.bits_.transposed();
  return out;
}

Rel restriction(const Carrier& c, const std::vector<std::size_t>& members) {
  Rel r(c, c);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(members.size());
  for (auto i : members) pairs.emplace_back(i, i);
  return Rel::from_pairs(c, c, pairs);
}

Rel restriction(const Carrier& c, const std::vector<bool>& members) {
  if (members.size() != c.size()) {
    throw std::invalid_argument("restriction: member mask has wrong length");
  }
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i]) idx.push_back(i);
  }
  return restriction(c, idx);
}

bool subset(const Rel& r, const Rel& s) {
  if (r.dom() != s.dom() || r.cod() != s.cod()) {
    throw std::invalid_argument("subset: carriers differ");
  }
  return r.bits_.is_subset_of(s.bits_);
}

}  // namespace relmach
