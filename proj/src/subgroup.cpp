#include "largesub/subgroup.hpp"

#include <bit>

namespace largesub {

ElementSet::ElementSet(std::size_t universe, std::span<const Element> elements)
    : ElementSet(universe) {
  for (Element x : elements) insert(x);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  s.count_ = universe;
  return s;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  if (count_ > other.count_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet r(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    r.words_[w] = words_[w] & other.words_[w];
    r.count_ += static_cast<std::size_t>(std::popcount(r.words_[w]));
  }
  return r;
}

ElementSet ElementSet::unite(const ElementSet& other) const {
  ElementSet r(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    r.words_[w] = words_[w] | other.words_[w];
    r.count_ += static_cast<std::size_t>(std::popcount(r.words_[w]));
  }
  return r;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(count_);
  for_each([&](Element x) { out.push_back(x); });
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 1469598103934665603ull ^ count_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering operator<=>(const ElementSet& a,
                                 const ElementSet& b) noexcept {
  if (auto c = a.count_ <=> b.count_; c != 0) return c;
  // Same size: the sorted lists first differ at the smallest element of the
  // symmetric difference, and whichever set holds it sorts first.
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const std::uint64_t low = diff & (~diff + 1);
    return (a.words_[w] & low) ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Subgroup Subgroup::trivial(std::size_t parent_order) {
  ElementSet s(parent_order);
  s.insert(0);
  return Subgroup(std::move(s));
}

Subgroup Subgroup::whole(std::size_t parent_order) {
  return Subgroup(ElementSet::full(parent_order));
}

}  // namespace largesub
