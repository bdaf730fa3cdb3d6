#ifndef LARGESUB_SUBGROUP_HPP
#define LARGESUB_SUBGROUP_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace largesub {

/// Index of an element in its group; the identity is always 0.
using Element = std::uint32_t;

/// A set of element indices of a fixed parent group, stored as a bitset.
/// Equality is set equality; ordering is the canonical one used for
/// deterministic output (smaller sets first, then lexicographic on the
/// sorted element lists).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::span<const Element> elements);

  static ElementSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(Element x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  // Returns true if x was not present before.
  bool insert(Element x) noexcept {
    std::uint64_t& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept;
  ElementSet intersect(const ElementSet& other) const;
  ElementSet unite(const ElementSet& other) const;

  std::vector<Element> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<Element>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.count_ == b.count_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const ElementSet& a,
                                          const ElementSet& b) noexcept;

 private:
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A subgroup of a parent group, identified by its element set. Values of
/// this type are only produced by operations that guarantee closure (or by
/// `Subgroup::trusted`, which is for code that has just established it).
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup trivial(std::size_t parent_order);
  static Subgroup whole(std::size_t parent_order);
  static Subgroup trusted(ElementSet elements) {
    return Subgroup(std::move(elements));
  }

  std::size_t parent_order() const noexcept { return set_.universe(); }
  std::size_t order() const noexcept { return set_.size(); }
  std::size_t index() const noexcept { return parent_order() / order(); }
  bool is_trivial() const noexcept { return order() == 1; }
  bool is_whole() const noexcept { return order() == parent_order(); }
  bool contains(Element x) const noexcept { return set_.contains(x); }
  bool is_subgroup_of(const Subgroup& other) const noexcept {
    return set_.is_subset_of(other.set_);
  }
  std::vector<Element> elements() const { return set_.elements(); }
  const ElementSet& set() const noexcept { return set_; }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend std::strong_ordering operator<=>(const Subgroup& a,
                                          const Subgroup& b) noexcept {
    return a.set_ <=> b.set_;
  }

 private:
  explicit Subgroup(ElementSet s) : set_(std::move(s)) {}
  ElementSet set_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const noexcept {
    return s.set().hash();
  }
};

}  // namespace largesub

#endif  // LARGESUB_SUBGROUP_HPP
