#ifndef LARGESUB_GROUP_HPP
#define LARGESUB_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "largesub/error.hpp"
#include "largesub/subgroup.hpp"

namespace largesub {

/// Largest group order any constructor will build. Defaults to 2000.
std::size_t order_cap() noexcept;
void set_order_cap(std::size_t cap) noexcept;

/// Restores the previous cap on scope exit.
class ScopedOrderCap {
 public:
  explicit ScopedOrderCap(std::size_t cap) : previous_(order_cap()) {
    set_order_cap(cap);
  }
  ~ScopedOrderCap() { set_order_cap(previous_); }
  ScopedOrderCap(const ScopedOrderCap&) = delete;
  ScopedOrderCap& operator=(const ScopedOrderCap&) = delete;

 private:
  std::size_t previous_;
};

namespace detail {
struct GroupData;
struct GroupCache;
}  // namespace detail

/// An explicit finite group given by its full multiplication table.
///
/// Elements are the indices 0..order()-1 and the identity is always 0.
/// Instances are immutable and share their table, so copies are cheap and
/// safe to read from several threads. Derived data that is expensive to
/// compute (conjugacy classes, the normal-subgroup list) is memoized in a
/// shared, internally synchronized cache.
class FiniteGroup {
 public:
  /// Builds a group from an n x n table, validating every group axiom.
  /// The identity is relabeled to index 0. Throws NotAGroup with a witness
  /// on failure and OrderCapExceeded when n > order_cap().
  static FiniteGroup from_multiplication_table(
      const std::vector<std::vector<Element>>& table,
      std::vector<std::string> labels = {}, std::string name = {});
  static FiniteGroup from_flat_table(std::size_t n, std::vector<Element> table,
                                     std::vector<std::string> labels = {},
                                     std::string name = {});

  /// Table for a group known to be valid by construction (identity at 0).
  /// Only the cheap Latin-square and identity checks run in debug builds.
  static FiniteGroup trusted(std::size_t n, std::vector<Element> table,
                             std::string name = {},
                             std::vector<std::string> labels = {});

  std::size_t order() const noexcept;
  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  Element inv(Element a) const noexcept;
  static constexpr Element identity() noexcept { return 0; }

  Element conj(Element x, Element g) const noexcept {
    return mul(mul(inv(g), x), g);
  }
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  Element power(Element a, std::size_t k) const noexcept;
  std::size_t element_order(Element a) const;

  /// A small generating set found greedily (empty for the trivial group).
  const std::vector<Element>& generators() const noexcept;

  const std::string& name() const noexcept;
  FiniteGroup renamed(std::string name) const;
  const std::vector<std::string>& labels() const noexcept;
  std::string label(Element x) const;

  bool is_trivial() const noexcept { return order() == 1; }

  /// Row-major copy of the table.
  std::vector<Element> flat_table() const { return {table_, table_ + n_ * n_}; }

  detail::GroupCache& cache() const noexcept { return *cache_; }

  /// Identity test: same data block (not isomorphism).
  bool same_object(const FiniteGroup& other) const noexcept {
    return data_ == other.data_;
  }

 private:
  explicit FiniteGroup(std::shared_ptr<const detail::GroupData> data);

  std::shared_ptr<const detail::GroupData> data_;
  std::shared_ptr<detail::GroupCache> cache_;
  const Element* table_ = nullptr;
  std::size_t n_ = 0;
};

/// Returns a witness triple if associativity fails, checked with Light's
/// test over a generating set (which is exhaustive in effect).
std::optional<std::array<Element, 3>> find_associativity_failure(
    std::size_t n, std::span<const Element> table);

/// Runs the full axiom check on an existing group; nullopt if all hold.
std::optional<std::string> check_group_axioms(const FiniteGroup& g);

// -- permutation input ------------------------------------------------------

/// Permutations in one-line notation: generators[i][p] is the image of
/// point p. Products compose left to right: (a*b)(p) = b(a(p)).
struct PermGenSet {
  std::size_t degree = 0;
  std::vector<std::vector<std::uint32_t>> generators;
};

FiniteGroup from_permutation_generators(const PermGenSet& gens,
                                        std::string name = {});

// -- constructions ----------------------------------------------------------

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Result of a central product, with the embeddings of both factors.
struct CentralProduct {
  FiniteGroup group;
  std::vector<Element> embed_first;
  std::vector<Element> embed_second;
};

/// (G x H) / {(z, pairing(z)^-1)}. `pairing` lists (z, image) pairs; its
/// domain must be a central subgroup of G, its image a central subgroup of
/// H, and it must be an isomorphism. Validated exhaustively.
CentralProduct central_product(
    const FiniteGroup& g, const FiniteGroup& h,
    const std::vector<std::pair<Element, Element>>& pairing);

struct Quotient {
  FiniteGroup group;
  std::vector<Element> projection;  // element of G -> coset index
};

Quotient quotient_group(const FiniteGroup& g, const Subgroup& n);

struct EmbeddedGroup {
  FiniteGroup group;
  std::vector<Element> back_map;  // element of the subgroup -> element of G
};

EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s);

/// Validates closure; throws NotClosed otherwise.
Subgroup make_subgroup(const FiniteGroup& g, std::span<const Element> elements);

// -- abelian groups ---------------------------------------------------------

/// Prime-power orders of a primary decomposition, sorted by prime and then
/// ascending exponent.
struct AbelianInvariants {
  std::vector<std::size_t> primary_orders;
  friend bool operator==(const AbelianInvariants&,
                         const AbelianInvariants&) = default;
};

struct BasisElement {
  Element element;
  std::size_t order;
};

AbelianInvariants abelian_invariants(const FiniteGroup& a);

/// Independent generators of prime-power order whose cyclic spans
/// decompose A directly, listed in the same order as abelian_invariants.
std::vector<BasisElement> abelian_basis(const FiniteGroup& a);

/// Isomorphism between abelian subgroups that sends the i-th basis element
/// of `a` to the i-th basis element of `b`, as pairs of parent elements.
/// Throws NotIsomorphism when the invariants differ.
std::vector<std::pair<Element, Element>> abelian_isomorphism(const EmbeddedGroup& a,
                                                             const EmbeddedGroup& b);

/// Y with Frattini subgroup isomorphic to Z: C_{p^a} -> C_{p^(a+1)}.
FiniteGroup frattini_cover_abelian(const FiniteGroup& z);

}  // namespace largesub

#endif  // LARGESUB_GROUP_HPP
