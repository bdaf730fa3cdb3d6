#ifndef LARGESUB_TESTS_FIXTURES_HPP
#define LARGESUB_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "largesub/catalog.hpp"
#include "largesub/group.hpp"
#include "largesub/structure.hpp"
#include "oracle.hpp"

namespace fixtures {

using largesub::FiniteGroup;

inline const std::vector<std::string>& named_keys() {
  static const std::vector<std::string> keys{
      "trivial",        "cyclic(2)",      "cyclic(3)",      "cyclic(4)",     "cyclic(5)",
      "cyclic(6)",      "cyclic(7)",      "cyclic(8)",      "klein_four",    "symmetric(3)",
      "dihedral(8)",    "quaternion(8)",  "dihedral(10)",   "dihedral(12)",  "alternating(4)",
      "sl(2,3)",        "symmetric(4)",   "quaternion(16)", "alternating(5)", "symmetric(5)",
      "alternating(6)"};
  return keys;
}

inline const std::vector<FiniteGroup>& named_groups() {
  static const std::vector<FiniteGroup> groups = [] {
    std::vector<FiniteGroup> out;
    for (const auto& k : named_keys()) out.push_back(largesub::named_group(k));
    return out;
  }();
  return groups;
}

/// The named groups plus every product of two nontrivial named groups of
/// order at most max_order.
inline std::vector<FiniteGroup> product_corpus(std::size_t max_order = 400) {
  const auto& base = named_groups();
  std::vector<FiniteGroup> out(base.begin(), base.end());
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      if (base[i].is_trivial() || base[j].is_trivial()) continue;
      if (base[i].order() * base[j].order() > max_order) continue;
      out.push_back(largesub::direct_product(base[i], base[j]));
    }
  return out;
}

inline const std::vector<FiniteGroup>& corpus() {
  static const std::vector<FiniteGroup> c = product_corpus();
  return c;
}

/// Small groups suitable for the quadratic subgroup-lattice oracle.
inline std::vector<FiniteGroup> small_groups(std::size_t max_order = 24) {
  std::vector<FiniteGroup> out;
  for (const auto& g : corpus())
    if (g.order() <= max_order) out.push_back(g);
  return out;
}

inline oracle::Set elements(const largesub::Subgroup& s) { return s.elements(); }

inline largesub::Subgroup subgroup(const FiniteGroup& g, const oracle::Set& s) {
  return largesub::make_subgroup(g, s);
}

/// Finds the element with the given label, or aborts the test.
inline largesub::Element by_label(const FiniteGroup& g, const std::string& label) {
  for (largesub::Element x = 0; x < g.order(); ++x)
    if (g.label(x) == label) return x;
  throw std::runtime_error("no element labelled " + label);
}

}  // namespace fixtures

#endif  // LARGESUB_TESTS_FIXTURES_HPP
