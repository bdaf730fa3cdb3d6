#ifndef LARGESUB_CATALOG_HPP
#define LARGESUB_CATALOG_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "largesub/group.hpp"

namespace largesub {

FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::size_t n);
/// Dihedral group of the given order (2m symmetries of an m-gon).
FiniteGroup dihedral_group(std::size_t order);
/// Generalised quaternion group; order must be a power of two, at least 8.
FiniteGroup quaternion_group(std::size_t order);
FiniteGroup symmetric_group(std::size_t degree);
FiniteGroup alternating_group(std::size_t degree);
FiniteGroup klein_four_group();
/// SL(2,3) as the 24 determinant-one 2x2 matrices over GF(3).
FiniteGroup special_linear_2_3();

/// Catalog lookup by key: trivial, cyclic(n), dihedral(2n), quaternion(8),
/// symmetric(n), alternating(n) (n <= 6), klein_four, sl(2,3).
/// Throws UnknownName for anything else.
FiniteGroup named_group(std::string_view key);

/// Human-readable list of accepted keys, for help output.
std::vector<std::string> catalog_keys();

}  // namespace largesub

#endif  // LARGESUB_CATALOG_HPP
