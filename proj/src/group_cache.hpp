#ifndef LARGESUB_SRC_GROUP_CACHE_HPP
#define LARGESUB_SRC_GROUP_CACHE_HPP

#include <cstddef>
#include <mutex>
#include <string>
#include <vector>

#include "largesub/group.hpp"

namespace largesub::detail {

struct GroupData {
  std::size_t n = 0;
  std::vector<Element> table;
  std::vector<Element> inv;
  std::vector<Element> gens;
  std::vector<std::string> labels;
  std::string name;
};

// Lazily computed, write-once data. Each slot is filled under its own
// once_flag, so readers never observe a partially built value.
struct GroupCache {
  std::once_flag orders_once;
  std::vector<std::size_t> orders;

  std::once_flag classes_once;
  std::vector<std::vector<Element>> classes;
  std::vector<std::size_t> class_of;

  std::once_flag normals_once;
  std::vector<Subgroup> normals;
};

}  // namespace largesub::detail

#endif  // LARGESUB_SRC_GROUP_CACHE_HPP
