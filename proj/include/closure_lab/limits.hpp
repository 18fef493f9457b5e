#pragma once

#include <cstddef>

namespace closure_lab {

// Resource bounds shared by the algebra engines. Exceeding any of them
// raises CapExceeded instead of truncating.
struct Limits {
  std::size_t generator_cap = 20000;
  std::size_t box_point_cap = 1000000;
  std::size_t spair_cap = 50000;
};

}  // namespace closure_lab
