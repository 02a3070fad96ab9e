#pragma once

#include <cstddef>

#include "fano/nat.hpp"

namespace fano {

// s_0 = 2, s_k = s_{k-1}(s_{k-1} - 1) + 1.
//
// Values are memoized per process behind a mutex; the function is pure and
// safe to call concurrently.
Nat sylvester(std::size_t k);

}  // namespace fano
