#pragma once

#include <vector>

namespace orbitquant {

// Positive roots as integer coordinate vectors, in a fixed order.
// Type C_n: e_i - e_j, e_i + e_j (i < j), 2e_i.
std::vector<std::vector<int>> positive_roots_c(int n);

}  // namespace orbitquant
