#pragma once

#include "cayleysum/report.hpp"

#include <cstdint>

namespace cayleysum {

/// Property suites on random inputs: Euler relation, hull invariance under
/// scaling and translation, agreement of the two hull methods, determinant
/// and Laplace cross-checks, GVD positivity, the phi subset-count identity,
/// and Cayley/direct Minkowski agreement.
RunReport run_selftest(std::uint64_t seed = 20240601);

}  // namespace cayleysum
