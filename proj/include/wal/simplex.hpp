#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace wal {

using RatMatrix = std::vector<std::vector<mpq_class>>;

/// Exact phase-one simplex: some x >= 0 with A x = b, or nothing.
std::optional<std::vector<mpq_class>> feasible_point(const RatMatrix& A,
                                                     const std::vector<mpq_class>& b);

}  // namespace wal
