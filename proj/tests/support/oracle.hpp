#pragma once

#include <vector>

#include "bracekit/group.hpp"

namespace bracekit::testing {

/// Independent ground truth for small orders: every multiplicative group
/// table on the carrier of `add` (identity 0) satisfying the skew brace law,
/// found by cell-level backtracking over the table itself. Deliberately
/// knows nothing about automorphisms or the holomorph.
std::vector<std::vector<int>> direct_brace_mul_tables(const FiniteGroup& add);

}  // namespace bracekit::testing
