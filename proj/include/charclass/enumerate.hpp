#pragma once

#include <iosfwd>
#include <vector>

#include "charclass/stiefel.hpp"

namespace charclass {

// Canonical parameter grid: 2 <= n <= n_max, 1 <= k <= n, weights taken up
// to permutation as nondecreasing tuples with lo <= l_i <= hi and gcd 1,
// ordered lexicographically by (n, k, l).
std::vector<StiefelParams> canonical_grid(long long n_max, long long l_max);
std::vector<StiefelParams> canonical_grid_signed(long long n_max, long long l_abs_max);

enum class EnumFormat { tsv, json_lines };

// One row per grid point, columns n, k, l, dim, parallelizable, stably, p1,
// w2, span_cases. TSV carries a header row; weights and span cases are
// comma-joined.
void write_enumeration(std::ostream& os, long long n_max, long long l_max,
                       EnumFormat format);

}  // namespace charclass
