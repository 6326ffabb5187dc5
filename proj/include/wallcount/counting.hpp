#pragma once

#include "wallcount/arith.hpp"
#include "wallcount/paths.hpp"

#include <vector>

namespace wallcount {

struct IntegerMatrix {
    long n = 0;
    std::vector<Int> a; // row-major, n*n entries

    explicit IntegerMatrix(long dim);
    Int& at(long i, long j);
    const Int& at(long i, long j) const;
};

// Exact determinant by fraction-free (division-exact) elimination; every
// intermediate value stays integral.
Int determinant(IntegerMatrix m);

// Number of reverse partitions nu with lower <= nu <= upper componentwise,
// as det( binomial(a_i - b_j + 1, j - i + 1) ). Out-of-range entries
// (either index negative) are zero by the path-counting convention.
Int kreweras_count(const ReversePartition& upper, const ReversePartition& lower);

// Determinant route for the periodic two-row count: dimension n*m - 1 with
// row parameters a_i = h*m on the h-th block (h < n) and a_i = m*n on the
// final m-1 rows.
Int fbar_determinant(long m, long n);

// The g_t(i) tables of the inclusion-exclusion recursion, 1 <= t <= m and
// 1 <= i <= n; g[t-1][i-1] in the returned shape. Exposed for tests.
std::vector<std::vector<Int>> recursion_g_table(long m, long n);

// Inclusion-exclusion recursion route; requires m >= 2, n >= 1.
Int recursion_fbar(long m, long n);

} // namespace wallcount
