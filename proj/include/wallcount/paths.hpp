#pragma once

#include "wallcount/arith.hpp"

#include <string>
#include <vector>

namespace wallcount {

// Monotone lattice paths over north/east steps. A path is both a counted
// object and a boundary for other paths; "weakly below P" means no point
// of the path lies strictly above P's column profile.
enum class Step : unsigned char { N, E };

struct LatticePath {
    std::vector<Step> steps;

    long size() const { return static_cast<long>(steps.size()); }
    long n_count() const;
    long e_count() const; // the path's width
};

struct Point {
    long x = 0;
    long y = 0;
};

// Path literal with exponent shorthand: "N3E2" = NNNEE, bare "NE" works too.
LatticePath parse_path(const std::string& literal);
std::string format_path(const LatticePath& p); // run-length form

// Swap N and E steps (reflection across the diagonal).
LatticePath transpose(const LatticePath& p);

Point endpoint(const LatticePath& p);

// Highest / lowest lattice point of the path in each column x = 0..width.
std::vector<long> max_heights(const LatticePath& p);
std::vector<long> min_heights(const LatticePath& p);

// Paths (0,0) -> target that never pass strictly above the boundary.
// Exact DP over the staircase region. The boundary must extend at least
// to the target's column.
Int count_weakly_below(const LatticePath& boundary, Point target);

// Paths (0,0) -> target that never pass strictly below the boundary.
// Delegates to count_weakly_below through the diagonal reflection.
Int count_weakly_above(const LatticePath& boundary, Point target);

// Weakly increasing non-negative parts. Part i of a path's reverse
// partition counts the cells left of the path in the i-th row from the
// bottom, i.e. the E steps preceding the i-th N step.
struct ReversePartition {
    std::vector<long> parts;

    long size() const { return static_cast<long>(parts.size()); }
};

ReversePartition make_reverse_partition(std::vector<long> parts);
bool componentwise_le(const ReversePartition& a, const ReversePartition& b);

ReversePartition path_to_reverse_partition(const LatticePath& p, long rows);
LatticePath path_from_reverse_partition(const ReversePartition& mu, long width);

// Staircase boundaries. All take k, l >= 1 and n >= 1.
LatticePath fr_boundary(long k, long l, long r, long n); // (N^k E^l)^{n-1} N^k E^{l-r}
LatticePath q_boundary(long k, long l, long n);          // (N^k E^l)^n
LatticePath fbar_lower_boundary(long m, long n);         // N (E^m N^m)^{n-1} E^m N^{m-1}

// Boundary-constrained counts with the convention value 1 at n = 0.
Int f_r_count(long k, long l, long r, long n); // to (l*n - r, k*n), never above fr_boundary
Int q_count(long k, long l, long n);           // to (l*n, k*n), never above q_boundary
Int fbar_path_count(long m, long n);           // to (m*n, m*n), never below fbar_lower_boundary

} // namespace wallcount
