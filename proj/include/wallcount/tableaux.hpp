#pragma once

#include "wallcount/arith.hpp"
#include "wallcount/paths.hpp"

#include <set>
#include <string>
#include <vector>

namespace wallcount {

// Two-row fillings with walls. A building of width m is the 2 x m shape
// together with the set of columns whose vertical order constraint is
// dropped. A filling places 1..2m so both rows increase, and the bottom
// entry stays below the top entry in every column without a wall.

struct YoungBuilding {
    long m = 0;            // width
    std::set<long> walls;  // subset of {1..m}
};

// Width m*n building whose walls repeat per m-block in every column but
// the first: {j*m + i : 0 <= j < n, 2 <= i <= m}.
YoungBuilding periodic_building(long m, long n);

struct WallTableau {
    long m = 0;
    std::vector<long> bottom; // x-sequence, strictly increasing
    std::vector<long> top;    // y-sequence, strictly increasing
    std::set<long> walls;
};

// Enumeration guard; WALLCOUNT_MAX_WIDTH in the environment overrides it.
long enumeration_guard();

// All valid fillings, by iterating over the binomial(2m, m) candidate
// top-row label sets and filtering the column constraints.
std::vector<WallTableau> enumerate_tableaux(const YoungBuilding& b);

// Builds the tableau whose top row is exactly `top`; validates it against
// the building's constraints.
WallTableau tableau_from_top_row(const YoungBuilding& b, const std::vector<long>& top);

// Label positions as steps: top-row labels go east, bottom-row labels go
// north. This is the 0/1 row word read as a lattice path.
LatticePath yamanouchi_word(const WallTableau& t);

// mu_i = x_i - i; equals path_to_reverse_partition of the yamanouchi path.
ReversePartition reverse_partition(const WallTableau& t);

struct YBounds {
    std::vector<long> y_min; // (m+1, ..., 2m)
    std::vector<long> y_max; // Y_i = 2i off walls, else i + (last unwalled index before i)
};

YBounds y_extremes(const YoungBuilding& b);

// Number of reverse partitions contained in mu (componentwise bounded,
// weakly increasing). Independent of the determinant machinery.
Int count_partitions_contained(const ReversePartition& mu);

// Triple cardinality agreement: tableaux over b, paths weakly above the
// lowest tableau's path, and partitions inside its reverse partition.
bool verify_bijection(const YoungBuilding& b);

// Two aligned rows plus a marker line flagging wall columns.
std::string render(const WallTableau& t);

} // namespace wallcount
