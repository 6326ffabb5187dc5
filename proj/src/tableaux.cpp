#include "wallcount/tableaux.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace wallcount {

YoungBuilding periodic_building(long m, long n) {
    if (m < 1 || n < 0)
        throw std::invalid_argument("periodic_building: need m >= 1 and n >= 0");
    YoungBuilding b;
    b.m = m * n;
    for (long j = 0; j < n; ++j)
        for (long i = 2; i <= m; ++i)
            b.walls.insert(j * m + i);
    return b;
}

long enumeration_guard() {
    if (const char* env = std::getenv("WALLCOUNT_MAX_WIDTH")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0)
            return v;
    }
    return 12;
}

namespace {

void check_building(const YoungBuilding& b) {
    if (b.m < 0)
        throw std::invalid_argument("YoungBuilding: negative width");
    for (long w : b.walls)
        if (w < 1 || w > b.m)
            throw std::invalid_argument("YoungBuilding: wall column outside 1..m");
}

// top must be a strictly increasing subset of [2m]; bottom is its
// complement. Valid iff bottom[i] < top[i] in every column without a wall.
bool rows_valid(const YoungBuilding& b, const std::vector<long>& top,
                std::vector<long>& bottom_out) {
    long m = b.m;
    bottom_out.clear();
    std::vector<bool> in_top(static_cast<std::size_t>(2 * m) + 1, false);
    for (long v : top)
        in_top[static_cast<std::size_t>(v)] = true;
    for (long v = 1; v <= 2 * m; ++v)
        if (!in_top[static_cast<std::size_t>(v)])
            bottom_out.push_back(v);
    for (long i = 0; i < m; ++i) {
        if (b.walls.count(i + 1))
            continue;
        if (bottom_out[static_cast<std::size_t>(i)] >= top[static_cast<std::size_t>(i)])
            return false;
    }
    return true;
}

} // namespace

std::vector<WallTableau> enumerate_tableaux(const YoungBuilding& b) {
    check_building(b);
    if (b.m > enumeration_guard())
        throw std::invalid_argument("enumerate_tableaux: width " + std::to_string(b.m) +
                                    " exceeds guard " + std::to_string(enumeration_guard()));
    long m = b.m;
    std::vector<WallTableau> out;
    if (m == 0) {
        out.push_back(WallTableau{0, {}, {}, b.walls});
        return out;
    }
    // first m-subset of [2m]
    std::vector<long> top(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i)
        top[static_cast<std::size_t>(i)] = i + 1;
    std::vector<long> bottom;
    while (true) {
        if (rows_valid(b, top, bottom))
            out.push_back(WallTableau{m, bottom, top, b.walls});
        // advance to the next m-subset in lexicographic order
        long i = m - 1;
        while (i >= 0 && top[static_cast<std::size_t>(i)] == m + i + 1)
            --i;
        if (i < 0)
            break;
        ++top[static_cast<std::size_t>(i)];
        for (long j = i + 1; j < m; ++j)
            top[static_cast<std::size_t>(j)] = top[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

WallTableau tableau_from_top_row(const YoungBuilding& b, const std::vector<long>& top) {
    check_building(b);
    if (static_cast<long>(top.size()) != b.m)
        throw std::invalid_argument("tableau_from_top_row: wrong top row length");
    for (std::size_t i = 0; i < top.size(); ++i) {
        if (top[i] < 1 || top[i] > 2 * b.m || (i > 0 && top[i] <= top[i - 1]))
            throw std::invalid_argument("tableau_from_top_row: top row not an increasing subset of [2m]");
    }
    std::vector<long> bottom;
    if (!rows_valid(b, top, bottom))
        throw std::invalid_argument("tableau_from_top_row: column constraint violated off the walls");
    return WallTableau{b.m, bottom, top, b.walls};
}

LatticePath yamanouchi_word(const WallTableau& t) {
    LatticePath p;
    p.steps.reserve(static_cast<std::size_t>(2 * t.m));
    std::vector<bool> in_top(static_cast<std::size_t>(2 * t.m) + 1, false);
    for (long v : t.top)
        in_top[static_cast<std::size_t>(v)] = true;
    for (long v = 1; v <= 2 * t.m; ++v)
        p.steps.push_back(in_top[static_cast<std::size_t>(v)] ? Step::E : Step::N);
    return p;
}

ReversePartition reverse_partition(const WallTableau& t) {
    std::vector<long> parts(t.bottom.size());
    for (std::size_t i = 0; i < t.bottom.size(); ++i)
        parts[i] = t.bottom[i] - static_cast<long>(i) - 1;
    return make_reverse_partition(std::move(parts));
}

YBounds y_extremes(const YoungBuilding& b) {
    check_building(b);
    YBounds bounds;
    bounds.y_min.resize(static_cast<std::size_t>(b.m));
    bounds.y_max.resize(static_cast<std::size_t>(b.m));
    long last_unwalled = 0;
    for (long i = 1; i <= b.m; ++i) {
        bounds.y_min[static_cast<std::size_t>(i - 1)] = b.m + i;
        if (b.walls.count(i)) {
            bounds.y_max[static_cast<std::size_t>(i - 1)] = last_unwalled + i;
        } else {
            bounds.y_max[static_cast<std::size_t>(i - 1)] = 2 * i;
            last_unwalled = i;
        }
    }
    return bounds;
}

Int count_partitions_contained(const ReversePartition& mu) {
    if (mu.parts.empty())
        return 1;
    long cap = mu.parts.back(); // the largest bound, since parts increase
    // f[v] = number of admissible prefixes whose current part equals v
    std::vector<Int> f(static_cast<std::size_t>(cap) + 1, Int(0));
    for (long v = 0; v <= mu.parts.front(); ++v)
        f[static_cast<std::size_t>(v)] = 1;
    for (std::size_t i = 1; i < mu.parts.size(); ++i) {
        std::vector<Int> g(static_cast<std::size_t>(cap) + 1, Int(0));
        Int acc(0);
        for (long v = 0; v <= mu.parts[i]; ++v) {
            acc += f[static_cast<std::size_t>(v)];
            g[static_cast<std::size_t>(v)] = acc;
        }
        f = std::move(g);
    }
    Int total(0);
    for (const Int& x : f)
        total += x;
    return total;
}

bool verify_bijection(const YoungBuilding& b) {
    auto tableaux = enumerate_tableaux(b);
    if (b.m == 0)
        return tableaux.size() == 1;
    YBounds bounds = y_extremes(b);
    WallTableau lowest = tableau_from_top_row(b, bounds.y_max);
    LatticePath boundary = yamanouchi_word(lowest);
    Int path_count = count_weakly_above(boundary, {b.m, b.m});
    Int partition_count = count_partitions_contained(reverse_partition(lowest));
    Int tableau_count(static_cast<long>(tableaux.size()));
    return tableau_count == path_count && path_count == partition_count;
}

std::string render(const WallTableau& t) {
    long width = 0;
    for (long v : t.top)
        width = std::max(width, static_cast<long>(std::to_string(v).size()));
    for (long v : t.bottom)
        width = std::max(width, static_cast<long>(std::to_string(v).size()));
    std::ostringstream out;
    auto row = [&](const std::vector<long>& vals) {
        for (std::size_t i = 0; i < vals.size(); ++i)
            out << (i ? " " : "") << std::setw(static_cast<int>(width)) << vals[i];
        out << '\n';
    };
    row(t.top);
    row(t.bottom);
    for (long i = 1; i <= t.m; ++i)
        out << (i > 1 ? " " : "") << std::setw(static_cast<int>(width))
            << (t.walls.count(i) ? "=" : ".");
    out << '\n';
    return out.str();
}

} // namespace wallcount
