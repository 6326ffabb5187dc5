#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wallcount/paths.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

using namespace wallcount;

namespace {

// Test-side geometry, independent of the library's column profiles: the
// set of lattice points a path passes through.
std::vector<Point> points_of(const LatticePath& p) {
    std::vector<Point> pts{{0, 0}};
    long x = 0, y = 0;
    for (Step s : p.steps) {
        if (s == Step::N)
            ++y;
        else
            ++x;
        pts.push_back({x, y});
    }
    return pts;
}

std::map<long, long> top_profile(const LatticePath& p) {
    std::map<long, long> top;
    for (const Point& pt : points_of(p)) {
        auto it = top.find(pt.x);
        if (it == top.end() || it->second < pt.y)
            top[pt.x] = pt.y;
    }
    return top;
}

std::map<long, long> bottom_profile(const LatticePath& p) {
    std::map<long, long> bottom;
    for (const Point& pt : points_of(p)) {
        auto it = bottom.find(pt.x);
        if (it == bottom.end() || it->second > pt.y)
            bottom[pt.x] = pt.y;
    }
    return bottom;
}

bool stays_weakly_below(const LatticePath& candidate, const std::map<long, long>& top) {
    for (const Point& pt : points_of(candidate)) {
        auto it = top.find(pt.x);
        if (it == top.end() || pt.y > it->second)
            return false;
    }
    return true;
}

bool stays_weakly_above(const LatticePath& candidate, const std::map<long, long>& bottom) {
    for (const Point& pt : points_of(candidate)) {
        auto it = bottom.find(pt.x);
        if (it == bottom.end() || pt.y < it->second)
            return false;
    }
    return true;
}

void all_paths_to(Point target, LatticePath& prefix, long x, long y,
                  std::vector<LatticePath>& out) {
    if (x == target.x && y == target.y) {
        out.push_back(prefix);
        return;
    }
    if (x < target.x) {
        prefix.steps.push_back(Step::E);
        all_paths_to(target, prefix, x + 1, y, out);
        prefix.steps.pop_back();
    }
    if (y < target.y) {
        prefix.steps.push_back(Step::N);
        all_paths_to(target, prefix, x, y + 1, out);
        prefix.steps.pop_back();
    }
}

std::vector<LatticePath> all_paths_to(Point target) {
    std::vector<LatticePath> out;
    LatticePath prefix;
    all_paths_to(target, prefix, 0, 0, out);
    return out;
}

long brute_below(const LatticePath& boundary, Point target) {
    auto top = top_profile(boundary);
    long count = 0;
    for (const auto& p : all_paths_to(target))
        if (stays_weakly_below(p, top))
            ++count;
    return count;
}

long brute_above(const LatticePath& boundary, Point target) {
    auto bottom = bottom_profile(boundary);
    long count = 0;
    for (const auto& p : all_paths_to(target))
        if (stays_weakly_above(p, bottom))
            ++count;
    return count;
}

LatticePath random_path(std::mt19937& rng, long length) {
    LatticePath p;
    for (long i = 0; i < length; ++i)
        p.steps.push_back(rng() % 2 ? Step::N : Step::E);
    return p;
}

} // namespace

TEST_CASE("path literals") {
    LatticePath p = parse_path("N3E2");
    CHECK(p.size() == 5);
    CHECK(p.n_count() == 3);
    CHECK(p.e_count() == 2);
    CHECK(format_path(p) == "N3E2");
    CHECK(format_path(parse_path("NE")) == "NE");
    CHECK(format_path(parse_path("N12")) == "N12");
    CHECK(endpoint(parse_path("NE3N3E3N2")).x == 6);
    CHECK(endpoint(parse_path("NE3N3E3N2")).y == 6);
    CHECK_THROWS_AS(parse_path("N3X2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_path("N0"), std::invalid_argument);
}

TEST_CASE("column profiles match the point-set geometry") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 30; ++trial) {
        LatticePath p = random_path(rng, 1 + static_cast<long>(rng() % 12));
        auto hi = max_heights(p);
        auto lo = min_heights(p);
        auto top = top_profile(p);
        auto bottom = bottom_profile(p);
        for (long x = 0; x <= p.e_count(); ++x) {
            CHECK(hi[static_cast<std::size_t>(x)] == top[x]);
            CHECK(lo[static_cast<std::size_t>(x)] == bottom[x]);
        }
    }
}

TEST_CASE("count_weakly_below examples") {
    CHECK(count_weakly_below(parse_path("NE"), {1, 1}) == 2);
    CHECK(count_weakly_below(parse_path("NENE"), {2, 2}) == 5);
    CHECK(count_weakly_below(parse_path("N3E3"), {3, 3}) == 20);
    CHECK(count_weakly_below(parse_path("NENE"), {2, 2}) == brute_below(parse_path("NENE"), {2, 2}));
    CHECK_THROWS_AS(count_weakly_below(parse_path("NE"), {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(count_weakly_below(parse_path("NE"), {-1, 0}), std::invalid_argument);
}

TEST_CASE("count_weakly_above examples") {
    CHECK(count_weakly_above(parse_path("NE2N"), {2, 2}) == 3);
    CHECK(count_weakly_above(parse_path("NE2N"), {2, 2}) == brute_above(parse_path("NE2N"), {2, 2}));
    CHECK(count_weakly_above(parse_path("NEN2E"), {0, 0}) == 1);
    // one-block staircase bound from below reproduces a Catalan count
    CHECK(count_weakly_above(parse_path("NENE"), {2, 2}) == catalan(2));
}

TEST_CASE("reflection matches brute force on random boundaries") {
    std::mt19937 rng(4242);
    int done = 0;
    while (done < 100) {
        LatticePath b = random_path(rng, 2 + static_cast<long>(rng() % 11));
        Point t = endpoint(b);
        CHECK(count_weakly_above(b, t) == brute_above(b, t));
        CHECK(count_weakly_below(b, t) == brute_below(b, t));
        ++done;
    }
}

TEST_CASE("boundary itself always qualifies") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        LatticePath b = random_path(rng, 1 + static_cast<long>(rng() % 12));
        CHECK(count_weakly_below(b, endpoint(b)) >= 1);
    }
}

TEST_CASE("larger boundary region never shrinks the count") {
    std::mt19937 rng(2024);
    int comparable = 0;
    while (comparable < 100) {
        long rows = 2 + static_cast<long>(rng() % 3);
        long width = 2 + static_cast<long>(rng() % 3);
        LatticePath a, b;
        {
            // two random paths with the same endpoint
            std::vector<Step> steps;
            for (long i = 0; i < rows; ++i)
                steps.push_back(Step::N);
            for (long i = 0; i < width; ++i)
                steps.push_back(Step::E);
            std::shuffle(steps.begin(), steps.end(), rng);
            a.steps = steps;
            std::shuffle(steps.begin(), steps.end(), rng);
            b.steps = steps;
        }
        ReversePartition ma = path_to_reverse_partition(a, rows);
        ReversePartition mb = path_to_reverse_partition(b, rows);
        if (!componentwise_le(ma, mb))
            continue;
        ++comparable;
        // b has the larger reverse partition, so it runs lower: the region
        // above b grows and the region below b shrinks
        Point t = endpoint(a);
        CHECK(count_weakly_above(b, t) >= count_weakly_above(a, t));
        CHECK(count_weakly_below(a, t) >= count_weakly_below(b, t));
    }
}

TEST_CASE("reverse partition conversions") {
    ReversePartition mu = path_to_reverse_partition(parse_path("NE3N3E3N2"), 6);
    CHECK(mu.parts == std::vector<long>({0, 3, 3, 3, 6, 6}));
    CHECK(path_to_reverse_partition(parse_path("N3E2"), 3).parts ==
          std::vector<long>({0, 0, 0}));
    CHECK(path_to_reverse_partition(parse_path("E2N2"), 2).parts ==
          std::vector<long>({2, 2}));
    CHECK_THROWS_AS(path_to_reverse_partition(parse_path("NEN"), 3), std::invalid_argument);

    LatticePath back = path_from_reverse_partition(mu, 6);
    CHECK(format_path(back) == "NE3N3E3N2");
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        LatticePath p = random_path(rng, 1 + static_cast<long>(rng() % 12));
        long rows = p.n_count();
        LatticePath q = path_from_reverse_partition(path_to_reverse_partition(p, rows),
                                                    p.e_count());
        CHECK(q.steps == p.steps);
    }
    CHECK_THROWS_AS(make_reverse_partition({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_reverse_partition({-1}), std::invalid_argument);
}

TEST_CASE("staircase boundaries") {
    CHECK(format_path(fr_boundary(1, 1, 1, 2)) == "NEN");
    CHECK(format_path(q_boundary(1, 1, 2)) == "NENE");
    CHECK(format_path(fbar_lower_boundary(2, 1)) == "NE2N");
    CHECK(format_path(fbar_lower_boundary(3, 2)) == "NE3N3E3N2");
    CHECK_THROWS_AS(fr_boundary(1, 1, 2, 2), std::invalid_argument);
}

TEST_CASE("f_r_count") {
    CHECK(f_r_count(1, 1, 1, 2) == 2);
    CHECK(f_r_count(2, 3, 2, 0) == 1);
    CHECK(f_r_count(3, 3, 1, 2) == 281);
    CHECK_THROWS_AS(f_r_count(1, 1, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(f_r_count(0, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("q_count") {
    CHECK(q_count(1, 1, 1) == 2);
    CHECK(q_count(1, 1, 2) == 5);
    CHECK(q_count(4, 2, 0) == 1);
    CHECK(q_count(2, 1, 1) == 3);
}

TEST_CASE("trimming the full block shifts to the untrimmed count") {
    for (long k = 1; k <= 3; ++k)
        for (long l = 1; l <= 3; ++l)
            for (long n = 1; n <= 4; ++n)
                CHECK(f_r_count(k, l, l, n) == q_count(k, l, n - 1));
}

TEST_CASE("fbar path route") {
    CHECK(fbar_path_count(2, 1) == 3);
    CHECK(fbar_path_count(3, 2) == 281);
    CHECK(fbar_path_count(5, 0) == 1);
    // the reflected staircase equals the trimmed-count route
    for (long m = 1; m <= 3; ++m)
        for (long n = 1; n <= 3; ++n)
            CHECK(fbar_path_count(m, n) == f_r_count(m, m, 1, n));
}
