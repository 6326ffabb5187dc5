#include "wallcount/paths.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace wallcount {

long LatticePath::n_count() const {
    return static_cast<long>(std::count(steps.begin(), steps.end(), Step::N));
}

long LatticePath::e_count() const {
    return size() - n_count();
}

LatticePath parse_path(const std::string& literal) {
    LatticePath p;
    std::size_t i = 0;
    while (i < literal.size()) {
        char c = literal[i];
        Step step;
        if (c == 'N' || c == 'n')
            step = Step::N;
        else if (c == 'E' || c == 'e')
            step = Step::E;
        else
            throw std::invalid_argument(std::string("parse_path: unexpected character '") +
                                        c + "' in \"" + literal + "\"");
        ++i;
        long repeat = 1;
        if (i < literal.size() && std::isdigit(static_cast<unsigned char>(literal[i]))) {
            repeat = 0;
            while (i < literal.size() && std::isdigit(static_cast<unsigned char>(literal[i]))) {
                repeat = repeat * 10 + (literal[i] - '0');
                ++i;
            }
            if (repeat == 0)
                throw std::invalid_argument("parse_path: zero repeat in \"" + literal + "\"");
        }
        p.steps.insert(p.steps.end(), static_cast<std::size_t>(repeat), step);
    }
    return p;
}

std::string format_path(const LatticePath& p) {
    std::ostringstream out;
    std::size_t i = 0;
    while (i < p.steps.size()) {
        std::size_t j = i;
        while (j < p.steps.size() && p.steps[j] == p.steps[i])
            ++j;
        out << (p.steps[i] == Step::N ? 'N' : 'E');
        if (j - i > 1)
            out << (j - i);
        i = j;
    }
    return out.str();
}

LatticePath transpose(const LatticePath& p) {
    LatticePath t;
    t.steps.reserve(p.steps.size());
    for (Step s : p.steps)
        t.steps.push_back(s == Step::N ? Step::E : Step::N);
    return t;
}

Point endpoint(const LatticePath& p) {
    return {p.e_count(), p.n_count()};
}

std::vector<long> max_heights(const LatticePath& p) {
    std::vector<long> hi(static_cast<std::size_t>(p.e_count()) + 1, 0);
    long col = 0, h = 0;
    for (Step s : p.steps) {
        if (s == Step::N) {
            ++h;
        } else {
            hi[static_cast<std::size_t>(col)] = h;
            ++col;
        }
    }
    hi[static_cast<std::size_t>(col)] = h;
    return hi;
}

std::vector<long> min_heights(const LatticePath& p) {
    std::vector<long> hi = max_heights(p);
    std::vector<long> lo(hi.size(), 0);
    for (std::size_t x = 1; x < lo.size(); ++x)
        lo[x] = hi[x - 1];
    return lo;
}

Int count_weakly_below(const LatticePath& boundary, Point target) {
    if (target.x < 0 || target.y < 0)
        throw std::invalid_argument("count_weakly_below: target unreachable");
    if (boundary.e_count() < target.x)
        throw std::invalid_argument("count_weakly_below: boundary ends before target column");
    std::vector<long> hi = max_heights(boundary);
    // dp over columns; dp[y] = number of admissible paths reaching (x, y)
    std::vector<Int> dp(static_cast<std::size_t>(target.y) + 1, Int(0));
    dp[0] = 1;
    for (long x = 0; x <= target.x; ++x) {
        long cap = std::min(target.y, hi[static_cast<std::size_t>(x)]);
        if (x > 0) {
            // entering column x from the left; heights above cap die off
            for (long y = cap + 1; y <= target.y; ++y)
                dp[static_cast<std::size_t>(y)] = 0;
        }
        for (long y = 1; y <= cap; ++y)
            dp[static_cast<std::size_t>(y)] += dp[static_cast<std::size_t>(y - 1)];
    }
    return target.y <= hi[static_cast<std::size_t>(target.x)] ? dp[static_cast<std::size_t>(target.y)]
                                                              : Int(0);
}

Int count_weakly_above(const LatticePath& boundary, Point target) {
    return count_weakly_below(transpose(boundary), {target.y, target.x});
}

ReversePartition make_reverse_partition(std::vector<long> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0 || (i > 0 && parts[i] < parts[i - 1]))
            throw std::invalid_argument("ReversePartition: parts must be weakly increasing and >= 0");
    }
    return ReversePartition{std::move(parts)};
}

bool componentwise_le(const ReversePartition& a, const ReversePartition& b) {
    if (a.parts.size() != b.parts.size())
        throw std::invalid_argument("componentwise_le: length mismatch");
    for (std::size_t i = 0; i < a.parts.size(); ++i)
        if (a.parts[i] > b.parts[i])
            return false;
    return true;
}

ReversePartition path_to_reverse_partition(const LatticePath& p, long rows) {
    if (p.n_count() != rows)
        throw std::invalid_argument("path_to_reverse_partition: path has " +
                                    std::to_string(p.n_count()) + " N steps, expected " +
                                    std::to_string(rows));
    std::vector<long> parts;
    parts.reserve(static_cast<std::size_t>(rows));
    long easts = 0;
    for (Step s : p.steps) {
        if (s == Step::E)
            ++easts;
        else
            parts.push_back(easts);
    }
    return ReversePartition{std::move(parts)};
}

LatticePath path_from_reverse_partition(const ReversePartition& mu, long width) {
    LatticePath p;
    long col = 0;
    for (long part : mu.parts) {
        if (part < col || part > width)
            throw std::invalid_argument("path_from_reverse_partition: parts exceed width");
        p.steps.insert(p.steps.end(), static_cast<std::size_t>(part - col), Step::E);
        p.steps.push_back(Step::N);
        col = part;
    }
    p.steps.insert(p.steps.end(), static_cast<std::size_t>(width - col), Step::E);
    return p;
}

namespace {

void append_run(LatticePath& p, Step s, long count) {
    p.steps.insert(p.steps.end(), static_cast<std::size_t>(count), s);
}

void require_staircase_params(long k, long l, long n) {
    if (k < 1 || l < 1)
        throw std::invalid_argument("staircase boundary: k and l must be >= 1");
    if (n < 1)
        throw std::invalid_argument("staircase boundary: n must be >= 1");
}

} // namespace

LatticePath fr_boundary(long k, long l, long r, long n) {
    require_staircase_params(k, l, n);
    if (r < 1 || r > l)
        throw std::invalid_argument("fr_boundary: r must satisfy 1 <= r <= l");
    LatticePath p;
    for (long b = 0; b < n - 1; ++b) {
        append_run(p, Step::N, k);
        append_run(p, Step::E, l);
    }
    append_run(p, Step::N, k);
    append_run(p, Step::E, l - r);
    return p;
}

LatticePath q_boundary(long k, long l, long n) {
    require_staircase_params(k, l, n);
    LatticePath p;
    for (long b = 0; b < n; ++b) {
        append_run(p, Step::N, k);
        append_run(p, Step::E, l);
    }
    return p;
}

LatticePath fbar_lower_boundary(long m, long n) {
    require_staircase_params(m, m, n);
    LatticePath p;
    append_run(p, Step::N, 1);
    for (long b = 0; b < n - 1; ++b) {
        append_run(p, Step::E, m);
        append_run(p, Step::N, m);
    }
    append_run(p, Step::E, m);
    append_run(p, Step::N, m - 1);
    return p;
}

Int f_r_count(long k, long l, long r, long n) {
    if (n < 0)
        throw std::invalid_argument("f_r_count: n must be >= 0");
    if (k < 1 || l < 1 || r < 1 || r > l)
        throw std::invalid_argument("f_r_count: need k, l >= 1 and 1 <= r <= l");
    if (n == 0)
        return 1;
    return count_weakly_below(fr_boundary(k, l, r, n), {l * n - r, k * n});
}

Int q_count(long k, long l, long n) {
    if (n < 0)
        throw std::invalid_argument("q_count: n must be >= 0");
    if (k < 1 || l < 1)
        throw std::invalid_argument("q_count: need k, l >= 1");
    if (n == 0)
        return 1;
    return count_weakly_below(q_boundary(k, l, n), {l * n, k * n});
}

Int fbar_path_count(long m, long n) {
    if (n < 0)
        throw std::invalid_argument("fbar_path_count: n must be >= 0");
    if (m < 1)
        throw std::invalid_argument("fbar_path_count: m must be >= 1");
    if (n == 0)
        return 1;
    return count_weakly_above(fbar_lower_boundary(m, n), {m * n, m * n});
}

} // namespace wallcount
