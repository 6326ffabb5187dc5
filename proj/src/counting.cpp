#include "wallcount/counting.hpp"

#include <stdexcept>
#include <utility>

namespace wallcount {

IntegerMatrix::IntegerMatrix(long dim) : n(dim) {
    if (dim < 1)
        throw std::invalid_argument("IntegerMatrix: dimension must be >= 1");
    a.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Int(0));
}

Int& IntegerMatrix::at(long i, long j) {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
}

const Int& IntegerMatrix::at(long i, long j) const {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
}

Int determinant(IntegerMatrix m) {
    long n = m.n;
    int sign = 1;
    Int prev = 1;
    for (long k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            long swap_row = -1;
            for (long i = k + 1; i < n; ++i) {
                if (m.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0)
                return 0;
            for (long j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

namespace {

// binomial with the counting convention: zero when either index is
// negative (unreachable path endpoints), library error semantics otherwise.
Int binomial_or_zero(long n, long k) {
    if (n < 0 || k < 0)
        return 0;
    return binomial(n, k);
}

} // namespace

Int kreweras_count(const ReversePartition& upper, const ReversePartition& lower) {
    if (upper.size() != lower.size())
        throw std::invalid_argument("kreweras_count: length mismatch");
    if (!componentwise_le(lower, upper))
        throw std::invalid_argument("kreweras_count: lower must be componentwise <= upper");
    long n = upper.size();
    if (n == 0)
        return 1;
    IntegerMatrix m(n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            m.at(i, j) = binomial_or_zero(
                upper.parts[static_cast<std::size_t>(i)] -
                    lower.parts[static_cast<std::size_t>(j)] + 1,
                j - i + 1);
    return determinant(std::move(m));
}

Int fbar_determinant(long m, long n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("fbar_determinant: need m >= 1 and n >= 1");
    long dim = n * m - 1;
    if (dim == 0)
        return 1;
    std::vector<long> a(static_cast<std::size_t>(dim));
    for (long h = 1; h <= n - 1; ++h)
        for (long i = (h - 1) * m + 1; i <= h * m; ++i)
            a[static_cast<std::size_t>(i - 1)] = h * m;
    for (long i = (n - 1) * m + 1; i <= n * m - 1; ++i)
        a[static_cast<std::size_t>(i - 1)] = m * n;
    IntegerMatrix mat(dim);
    for (long i = 1; i <= dim; ++i)
        for (long j = 1; j <= dim; ++j)
            mat.at(i - 1, j - 1) =
                binomial_or_zero(a[static_cast<std::size_t>(i - 1)] + 1, j - i + 1);
    return determinant(std::move(mat));
}

std::vector<std::vector<Int>> recursion_g_table(long m, long n) {
    if (m < 2)
        throw std::invalid_argument("recursion_fbar: m must be >= 2");
    if (n < 1)
        throw std::invalid_argument("recursion_fbar: n must be >= 1");
    // g[t-1][i-1], built bottom-up in i; the recursion is triangular.
    std::vector<std::vector<Int>> g(static_cast<std::size_t>(m));
    for (long t = 1; t <= m; ++t)
        g[static_cast<std::size_t>(t - 1)].assign(static_cast<std::size_t>(n), Int(0));
    for (long t = 1; t <= m; ++t)
        g[static_cast<std::size_t>(t - 1)][0] = binomial(m + t - 1, m);
    for (long i = 2; i <= n; ++i) {
        for (long t = 1; t <= m; ++t) {
            Int acc = binomial(2 * m * i - m + t - 1, m * i);
            for (long j = 1; j <= i - 1; ++j)
                for (long r = 1; r <= m; ++r)
                    acc -= g[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j - 1)] *
                           binomial(2 * m * (i - j) + t - r - 1, m * (i - j) - 1);
            g[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(i - 1)] = acc;
        }
    }
    return g;
}

Int recursion_fbar(long m, long n) {
    auto g = recursion_g_table(m, n);
    Int result = binomial(2 * m * n - 1, m * n);
    for (long i = 1; i <= n - 1; ++i)
        for (long t = 1; t <= m; ++t)
            result -= g[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(i - 1)] *
                      binomial(2 * m * (n - i) + m - t - 1, m * (n - i) - 1);
    // the t = m column of the table is the count itself
    if (result != g[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(n - 1)])
        throw std::logic_error("recursion_fbar: table self-check failed at m=" +
                               std::to_string(m) + " n=" + std::to_string(n));
    return result;
}

} // namespace wallcount
