#include "wallcount/series.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wallcount {

TruncatedSeries::TruncatedSeries(long order) {
    if (order < 0)
        throw std::invalid_argument("TruncatedSeries: negative order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rat(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("TruncatedSeries: needs at least the constant term");
}

TruncatedSeries TruncatedSeries::constant(const Rat& value, long order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rat& value, long degree, long order) {
    if (degree < 0 || degree > order)
        throw std::invalid_argument("TruncatedSeries::monomial: degree outside 0..order");
    TruncatedSeries s(order);
    s.coeffs_[static_cast<std::size_t>(degree)] = value;
    return s;
}

const Rat& TruncatedSeries::coeff(long n) const {
    if (n < 0 || n > order())
        throw std::out_of_range("TruncatedSeries::coeff: index " + std::to_string(n) +
                                " beyond truncation order " + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(n)];
}

Int TruncatedSeries::integer_coeff(long n) const {
    return to_integer(coeff(n));
}

bool TruncatedSeries::all_integer() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return is_integer(c); });
}

TruncatedSeries TruncatedSeries::truncated(long new_order) const {
    if (new_order < 0 || new_order > order())
        throw std::invalid_argument("TruncatedSeries::truncated: order outside 0..order");
    return TruncatedSeries(std::vector<Rat>(coeffs_.begin(),
                                            coeffs_.begin() + new_order + 1));
}

TruncatedSeries TruncatedSeries::shifted_up() const {
    std::vector<Rat> c(coeffs_.size() + 1, Rat(0));
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
    return TruncatedSeries(std::move(c));
}

namespace {

long common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}

// First index with a nonzero coefficient, or order+1 when all known
// coefficients vanish.
long valuation(const TruncatedSeries& s) {
    for (long i = 0; i <= s.order(); ++i)
        if (s.coeff(i) != 0)
            return i;
    return s.order() + 1;
}

} // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    long n = common_order(a, b);
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i)
        c[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    long n = common_order(a, b);
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i)
        c[static_cast<std::size_t>(i)] = a.coeff(i) - b.coeff(i);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    long n = common_order(a, b);
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
    for (long i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0)
            continue;
        for (long j = 0; i + j <= n; ++j)
            c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const Rat& c, const TruncatedSeries& s) {
    std::vector<Rat> r(static_cast<std::size_t>(s.order()) + 1);
    for (long i = 0; i <= s.order(); ++i)
        r[static_cast<std::size_t>(i)] = c * s.coeff(i);
    return TruncatedSeries(std::move(r));
}

TruncatedSeries operator+(const TruncatedSeries& s, const Rat& c) {
    return s + TruncatedSeries::constant(c, s.order());
}

TruncatedSeries operator-(const TruncatedSeries& s, const Rat& c) {
    return s - TruncatedSeries::constant(c, s.order());
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
    long vb = valuation(b);
    if (vb > b.order())
        throw std::domain_error("div: divisor is zero to its truncation order");
    if (vb > 0) {
        // Shift-then-divide: the dividend must vanish at least as deep.
        for (long i = 0; i < vb && i <= a.order(); ++i)
            if (a.coeff(i) != 0)
                throw std::domain_error("div: non-invertible divisor (vanishes at 0)");
        long n = common_order(a, b) - vb;
        if (n < 0)
            throw std::domain_error("div: nothing known after cancelling x^" +
                                    std::to_string(vb));
        std::vector<Rat> sa, sb;
        for (long i = vb; i <= vb + n; ++i) {
            sa.push_back(a.coeff(i));
            sb.push_back(b.coeff(i));
        }
        return div(TruncatedSeries(std::move(sa)), TruncatedSeries(std::move(sb)));
    }
    long n = common_order(a, b);
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        Rat acc = a.coeff(i);
        for (long j = 1; j <= i; ++j)
            acc -= b.coeff(j) * c[static_cast<std::size_t>(i - j)];
        c[static_cast<std::size_t>(i)] = acc / b.coeff(0);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries exp(const TruncatedSeries& s) {
    if (s.coeff(0) != 0)
        throw std::domain_error("exp: nonzero constant term");
    long n = s.order();
    std::vector<Rat> f(static_cast<std::size_t>(n) + 1, Rat(0));
    f[0] = 1;
    // f' = s' f  =>  n f_n = sum_{i=1..n} i s_i f_{n-i}
    for (long m = 1; m <= n; ++m) {
        Rat acc(0);
        for (long i = 1; i <= m; ++i)
            acc += Rat(i) * s.coeff(i) * f[static_cast<std::size_t>(m - i)];
        f[static_cast<std::size_t>(m)] = acc / Rat(m);
    }
    return TruncatedSeries(std::move(f));
}

TruncatedSeries log(const TruncatedSeries& s) {
    if (s.coeff(0) != 1)
        throw std::domain_error("log: constant term is not 1");
    long n = s.order();
    std::vector<Rat> f(static_cast<std::size_t>(n) + 1, Rat(0));
    // s f' = s'  =>  f_n = s_n - (1/n) sum_{i=1..n-1} (n-i) s_i f_{n-i}
    for (long m = 1; m <= n; ++m) {
        Rat acc(0);
        for (long i = 1; i < m; ++i)
            acc += Rat(m - i) * s.coeff(i) * f[static_cast<std::size_t>(m - i)];
        f[static_cast<std::size_t>(m)] = s.coeff(m) - acc / Rat(m);
    }
    return TruncatedSeries(std::move(f));
}

TruncatedSeries multisect(const TruncatedSeries& s, long m) {
    if (m < 1)
        throw std::invalid_argument("multisect: m must be >= 1");
    long n = s.order() / m;
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
    for (long j = 0; j <= n; ++j)
        c[static_cast<std::size_t>(j)] = s.coeff(m * j);
    return TruncatedSeries(std::move(c));
}

bool agree(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !first_mismatch(a, b).has_value();
}

std::optional<long> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
    long n = common_order(a, b);
    for (long i = 0; i <= n; ++i)
        if (a.coeff(i) != b.coeff(i))
            return i;
    return std::nullopt;
}

std::string to_json(const TruncatedSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (long i = 0; i <= s.order(); ++i) {
        coeffs.push_back({{"num", s.coeff(i).get_num().get_str()},
                          {"den", s.coeff(i).get_den().get_str()}});
    }
    nlohmann::json j{{"order", s.order()}, {"coefficients", coeffs}};
    return j.dump();
}

std::string to_string(const TruncatedSeries& s) {
    std::ostringstream out;
    bool first = true;
    for (long i = 0; i <= s.order(); ++i) {
        if (s.coeff(i) == 0)
            continue;
        if (!first)
            out << " + ";
        out << s.coeff(i).get_str();
        if (i == 1)
            out << "*x";
        else if (i > 1)
            out << "*x^" << i;
        first = false;
    }
    if (first)
        out << "0";
    out << " + O(x^" << s.order() + 1 << ")";
    return out.str();
}

} // namespace wallcount
