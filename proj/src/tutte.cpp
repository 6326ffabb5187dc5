#include "wallcount/tutte.hpp"

#include <array>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace wallcount {

BivariatePolynomial BivariatePolynomial::constant(const Int& c) {
    return monomial(0, 0, c);
}

BivariatePolynomial BivariatePolynomial::monomial(long z_deg, long y_deg, const Int& c) {
    BivariatePolynomial p;
    p.add_term(z_deg, y_deg, c);
    return p;
}

void BivariatePolynomial::add_term(long z_deg, long y_deg, const Int& c) {
    if (c == 0)
        return;
    Key key{z_deg, y_deg};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    for (const auto& [key, c] : o.terms_)
        add_term(key.first, key.second, c);
    return *this;
}

BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    a += b;
    return a;
}

BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
    for (const auto& [key, c] : b.terms_)
        a.add_term(key.first, key.second, Int(-c));
    return a;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, Int(ca * cb));
    return out;
}

BivariatePolynomial BivariatePolynomial::at_z1() const {
    BivariatePolynomial out;
    for (const auto& [key, c] : terms_)
        out.add_term(0, key.second, c);
    return out;
}

Int BivariatePolynomial::evaluate(const Int& z, const Int& y) const {
    Int total(0);
    for (const auto& [key, c] : terms_) {
        Int term = c;
        for (long i = 0; i < key.first; ++i)
            term *= z;
        for (long i = 0; i < key.second; ++i)
            term *= y;
        total += term;
    }
    return total;
}

std::string BivariatePolynomial::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, c] = *it;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_vars = key.first > 0 || key.second > 0;
        if (mag != 1 || !has_vars)
            out << mag.get_str() << (has_vars ? "*" : "");
        if (key.first > 0) {
            out << "z";
            if (key.first > 1)
                out << "^" << key.first;
        }
        if (key.second > 0) {
            if (key.first > 0)
                out << "*";
            out << "y";
            if (key.second > 1)
                out << "^" << key.second;
        }
    }
    return out.str();
}

long tutte_length_guard() {
    if (const char* env = std::getenv("WALLCOUNT_MAX_WIDTH")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0)
            return v;
    }
    return 20;
}

BivariatePolynomial tutte_polynomial(const LatticePath& p) {
    if (p.size() > tutte_length_guard())
        throw std::invalid_argument("tutte_polynomial: path length " + std::to_string(p.size()) +
                                    " exceeds guard " + std::to_string(tutte_length_guard()));
    long length = p.size();
    long rows = p.n_count();
    long width = p.e_count();
    // A path s with the same endpoint stays weakly below p exactly when
    // its running north count never exceeds p's. State: (norths so far,
    // still in the leading east run). Every reachable state has a nonzero
    // polynomial, so zero doubles as "unreachable".
    std::vector<long> boundary_norths(static_cast<std::size_t>(length) + 1, 0);
    for (long t = 1; t <= length; ++t)
        boundary_norths[static_cast<std::size_t>(t)] =
            boundary_norths[static_cast<std::size_t>(t - 1)] +
            (p.steps[static_cast<std::size_t>(t - 1)] == Step::N ? 1 : 0);

    using State = std::vector<std::array<BivariatePolynomial, 2>>;
    State cur(static_cast<std::size_t>(rows) + 1);
    cur[0][1] = BivariatePolynomial::constant(1);
    for (long t = 1; t <= length; ++t) {
        State next(static_cast<std::size_t>(rows) + 1);
        bool boundary_north = p.steps[static_cast<std::size_t>(t - 1)] == Step::N;
        long cap = boundary_norths[static_cast<std::size_t>(t)];
        for (long n = 0; n <= rows; ++n) {
            for (int lead = 0; lead < 2; ++lead) {
                const BivariatePolynomial& poly = cur[static_cast<std::size_t>(n)][lead];
                if (poly.is_zero())
                    continue;
                // take a north step; it is a shared edge with the boundary
                // exactly when it is the boundary's (n+1)-th north too
                if (n + 1 <= cap) {
                    bool shared = boundary_north && cap == n + 1;
                    BivariatePolynomial moved =
                        shared ? poly * BivariatePolynomial::monomial(1, 0) : poly;
                    next[static_cast<std::size_t>(n + 1)][0] += moved;
                }
                // take an east step
                if ((t - 1 - n) + 1 <= width) {
                    BivariatePolynomial moved =
                        lead ? poly * BivariatePolynomial::monomial(0, 1) : poly;
                    next[static_cast<std::size_t>(n)][lead] += moved;
                }
            }
        }
        cur = std::move(next);
    }
    BivariatePolynomial out = cur[static_cast<std::size_t>(rows)][0];
    out += cur[static_cast<std::size_t>(rows)][1];
    return out;
}

bool verify_append_recursion(const LatticePath& p) {
    LatticePath with_n = p;
    with_n.steps.push_back(Step::N);
    LatticePath with_e = p;
    with_e.steps.push_back(Step::E);

    BivariatePolynomial base = tutte_polynomial(p);
    BivariatePolynomial z = BivariatePolynomial::monomial(1, 0);
    BivariatePolynomial y = BivariatePolynomial::monomial(0, 1);
    BivariatePolynomial one = BivariatePolynomial::constant(1);

    if (tutte_polynomial(with_n) != z * base)
        return false;

    BivariatePolynomial lhs = (z - one) * tutte_polynomial(with_e);
    BivariatePolynomial rhs = z * base + ((z - one) * y - z) * base.at_z1();
    return lhs == rhs;
}

} // namespace wallcount
