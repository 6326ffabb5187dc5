#include "wallcount/arith.hpp"

#include <stdexcept>

namespace wallcount {

Int binomial(long n, long k) {
    if (n < 0)
        throw std::domain_error("binomial: negative upper index " + std::to_string(n));
    if (k < 0 || k > n)
        return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int catalan(long n) {
    if (n < 0)
        throw std::domain_error("catalan: negative index " + std::to_string(n));
    Int b = binomial(2 * n, n);
    Int r;
    // (n+1) | binomial(2n, n), so the division is exact.
    mpz_divexact_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n + 1));
    return r;
}

Rat rat_of(const Int& num, const Int& den) {
    if (den == 0)
        throw std::domain_error("rat_of: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_of(long num, long den) {
    return rat_of(Int(num), Int(den));
}

bool is_integer(const Rat& q) {
    return q.get_den() == 1;
}

Int to_integer(const Rat& q) {
    if (!is_integer(q))
        throw std::domain_error("to_integer: not an integer: " + q.get_str());
    return q.get_num();
}

std::string decimal(const Int& v) {
    return v.get_str();
}

} // namespace wallcount
