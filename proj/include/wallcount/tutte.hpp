#pragma once

#include "wallcount/arith.hpp"
#include "wallcount/paths.hpp"

#include <map>
#include <string>
#include <utility>

namespace wallcount {

// Polynomials in z and y with exact integer coefficients; zero terms are
// never stored.
class BivariatePolynomial {
public:
    using Key = std::pair<long, long>; // (z degree, y degree)

    BivariatePolynomial() = default;
    static BivariatePolynomial constant(const Int& c);
    static BivariatePolynomial monomial(long z_deg, long y_deg, const Int& c = Int(1));

    void add_term(long z_deg, long y_deg, const Int& c);
    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b);
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b);
    friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b);
    bool operator==(const BivariatePolynomial& o) const = default;

    BivariatePolynomial at_z1() const; // substitute z = 1
    Int evaluate(const Int& z, const Int& y) const;
    std::string str() const; // sorted c*z^a*y^b terms

private:
    std::map<Key, Int> terms_;
};

// Path-length guard for the activity enumeration; WALLCOUNT_MAX_WIDTH in
// the environment overrides it.
long tutte_length_guard();

// Activity polynomial of the lattice path matroid with upper boundary p:
// sum over paths s weakly below p (same endpoint) of z^{i(s)} y^{e(s)}.
// i(s) counts the north edges s shares with p in the plane (s's k-th
// north at the same word position as p's k-th north) and e(s) counts the
// east edges s shares with the lower boundary, i.e. s's east steps before
// its own first north. This is the unique reading under which the append
// recursion below holds. Evaluating at (1,1) counts the paths weakly
// below p.
BivariatePolynomial tutte_polynomial(const LatticePath& p);

// Checks, as exact polynomial identities,
//   t(pN; z, y) = z * t(p; z, y)
//   (z-1) * t(pE; z, y) = z * t(p; z, y) + ((z-1)y - z) * t(p; 1, y)
// the second being the denominator-cleared form of the append rule.
bool verify_append_recursion(const LatticePath& p);

} // namespace wallcount
