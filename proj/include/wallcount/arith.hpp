#pragma once

#include <gmpxx.h>

#include <string>

namespace wallcount {

// Exact arithmetic scalars. All counting in this project is done over
// arbitrary-precision integers and rationals; there is no floating point
// anywhere. Values are immutable after construction and every operation
// is a pure function, so concurrent use is safe.
using Int = mpz_class;
using Rat = mpq_class;

// n! / (k! (n-k)!) for 0 <= k <= n, and 0 for k outside that range.
// Negative n is a hard error: the counting formulas never produce one,
// so a silent zero would mask a caller bug.
Int binomial(long n, long k);

// binomial(2n, n) / (n + 1), exactly. Rejects n < 0.
Int catalan(long n);

// Rational in lowest terms with positive denominator.
Rat rat_of(const Int& num, const Int& den);
Rat rat_of(long num, long den);

bool is_integer(const Rat& q);

// Exact conversion; throws std::domain_error when q is not an integer.
Int to_integer(const Rat& q);

// Full decimal rendering, never scientific notation.
std::string decimal(const Int& v);

} // namespace wallcount
