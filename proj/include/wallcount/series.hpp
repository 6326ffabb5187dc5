#pragma once

#include "wallcount/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wallcount {

// Formal power series over Rat, truncated at a known order. Coefficients
// above the truncation order are unknown, not zero, so binary operations
// carry the weaker (minimum) order of their inputs and never claim a
// coefficient the inputs cannot justify.
class TruncatedSeries {
public:
    // Zero series of the given order (order >= 0).
    explicit TruncatedSeries(long order);
    // Coefficients 0..coeffs.size()-1; order = coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<Rat> coeffs);

    static TruncatedSeries constant(const Rat& value, long order);
    static TruncatedSeries monomial(const Rat& value, long degree, long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rat& coeff(long n) const;

    // Coefficient as an exact integer; throws when it is not integral.
    Int integer_coeff(long n) const;
    bool all_integer() const;

    TruncatedSeries truncated(long new_order) const;
    // Multiplication by x. One more coefficient becomes known, so the
    // order grows by one.
    TruncatedSeries shifted_up() const;

private:
    std::vector<Rat> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rat& c, const TruncatedSeries& s);
TruncatedSeries operator+(const TruncatedSeries& s, const Rat& c);
TruncatedSeries operator-(const TruncatedSeries& s, const Rat& c);

// a = b * result up to the common order. When both a and b vanish at 0,
// the common power of x is cancelled first (shift-then-divide). A divisor
// vanishing to higher order than the dividend is not invertible.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

// Requires s(0) = 0. Computed by the derivative recursion
// result' = s' * result, which stays in exact rationals.
TruncatedSeries exp(const TruncatedSeries& s);

// Requires s(0) = 1; exp(log(s)) = s up to truncation.
TruncatedSeries log(const TruncatedSeries& s);

// Every m-th coefficient: result coeff j = s coeff m*j; order floor(N/m).
// This is the root-of-unity filter sum_k xi^{kn} = m*[m|n] with no complex
// arithmetic.
TruncatedSeries multisect(const TruncatedSeries& s, long m);

// Equality is only meaningful up to the common truncation order, so it is
// spelled out here instead of an operator==.
bool agree(const TruncatedSeries& a, const TruncatedSeries& b);
std::optional<long> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

// {"order": N, "coefficients": [{"num": "...", "den": "..."}, ...]}
std::string to_json(const TruncatedSeries& s);
std::string to_string(const TruncatedSeries& s);

} // namespace wallcount
