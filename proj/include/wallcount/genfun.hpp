#pragma once

#include "wallcount/arith.hpp"
#include "wallcount/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wallcount {

// Generating functions for the staircase-bounded path counts.
//
// The kernel (w-1)^l - x*w^{k+l} has exactly l roots that are fractional
// power series with value 1 at x = 0. Those roots are never represented
// individually here: only their symmetric functions, which are ordinary
// power series over the rationals, are computed. The entry point is the
// closed form for the power sums of the shifted roots u_i = w_i - 1;
// Newton's identities then give the elementary symmetric series, and a
// binomial shift moves between e_j(u) and e_j(w).

struct RootSymmetrics {
    long k = 0;
    long l = 0;
    long order = 0;
    std::vector<TruncatedSeries> p_shifted; // power sums of w_i - 1; index m-1 holds p_m
    std::vector<TruncatedSeries> e_shifted; // elementary symmetric of w_i - 1; index j holds e_j
    std::vector<TruncatedSeries> e_roots;   // elementary symmetric of w_i; index j holds e_j
};

// p_m(w_1 - 1, ..., w_l - 1) = m * sum_n binomial((k+l)n, l*n - m) x^n / n,
// with the zero-outside-range binomial convention.
TruncatedSeries power_sum_u(long k, long l, long m, long order);

RootSymmetrics build_root_symmetrics(long k, long l, long order);

// e_0..e_count of `count` quantities from their power sums p_1..p_count
// (p[i] at index i-1). Division by j is exact over the rationals.
std::vector<TruncatedSeries> elementary_from_power_sums(
    const std::vector<TruncatedSeries>& p, long count, long order);

// p_1..p_max of nvars quantities from e_0..e_nvars (e[j] at index j).
// No division needed in this direction.
std::vector<TruncatedSeries> power_sums_from_elementary(
    const std::vector<TruncatedSeries>& e, long nvars, long max_power, long order);

// Alternating combination of the e_j(w): coefficient n counts paths to
// (l*n - r, k*n) below the r-trimmed staircase; matches f_r_count.
TruncatedSeries f_r_series(long k, long l, long r, long order);

// exp( sum_n binomial((k+l)n, l*n) x^n / n ); coefficient n matches q_count.
TruncatedSeries q_series_exp(long k, long l, long order);

// exp( sum_n binomial((k+l)n - 1, l*n - 1) x^n / n ); matches f_r_count at r=1.
TruncatedSeries f1_series_exp(long k, long l, long order);

// The Catalan generating function to the given order.
TruncatedSeries catalan_series(long order);

// Periodic two-row wall counts, square case k = l = m.
TruncatedSeries fbar_series_exp(long m, long order);
// Same series through the root-of-unity product, evaluated as
// exp(m * multisect(log C, m)) so all arithmetic stays rational.
TruncatedSeries fbar_series_multisection(long m, long order);
// Computes both routes and insists they agree.
TruncatedSeries fbar_series(long m, long order);

enum class CheckStatus { pass, fail, skipped };

struct IdentityResult {
    std::string name;
    std::string params;
    CheckStatus status = CheckStatus::pass;
    std::optional<long> first_mismatch_order;
};

// Cross-validates, coefficientwise to the given order:
//   q_vs_f_ell                x*Q + 1 = F_l
//   f2_reciprocal_form        F_2 = (1 - l + sum_j 1/w_j) * e_l      (l >= 2)
//   f_prev_product_form       F_{l-1} = 1 + (l-1)*prod(1-w_i) - e_{l-1}(1-w)  (l >= 2)
//   conjugate_power_sum m=..  power sums of reciprocal conjugate roots
//                             against their binomial closed form
// max_power bounds the power sums checked in the last family; <= 0 means k+l.
std::vector<IdentityResult> identity_suite(long k, long l, long order, long max_power = 0);

struct LemmaReport {
    std::string name;
    long tuples_checked = 0;
    bool pass = true;
    std::string first_failure;
};

// Exhaustive check of the three finite alternating binomial-sum identities
// used by the e_j(w) combination proof, for all parameters up to `bound`.
std::vector<LemmaReport> binomial_lemma_checks(long bound);

} // namespace wallcount
