#include "wallcount/genfun.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace wallcount {

namespace {

void require_kl(long k, long l) {
    if (k < 1 || l < 1)
        throw std::invalid_argument("need k >= 1 and l >= 1");
}

// sum_{n>=1} coeff(n) x^n to the given order.
TruncatedSeries series_from(long order, const std::function<Rat(long)>& coeff) {
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
    for (long n = 1; n <= order; ++n)
        c[static_cast<std::size_t>(n)] = coeff(n);
    return TruncatedSeries(std::move(c));
}

} // namespace

TruncatedSeries power_sum_u(long k, long l, long m, long order) {
    require_kl(k, l);
    if (m < 1)
        throw std::invalid_argument("power_sum_u: m must be >= 1");
    return series_from(order, [&](long n) {
        return rat_of(Int(m) * binomial((k + l) * n, l * n - m), Int(n));
    });
}

std::vector<TruncatedSeries> elementary_from_power_sums(
    const std::vector<TruncatedSeries>& p, long count, long order) {
    if (static_cast<long>(p.size()) < count)
        throw std::invalid_argument("elementary_from_power_sums: not enough power sums");
    std::vector<TruncatedSeries> e;
    e.reserve(static_cast<std::size_t>(count) + 1);
    e.push_back(TruncatedSeries::constant(Rat(1), order));
    for (long j = 1; j <= count; ++j) {
        // j e_j = sum_{i=1..j} (-1)^{i-1} e_{j-i} p_i
        TruncatedSeries acc(order);
        for (long i = 1; i <= j; ++i) {
            TruncatedSeries term = e[static_cast<std::size_t>(j - i)] *
                                   p[static_cast<std::size_t>(i - 1)];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        e.push_back(rat_of(1, j) * acc);
    }
    return e;
}

std::vector<TruncatedSeries> power_sums_from_elementary(
    const std::vector<TruncatedSeries>& e, long nvars, long max_power, long order) {
    if (static_cast<long>(e.size()) < nvars + 1)
        throw std::invalid_argument("power_sums_from_elementary: elementary list too short");
    auto e_at = [&](long j) -> TruncatedSeries {
        if (j <= nvars)
            return e[static_cast<std::size_t>(j)];
        return TruncatedSeries(order);
    };
    std::vector<TruncatedSeries> p;
    p.reserve(static_cast<std::size_t>(max_power));
    for (long m = 1; m <= max_power; ++m) {
        // p_m = sum_{i=1..m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m
        TruncatedSeries acc(order);
        for (long i = 1; i < m; ++i) {
            TruncatedSeries term = e_at(i) * p[static_cast<std::size_t>(m - i - 1)];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        TruncatedSeries tail = Rat(m) * e_at(m);
        acc = (m % 2 == 1) ? acc + tail : acc - tail;
        p.push_back(acc);
    }
    return p;
}

RootSymmetrics build_root_symmetrics(long k, long l, long order) {
    require_kl(k, l);
    if (order < 0)
        throw std::invalid_argument("build_root_symmetrics: order must be >= 0");
    RootSymmetrics rs;
    rs.k = k;
    rs.l = l;
    rs.order = order;
    for (long m = 1; m <= l; ++m)
        rs.p_shifted.push_back(power_sum_u(k, l, m, order));
    rs.e_shifted = elementary_from_power_sums(rs.p_shifted, l, order);
    // w = u + 1 shifts the elementary symmetric functions by binomials:
    // e_j(w) = sum_i binomial(l - i, j - i) e_i(u)
    for (long j = 0; j <= l; ++j) {
        TruncatedSeries acc(order);
        for (long i = 0; i <= j; ++i)
            acc = acc + rat_of(binomial(l - i, j - i), Int(1)) *
                            rs.e_shifted[static_cast<std::size_t>(i)];
        rs.e_roots.push_back(acc);
    }
    return rs;
}

TruncatedSeries f_r_series(long k, long l, long r, long order) {
    if (r < 1 || r > l)
        throw std::invalid_argument("f_r_series: r must satisfy 1 <= r <= l");
    RootSymmetrics rs = build_root_symmetrics(k, l, order);
    TruncatedSeries acc(order);
    for (long i = 0; i <= r - 1; ++i) {
        TruncatedSeries term = rat_of(binomial(l - r + i, i), Int(1)) *
                               rs.e_roots[static_cast<std::size_t>(l - r + 1 + i)];
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

TruncatedSeries q_series_exp(long k, long l, long order) {
    require_kl(k, l);
    return exp(series_from(order, [&](long n) {
        return rat_of(binomial((k + l) * n, l * n), Int(n));
    }));
}

TruncatedSeries f1_series_exp(long k, long l, long order) {
    require_kl(k, l);
    return exp(series_from(order, [&](long n) {
        return rat_of(binomial((k + l) * n - 1, l * n - 1), Int(n));
    }));
}

TruncatedSeries catalan_series(long order) {
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
    for (long n = 0; n <= order; ++n)
        c[static_cast<std::size_t>(n)] = Rat(catalan(n));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries fbar_series_exp(long m, long order) {
    return f1_series_exp(m, m, order);
}

TruncatedSeries fbar_series_multisection(long m, long order) {
    if (m < 1)
        throw std::invalid_argument("fbar_series_multisection: m must be >= 1");
    TruncatedSeries logc = log(catalan_series(m * order));
    return exp(Rat(m) * multisect(logc, m));
}

TruncatedSeries fbar_series(long m, long order) {
    TruncatedSeries a = fbar_series_exp(m, order);
    TruncatedSeries b = fbar_series_multisection(m, order);
    if (auto bad = first_mismatch(a, b))
        throw std::logic_error("fbar_series: routes disagree at order " + std::to_string(*bad) +
                               " for m=" + std::to_string(m));
    return a;
}

namespace {

std::string kl_params(long k, long l) {
    return "k=" + std::to_string(k) + " l=" + std::to_string(l);
}

IdentityResult compare(std::string name, std::string params, const TruncatedSeries& a,
                       const TruncatedSeries& b) {
    IdentityResult r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.first_mismatch_order = first_mismatch(a, b);
    r.status = r.first_mismatch_order ? CheckStatus::fail : CheckStatus::pass;
    return r;
}

} // namespace

std::vector<IdentityResult> identity_suite(long k, long l, long order, long max_power) {
    require_kl(k, l);
    if (max_power <= 0)
        max_power = k + l;
    std::vector<IdentityResult> out;
    RootSymmetrics rs = build_root_symmetrics(k, l, order);
    const auto& e_w = rs.e_roots;

    // x*Q + 1 = F_l
    {
        TruncatedSeries lhs = q_series_exp(k, l, order).shifted_up() + Rat(1);
        TruncatedSeries rhs = f_r_series(k, l, l, order);
        out.push_back(compare("q_vs_f_ell", kl_params(k, l), lhs, rhs));
    }

    // F_2 = (1 - l + sum_j 1/w_j) * e_l, with the reciprocal power sum
    // computed by exact series division (e_l has constant term 1).
    if (l >= 2) {
        TruncatedSeries recip_p1 = div(e_w[static_cast<std::size_t>(l - 1)],
                                       e_w[static_cast<std::size_t>(l)]);
        TruncatedSeries lhs = (recip_p1 + Rat(1 - l)) * e_w[static_cast<std::size_t>(l)];
        TruncatedSeries rhs = f_r_series(k, l, 2, order);
        out.push_back(compare("f2_reciprocal_form", kl_params(k, l), lhs, rhs));
    } else {
        out.push_back({"f2_reciprocal_form", kl_params(k, l), CheckStatus::skipped, {}});
    }

    // F_{l-1} = 1 + (l-1)*prod(1-w_i) - e_{l-1}(1-w_1, ..., 1-w_l), where
    // e_a(1-w) = sum_j (-1)^j binomial(l-j, a-j) e_j(w).
    if (l >= 2) {
        TruncatedSeries prod(order); // prod(1 - w_i) = sum_j (-1)^j e_j(w)
        for (long j = 0; j <= l; ++j) {
            const auto& term = e_w[static_cast<std::size_t>(j)];
            prod = (j % 2 == 0) ? prod + term : prod - term;
        }
        TruncatedSeries e_prev(order);
        for (long j = 0; j <= l - 1; ++j) {
            TruncatedSeries term = rat_of(binomial(l - j, l - 1 - j), Int(1)) *
                                   e_w[static_cast<std::size_t>(j)];
            e_prev = (j % 2 == 0) ? e_prev + term : e_prev - term;
        }
        TruncatedSeries lhs = (Rat(l - 1) * prod) - e_prev + Rat(1);
        TruncatedSeries rhs = f_r_series(k, l, l - 1, order);
        out.push_back(compare("f_prev_product_form", kl_params(k, l), lhs, rhs));
    } else {
        out.push_back({"f_prev_product_form", kl_params(k, l), CheckStatus::skipped, {}});
    }

    // Power sums of the reciprocals of the k conjugate roots. Reciprocals
    // of all k+l roots are the roots of w^k (1-w)^l - x; dividing by the
    // leading coefficient (-1)^l leaves e_j = binomial(l, j) for j <= l,
    // zero between, and e_{k+l} = (-1)^{k+1} x.
    {
        std::vector<TruncatedSeries> e_all;
        for (long j = 0; j <= k + l; ++j) {
            if (j <= l)
                e_all.push_back(TruncatedSeries::constant(Rat(binomial(l, j)), order));
            else if (j < k + l)
                e_all.push_back(TruncatedSeries(order));
            else
                e_all.push_back(TruncatedSeries::monomial(Rat(k % 2 == 0 ? -1 : 1), 1, order));
        }
        std::vector<TruncatedSeries> p_all =
            power_sums_from_elementary(e_all, k + l, max_power, order);

        std::vector<TruncatedSeries> e_recip_small;
        for (long j = 0; j <= l; ++j)
            e_recip_small.push_back(div(e_w[static_cast<std::size_t>(l - j)],
                                        e_w[static_cast<std::size_t>(l)]));
        std::vector<TruncatedSeries> p_small =
            power_sums_from_elementary(e_recip_small, l, max_power, order);

        for (long m = 1; m <= max_power; ++m) {
            TruncatedSeries lhs = p_all[static_cast<std::size_t>(m - 1)] -
                                  p_small[static_cast<std::size_t>(m - 1)];
            TruncatedSeries rhs = series_from(order, [&](long n) {
                if (k * n < m)
                    return Rat(0);
                return rat_of(Int(m) * binomial((l + k) * n - m - 1, k * n - m), Int(n));
            });
            out.push_back(compare("conjugate_power_sum",
                                  kl_params(k, l) + " m=" + std::to_string(m), lhs, rhs));
        }
    }
    return out;
}

namespace {

// binomial extended to negative upper index by (-1)^k binomial(k-n-1, k);
// only the lemma checker needs this, at the j = l hypothesis boundary.
Int binomial_signed(long n, long k) {
    if (k < 0)
        return 0;
    if (n >= 0)
        return binomial(n, k);
    Int b = binomial(k - n - 1, k);
    return (k % 2 == 0) ? b : Int(-b);
}

Int sign(long s) {
    return (s % 2 == 0) ? Int(1) : Int(-1);
}

} // namespace

std::vector<LemmaReport> binomial_lemma_checks(long bound) {
    if (bound < 1)
        throw std::invalid_argument("binomial_lemma_checks: bound must be >= 1");
    std::vector<LemmaReport> out;

    auto fail_at = [](LemmaReport& rep, long l, long r, long j, long i) {
        if (!rep.pass)
            return;
        rep.pass = false;
        rep.first_failure = "l=" + std::to_string(l) + " r=" + std::to_string(r) +
                            " j=" + std::to_string(j) +
                            (i >= 0 ? " i=" + std::to_string(i) : "");
    };

    // sum_{m=0}^{r-1-j} (-1)^{j+r+m+1} binomial(l-j, r-1-m-j)
    //   = (-1)^{r-j-1} binomial(l-j-1, r-j-1)
    {
        LemmaReport rep{"binomial_sum_reduction", 0, true, ""};
        for (long l = 0; l <= bound; ++l)
            for (long r = 1; r <= bound; ++r)
                for (long j = 0; j <= std::min(l, r - 1); ++j) {
                    Int lhs(0);
                    for (long m = 0; m <= r - 1 - j; ++m)
                        lhs += sign(j + r + m + 1) * binomial(l - j, r - 1 - m - j);
                    Int rhs = sign(r - j - 1) * binomial_signed(l - j - 1, r - j - 1);
                    ++rep.tuples_checked;
                    if (lhs != rhs)
                        fail_at(rep, l, r, j, -1);
                }
        out.push_back(rep);
    }

    // sum_{m=i}^{r-1-j} (-1)^{r+m+i+j} binomial(l-j, r-1-m-j) binomial(m+l, i+l)
    //   = (-1)^{i-1} binomial(r-1, i+j)
    {
        LemmaReport rep{"binomial_double_sum", 0, true, ""};
        for (long l = 0; l <= bound; ++l)
            for (long r = 1; r <= bound; ++r)
                for (long j = 0; j <= std::min(l, r - 1); ++j)
                    for (long i = 0; i <= r - 1 - j; ++i) {
                        Int lhs(0);
                        for (long m = i; m <= r - 1 - j; ++m)
                            lhs += sign(r + m + i + j) * binomial(l - j, r - 1 - m - j) *
                                   binomial(m + l, i + l);
                        Int rhs = sign(i + 1) * binomial(r - 1, i + j);
                        ++rep.tuples_checked;
                        if (lhs != rhs)
                            fail_at(rep, l, r, j, i);
                    }
        out.push_back(rep);
    }

    // sum_{m=0}^{r-1-j} (-1)^{j+r+m} binomial(l-j, r-1-m-j) binomial(m+l, l)
    //   = -binomial(r-1, j)
    {
        LemmaReport rep{"binomial_weighted_sum", 0, true, ""};
        for (long l = 0; l <= bound; ++l)
            for (long r = 1; r <= bound; ++r)
                for (long j = 0; j <= std::min(l, r - 1); ++j) {
                    Int lhs(0);
                    for (long m = 0; m <= r - 1 - j; ++m)
                        lhs += sign(j + r + m) * binomial(l - j, r - 1 - m - j) *
                               binomial(m + l, l);
                    Int rhs = -binomial(r - 1, j);
                    ++rep.tuples_checked;
                    if (lhs != rhs)
                        fail_at(rep, l, r, j, -1);
                }
        out.push_back(rep);
    }

    return out;
}

} // namespace wallcount
