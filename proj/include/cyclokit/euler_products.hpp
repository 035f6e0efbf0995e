#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cyclokit/bracket.hpp"
#include "cyclokit/common.hpp"
#include "cyclokit/orders.hpp"
#include "cyclokit/primes.hpp"

namespace cyclokit {

namespace detail {

inline void check_truncation_point(const OrderTable& orders, std::uint64_t y, const char* who) {
    if (y < 3) throw std::domain_error(std::string(who) + ": truncation point must be >= 3");
    if (y > orders.limit) throw std::out_of_range(std::string(who) + ": truncation point exceeds order table limit");
}

// Partial sum of log p / (p^{f_p} - 1) over p <= y (or p < y when strict),
// p != q, p != 1 (mod q). Ascending, compensated.
inline double v_partial_sum(const OrderTable& orders, std::uint64_t y, bool strict) {
    const auto& ps = orders.primes->primes;
    const auto& lg = orders.primes->log_primes;
    KahanSum s;
    for (std::size_t i = 0; i < orders.f.size(); ++i) {
        const std::uint64_t p = ps[i];
        if (strict ? (p >= y) : (p > y)) break;
        const std::uint32_t f = orders.f[i];
        if (f < 2) continue;  // skips p == q (f = 0) and p = 1 (mod q)
        s.add(log_over_pow_m1(p, f, lg[i]));
    }
    return s.value();
}

}  // namespace detail

/// C(q) = prod over p != q with f_p >= 2 of (1 - p^{-f_p})^{(q-1)/f_p},
/// bracketed by the partial product over p <= y and the elementary tail
/// factor [exp(-(q-1)/(y-1)), 1].
inline Bracket c_constant(const OrderTable& orders, std::uint64_t y) {
    detail::check_truncation_point(orders, y, "c_constant");
    const auto& ps = orders.primes->primes;
    const std::uint64_t q = orders.q;
    KahanSum log_prod;
    for (std::size_t i = 0; i < orders.f.size(); ++i) {
        const std::uint64_t p = ps[i];
        if (p > y) break;
        const std::uint32_t f = orders.f[i];
        if (f < 2) continue;
        const double inv = detail::inv_pow(p, f);
        if (inv == 0.0) continue;
        log_prod.add(static_cast<double>((q - 1) / f) * std::log1p(-inv));
    }
    const double s = log_prod.value();
    const double tail = static_cast<double>(q - 1) / static_cast<double>(y - 1);
    return Bracket(std::exp(s - tail), std::exp(s), y, false,
                   "truncated product, elementary tail");
}

/// The same constant via the double product over character classes
/// r = 1..q-2 (partial, p <= y). Independent of the primitive root g.
inline double c_constant_sw(std::uint64_t q, std::uint64_t g, const PrimeTable& primes,
                            std::uint64_t y) {
    detail::require_odd_prime(q, "c_constant_sw");
    if (y < 3) throw std::domain_error("c_constant_sw: y must be >= 3");
    if (y > primes.limit) throw std::out_of_range("c_constant_sw: y exceeds sieve limit");
    const auto factors = detail::distinct_prime_factors(q - 1);
    if (g % q == 0 || detail::order_from_factors(g % q, q, factors) != q - 1)
        throw std::domain_error("c_constant_sw: g is not a primitive root mod q");

    // index table: ind[g^j mod q] = j
    std::vector<std::uint32_t> ind(q, 0);
    std::uint64_t pw = 1;
    for (std::uint64_t j = 0; j < q - 1; ++j) {
        ind[pw] = static_cast<std::uint32_t>(j);
        pw = (pw * (g % q)) % q;
    }

    std::vector<KahanSum> per_class(q - 1);
    const std::size_t n = primes.count_below(static_cast<double>(y));
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t p = primes.primes[i];
        if (p == q) continue;
        const std::uint32_t r = ind[p % q];
        if (r == 0) continue;
        const std::uint64_t e = std::gcd<std::uint64_t>(r, q - 1);
        const std::uint64_t m = (q - 1) / e;
        const double inv = detail::inv_pow(p, m);
        if (inv == 0.0) continue;
        per_class[r].add(static_cast<double>(e) * std::log1p(-inv));
    }
    KahanSum total;
    for (std::uint64_t r = 1; r <= q - 2; ++r) total.add(per_class[r].value());
    return std::exp(total.value());
}

/// v(q) = sum over p != q, p != 1 (mod q) of log p / (p^{f_p} - 1),
/// bracketed by the partial sum over p <= y plus the 1.055/y tail.
inline Bracket v_bracket(const OrderTable& orders, std::uint64_t y) {
    detail::check_truncation_point(orders, y, "v_bracket");
    const double lo = detail::v_partial_sum(orders, y, /*strict=*/false);
    return Bracket(lo, lo + 1.055 / static_cast<double>(y), y, false,
                   "partial sum, 1.055/y tail");
}

/// Analytic upper bound 2 log(9 log q) log q / (3q), valid for q >= 67.
inline double v_upper_analytic(std::uint64_t q) {
    detail::require_odd_prime(q, "v_upper_analytic");
    if (q < 67) throw std::domain_error("v_upper_analytic: valid for q >= 67 only");
    const double lq = std::log(static_cast<double>(q));
    return 2.0 * std::log(9.0 * lq) * lq / (3.0 * static_cast<double>(q));
}

/// prod over p <= x, p = 1 (mod q) of (1 - 1/p), as exp of a compensated
/// log sum.
inline double mertens_progression_product(std::uint64_t q, std::uint64_t x,
                                          const PrimeTable& primes) {
    detail::require_odd_prime(q, "mertens_progression_product");
    if (x > primes.limit) throw std::out_of_range("mertens_progression_product: x exceeds sieve limit");
    KahanSum s;
    const std::size_t n = primes.count_below(static_cast<double>(x));
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t p = primes.primes[i];
        if (p % q == 1) s.add(std::log1p(-1.0 / static_cast<double>(p)));
    }
    return std::exp(s.value());
}

/// Product of (1 - 1/N) over prime ideals of norm N <= x in the q-th
/// cyclotomic field: the ramified factor (1 - 1/q), split primes with
/// exponent q-1, and inert-type primes p with p^{f_p} <= x.
inline double ideal_mertens_product(const OrderTable& orders, std::uint64_t x) {
    const std::uint64_t q = orders.q;
    if (x < q) throw std::domain_error("ideal_mertens_product: x must be >= q");
    if (x > orders.limit) throw std::out_of_range("ideal_mertens_product: x exceeds order table limit");
    KahanSum s;
    s.add(std::log1p(-1.0 / static_cast<double>(q)));
    const auto& ps = orders.primes->primes;
    const auto& lg = orders.primes->log_primes;
    const double log_x = std::log(static_cast<double>(x));
    for (std::size_t i = 0; i < orders.f.size(); ++i) {
        const std::uint64_t p = ps[i];
        if (p > x) break;
        const std::uint32_t f = orders.f[i];
        if (f == 1) {
            s.add(static_cast<double>(q - 1) * std::log1p(-1.0 / static_cast<double>(p)));
        } else if (f >= 2) {
            if (static_cast<double>(f) * lg[i] > log_x + 1e-9) continue;
            const double pf = detail::pow_u64(p, f);
            if (pf > static_cast<double>(x)) continue;
            s.add(static_cast<double>((q - 1) / f) * std::log1p(-1.0 / pf));
        }
    }
    return std::exp(s.value());
}

}  // namespace cyclokit
