#pragma once

#include <cmath>
#include <cstdint>

#include "cyclokit/bracket.hpp"
#include "cyclokit/common.hpp"
#include "cyclokit/ek.hpp"
#include "cyclokit/euler_products.hpp"
#include "cyclokit/orders.hpp"
#include "cyclokit/primes.hpp"

namespace cyclokit {

/// Generalized von Mangoldt weight attached to the indicator of
/// q not dividing phi(n):
///   (-1)^{r+1} log q  at n = q^r,
///   log p             at n = p^r with p != q, p != 1 (mod q),
///   0                 otherwise.
inline double lambda_fq(std::uint64_t n, std::uint64_t q) {
    detail::require_odd_prime(q, "lambda_fq");
    if (n == 0) throw std::domain_error("lambda_fq: n must be >= 1");
    if (n == 1) return 0.0;
    if (n % q == 0) {
        std::uint64_t r = 0;
        while (n % q == 0) { n /= q; ++r; }
        if (n != 1) return 0.0;  // mixed factorization
        return (r % 2 == 1 ? 1.0 : -1.0) * std::log(static_cast<double>(q));
    }
    // smallest prime factor by trial division
    std::uint64_t p = 0;
    if (n % 2 == 0) {
        p = 2;
    } else {
        for (std::uint64_t d = 3; d * d <= n; d += 2) {
            if (n % d == 0) { p = d; break; }
        }
        if (p == 0) p = n;  // n itself is prime
    }
    std::uint64_t m = n;
    while (m % p == 0) m /= p;
    if (m != 1) return 0.0;
    return (p % q == 1) ? 0.0 : std::log(static_cast<double>(p));
}

/// J approximant of B_{f_q}:
///   -gamma - 2 log q/(q^2-1) - sum_{p <= x, p = 1 (mod q)} log p/(p-1)
///   + log x/(q-1).
inline double j_fq(std::uint64_t q, const PrimeTable& primes, std::uint64_t x) {
    detail::require_odd_prime(q, "j_fq");
    if (x < 3) throw std::domain_error("j_fq: x must be >= 3");
    if (x > primes.limit) throw std::out_of_range("j_fq: x exceeds sieve limit");
    KahanSum s;
    const std::size_t n = primes.count_below(static_cast<double>(x));
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t p = primes.primes[i];
        if (p % q == 1) s.add(primes.log_primes[i] / (static_cast<double>(p) - 1.0));
    }
    const double lq = std::log(static_cast<double>(q));
    return -kEulerGamma - 2.0 * lq / static_cast<double>(q * q - 1) - s.value()
           + std::log(static_cast<double>(x)) / static_cast<double>(q - 1);
}

/// H approximant of B_{f_q}; the sum runs over all p <= x with
/// p != 1 (mod q), which includes p = q itself.
inline double h_fq(std::uint64_t q, const PrimeTable& primes, std::uint64_t x) {
    detail::require_odd_prime(q, "h_fq");
    if (x < 3) throw std::domain_error("h_fq: x must be >= 3");
    if (x > primes.limit) throw std::out_of_range("h_fq: x exceeds sieve limit");
    KahanSum s;
    const std::size_t n = primes.count_below(static_cast<double>(x));
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t p = primes.primes[i];
        if (p % q != 1) s.add(primes.log_primes[i] / (static_cast<double>(p) - 1.0));
    }
    const double lq = std::log(static_cast<double>(q));
    const double tau = static_cast<double>(q - 2) / static_cast<double>(q - 1);
    return -2.0 * lq / static_cast<double>(q * q - 1) + s.value()
           - tau * std::log(static_cast<double>(x));
}

/// Partial sums of the von Mangoldt weight over n <= x, minus the main
/// term: sum Lambda_{f_q}(n)/n - (q-2)/(q-1) log x. Tends to B_{f_q}.
inline double mangoldt_partial_check(std::uint64_t q, const PrimeTable& primes, std::uint64_t x) {
    detail::require_odd_prime(q, "mangoldt_partial_check");
    if (x > 10'000'000) throw resource_error("mangoldt_partial_check: x exceeds 1e7 budget");
    if (x > primes.limit) throw std::out_of_range("mangoldt_partial_check: x exceeds sieve limit");
    if (x == 0) throw std::domain_error("mangoldt_partial_check: x must be >= 1");
    KahanSum s;
    const std::size_t n = primes.count_below(static_cast<double>(x));
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t p = primes.primes[i];
        const double lp = primes.log_primes[i];
        if (p == q) {
            double sign = 1.0;
            for (std::uint64_t pk = p; pk <= x; pk *= p) {
                s.add(sign * lp / static_cast<double>(pk));
                sign = -sign;
                if (pk > x / p) break;
            }
        } else if (p % q != 1) {
            for (std::uint64_t pk = p; pk <= x; pk *= p) {
                s.add(lp / static_cast<double>(pk));
                if (pk > x / p) break;
            }
        }
    }
    const double tau = static_cast<double>(q - 2) / static_cast<double>(q - 1);
    return s.value() - tau * std::log(static_cast<double>(x));
}

/// GRH-conditional bracket for B_{f_q}:
///   Low/Upp = (3-q) log q/((q-1)(q^2-1)) - gamma + ek_bound/(q-1)
///             + v partial sum at y (+ 1.055/y on the upper side).
inline Bracket bfq_bracket(const OrderTable& orders, std::uint64_t x, std::uint64_t y) {
    const std::uint64_t q = orders.q;
    const Bracket ek = ihara_bounds(orders, x);
    const Bracket v = v_bracket(orders, y);
    const double lq = std::log(static_cast<double>(q));
    const double head = (3.0 - static_cast<double>(q)) * lq
                        / (static_cast<double>(q - 1) * static_cast<double>(q * q - 1))
                        - kEulerGamma;
    const double lo = head + ek.lo / static_cast<double>(q - 1) + v.lo;
    const double hi = head + ek.hi / static_cast<double>(q - 1) + v.hi;
    return Bracket(lo, hi, x, true, "ek bracket at x, v partial sum at y (GRH)");
}

/// Closed-form GRH upper bound for B_{f_q}, q >= 67; monotone decreasing.
inline double bfq_upper_analytic(std::uint64_t q) {
    detail::require_odd_prime(q, "bfq_upper_analytic");
    if (q < 67) throw std::domain_error("bfq_upper_analytic: valid for q >= 67 only");
    const double qd = static_cast<double>(q);
    const double lq = std::log(qd);
    return -kEulerGamma + 2.0 * std::log(qd * lq) / qd
           + 2.0 * std::log(9.0 * lq) * lq / (3.0 * qd);
}

/// Hybrid GRH upper bound: closed-form EK term plus the sieved prime sum
/// over p < y (strict) with the 1.055/y tail.
inline double bfq_upper_hybrid(const OrderTable& orders, std::uint64_t y) {
    const std::uint64_t q = orders.q;
    if (q < 23) throw std::domain_error("bfq_upper_hybrid: valid for q >= 23 only");
    if (y < 3) throw std::domain_error("bfq_upper_hybrid: y must be >= 3");
    if (y - 1 > orders.limit) throw std::out_of_range("bfq_upper_hybrid: y exceeds order table limit");
    const double qd = static_cast<double>(q);
    const double lq = std::log(qd);
    return -kEulerGamma + 2.0 * std::log(qd * lq) / qd
           + detail::v_partial_sum(orders, y, /*strict=*/true)
           + 1.055 / static_cast<double>(y);
}

/// Second-order to leading coefficient ratio: e_1/e_0 = (1 + B)/(q - 1).
inline double e1_over_e0(std::uint64_t q, double b) {
    return (1.0 + b) / static_cast<double>(q - 1);
}

/// Point estimates and the certified bracket, as reported together.
struct BfqEstimate {
    std::uint64_t q = 0;
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    double j_value = 0.0;
    double h_value = 0.0;
    Bracket bracket;  // GRH-conditional
};

inline BfqEstimate estimate_bfq(const OrderTable& orders, std::uint64_t x, std::uint64_t y) {
    BfqEstimate est;
    est.q = orders.q;
    est.x = x;
    est.y = y;
    const std::uint64_t pt = std::min<std::uint64_t>(orders.limit, std::max(x, y));
    est.j_value = j_fq(orders.q, *orders.primes, pt);
    est.h_value = h_fq(orders.q, *orders.primes, pt);
    est.bracket = bfq_bracket(orders, x, y);
    return est;
}

}  // namespace cyclokit
