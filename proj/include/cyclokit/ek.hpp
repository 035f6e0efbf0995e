#pragma once

#include <cmath>
#include <cstdint>

#include "cyclokit/bracket.hpp"
#include "cyclokit/common.hpp"
#include "cyclokit/euler_products.hpp"
#include "cyclokit/orders.hpp"

namespace cyclokit {

/// Heuristic point estimate of the Euler-Kronecker constant of the q-th
/// cyclotomic field:
///   log x - (q-1) * sum_{p <= x, p != q} log p/(p^{f_p}-1) - log q/(q-1).
inline double cyc(const OrderTable& orders, std::uint64_t x) {
    if (x < 3) throw std::domain_error("cyc: x must be >= 3");
    if (x > orders.limit) throw std::out_of_range("cyc: x exceeds order table limit");
    const auto& ps = orders.primes->primes;
    const auto& lg = orders.primes->log_primes;
    const std::uint64_t q = orders.q;
    KahanSum s;
    for (std::size_t i = 0; i < orders.f.size(); ++i) {
        const std::uint64_t p = ps[i];
        if (p > x) break;
        const std::uint32_t f = orders.f[i];
        if (f == 0) continue;  // p == q
        s.add(detail::log_over_pow_m1(p, f, lg[i]));
    }
    const double lq = std::log(static_cast<double>(q));
    return std::log(static_cast<double>(x)) - static_cast<double>(q - 1) * s.value()
           - lq / static_cast<double>(q - 1);
}

/// The weighted prime-power sum Phi_{K(q)}(x):
///   (x-1) Phi = (q-1) sum_{p^{f_p k} <= x, p != q} (x/p^{f_p k} - 1) log p
///             + sum_{q^k <= x} (x/q^k - 1) log q.
inline double phi_K(const OrderTable& orders, double x) {
    if (!(x > 1.0)) throw std::domain_error("phi_K: x must exceed 1");
    if (x > static_cast<double>(orders.limit))
        throw std::out_of_range("phi_K: x exceeds order table limit");
    const auto& ps = orders.primes->primes;
    const auto& lg = orders.primes->log_primes;
    const std::uint64_t q = orders.q;
    const double log_x = std::log(x);
    KahanSum s;
    for (std::size_t i = 0; i < orders.f.size(); ++i) {
        const std::uint64_t p = ps[i];
        if (static_cast<double>(p) > x) break;
        const std::uint32_t f = orders.f[i];
        if (f == 0) continue;
        if (static_cast<double>(f) * lg[i] > log_x + 1e-12) continue;
        for (std::uint64_t k = 1;; ++k) {
            if (static_cast<double>(f) * static_cast<double>(k) * lg[i] > log_x + 1e-12) break;
            const double pfk = detail::pow_u64(p, f * k);
            if (pfk > x) break;
            s.add((x / pfk - 1.0) * lg[i]);
        }
    }
    KahanSum qs;
    const double lq = std::log(static_cast<double>(q));
    for (std::uint64_t k = 1;; ++k) {
        if (static_cast<double>(k) * lq > log_x + 1e-12) break;
        const double qk = detail::pow_u64(q, k);
        if (qk > x) break;
        qs.add((x / qk - 1.0) * lq);
    }
    return (static_cast<double>(q - 1) * s.value() + qs.value()) / (x - 1.0);
}

/// GRH-conditional bracket for EK_{K(q)} from the explicit upper and lower
/// bounds at finite x; both endpoints tend to EK as x grows.
inline Bracket ihara_bounds(const OrderTable& orders, std::uint64_t x) {
    if (x < 2) throw std::domain_error("ihara_bounds: x too small (sqrt(x) <= 1)");
    const std::uint64_t q = orders.q;
    const double xd = static_cast<double>(x);
    const double phi = phi_K(orders, xd);
    const double lq_x = 0.5 * static_cast<double>(q - 1)
                        * (std::log(xd / (xd - 1.0)) + std::log(xd) / (xd - 1.0));
    const double two_kappa = static_cast<double>(q - 2) * std::log(static_cast<double>(q))
                             - static_cast<double>(q - 1) * (kEulerGamma + kLogTwoPi);
    const double sx = std::sqrt(xd);
    const double core = std::log(xd) - phi + lq_x;
    const double lo = (sx - 1.0) / (sx + 1.0) * core - two_kappa / (sx + 1.0) - 1.0;
    const double hi = (sx + 1.0) / (sx - 1.0) * core + two_kappa / (sx - 1.0) - 1.0;
    return Bracket(lo, hi, x, true, "explicit prime-power bounds (GRH)");
}

/// GRH upper bound for EK_{K(q)}, q >= 23: the sharper of
/// ((z+1)/(z-1))(2 log z + 1) with z = (q-2)/2 * log q, and 2 log(q log q).
inline double ek_upper_analytic(std::uint64_t q) {
    detail::require_odd_prime(q, "ek_upper_analytic");
    if (q < 23) throw std::domain_error("ek_upper_analytic: valid for q >= 23 only");
    const double lq = std::log(static_cast<double>(q));
    const double z = 0.5 * static_cast<double>(q - 2) * lq;
    const double sharp = (z + 1.0) / (z - 1.0) * (2.0 * std::log(z) + 1.0);
    const double coarse = 2.0 * std::log(static_cast<double>(q) * lq);
    return std::min(sharp, coarse);
}

/// Point estimate and certified bracket together.
struct EkEstimate {
    std::uint64_t q = 0;
    std::uint64_t x = 0;
    double cyc = 0.0;     // heuristic
    Bracket bracket;      // GRH-conditional
};

inline EkEstimate estimate_ek(const OrderTable& orders, std::uint64_t x) {
    return EkEstimate{orders.q, x, cyc(orders, x), ihara_bounds(orders, x)};
}

}  // namespace cyclokit
