#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "cyclokit/common.hpp"
#include "cyclokit/orders.hpp"
#include "cyclokit/primes.hpp"

namespace cyclokit {

/// Count of n <= x with q not dividing phi(n). By the multiplicative
/// characterization these are exactly the n divisible neither by q^2 nor
/// by any prime p = 1 (mod q).
inline std::uint64_t count_exact(std::uint64_t q, std::uint64_t x, const PrimeTable& primes) {
    detail::require_odd_prime(q, "count_exact");
    if (x == 0) throw std::domain_error("count_exact: x must be >= 1");
    if (x > 100'000'000) throw resource_error("count_exact: x exceeds 1e8 budget");
    if (x > primes.limit) throw std::out_of_range("count_exact: x exceeds sieve limit");
    std::vector<std::uint8_t> good(x + 1, 1);
    if (q <= x / q) {
        const std::uint64_t qq = q * q;
        for (std::uint64_t n = qq; n <= x; n += qq) good[n] = 0;
    }
    const std::size_t np = primes.count_below(static_cast<double>(x));
    for (std::size_t i = 0; i < np; ++i) {
        const std::uint64_t p = primes.primes[i];
        if (p % q != 1) continue;
        for (std::uint64_t n = p; n <= x; n += p) good[n] = 0;
    }
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= x; ++n) count += good[n];
    return count;
}

/// phi(n) for all n <= x by the standard multiplicative sieve; index 0 is 0.
inline std::vector<std::uint32_t> phi_sieve_oracle(std::uint64_t x) {
    if (x > 10'000'000) throw resource_error("phi_sieve_oracle: x exceeds 1e7 budget");
    std::vector<std::uint32_t> phi(x + 1);
    for (std::uint64_t n = 0; n <= x; ++n) phi[n] = static_cast<std::uint32_t>(n);
    for (std::uint64_t n = 2; n <= x; ++n) {
        if (phi[n] == n) {  // n is prime
            for (std::uint64_t m = n; m <= x; m += n) phi[m] -= phi[m] / static_cast<std::uint32_t>(n);
        }
    }
    return phi;
}

namespace detail {

inline std::uint64_t smallest_primitive_root(std::uint64_t q) {
    const auto factors = distinct_prime_factors(q - 1);
    for (std::uint64_t g = 2; g < q; ++g) {
        if (order_from_factors(g, q, factors) == q - 1) return g;
    }
    throw std::logic_error("smallest_primitive_root: none found");
}

// ind[g^j mod q] = j for j = 0..q-2.
inline std::vector<std::uint32_t> index_table(std::uint64_t q, std::uint64_t g) {
    std::vector<std::uint32_t> ind(q, 0);
    std::uint64_t pw = 1;
    for (std::uint64_t j = 0; j < q - 1; ++j) {
        ind[pw] = static_cast<std::uint32_t>(j);
        pw = (pw * g) % q;
    }
    return ind;
}

}  // namespace detail

/// L(1, chi_g^k) for the nonprincipal character chi_g^k mod q, by the
/// classical finite evaluations: the weighted character sum for odd k
/// (Gauss-sum normalized), the log-sine sum for even k. chi_g^k(-1) = (-1)^k.
inline std::complex<double> l_one_closed_form(std::uint64_t q, std::uint64_t g, std::uint64_t k) {
    detail::require_odd_prime(q, "l_one_closed_form");
    if (k == 0 || k > q - 2) throw std::domain_error("l_one_closed_form: k must be in 1..q-2");
    const auto factors = detail::distinct_prime_factors(q - 1);
    if (g % q == 0 || detail::order_from_factors(g % q, q, factors) != q - 1)
        throw std::domain_error("l_one_closed_form: g is not a primitive root mod q");
    const auto ind = detail::index_table(q, g % q);
    const double qd = static_cast<double>(q);

    auto chi = [&](std::uint64_t a) {
        const double ang = 2.0 * kPi * static_cast<double>(k) * static_cast<double>(ind[a])
                           / static_cast<double>(q - 1);
        return std::complex<double>(std::cos(ang), std::sin(ang));
    };

    std::complex<double> tau(0.0, 0.0);
    for (std::uint64_t a = 1; a < q; ++a) {
        const double ang = 2.0 * kPi * static_cast<double>(a) / qd;
        tau += chi(a) * std::complex<double>(std::cos(ang), std::sin(ang));
    }

    if (k % 2 == 1) {  // odd character
        std::complex<double> b1(0.0, 0.0);
        for (std::uint64_t a = 1; a < q; ++a) b1 += static_cast<double>(a) * std::conj(chi(a));
        b1 /= qd;
        return std::complex<double>(0.0, kPi) * tau * b1 / qd;
    }
    std::complex<double> s(0.0, 0.0);  // even character
    for (std::uint64_t a = 1; a < q; ++a)
        s += std::conj(chi(a)) * std::log(2.0 * std::sin(kPi * static_cast<double>(a) / qd));
    return -(tau / qd) * s;
}

/// Residue of the Dedekind zeta function of the q-th cyclotomic field at
/// s = 1, as the product of L(1, chi) over the q-2 nonprincipal characters.
/// The conjugate pairing makes the product real up to rounding.
inline double alpha_q(std::uint64_t q) {
    detail::require_odd_prime(q, "alpha_q");
    if (q > 200) throw std::domain_error("alpha_q: q > 200 exceeds double-precision character range");
    const std::uint64_t g = detail::smallest_primitive_root(q);
    std::complex<double> prod(1.0, 0.0);
    for (std::uint64_t k = 1; k <= q - 2; ++k) prod *= l_one_closed_form(q, g, k);
    if (std::abs(prod.imag()) > 1e-10 * std::max(1.0, std::abs(prod.real())))
        throw std::logic_error("alpha_q: character product has non-negligible imaginary part");
    return prod.real();
}

/// Gamma function, positive arguments only.
inline double gamma_fn(double t) {
    if (!(t > 0.0)) throw std::domain_error("gamma_fn: t must be positive");
    return std::tgamma(t);
}

/// Leading coefficient of the asymptotic expansion:
///   e_0(q) = (1 - q^{-2}) / (Gamma((q-2)/(q-1)) (c (1 - 1/q) a)^{1/(q-1)}).
inline double e0(std::uint64_t q, double c, double a) {
    detail::require_odd_prime(q, "e0");
    if (!(c > 0.0) || !(a > 0.0)) throw std::domain_error("e0: c and a must be positive");
    const double qd = static_cast<double>(q);
    const double expo = 1.0 / (qd - 1.0);
    const double g = gamma_fn((qd - 2.0) / (qd - 1.0));
    return (1.0 - 1.0 / (qd * qd)) / (g * std::pow(c * (1.0 - 1.0 / qd) * a, expo));
}

/// e_0(q) x / log^{1/(q-1)} x.
inline double naive_approx(std::uint64_t q, double x, double e0_val) {
    if (!(x >= 2.0)) throw std::domain_error("naive_approx: x must be >= 2");
    return e0_val * x / std::pow(std::log(x), 1.0 / static_cast<double>(q - 1));
}

namespace detail {

template <typename F>
inline double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                               double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
         + adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
inline double integrate(const F& f, double a, double b, double rel_tol) {
    if (b <= a) return 0.0;
    // log-spaced initial panels; the integrand is smooth on [2, x]
    const int panels = std::max(8, static_cast<int>(std::ceil(std::log2(b / a))));
    const double ratio = std::pow(b / a, 1.0 / panels);
    double total = 0.0;
    double lo = a;
    std::vector<double> rough(panels);
    double rough_total = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double hi = (i + 1 == panels) ? b : lo * ratio;
        rough[i] = (hi - lo) / 6.0 * (f(lo) + 4.0 * f(0.5 * (lo + hi)) + f(hi));
        rough_total += std::abs(rough[i]);
        lo = hi;
    }
    lo = a;
    for (int i = 0; i < panels; ++i) {
        const double hi = (i + 1 == panels) ? b : lo * ratio;
        const double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
        const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
        total += adaptive_simpson(f, lo, hi, fa, fm, fb, whole,
                                  rel_tol * rough_total / panels, 48);
        lo = hi;
    }
    return total;
}

}  // namespace detail

/// e_0(q) * integral from 2 to x of dt / log^{1/(q-1)} t, adaptive Simpson
/// with relative tolerance 1e-10.
inline double ramanujan_approx(std::uint64_t q, double x, double e0_val) {
    if (!(x >= 2.0)) throw std::domain_error("ramanujan_approx: x must be >= 2");
    if (x == 2.0) return 0.0;
    const double expo = 1.0 / static_cast<double>(q - 1);
    auto f = [expo](double t) { return std::pow(std::log(t), -expo); };
    return e0_val * detail::integrate(f, 2.0, x, 1e-10);
}

/// Exact count alongside both approximations and their absolute errors.
struct ApproxReport {
    std::uint64_t q = 0;
    std::uint64_t x = 0;
    std::uint64_t exact = 0;
    double naive = 0.0;
    double ramanujan = 0.0;
    double err_naive = 0.0;
    double err_ram = 0.0;
};

inline ApproxReport approx_report(std::uint64_t q, std::uint64_t x, const PrimeTable& primes,
                                  double e0_val) {
    ApproxReport r;
    r.q = q;
    r.x = x;
    r.exact = count_exact(q, x, primes);
    r.naive = naive_approx(q, static_cast<double>(x), e0_val);
    r.ramanujan = ramanujan_approx(q, static_cast<double>(x), e0_val);
    r.err_naive = std::abs(r.naive - static_cast<double>(r.exact));
    r.err_ram = std::abs(r.ramanujan - static_cast<double>(r.exact));
    return r;
}

}  // namespace cyclokit
