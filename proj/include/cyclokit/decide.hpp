#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "cyclokit/bfq.hpp"
#include "cyclokit/common.hpp"
#include "cyclokit/orders.hpp"
#include "cyclokit/primes.hpp"

namespace cyclokit {

enum class Verdict { naive_better, ramanujan_better, undecided };
enum class CertPath { analytic, hybrid, bracket };

/// Everything needed to replay a verdict: which bound was used, at which
/// truncation points, and the bound values it produced.
struct Certificate {
    CertPath path = CertPath::bracket;
    std::optional<std::uint64_t> x;
    std::optional<std::uint64_t> y;
    double bound_lo = -std::numeric_limits<double>::infinity();
    double bound_hi = std::numeric_limits<double>::infinity();
};

struct Decision {
    std::uint64_t q = 0;
    Verdict verdict = Verdict::undecided;
    Certificate certificate;
    bool conditional = true;  // all certified verdicts assume GRH
};

struct Budget {
    std::uint64_t x_max = 4'000'000;
    std::uint64_t y_max = 1'000'000;
};

namespace detail {

inline constexpr std::uint64_t kHybridY = 1373;

inline std::vector<std::uint64_t> escalation_grid(std::uint64_t first, std::uint64_t second,
                                                  std::uint64_t third, std::uint64_t fourth,
                                                  std::uint64_t cap) {
    std::vector<std::uint64_t> grid;
    for (std::uint64_t v : {first, second, third, fourth}) {
        if (v <= cap && (grid.empty() || v > grid.back())) grid.push_back(v);
    }
    while (!grid.empty() && grid.back() * 2 <= cap) grid.push_back(grid.back() * 2);
    if (grid.empty() || grid.back() < cap) grid.push_back(cap);
    return grid;
}

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::naive_better: return "NaiveBetter";
        case Verdict::ramanujan_better: return "RamanujanBetter";
        default: return "Undecided";
    }
}

inline const char* path_name(CertPath p) {
    switch (p) {
        case CertPath::analytic: return "analytic";
        case CertPath::hybrid: return "hybrid";
        default: return "bracket";
    }
}

}  // namespace detail

/// Staged decision procedure (GRH): is the naive or the Ramanujan-type
/// approximation asymptotically better? The verdict reduces to the sign of
/// B_{f_q} + 1/2, certified by whichever bound settles it first:
///   1. the closed-form upper bound, q >= 419;
///   2. the hybrid upper bound at y = 1373, q >= 23 (verified per q);
///   3. an escalating bracket search over x and y, capped by budget.
/// `primes` must be sieved at least to max(budget.x_max, budget.y_max);
/// smaller tables shrink the effective budget.
inline Decision decide(std::uint64_t q, const Budget& budget, const PrimeTable& primes) {
    detail::require_odd_prime(q, "decide");
    if (budget.x_max < 4 || budget.y_max < 3) throw std::domain_error("decide: budget too small");

    Decision d;
    d.q = q;
    d.conditional = true;

    if (q >= 419) {
        const double hi = bfq_upper_analytic(q);
        if (hi < -0.5) {
            d.verdict = Verdict::naive_better;
            d.certificate = Certificate{CertPath::analytic, std::nullopt, std::nullopt,
                                        -std::numeric_limits<double>::infinity(), hi};
            return d;
        }
    }
    if (q >= 23 && primes.limit >= detail::kHybridY - 1) {
        const OrderTable small = build_order_table(q, primes, detail::kHybridY);
        const double hi = bfq_upper_hybrid(small, detail::kHybridY);
        if (hi < -0.5) {
            d.verdict = Verdict::naive_better;
            d.certificate = Certificate{CertPath::hybrid, std::nullopt, detail::kHybridY,
                                        -std::numeric_limits<double>::infinity(), hi};
            return d;
        }
    }

    const std::uint64_t x_cap = std::min(budget.x_max, primes.limit);
    const std::uint64_t y_cap = std::min(budget.y_max, primes.limit);
    const auto xs = detail::escalation_grid(100'000, 300'000, 1'000'000, 2'000'000, x_cap);
    const auto ys = detail::escalation_grid(100'000, 1'000'000, 2'000'000, 4'000'000, y_cap);

    const OrderTable orders = build_order_table(q, primes, std::max(x_cap, y_cap));
    std::size_t ix = 0, iy = 0;
    Bracket last;
    bool bump_x_next = true;
    for (;;) {
        last = bfq_bracket(orders, xs[ix], ys[iy]);
        if (last.hi < -0.5) {
            d.verdict = Verdict::naive_better;
            d.certificate = Certificate{CertPath::bracket, xs[ix], ys[iy], last.lo, last.hi};
            return d;
        }
        if (last.lo > -0.5) {
            d.verdict = Verdict::ramanujan_better;
            d.certificate = Certificate{CertPath::bracket, xs[ix], ys[iy], last.lo, last.hi};
            return d;
        }
        // escalate x and y alternately until both are capped
        const bool can_x = ix + 1 < xs.size();
        const bool can_y = iy + 1 < ys.size();
        if (!can_x && !can_y) break;
        if (can_x && (bump_x_next || !can_y))
            ++ix;
        else
            ++iy;
        bump_x_next = !bump_x_next;
    }
    d.verdict = Verdict::undecided;
    d.certificate = Certificate{CertPath::bracket, xs[ix], ys[iy], last.lo, last.hi};
    return d;
}

/// Standalone form: sieves what it needs, lazily (nothing for the analytic
/// path, a small table for the hybrid path, the full budget otherwise).
inline Decision decide(std::uint64_t q, const Budget& budget = Budget{}) {
    detail::require_odd_prime(q, "decide");
    if (q >= 419) {
        const double hi = bfq_upper_analytic(q);
        if (hi < -0.5) {
            Decision d;
            d.q = q;
            d.verdict = Verdict::naive_better;
            d.certificate = Certificate{CertPath::analytic, std::nullopt, std::nullopt,
                                        -std::numeric_limits<double>::infinity(), hi};
            return d;
        }
    }
    if (q >= 23) {
        const PrimeTable small = build_prime_table(detail::kHybridY);
        const OrderTable small_orders = build_order_table(q, small);
        const double hi = bfq_upper_hybrid(small_orders, detail::kHybridY);
        if (hi < -0.5) {
            Decision d;
            d.q = q;
            d.verdict = Verdict::naive_better;
            d.certificate = Certificate{CertPath::hybrid, std::nullopt, detail::kHybridY,
                                        -std::numeric_limits<double>::infinity(), hi};
            return d;
        }
    }
    const PrimeTable primes = build_prime_table(std::max(budget.x_max, budget.y_max));
    return decide(q, budget, primes);
}

/// Recompute the certified bound(s) named by a certificate. Returns
/// {bound_lo, bound_hi}; re-deriving the verdict from these must agree
/// with the recorded one.
inline std::pair<double, double> replay_certificate(std::uint64_t q, const Certificate& cert,
                                                    const PrimeTable& primes) {
    switch (cert.path) {
        case CertPath::analytic:
            return {-std::numeric_limits<double>::infinity(), bfq_upper_analytic(q)};
        case CertPath::hybrid: {
            const OrderTable small = build_order_table(q, primes, cert.y.value());
            return {-std::numeric_limits<double>::infinity(),
                    bfq_upper_hybrid(small, cert.y.value())};
        }
        case CertPath::bracket: {
            const OrderTable orders =
                build_order_table(q, primes, std::max(cert.x.value(), cert.y.value()));
            const Bracket b = bfq_bracket(orders, cert.x.value(), cert.y.value());
            return {b.lo, b.hi};
        }
    }
    throw std::logic_error("replay_certificate: unknown path");
}

/// One decision per odd prime q <= q_max; brackets share one sieve.
inline std::vector<Decision> decide_range(std::uint64_t q_max, const Budget& budget = Budget{}) {
    if (q_max < 3) throw std::domain_error("decide_range: q_max must be >= 3");
    const PrimeTable primes =
        build_prime_table(std::max({budget.x_max, budget.y_max, detail::kHybridY}));
    std::vector<Decision> out;
    for (std::uint64_t q = 3; q <= q_max; q += 2) {
        if (!is_prime(q)) continue;
        out.push_back(decide(q, budget, primes));
    }
    return out;
}

}  // namespace cyclokit
