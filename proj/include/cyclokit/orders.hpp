#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "cyclokit/common.hpp"
#include "cyclokit/primes.hpp"

namespace cyclokit {

namespace detail {

// Prime factors of n (distinct), by trial division. n stays < 1e6 here.
inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Order of a (mod q) given the distinct prime factors of q-1.
// Starts at q-1 and strips factors while the power stays 1.
inline std::uint64_t order_from_factors(std::uint64_t a, std::uint64_t q,
                                        const std::vector<std::uint64_t>& qm1_factors) {
    std::uint64_t e = q - 1;
    for (std::uint64_t r : qm1_factors) {
        while (e % r == 0 && powmod_u64(a, e / r, q) == 1) e /= r;
    }
    return e;
}

inline void require_odd_prime(std::uint64_t q, const char* who) {
    if (q < 3 || q % 2 == 0 || !is_prime(q))
        throw std::domain_error(std::string(who) + ": q must be an odd prime");
}

}  // namespace detail

/// Multiplicative order of p modulo q: the least k >= 1 with p^k = 1 (mod q).
inline std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t q) {
    detail::require_odd_prime(q, "multiplicative_order");
    if (!is_prime(p)) throw std::domain_error("multiplicative_order: p must be prime");
    if (p == q) throw std::domain_error("multiplicative_order: p must differ from q");
    return detail::order_from_factors(p % q, q, detail::distinct_prime_factors(q - 1));
}

/// f_p for every prime p <= limit, stored parallel to a PrimeTable.
/// Entry 0 marks p == q (no order defined). The referenced PrimeTable must
/// outlive the OrderTable.
struct OrderTable {
    std::uint64_t q = 0;
    std::uint64_t limit = 0;               // orders cover primes <= limit
    const PrimeTable* primes = nullptr;
    std::vector<std::uint32_t> f;          // parallel to primes->primes, truncated at limit

    std::size_t size() const { return f.size(); }

    /// f_p for a single prime p <= limit (binary search); 0 if p == q.
    std::uint32_t order_of(std::uint64_t p) const {
        const auto& ps = primes->primes;
        auto it = std::lower_bound(ps.begin(), ps.end(), static_cast<std::uint32_t>(p));
        if (it == ps.end() || *it != p) throw std::domain_error("order_of: p not in table");
        const auto idx = static_cast<std::size_t>(it - ps.begin());
        if (idx >= f.size()) throw std::out_of_range("order_of: p exceeds order limit");
        return f[idx];
    }
};

/// Bulk f_p computation. `cap` restricts the covered range (used when only a
/// short prefix of the sieve is needed).
inline OrderTable build_order_table(std::uint64_t q, const PrimeTable& primes,
                                    std::uint64_t cap = std::numeric_limits<std::uint64_t>::max()) {
    detail::require_odd_prime(q, "build_order_table");
    OrderTable table;
    table.q = q;
    table.limit = std::min(cap, primes.limit);
    table.primes = &primes;
    const auto factors = detail::distinct_prime_factors(q - 1);
    const std::size_t n = primes.count_below(static_cast<double>(table.limit));
    table.f.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t p = primes.primes[i];
        if (p == q) {
            table.f.push_back(0);
        } else {
            table.f.push_back(static_cast<std::uint32_t>(
                detail::order_from_factors(p % q, q, factors)));
        }
    }
    return table;
}

}  // namespace cyclokit
