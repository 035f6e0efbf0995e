#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "cyclokit/common.hpp"

namespace cyclokit {

inline constexpr std::uint64_t kMaxSieveLimit = 1'000'000'000;

/// Ascending primes up to `limit`, with their natural logs precomputed.
/// Immutable after construction; safe to share across threads.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> primes;
    std::vector<double> log_primes;  // parallel to `primes`

    /// Number of primes <= x.
    std::size_t count_below(double x) const {
        if (x < 2.0) return 0;
        const auto bound = static_cast<std::uint32_t>(std::min(x, static_cast<double>(limit)));
        return static_cast<std::size_t>(
            std::upper_bound(primes.begin(), primes.end(), bound) - primes.begin());
    }

    /// Chebyshev theta: sum of log p over p <= x, compensated, ascending.
    double theta(double x) const {
        if (x > static_cast<double>(limit))
            throw std::out_of_range("theta: x exceeds sieve limit");
        const std::size_t n = count_below(x);
        KahanSum s;
        for (std::size_t i = 0; i < n; ++i) s.add(log_primes[i]);
        return s.value();
    }

    bool operator==(const PrimeTable& other) const {
        return limit == other.limit && primes == other.primes && log_primes == other.log_primes;
    }
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit inputs (the 12-witness set decides
/// all n < 3.3e24, which covers the full uint64 range).
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// Segmented sieve of Eratosthenes. Segments sized for cache residency.
inline PrimeTable build_prime_table(std::uint64_t limit) {
    if (limit < 2) throw std::domain_error("build_prime_table: limit must be >= 2");
    if (limit > kMaxSieveLimit) throw resource_error("build_prime_table: limit exceeds memory budget");

    constexpr std::size_t kSegmentBytes = 256 * 1024;

    PrimeTable table;
    table.limit = limit;

    const auto sqrt_limit = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;

    // Small primes up to sqrt(limit) by a plain sieve.
    std::vector<std::uint8_t> small(sqrt_limit + 1, 1);
    small[0] = 0;
    if (sqrt_limit >= 1) small[1] = 0;
    for (std::uint64_t i = 2; i * i <= sqrt_limit; ++i)
        if (small[i])
            for (std::uint64_t j = i * i; j <= sqrt_limit; j += i) small[j] = 0;
    std::vector<std::uint32_t> small_primes;
    for (std::uint64_t i = 2; i <= sqrt_limit; ++i)
        if (small[i]) small_primes.push_back(static_cast<std::uint32_t>(i));

    if (limit >= 10) {
        const double dl = static_cast<double>(limit);
        table.primes.reserve(static_cast<std::size_t>(dl / std::log(dl) * 1.15));
    }

    std::vector<std::uint8_t> segment(kSegmentBytes);
    for (std::uint64_t low = 2; low <= limit; low += kSegmentBytes) {
        const std::uint64_t high = std::min(low + kSegmentBytes - 1, limit);
        std::fill(segment.begin(), segment.end(), 1);
        for (std::uint32_t p : small_primes) {
            const std::uint64_t p64 = p;
            if (p64 * p64 > high) break;
            std::uint64_t start = std::max(p64 * p64, ((low + p64 - 1) / p64) * p64);
            for (std::uint64_t j = start; j <= high; j += p64) segment[j - low] = 0;
        }
        for (std::uint64_t n = low; n <= high; ++n)
            if (segment[n - low]) table.primes.push_back(static_cast<std::uint32_t>(n));
    }

    table.log_primes.reserve(table.primes.size());
    for (std::uint32_t p : table.primes) table.log_primes.push_back(std::log(static_cast<double>(p)));
    return table;
}

}  // namespace cyclokit
