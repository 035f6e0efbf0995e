#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "cyclokit/primes.hpp"
#include "test_tables.hpp"

using namespace cyclokit;

namespace {

// trial-division oracle, independent of the sieve
bool is_prime_td(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> primes_td(std::uint64_t limit) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t n = 2; n <= limit; ++n)
        if (is_prime_td(n)) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

// second, structurally different sieve: odd-only bitmap
std::vector<std::uint32_t> primes_odd_sieve(std::uint64_t limit) {
    std::vector<std::uint32_t> out;
    if (limit >= 2) out.push_back(2);
    std::vector<bool> comp((limit + 1) / 2, false);  // comp[i] ~ 2i+1
    for (std::uint64_t n = 3; n * n <= limit; n += 2)
        if (!comp[n / 2])
            for (std::uint64_t m = n * n; m <= limit; m += 2 * n) comp[m / 2] = true;
    for (std::uint64_t n = 3; n <= limit; n += 2)
        if (!comp[n / 2]) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

}  // namespace

TEST_CASE("build_prime_table matches trial division") {
    const PrimeTable t10 = build_prime_table(10);
    REQUIRE(t10.primes == std::vector<std::uint32_t>{2, 3, 5, 7});

    const PrimeTable t100 = build_prime_table(100);
    REQUIRE(t100.primes.size() == 25);
    REQUIRE(t100.primes == primes_td(100));
}

TEST_CASE("build_prime_table matches an independent sieve at 1e6") {
    const PrimeTable& t = testutil::primes_to(1'000'000);
    REQUIRE(t.primes.size() == 78498);
    REQUIRE(t.primes == primes_odd_sieve(1'000'000));
}

TEST_CASE("build_prime_table validates its input") {
    REQUIRE_THROWS_AS(build_prime_table(1), std::domain_error);
    REQUIRE_THROWS_AS(build_prime_table(2'000'000'000ull), resource_error);
}

TEST_CASE("construction and theta are deterministic") {
    const PrimeTable a = build_prime_table(50'000);
    const PrimeTable b = build_prime_table(50'000);
    REQUIRE(a == b);
    REQUIRE(a.theta(50'000) == b.theta(50'000));
}

TEST_CASE("theta spot values") {
    const PrimeTable& t = testutil::primes_to(1'000'000);
    REQUIRE(t.theta(10) == Catch::Approx(std::log(2.0 * 3 * 5 * 7)).epsilon(1e-14));
    REQUIRE(t.theta(1) == 0.0);
    REQUIRE(t.theta(2.5) == Catch::Approx(std::log(2.0)).epsilon(1e-14));
    const double th = t.theta(7481);
    REQUIRE(th >= 0.98 * 7481);
    REQUIRE(th <= 1.017 * 7481);
    REQUIRE_THROWS_AS(t.theta(2'000'000), std::out_of_range);
}

TEST_CASE("theta stays within the classical envelopes") {
    const PrimeTable& t = testutil::primes_to(1'000'000);
    for (double x : {7481.0, 1e4, 5e4, 1e5, 5e5, 1e6}) {
        const double th = t.theta(x);
        REQUIRE(th >= 0.98 * x);
        REQUIRE(th <= 1.017 * x);
    }
    for (double x : {2.0, 10.0, 100.0, 7481.0, 1e6}) REQUIRE(t.theta(x) < 1.0012 * x);
}

TEST_CASE("deterministic Miller-Rabin") {
    REQUIRE(is_prime(2));
    REQUIRE(is_prime(3));
    REQUIRE(is_prime(1'000'000'007ull));
    REQUIRE(is_prime((1ull << 61) - 1));
    REQUIRE_FALSE(is_prime(0));
    REQUIRE_FALSE(is_prime(1));
    REQUIRE_FALSE(is_prime(561));       // Carmichael
    REQUIRE_FALSE(is_prime(25326001));  // strong pseudoprime to 2,3,5
    for (std::uint64_t n = 2; n <= 2000; ++n) REQUIRE(is_prime(n) == is_prime_td(n));
}
