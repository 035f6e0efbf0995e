#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cyclokit/ek.hpp"
#include "test_tables.hpp"

using namespace cyclokit;
using testutil::trunc_scaled;

TEST_CASE("cyc heuristic against reference digits") {
    const OrderTable& q3 = testutil::orders_for(3, 1'000'000);
    REQUIRE(trunc_scaled(cyc(q3, 100'000), 1e4) == 9372);
    REQUIRE(trunc_scaled(cyc(q3, 1'000'000), 1e4) == 9431);
    const OrderTable& q173 = testutil::orders_for(173, 1'000'000);
    REQUIRE(trunc_scaled(cyc(q173, 1'000'000), 1e4) == 33853);
    REQUIRE_THROWS_AS(cyc(q3, 2), std::domain_error);
    REQUIRE_THROWS_AS(cyc(q3, 2'000'000), std::out_of_range);
}

TEST_CASE("phi_K hand-evaluated points") {
    const PrimeTable t = build_prime_table(100);
    const OrderTable ot = build_order_table(3, t);
    // x=3.5: only the ramified power 3^1 contributes
    REQUIRE(phi_K(ot, 3.5)
            == Catch::Approx((3.5 / 3.0 - 1.0) * std::log(3.0) / 2.5).epsilon(1e-14));
    // x=4: 2^{f_2}=4 enters with weight (x/4 - 1) = 0
    REQUIRE(phi_K(ot, 4.0) == Catch::Approx(std::log(3.0) / 9.0).epsilon(1e-14));
    REQUIRE_THROWS_AS(phi_K(ot, 1.0), std::domain_error);
}

TEST_CASE("ihara_bounds reproduce the reference bracket digits") {
    const OrderTable& q3 = testutil::orders_for(3, 1'000'000);
    const Bracket b3 = ihara_bounds(q3, 300'000);
    REQUIRE(b3.conditional);
    REQUIRE(static_cast<long long>(std::floor(b3.lo * 1000)) == 945);
    REQUIRE(static_cast<long long>(std::ceil(b3.hi * 1000)) == 946);
    REQUIRE(b3.contains(0.945497280871680703239749994158189073));

    const OrderTable& q67 = testutil::orders_for(67, 2'000'000);
    const Bracket b67 = ihara_bounds(q67, 2'000'000);
    REQUIRE(static_cast<long long>(std::floor(b67.lo * 1000)) == 5204);
    REQUIRE(static_cast<long long>(std::ceil(b67.hi * 1000)) == 5384);

    REQUIRE_THROWS_AS(ihara_bounds(q3, 1), std::domain_error);
}

TEST_CASE("bracket width shrinks as x grows") {
    for (std::uint64_t q : {3ull, 5ull, 7ull}) {
        const OrderTable& ot = testutil::orders_for(q, 4'000'000);
        for (std::uint64_t x : {100'000ull, 1'000'000ull}) {
            REQUIRE(ihara_bounds(ot, 4 * x).width() < ihara_bounds(ot, x).width());
        }
    }
}

TEST_CASE("heuristic and certified estimates agree loosely") {
    for (std::uint64_t q : {3ull, 23ull, 89ull, 173ull}) {
        const OrderTable& ot = testutil::orders_for(q, 2'000'000);
        const EkEstimate est = estimate_ek(ot, 1'000'000);
        REQUIRE(est.q == q);
        REQUIRE(est.bracket.conditional);
        REQUIRE(est.cyc >= est.bracket.lo - 0.05);
        REQUIRE(est.cyc <= est.bracket.hi + 0.05);
    }
}

TEST_CASE("ek_upper_analytic") {
    const double z = 0.5 * 21.0 * std::log(23.0);
    const double sharp = (z + 1.0) / (z - 1.0) * (2.0 * std::log(z) + 1.0);
    REQUIRE(ek_upper_analytic(23) == Catch::Approx(std::min(sharp, 2.0 * std::log(23.0 * std::log(23.0)))).epsilon(1e-15));
    REQUIRE(ek_upper_analytic(23) >= 2.611);  // sits above the true constant
    REQUIRE(ek_upper_analytic(419) > 0.0);
    REQUIRE_THROWS_AS(ek_upper_analytic(19), std::domain_error);
}
