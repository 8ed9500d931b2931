#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "edgemarket/auction.hpp"
#include "edgemarket/errors.hpp"

using namespace edgemarket;

TEST_CASE("valuation ability from compute capacity") {
    CHECK(valuation_ability(1000.0, 10.0) == doctest::Approx(30.0).epsilon(1e-12));
    CHECK(valuation_ability(10.0, 10.0) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(valuation_ability(100.0, 1.0) == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(valuation_ability(1.0, 10.0), std::domain_error);
    CHECK_THROWS_AS(valuation_ability(0.5, 10.0), std::domain_error);
    CHECK_THROWS_AS(valuation_ability(1000.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(valuation_ability(1000.0, -1.0), std::domain_error);
}

TEST_CASE("valuation from offload amount") {
    CHECK(valuation(30.0, 500.0, 500.0) == doctest::Approx(30.0).epsilon(1e-12));
    CHECK(valuation(20.0, 125.0, 500.0) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(valuation(10.0, 100.0, 500.0) == doctest::Approx(4.47213595499958).epsilon(1e-12));

    CHECK_THROWS_AS(valuation(10.0, 600.0, 500.0), std::domain_error);
    CHECK_THROWS_AS(valuation(10.0, 0.0, 500.0), std::domain_error);
    CHECK_THROWS_AS(valuation(10.0, -5.0, 500.0), std::domain_error);
    CHECK_THROWS_AS(valuation(0.0, 100.0, 500.0), std::domain_error);
}

TEST_CASE("equilibrium bid closed form") {
    CHECK(equilibrium_bid(0.0, 10.0, 5) == 0.0);
    CHECK(equilibrium_bid(10.0, 10.0, 2) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(equilibrium_bid(10.0, 20.0, 3) == doctest::Approx(5.0 / 3.0).epsilon(1e-12));

    CHECK_THROWS_AS(equilibrium_bid(5.0, 10.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(equilibrium_bid(5.0, 10.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(equilibrium_bid(11.0, 10.0, 2), std::domain_error);
    CHECK_THROWS_AS(equilibrium_bid(-1.0, 10.0, 2), std::domain_error);
}

TEST_CASE("quadrature oracle matches the closed form") {
    CHECK(equilibrium_bid_numeric(0.0, 10.0, 3, 10000) == 0.0);
    CHECK(equilibrium_bid_numeric(10.0, 20.0, 3, 10000) ==
          doctest::Approx(5.0 / 3.0).epsilon(1e-9));
    CHECK(equilibrium_bid_numeric(10.0, 10.0, 2, 10000) == doctest::Approx(5.0).epsilon(1e-9));

    CHECK_THROWS_AS(equilibrium_bid_numeric(5.0, 10.0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(equilibrium_bid_numeric(5.0, 10.0, 1, 100), std::invalid_argument);

    // The full validation grid: v at five fractions of A, three abilities,
    // set sizes 2..10.
    for (double ability : {10.0, 20.0, 30.0}) {
        for (int quarter = 0; quarter <= 4; ++quarter) {
            const double value = ability * quarter / 4.0;
            for (int n = 2; n <= 10; ++n) {
                const double closed = equilibrium_bid(value, ability, n);
                const double numeric = equilibrium_bid_numeric(value, ability, n, 10000);
                const double rel = std::abs(closed - numeric) / std::max(closed, 1e-12);
                CHECK(rel <= 1e-8);
            }
        }
    }
}

TEST_CASE("bids never exceed valuations and grow with them") {
    std::mt19937_64 eng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double ability = 1.0 + 40.0 * unit(eng);
        const double v1 = ability * unit(eng);
        const double v2 = ability * unit(eng);
        const int n = 2 + static_cast<int>(eng() % 9);

        const double b1 = equilibrium_bid(v1, ability, n);
        CHECK(b1 >= 0.0);
        CHECK(b1 <= v1);

        const double lo = std::min(v1, v2), hi = std::max(v1, v2);
        CHECK(equilibrium_bid(lo, ability, n) <= equilibrium_bid(hi, ability, n));
    }
}

TEST_CASE("bid is homogeneous of degree one in (v, A)") {
    std::mt19937_64 eng(77);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double ability = 1.0 + 30.0 * unit(eng);
        const double value = ability * unit(eng);
        const double c = 0.1 + 10.0 * unit(eng);
        const int n = 2 + static_cast<int>(eng() % 9);
        const double scaled = equilibrium_bid(c * value, c * ability, n);
        const double direct = c * equilibrium_bid(value, ability, n);
        CHECK(scaled == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("singleton decision: feasible interval and policies") {
    // v=40, q=128, B=10: interval [17, 20), midpoint 18.5.
    auto mid = singleton_decision(40.0, 128.0, 10.0, SingletonPolicy::Midpoint);
    CHECK(mid.served);
    CHECK(mid.entry_payment == doctest::Approx(18.5).epsilon(1e-12));
    CHECK(mid.eu_utility == doctest::Approx(21.5).epsilon(1e-12));

    auto lower = singleton_decision(40.0, 128.0, 10.0, SingletonPolicy::Lower);
    CHECK(lower.served);
    CHECK(lower.entry_payment == doctest::Approx(17.0).epsilon(1e-12));

    auto upper = singleton_decision(40.0, 128.0, 10.0, SingletonPolicy::Upper);
    CHECK(upper.served);
    CHECK(upper.entry_payment == doctest::Approx(20.0 - 1e-6).epsilon(1e-12));
    CHECK(upper.entry_payment < 20.0);

    // v=30 leaves [17, 15): empty.
    CHECK_FALSE(singleton_decision(30.0, 128.0, 10.0, SingletonPolicy::Midpoint).served);
    CHECK_FALSE(singleton_decision(0.0, 100.0, 10.0, SingletonPolicy::Midpoint).served);
}

TEST_CASE("singleton decision flips exactly at v = 2(B + log2 q)") {
    const double q = 128.0, fixed_cost = 10.0;
    const double threshold = 2.0 * (fixed_cost + std::log2(q));  // 34
    for (auto policy : {SingletonPolicy::Lower, SingletonPolicy::Midpoint,
                        SingletonPolicy::Upper}) {
        CHECK(singleton_decision(threshold + 1e-6, q, fixed_cost, policy).served);
        CHECK_FALSE(singleton_decision(threshold - 1e-6, q, fixed_cost, policy).served);
        CHECK_FALSE(singleton_decision(threshold, q, fixed_cost, policy).served);
    }
}

TEST_CASE("served singleton invariants hold for every policy") {
    std::mt19937_64 eng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double q = 1.0 + 500.0 * unit(eng);
        const double fixed_cost = 20.0 * unit(eng);
        const double value = 80.0 * unit(eng);
        for (auto policy : {SingletonPolicy::Lower, SingletonPolicy::Midpoint,
                            SingletonPolicy::Upper}) {
            const auto decision = singleton_decision(value, q, fixed_cost, policy);
            if (!decision.served) continue;
            const double lower = fixed_cost + std::log2(q);
            CHECK(decision.entry_payment >= lower);
            CHECK(decision.entry_payment < value / 2.0);
            CHECK(decision.eu_utility == doctest::Approx(value - decision.entry_payment));
            CHECK(decision.eu_utility > 0.0);
        }
    }
}

TEST_CASE("singleton policy names round-trip") {
    for (auto policy : {SingletonPolicy::Lower, SingletonPolicy::Midpoint,
                        SingletonPolicy::Upper}) {
        CHECK(singleton_policy_from_string(to_string(policy)) == policy);
    }
    CHECK_THROWS_AS(singleton_policy_from_string("nope"), ConfigError);
}
