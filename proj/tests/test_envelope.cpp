#include "mdd/envelope.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>

using mdd::compute_envelope;
using mdd::naive_envelope_oracle;
using mdd::TimeSeries;

TEST_SUITE("envelope") {

    TEST_CASE("worked example at scale 1") {
        const TimeSeries x({0, 2, 1, 3});
        for (const auto& env : {compute_envelope(x, 1), naive_envelope_oracle(x, 1)}) {
            CHECK(env.upper == std::vector<double>{2, 2, 3, 3});
            CHECK(env.lower == std::vector<double>{0, 0, 1, 1});
            CHECK(env.epsilon == 1);
        }
    }

    TEST_CASE("scale 0 collapses onto the trace") {
        const TimeSeries x({5, 7, 3});
        const auto env = compute_envelope(x, 0);
        CHECK(env.upper == x.values());
        CHECK(env.lower == x.values());
        CHECK(naive_envelope_oracle(x, 0).upper == x.values());
    }

    TEST_CASE("window covering the whole series yields global extrema") {
        const TimeSeries x({0, 2, 1, 3});
        const auto env = compute_envelope(x, 10);
        CHECK(env.upper == std::vector<double>{3, 3, 3, 3});
        CHECK(env.lower == std::vector<double>{0, 0, 0, 0});
    }

    TEST_CASE("invalid inputs rejected") {
        CHECK_THROWS_AS(TimeSeries({}), std::invalid_argument);
        CHECK_THROWS_AS(TimeSeries({1.0, std::numeric_limits<double>::quiet_NaN()}),
                        std::invalid_argument);
        const TimeSeries x({1, 2});
        CHECK_THROWS_AS(compute_envelope(x, -1), std::invalid_argument);
        CHECK_THROWS_AS(naive_envelope_oracle(x, -1), std::invalid_argument);
    }

    TEST_CASE("single observation") {
        const TimeSeries x({4.5});
        for (int eps : {0, 1, 9}) {
            const auto env = compute_envelope(x, eps);
            CHECK(env.upper == std::vector<double>{4.5});
            CHECK(env.lower == std::vector<double>{4.5});
        }
    }

    TEST_CASE("matches the direct window scan element-exact") {
        std::mt19937 rng(404);
        SUBCASE("fixed length 50, scales 1/3/7") {
            const auto x = testsupport::random_series(rng, 50);
            for (int eps : {1, 3, 7}) {
                const auto fast = compute_envelope(x, eps);
                const auto slow = naive_envelope_oracle(x, eps);
                CHECK(fast.upper == slow.upper);
                CHECK(fast.lower == slow.lower);
            }
        }
        SUBCASE("random lengths and scales") {
            for (int round = 0; round < 300; ++round) {
                const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
                const int eps = std::uniform_int_distribution<int>(0, static_cast<int>(d))(rng);
                const auto x = testsupport::random_series(rng, d);
                const auto fast = compute_envelope(x, eps);
                const auto slow = naive_envelope_oracle(x, eps);
                REQUIRE(fast.upper == slow.upper);
                REQUIRE(fast.lower == slow.lower);
            }
        }
    }

    TEST_CASE("trace stays inside its envelope and widening is monotone") {
        std::mt19937 rng(777);
        for (int round = 0; round < 100; ++round) {
            const std::size_t d = std::uniform_int_distribution<std::size_t>(2, 120)(rng);
            const auto x = testsupport::random_series(rng, d);
            auto prev = compute_envelope(x, 0);
            for (int eps : {0, 1, 2, 5, 11}) {
                const auto env = compute_envelope(x, eps);
                for (std::size_t t = 0; t < d; ++t) {
                    REQUIRE(env.lower[t] <= x[t]);
                    REQUIRE(x[t] <= env.upper[t]);
                    REQUIRE(env.upper[t] >= prev.upper[t]);
                    REQUIRE(env.lower[t] <= prev.lower[t]);
                }
                prev = env;
            }
        }
    }
}
