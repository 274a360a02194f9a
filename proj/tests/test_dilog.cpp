#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dilogeq/dilog.hpp"
#include "support/li2_oracle.hpp"

using dilogeq::L1;
using dilogeq::li2;
using dilogeq::rogers_l;

TEST_CASE("li2 endpoints and closed-form value at one half") {
    CHECK(li2(0.0) == 0.0);
    CHECK(li2(1.0) == doctest::Approx(L1).epsilon(1e-15));

    // pi^2/12 - ln(2)^2/2, cross-checked against the series oracle.
    const long double ln2 = std::log(2.0L);
    const long double closed = static_cast<long double>(L1) / 2.0L - ln2 * ln2 / 2.0L;
    CHECK(std::fabs(li2(0.5) - static_cast<double>(closed)) <= 1e-15);
    CHECK(std::fabs(static_cast<double>(li2_series_oracle(0.5L) - closed)) <= 1e-16);

    CHECK_THROWS_AS(li2(-0.1), std::domain_error);
    CHECK_THROWS_AS(li2(1.1), std::domain_error);
    CHECK_THROWS_AS(li2(std::nan("")), std::domain_error);
}

TEST_CASE("li2 agrees with the extended-precision series oracle on a grid") {
    for (int i = 0; i <= 1000; ++i) {
        double x = static_cast<double>(i) / 1000.0;
        double want = static_cast<double>(li2_series_oracle(static_cast<long double>(x)));
        CHECK(std::fabs(li2(x) - want) <= 1e-13 * std::max(1.0, std::fabs(want)));
    }
}

TEST_CASE("rogers L endpoints and midpoint") {
    CHECK(rogers_l(0.0) == 0.0);
    CHECK(rogers_l(1.0) == L1);
    CHECK(std::fabs(rogers_l(0.5) - L1 / 2.0) <= 1e-13);  // fixed point of reflection
    CHECK(rogers_l(1e-310) == 0.0);
    CHECK(rogers_l(1.0 - 1e-16) == L1);
    CHECK_THROWS_AS(rogers_l(2.0), std::domain_error);
}

TEST_CASE("reflection identity L(x) + L(1-x) = L(1)") {
    CHECK(std::fabs(rogers_l(0.3) + rogers_l(0.7) - L1) <= 1e-12);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int it = 0; it < 1000; ++it) {
        double x = u(rng);
        CHECK(std::fabs(rogers_l(x) + rogers_l(1.0 - x) - L1) <= 1e-12);
    }
}

TEST_CASE("five-term identity sums to 3 L(1)") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int it = 0; it < 1000; ++it) {
        double x = u(rng), y = u(rng);
        double sum = rogers_l(x) + rogers_l((1 - x) / (1 - x * y)) +
                     rogers_l((1 - y) / (1 - x * y)) + rogers_l(y) + rogers_l(1 - x * y);
        CHECK(std::fabs(sum - 3.0 * L1) <= 1e-11);
    }
}

TEST_CASE("rogers L is strictly increasing") {
    double prev = rogers_l(0.0);
    for (int i = 1; i <= 1000; ++i) {
        double cur = rogers_l(static_cast<double>(i) / 1000.0);
        CHECK(cur > prev);
        prev = cur;
    }
}
