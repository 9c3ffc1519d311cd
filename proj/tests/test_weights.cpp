#include <catch2/catch_amalgamated.hpp>

#include <dakit/weights.hpp>

using dakit::RadialMeasure;
using dakit::WeightSequence;

TEST_CASE("moments: point mass at 1") {
    auto mu = RadialMeasure::sigma();
    for (int n : {0, 1, 5, 40}) CHECK(mu.moment(n) == 1.0);
    CHECK_THROWS_AS(mu.moment(-1), std::invalid_argument);
}

TEST_CASE("moments: normalized Lebesgue 2r dr") {
    auto mu = RadialMeasure::lebesgue();
    CHECK(mu.moment(0) == 1.0);
    CHECK(mu.moment(3) == 0.25);  // int_0^1 r^6 2r dr = 1/4
    CHECK(mu.moment(9) == 0.1);
}

TEST_CASE("moments: power weight reduces to Lebesgue at beta = 0") {
    auto mu = RadialMeasure::power(0.0);
    for (int n = 0; n <= 30; ++n) {
        const double expected = 1.0 / (n + 1.0);
        CHECK(std::abs(mu.moment(n) - expected) <= 1e-14 * expected);
    }
    CHECK_THROWS_AS(RadialMeasure::power(-1.0), std::invalid_argument);
}

TEST_CASE("moments: power weight closed Beta form") {
    // beta = 1: moment(n) = 2 * B(n+1, 2) = 2/((n+1)(n+2))
    auto mu = RadialMeasure::power(1.0);
    for (int n = 0; n <= 20; ++n) {
        const double expected = 2.0 / ((n + 1.0) * (n + 2.0));
        CHECK(std::abs(mu.moment(n) - expected) <= 1e-13 * expected);
    }
}

TEST_CASE("moments: custom tables validated") {
    auto mu = RadialMeasure::custom({1.0, 0.5, 0.25});
    CHECK(mu.moment(2) == 0.25);
    CHECK_THROWS_AS(mu.moment(3), std::out_of_range);
    CHECK_THROWS_AS(RadialMeasure::custom({1.0, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(RadialMeasure::custom({0.5, 0.7}), std::invalid_argument);  // increasing
    CHECK_THROWS_AS(RadialMeasure::custom({}), std::invalid_argument);
}

TEST_CASE("moments are non-increasing for every kind") {
    for (const auto& mu : {RadialMeasure::sigma(), RadialMeasure::lebesgue(), RadialMeasure::power(0.3),
                           RadialMeasure::power(4.0), RadialMeasure::custom({2.0, 1.0, 0.9, 0.89})}) {
        const int top = mu.kind() == RadialMeasure::Kind::CustomMoments ? 3 : 100;
        for (int n = 1; n <= top; ++n) CHECK(mu.moment(n) <= mu.moment(n - 1) * (1.0 + 1e-14));
    }
}

TEST_CASE("omega: d=2 Lebesgue gives 1/(n+1)^2 exactly") {
    WeightSequence w(2, RadialMeasure::lebesgue(), 300);
    for (int n = 0; n <= 300; ++n) {
        const double inv = 1.0 / (n + 1.0);
        CHECK(w.omega(n) == inv * inv);
    }
}

TEST_CASE("omega: d=3 point mass gives 2/((n+1)(n+2))") {
    WeightSequence w(3, RadialMeasure::sigma(), 200);
    for (int n = 0; n <= 200; ++n) {
        const double expected = 2.0 / ((n + 1.0) * (n + 2.0));
        CHECK(std::abs(w.omega(n) - expected) <= 1e-14 * expected);
    }
}

TEST_CASE("omega: n = 0 returns the total mass for any d") {
    for (int d : {1, 2, 3, 7}) {
        WeightSequence w(d, RadialMeasure::power(0.7), 4);
        CHECK(w.omega(0) == RadialMeasure::power(0.7).moment(0));
        CHECK(std::abs(w.omega(0) - 1.0) < 1e-14);
    }
    WeightSequence wc(2, RadialMeasure::custom({3.0, 1.0}), 1);
    CHECK(wc.omega(0) == 3.0);
}

TEST_CASE("Drury-Arveson identification: two-sided bounds on n^{2N} omega_n") {
    // d=3, mu = delta_1, N=1: n^2 omega_n = 2n^2/((n+1)(n+2)) in [1/3, 2), -> 2
    WeightSequence w3(3, RadialMeasure::sigma(), 400);
    for (int n = 1; n <= 400; ++n) {
        const double v = static_cast<double>(n) * n * w3.omega(n);
        CHECK(v >= 1.0 / 3.0 - 1e-15);
        CHECK(v < 2.0);
    }
    CHECK(400.0 * 400.0 * w3.omega(400) > 1.98);

    // d=2, mu = Lebesgue, N=1: n^2 omega_n = n^2/(n+1)^2 in [1/4, 1), -> 1
    WeightSequence w2(2, RadialMeasure::lebesgue(), 400);
    for (int n = 1; n <= 400; ++n) {
        const double v = static_cast<double>(n) * n * w2.omega(n);
        CHECK(v >= 0.25);
        CHECK(v < 1.0);
    }
    CHECK(400.0 * 400.0 * w2.omega(400) > 0.99);
}

TEST_CASE("omega positive and vanishing for d >= 2") {
    for (int d : {2, 3, 4}) {
        WeightSequence w(d, RadialMeasure::sigma(), 512);
        for (int n = 0; n <= 512; ++n) CHECK(w.omega(n) > 0.0);
        CHECK(w.omega(512) < 1e-4);
        CHECK(w.omega(512) < w.omega(16));
    }
}

TEST_CASE("hardy factorial ratio crosses the exact/product boundary smoothly") {
    for (int d : {1, 2, 3, 5}) {
        for (int n = 0; n <= 40; ++n) {
            // reference by descending products in long double
            long double r = 1.0L;
            for (int j = 1; j <= d - 1; ++j) r *= static_cast<long double>(j) / (n + j);
            CHECK(std::abs(dakit::hardy_factorial_ratio(n, d) - static_cast<double>(r)) <=
                  1e-15 * static_cast<double>(r));
        }
    }
}

TEST_CASE("measure strings parse") {
    CHECK(RadialMeasure::parse("sigma").kind() == RadialMeasure::Kind::PointMassAtOne);
    CHECK(RadialMeasure::parse("lebesgue").kind() == RadialMeasure::Kind::NormalizedLebesgue);
    auto p = RadialMeasure::parse("power:beta=1.5");
    CHECK(p.kind() == RadialMeasure::Kind::PowerWeight);
    CHECK(p.beta() == 1.5);
    CHECK_THROWS_AS(RadialMeasure::parse("power:beta=abc"), std::invalid_argument);
    CHECK_THROWS_AS(RadialMeasure::parse("gauss"), std::invalid_argument);
}
