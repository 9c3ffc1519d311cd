#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <dakit/transforms.hpp>

#include "oracles.hpp"

using dakit::Complex;
using dakit::MultiIndex;
using dakit::SampleConfig;
using dakit::StablePolynomial;
using dakit::TruncatedSeries;

namespace {

TruncatedSeries poly_1_minus_z(int cap = 1) {
    TruncatedSeries p(1, cap);
    p.set_coefficient(MultiIndex({0}), 1.0);
    p.set_coefficient(MultiIndex({1}), -1.0);
    return p;
}

TruncatedSeries p1_series() {
    TruncatedSeries p(3, 3);
    p.set_coefficient(MultiIndex::zero(3), 1.0);
    p.set_coefficient(MultiIndex({1, 1, 1}), -std::pow(3.0, 1.5));
    return p;
}

TruncatedSeries p2_series() {
    TruncatedSeries p(3, 2);
    p.set_coefficient(MultiIndex::zero(3), 1.0);
    p.set_coefficient(MultiIndex({2, 0, 0}), -1.0);
    p.set_coefficient(MultiIndex({0, 2, 0}), -1.0);
    p.set_coefficient(MultiIndex({0, 0, 2}), -1.0);
    return p;
}

}  // namespace

TEST_CASE("normalize_stable: q = p/(2^n p(0))") {
    StablePolynomial p(poly_1_minus_z());
    auto q = dakit::normalize_stable(p);
    CHECK(q.coefficient(MultiIndex({0})) == Complex(0.5));
    CHECK(q.coefficient(MultiIndex({1})) == Complex(-0.5));

    StablePolynomial c(TruncatedSeries::constant(1, 0, Complex(0.0, 3.0)));
    CHECK(c.declared_degree == 0);
    CHECK(dakit::normalize_stable(c) == TruncatedSeries::one(1, 0));

    StablePolynomial pp1(p1_series());
    CHECK(pp1.declared_degree == 3);
    auto q1 = dakit::normalize_stable(pp1);
    CHECK(q1.constant_term() == Complex(0.125));
    CHECK(std::abs(q1.coefficient(MultiIndex({1, 1, 1})) - Complex(-std::pow(3.0, 1.5) / 8.0)) < 1e-15);

    TruncatedSeries z(1, 1);
    z.set_coefficient(MultiIndex({1}), 1.0);
    CHECK_THROWS_AS(StablePolynomial(z), std::domain_error);
}

TEST_CASE("iterated_log level 1 is log(1/f)") {
    auto q = poly_1_minus_z(30) * Complex(0.5);
    auto F1 = dakit::iterated_log(q, 1);
    auto expected = log_series(reciprocal(q));
    CHECK(oracles::max_coeff_distance(F1, expected) == 0.0);
    CHECK(std::abs(F1.constant_term() - Complex(std::log(2.0))) < 1e-15);
    // log(2/(1-z)) = log 2 + sum z^n/n
    for (int n = 1; n <= 30; ++n)
        CHECK(std::abs(F1.coefficient(MultiIndex({n})) - Complex(1.0 / n)) < 1e-13);
}

TEST_CASE("iterated_log level 2 constant is log(1+log 2)") {
    auto q = poly_1_minus_z(20) * Complex(0.5);
    auto F2 = dakit::iterated_log(q, 2);
    CHECK(std::abs(F2.constant_term() - Complex(std::log(1.0 + std::log(2.0)))) < 1e-15);
}

TEST_CASE("iterated_log of a unimodular constant vanishes at every level") {
    auto one = TruncatedSeries::one(2, 5);
    for (int n : {1, 2, 4}) CHECK(dakit::iterated_log(one, n).is_zero());
}

TEST_CASE("iterated_log reports branch violations with the level") {
    // f(0) = e^2 gives F_1(0) = -2, so 1 + F_1(0) = -1 lies on the cut at level 1
    auto f = TruncatedSeries::constant(1, 4, std::exp(2.0));
    try {
        dakit::iterated_log(f, 2);
        FAIL("expected BranchViolationError");
    } catch (const dakit::BranchViolationError& e) {
        CHECK(e.level == 1);
        CHECK(std::abs(e.constant - Complex(-2.0)) < 1e-14);
    }
    CHECK_THROWS_AS(dakit::iterated_log(TruncatedSeries(1, 3), 1), std::domain_error);
}

TEST_CASE("branch independence: degree >= 1 coefficients of log(1/f) ignore the scalar branch") {
    std::mt19937_64 rng(8);
    auto f = oracles::random_float_series(2, 6, rng);
    f.set_coefficient(MultiIndex::zero(2), Complex(0.9, 0.1));
    auto L = log_series(reciprocal(f));
    auto Lrot = log_series(reciprocal(f * std::exp(Complex(0.0, 2.5))));
    for (const auto& [a, v] : L.terms()) {
        if (a.order() == 0) continue;
        CHECK(std::abs(v - Lrot.coefficient(a)) < 1e-12);
    }
}

TEST_CASE("bounded argument: disk automorphism image of 1 - z/2") {
    TruncatedSeries p(1, 1);
    p.set_coefficient(MultiIndex({0}), 1.0);
    p.set_coefficient(MultiIndex({1}), -0.5);
    SampleConfig cfg{400, 60, 1};
    const double est = dakit::bounded_argument_estimate(StablePolynomial(p), cfg);
    CHECK(est <= std::asin(0.5) + 1e-9);   // image is the disk of radius 1/2 about 1
    CHECK(est >= std::asin(0.5) - 0.02);   // approached near the boundary
    CHECK(est <= M_PI);
}

TEST_CASE("bounded argument: constants and the named multivariate examples") {
    SampleConfig cfg{200, 50, 0};
    CHECK(dakit::bounded_argument_estimate(StablePolynomial(TruncatedSeries::constant(2, 0, Complex(1.0, 1.0))),
                                           cfg) == 0.0);
    CHECK(dakit::bounded_argument_estimate(StablePolynomial(p1_series(), 3), cfg) <= 3.0 * M_PI + 1e-6);
    CHECK(dakit::bounded_argument_estimate(StablePolynomial(p2_series(), 2), cfg) <= 2.0 * M_PI + 1e-6);
}

TEST_CASE("bounded argument stays below n*pi on random stable polynomials") {
    SampleConfig cfg{100, 40, 3};
    for (int i = 0; i < 12; ++i) {
        const int deg = 1 + i % 4;
        auto p = dakit::random_stable_polynomial(deg, 500 + static_cast<std::uint64_t>(i));
        CHECK(dakit::bounded_argument_estimate(p, cfg) <= deg * M_PI + 1e-6);
    }
}

TEST_CASE("argument tracking aborts with a witness on an interior zero") {
    // 1 - 2z has its zero at 1/2, well inside the sampled segments
    TruncatedSeries p(1, 1);
    p.set_coefficient(MultiIndex({0}), 1.0);
    p.set_coefficient(MultiIndex({1}), -2.0);
    SampleConfig cfg{64, 50, 0};
    CHECK_THROWS_AS(dakit::bounded_argument_estimate(StablePolynomial(p), cfg), dakit::InstabilityError);
}

TEST_CASE("sup norm estimates") {
    SampleConfig cfg{300, 50, 2};
    auto q = poly_1_minus_z(1) * Complex(0.5);
    const double sq = dakit::sup_norm_estimate(q, cfg);
    CHECK(sq <= 1.0);
    CHECK(sq >= 0.95);  // approached near z = -1

    TruncatedSeries z1(2, 1);
    z1.set_coefficient(MultiIndex({1, 0}), 1.0);
    const double s1 = dakit::sup_norm_estimate(z1, cfg);
    CHECK(s1 <= 1.0);
    CHECK(s1 >= 0.9);

    CHECK(dakit::sup_norm_estimate(TruncatedSeries(2, 3), cfg) == 0.0);
}

TEST_CASE("normalized stable polynomials have sup norm at most 1") {
    SampleConfig cfg{100, 40, 4};
    for (int i = 0; i < 12; ++i) {
        const int deg = 1 + i % 4;
        auto p = dakit::random_stable_polynomial(deg, 900 + static_cast<std::uint64_t>(i));
        CHECK(dakit::sup_norm_estimate(dakit::normalize_stable(p), cfg) <= 1.0 + 1e-9);
    }
}

TEST_CASE("slice: plug-in examples") {
    TruncatedSeries f(2, 4);
    f.set_coefficient(MultiIndex({1, 1}), 1.0);
    const double r = 1.0 / std::sqrt(2.0);
    auto g = dakit::slice(f, {Complex(r), Complex(r)});
    CHECK(std::abs(g.coefficient(MultiIndex({2})) - Complex(0.5)) < 1e-15);
    CHECK(g.coefficient(MultiIndex({1})) == Complex(0.0));

    CHECK(dakit::slice(TruncatedSeries::one(2, 3), {Complex(1.0), Complex(0.0)}) == TruncatedSeries::one(1, 3));

    // homogeneous input -> single monomial c lambda^n
    auto h = dakit::slice(p1_series() - TruncatedSeries::one(3, 3), dakit::sphere_points(3, 1, 7)[0]);
    int nonzero = 0;
    for (const auto& [a, v] : h.terms())
        if (v != Complex(0.0)) {
            ++nonzero;
            CHECK(a.order() == 3);
        }
    CHECK(nonzero == 1);

    CHECK_THROWS_AS(dakit::slice(f, {Complex(0.5), Complex(0.0)}), std::invalid_argument);
}

TEST_CASE("slice commutes with the algebra") {
    std::mt19937_64 rng(15);
    auto f = oracles::random_dyadic_series(2, 4, rng);
    auto g = oracles::random_dyadic_series(2, 4, rng);
    for (const auto& zeta : dakit::sphere_points(2, 3, 11)) {
        CHECK(oracles::max_coeff_distance(dakit::slice(multiply(f, g), zeta),
                                          multiply(dakit::slice(f, zeta), dakit::slice(g, zeta))) < 1e-14);
        // slice(Rf) = lambda d/dlambda slice(f), the univariate radial derivative
        CHECK(oracles::max_coeff_distance(dakit::slice(radial_derivative(f), zeta),
                                          radial_derivative(dakit::slice(f, zeta))) < 1e-14);
    }
}

TEST_CASE("slice of f(3^{3/2} z1 z2 z3) matches f(3^{3/2} zeta1 zeta2 zeta3 lambda^3)") {
    const double c = std::pow(3.0, 1.5);
    auto t = TruncatedSeries::variable(1, 12, 0);
    auto f = reciprocal(TruncatedSeries::one(1, 12) - t * Complex(0.25));  // 1/(1 - t/4)
    TruncatedSeries w(3, 12);
    w.set_coefficient(MultiIndex({1, 1, 1}), c);
    auto comp = substitute(f, w);
    for (const auto& zeta : dakit::sphere_points(3, 4, 5)) {
        auto lhs = dakit::slice(comp, zeta);
        const Complex factor = c * zeta[0] * zeta[1] * zeta[2];
        TruncatedSeries w1(1, 12);
        w1.set_coefficient(MultiIndex({3}), factor);
        auto rhs = substitute(f, w1);
        CHECK(oracles::max_coeff_distance(lhs, rhs) < 1e-13);
    }
}

TEST_CASE("stability check: boundary zeros are stable, interior zeros are not") {
    SampleConfig cfg{64, 16, 0};
    {
        auto ev = dakit::stability_check(poly_1_minus_z(), cfg);
        CHECK(ev.stable);
        CHECK(std::abs(ev.min_root_modulus - 1.0) < 1e-10);
    }
    {
        TruncatedSeries p(1, 1);
        p.set_coefficient(MultiIndex({0}), 1.0);
        p.set_coefficient(MultiIndex({1}), -2.0);
        auto ev = dakit::stability_check(p, cfg);
        CHECK(!ev.stable);
        CHECK(std::abs(ev.min_root_modulus - 0.5) < 1e-10);
        CHECK(std::abs(ev.witness_root - Complex(0.5)) < 1e-9);
    }
    {
        // p2 slices: lambda^2 (zeta1^2+zeta2^2+zeta3^2) = 1, min modulus 1
        auto ev = dakit::stability_check(p2_series(), SampleConfig{400, 16, 9});
        CHECK(ev.stable);
        CHECK(ev.min_root_modulus >= 1.0 - 1e-9);
    }
    CHECK_THROWS_AS(dakit::stability_check(TruncatedSeries(2, 3), cfg), std::invalid_argument);
}

TEST_CASE("stability check tolerates multiple boundary roots via clustering") {
    // (1-z)^2 = 1 - 2z + z^2: double root at 1
    TruncatedSeries p(1, 2);
    p.set_coefficient(MultiIndex({0}), 1.0);
    p.set_coefficient(MultiIndex({1}), -2.0);
    p.set_coefficient(MultiIndex({2}), 1.0);
    auto ev = dakit::stability_check(p, SampleConfig{16, 16, 1});
    CHECK(ev.stable);
    CHECK(std::abs(ev.min_root_modulus - 1.0) < 1e-9);
}

TEST_CASE("random stable polynomials keep their roots outside the disk") {
    for (int i = 0; i < 20; ++i) {
        const auto c = dakit::random_stable_coefficients(3, 42 + static_cast<std::uint64_t>(i));
        const auto roots = dakit::polynomial_roots(c);
        REQUIRE(roots.size() == 3);
        for (const auto& r : roots) CHECK(std::abs(r) >= 1.0);
        CHECK(c[0] != Complex(0.0));
    }
}

TEST_CASE("polynomial root solver handles degree collapse and origin roots") {
    // leading coefficient below the trim threshold: degree drops
    const auto r1 = dakit::polynomial_roots({Complex(1.0), Complex(-1.0), Complex(1e-18)});
    REQUIRE(r1.size() == 1);
    CHECK(std::abs(r1[0] - Complex(1.0)) < 1e-12);
    // trailing zeros: roots at the origin
    const auto r2 = dakit::polynomial_roots({Complex(0.0), Complex(0.0), Complex(1.0), Complex(1.0)});
    REQUIRE(r2.size() == 3);
    int at_zero = 0;
    for (const auto& r : r2)
        if (std::abs(r) == 0.0) ++at_zero;
    CHECK(at_zero == 2);
    CHECK_THROWS_AS(dakit::polynomial_roots({Complex(0.0), Complex(0.0)}), std::invalid_argument);
}
