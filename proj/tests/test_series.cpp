#include <catch2/catch_amalgamated.hpp>

#include <dakit/series.hpp>

#include "oracles.hpp"

using dakit::Complex;
using dakit::MultiIndex;
using dakit::TruncatedSeries;

namespace {

TruncatedSeries from_terms(int d, int cap, std::initializer_list<std::pair<std::vector<int>, Complex>> terms) {
    TruncatedSeries f(d, cap);
    for (const auto& [e, c] : terms) f.set_coefficient(MultiIndex(e), c);
    return f;
}

}  // namespace

TEST_CASE("multi-index basics") {
    MultiIndex a({2, 1, 0});
    CHECK(a.order() == 3);
    CHECK(a.dimension() == 3);
    CHECK(dakit::h2d_coefficient_weight(a) == 2.0 / 6.0);
    CHECK_THROWS_AS(MultiIndex({-1, 0}), std::invalid_argument);
    CHECK(MultiIndex({0, 2}) < MultiIndex({1, 2}));   // graded first
    CHECK(MultiIndex({0, 2}) < MultiIndex({1, 1}));   // then lex
}

TEST_CASE("multiply: difference of squares") {
    auto f = from_terms(1, 4, {{{0}, 1.0}, {{1}, 1.0}});
    auto g = from_terms(1, 4, {{{0}, 1.0}, {{1}, -1.0}});
    auto h = multiply(f, g);
    CHECK(h.coefficient(MultiIndex({0})) == Complex(1.0));
    CHECK(h.coefficient(MultiIndex({1})) == Complex(0.0));
    CHECK(h.coefficient(MultiIndex({2})) == Complex(-1.0));
}

TEST_CASE("multiply: (1+z1+z2)^2 against the dense convolution oracle") {
    auto f = from_terms(2, 4, {{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}});
    auto h = multiply(f, f);
    auto expected = oracles::brute_multiply(f, f);
    for (const auto& [e, v] : expected) CHECK(h.coefficient(MultiIndex(e)) == v);
    CHECK(h.coefficient(MultiIndex({1, 1})) == Complex(2.0));
    CHECK(h.coefficient(MultiIndex({2, 0})) == Complex(1.0));
    CHECK(h.coefficient(MultiIndex({1, 0})) == Complex(2.0));
}

TEST_CASE("multiply: identity element and dimension mismatch") {
    std::mt19937_64 rng(7);
    auto f = oracles::random_dyadic_series(2, 5, rng);
    CHECK(multiply(f, TruncatedSeries::one(2, 5)) == f);
    CHECK_THROWS_AS(multiply(f, TruncatedSeries::one(3, 5)), std::invalid_argument);
}

TEST_CASE("ring axioms are exact on dyadic series") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 10; ++rep) {
        const int d = 1 + rep % 2;
        auto f = oracles::random_dyadic_series(d, 4, rng);
        auto g = oracles::random_dyadic_series(d, 4, rng);
        auto h = oracles::random_dyadic_series(d, 4, rng);
        CHECK(multiply(f, g) == multiply(g, f));
        CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
        CHECK(multiply(f, g + h) == multiply(f, g) + multiply(f, h));
    }
}

TEST_CASE("reciprocal: geometric series") {
    auto f = from_terms(1, 12, {{{0}, 1.0}, {{1}, -1.0}});
    auto g = reciprocal(f);
    for (int n = 0; n <= 12; ++n) CHECK(g.coefficient(MultiIndex({n})) == Complex(1.0));
}

TEST_CASE("reciprocal: multinomial coefficients of 1/(1-(z1+z2))") {
    auto f = from_terms(2, 8, {{{0, 0}, 1.0}, {{1, 0}, -1.0}, {{0, 1}, -1.0}});
    auto g = reciprocal(f);
    for (int a = 0; a + 0 <= 8; ++a)
        for (int b = 0; a + b <= 8; ++b) {
            const double expected = oracles::binomial(a + b, a);
            CHECK(std::abs(g.coefficient(MultiIndex({a, b})) - Complex(expected)) <= 1e-12 * expected);
        }
}

TEST_CASE("reciprocal: constants, roundtrip, zero constant term") {
    auto two = TruncatedSeries::constant(1, 3, 2.0);
    CHECK(reciprocal(two).coefficient(MultiIndex({0})) == Complex(0.5));

    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 8; ++rep) {
        auto f = oracles::random_float_series(1 + rep % 3, 5, rng);
        f.set_coefficient(MultiIndex::zero(f.dimension()), Complex(1.0, 0.3));
        auto prod = multiply(f, reciprocal(f));
        CHECK(oracles::max_coeff_distance(prod, TruncatedSeries::one(f.dimension(), 5)) < 1e-12);
    }

    CHECK_THROWS_AS(reciprocal(from_terms(1, 3, {{{1}, 1.0}})), std::domain_error);
}

TEST_CASE("log_series: Mercator series for log(1-z)") {
    auto f = from_terms(1, 10, {{{0}, 1.0}, {{1}, -1.0}});
    auto L = log_series(f);
    CHECK(L.coefficient(MultiIndex({0})) == Complex(0.0));
    for (int n = 1; n <= 10; ++n)
        CHECK(std::abs(L.coefficient(MultiIndex({n})) - Complex(-1.0 / n)) < 1e-15);
}

TEST_CASE("log_series: constants and principal branch") {
    auto e = TruncatedSeries::constant(2, 3, std::exp(1.0));
    CHECK(std::abs(log_series(e).constant_term() - Complex(1.0)) < 1e-15);
    // principal branch: log(-1) = i pi
    auto m = TruncatedSeries::constant(1, 2, -1.0);
    CHECK(std::abs(log_series(m).constant_term() - Complex(0.0, M_PI)) < 1e-15);
    CHECK_THROWS_AS(log_series(from_terms(1, 3, {{{1}, 1.0}})), std::domain_error);
}

TEST_CASE("log_series: additivity on a product") {
    auto f = from_terms(2, 8, {{{0, 0}, 1.0}, {{1, 0}, -1.0}});
    auto g = from_terms(2, 8, {{{0, 0}, 1.0}, {{0, 1}, -1.0}});
    auto lhs = log_series(multiply(f, g));
    auto rhs = log_series(f) + log_series(g);
    CHECK(oracles::max_coeff_distance(lhs, rhs) < 1e-14);
}

TEST_CASE("exp_series: entire-function basics") {
    CHECK(exp_series(TruncatedSeries(1, 5)) == TruncatedSeries::one(1, 5));
    auto z = TruncatedSeries::variable(1, 9, 0);
    auto E = exp_series(z);
    double fact = 1.0;
    for (int n = 0; n <= 9; ++n) {
        if (n > 0) fact *= n;
        CHECK(std::abs(E.coefficient(MultiIndex({n})) - Complex(1.0 / fact)) < 1e-15);
    }
}

TEST_CASE("exp/log roundtrips") {
    auto p = from_terms(2, 7, {{{0, 0}, 3.0}, {{1, 0}, 1.0}, {{0, 2}, 1.0}});
    CHECK(oracles::max_coeff_distance(exp_series(log_series(p)), p) < 1e-13);

    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 8; ++rep) {
        const int d = 1 + rep % 2;
        auto f = oracles::random_float_series(d, 6, rng);
        f.set_coefficient(MultiIndex::zero(d), Complex(0.8, 0.6 * (rep % 2 ? 1 : -1)));
        CHECK(oracles::max_coeff_distance(exp_series(log_series(f)), f) < 1e-12);
        // log o exp needs |Im f(0)| < pi; random constants above satisfy it
        CHECK(oracles::max_coeff_distance(log_series(exp_series(f)), f) < 1e-12);
    }
}

TEST_CASE("radial derivative: eigenvalues, linearity, product rule") {
    auto m = from_terms(2, 5, {{{2, 1}, 1.0}});
    CHECK(radial_derivative(m).coefficient(MultiIndex({2, 1})) == Complex(3.0));
    CHECK(radial_derivative(TruncatedSeries::one(2, 4)).is_zero());

    std::mt19937_64 rng(5);
    auto f = oracles::random_dyadic_series(2, 4, rng);
    auto g = oracles::random_dyadic_series(2, 4, rng);
    auto lhs = radial_derivative(multiply(f, g));
    auto rhs = multiply(radial_derivative(f), g) + multiply(f, radial_derivative(g));
    CHECK(lhs == rhs);
}

TEST_CASE("substitute: geometric composition") {
    auto f = from_terms(1, 10, {{{0}, 1.0}, {{1}, -1.0}});
    auto inv = reciprocal(f);  // 1/(1-lambda)
    auto w = from_terms(2, 10, {{{1, 1}, 1.0}});
    auto comp = substitute(inv, w);
    for (int n = 0; 2 * n <= 10; ++n) CHECK(std::abs(comp.coefficient(MultiIndex({n, n})) - Complex(1.0)) < 1e-12);
    CHECK(comp.coefficient(MultiIndex({1, 0})) == Complex(0.0));
}

TEST_CASE("substitute: identity and precondition") {
    auto id = TruncatedSeries::variable(1, 6, 0);
    std::mt19937_64 rng(9);
    auto w = oracles::random_dyadic_series(2, 6, rng);
    w.set_coefficient(MultiIndex::zero(2), 0.0);
    CHECK(substitute(id, w) == w);
    auto bad = TruncatedSeries::one(2, 6);
    CHECK_THROWS_AS(substitute(id, bad), std::invalid_argument);
    CHECK_THROWS_AS(substitute(w, w), std::invalid_argument);  // outer must be univariate
}

TEST_CASE("substitute matches multivariate log on the V1 monomial") {
    // f(t) = log(1+t), w = 3^{3/2} z1 z2 z3
    const double c = std::pow(3.0, 1.5);
    auto t = TruncatedSeries::variable(1, 12, 0);
    auto f = log_series(t + Complex(1.0));
    auto w = from_terms(3, 12, {{{1, 1, 1}, c}});
    auto comp = substitute(f, w);
    auto direct = log_series(w + Complex(1.0));
    CHECK(oracles::max_coeff_distance(comp, direct) < 1e-12);
    for (int k = 1; 3 * k <= 12; ++k) {
        const double expected = (k % 2 ? 1.0 : -1.0) * std::pow(c, k) / k;
        CHECK(std::abs(comp.coefficient(MultiIndex({k, k, k})) - Complex(expected)) <= 1e-12 * std::abs(expected));
    }
}

TEST_CASE("evaluate: polynomials and truncated kernels") {
    auto f = from_terms(1, 3, {{{0}, 1.0}, {{1}, -1.0}});
    CHECK(evaluate(f, std::vector<Complex>{Complex(0.5)}) == Complex(0.5));
    CHECK(evaluate(TruncatedSeries(2, 4), std::vector<Complex>{Complex(0.3), Complex(0.1)}) == Complex(0.0));

    // truncated k_w along w = 0.5 e1 in d=2: sum <z,w>^n
    const int D = 20;
    auto s = from_terms(2, D, {{{1, 0}, 0.5}});  // <z, w> = 0.5 z1
    TruncatedSeries k(2, D);
    TruncatedSeries p = TruncatedSeries::one(2, D);
    for (int n = 0; n <= D; ++n) {
        k = k + p;
        if (n < D) p = multiply(p, s);
    }
    const std::vector<Complex> z{Complex(0.4, 0.2), Complex(-0.3, 0.1)};
    Complex expected = 0.0, pw = 1.0;
    const Complex zw = 0.5 * z[0];
    for (int n = 0; n <= D; ++n) {
        expected += pw;
        pw *= zw;
    }
    CHECK(std::abs(evaluate(k, z) - expected) < 1e-14);
}

TEST_CASE("homogeneous parts decompose and reassemble") {
    auto f = from_terms(2, 3, {{{0, 0}, 1.0}, {{1, 0}, 2.0}, {{1, 1}, 1.0}});
    auto parts = homogeneous_parts(f);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].degree == 0);
    CHECK(parts[1].degree == 1);
    CHECK(parts[2].degree == 2);

    std::mt19937_64 rng(13);
    auto g = oracles::random_dyadic_series(2, 5, rng);
    auto reassembled = TruncatedSeries(2, 5);
    for (const auto& p : homogeneous_parts(g)) {
        for (const auto& [a, v] : p.series.terms()) {
            CHECK(a.order() == p.degree);
            reassembled.add_to_coefficient(a, v);
        }
    }
    CHECK(reassembled == g);

    auto h = from_terms(2, 4, {{{2, 2}, 1.5}});
    CHECK(homogeneous_parts(h).size() == 1);
}

TEST_CASE("degree-cap monotonicity: truncate-then-compute equals compute-then-truncate") {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 6; ++rep) {
        const int d = 1 + rep % 2;
        auto f = oracles::random_float_series(d, 8, rng);
        f.set_coefficient(MultiIndex::zero(d), Complex(1.0, 0.2));
        auto g = oracles::random_float_series(d, 8, rng);

        CHECK(multiply(f, g).with_cap(5) == multiply(f.with_cap(5), g.with_cap(5)));
        CHECK(reciprocal(f).with_cap(5) == reciprocal(f.with_cap(5)));
        CHECK(log_series(f).with_cap(5) == log_series(f.with_cap(5)));
        CHECK(exp_series(f).with_cap(5) == exp_series(f.with_cap(5)));
    }
}

TEST_CASE("equality compares through the smaller cap") {
    auto f = from_terms(1, 8, {{{0}, 1.0}, {{5}, 2.0}});
    auto g = from_terms(1, 4, {{{0}, 1.0}});
    CHECK(f == g);  // they agree through degree 4
    auto h = from_terms(1, 4, {{{0}, 1.0}, {{3}, 1.0}});
    CHECK(!(f == h));
}

TEST_CASE("degenerate cap D = 0 works everywhere") {
    auto c = TruncatedSeries::constant(2, 0, Complex(2.0, 1.0));
    CHECK(multiply(c, c).constant_term() == Complex(3.0, 4.0));
    CHECK(std::abs(reciprocal(c).constant_term() - 1.0 / Complex(2.0, 1.0)) < 1e-16);
    CHECK(std::abs(exp_series(log_series(c)).constant_term() - Complex(2.0, 1.0)) < 1e-15);
    CHECK(radial_derivative(c).is_zero());
}
