#ifndef DAKIT_TRANSFORMS_HPP
#define DAKIT_TRANSFORMS_HPP

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "roots.hpp"
#include "sampling.hpp"
#include "series.hpp"

namespace dakit {

inline constexpr double kStabilityTolerance = 1e-9;

// Outcome of the sampled slice-root stability check. The verdict refers to
// zero-freeness of the open ball, so boundary zeros (min modulus 1) pass.
struct StabilityEvidence {
    double min_root_modulus = std::numeric_limits<double>::infinity();
    bool stable = true;
    std::vector<Complex> witness_direction;  // direction attaining the minimum
    Complex witness_root = 0.0;              // slice root attaining the minimum
};

// A polynomial declared zero-free on the ball. declared_degree may exceed
// the support's total degree (it is the n in the 2^n p(0) normalization and
// in the n*pi argument bound).
struct StablePolynomial {
    TruncatedSeries base;
    int declared_degree;
    std::optional<StabilityEvidence> evidence;

    explicit StablePolynomial(TruncatedSeries p, std::optional<int> degree = std::nullopt)
        : base(std::move(p)), declared_degree(degree.value_or(std::max(base.total_degree(), 0))) {
        if (base.constant_term() == Complex(0.0))
            throw std::domain_error("StablePolynomial: constant term must be nonzero");
        if (declared_degree < std::max(base.total_degree(), 0))
            throw std::invalid_argument("StablePolynomial: declared degree below total degree of support");
    }
};

struct InstabilityError : std::runtime_error {
    std::vector<Complex> witness;
    explicit InstabilityError(std::string msg, std::vector<Complex> w = {})
        : std::runtime_error(std::move(msg)), witness(std::move(w)) {}
};

// Raised when an iterated-log level would leave the principal branch:
// 1 + F_k(0) hit the cut (-inf, 0].
struct BranchViolationError : std::domain_error {
    int level;
    Complex constant;
    BranchViolationError(int lvl, Complex c)
        : std::domain_error(make_message(lvl, c)), level(lvl), constant(c) {}

  private:
    static std::string make_message(int lvl, Complex c) {
        std::ostringstream os;
        os << "iterated_log: branch violation at level " << lvl << ": 1 + F_" << lvl << "(0) = " << (1.0 + c.real())
           << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i lies on (-inf, 0]";
        return os.str();
    }
};

// q = p / (2^n p(0)); q(0) = 2^{-n} and sup_ball |q| <= 1 for stable p.
inline TruncatedSeries normalize_stable(const StablePolynomial& p) {
    const Complex p0 = p.base.constant_term();
    return p.base * (std::pow(2.0, -p.declared_degree) / p0);
}

// The ladder F_1 = log(1/f), F_{k+1} = log(1 + F_k), returned at level n;
// this is G_n o log(1/f) for G_1(z) = z, G_{k+1} = log(1 + G_k).
inline TruncatedSeries iterated_log(const TruncatedSeries& f, int n) {
    if (n < 1) throw std::invalid_argument("iterated_log: level must be >= 1");
    if (f.constant_term() == Complex(0.0)) throw std::domain_error("iterated_log: zero constant term");
    TruncatedSeries F = log_series(reciprocal(f));
    for (int k = 1; k < n; ++k) {
        const Complex c = F.constant_term();
        if (c.imag() == 0.0 && 1.0 + c.real() <= 0.0) throw BranchViolationError(k, c);
        F = log_series(F + Complex(1.0));
    }
    return F;
}

// slice function f_zeta(lambda) = f(lambda * zeta) for |zeta| = 1:
// coefficient of lambda^n is the degree-n homogeneous part evaluated at zeta.
inline TruncatedSeries slice(const TruncatedSeries& f, const std::vector<Complex>& direction) {
    if (static_cast<int>(direction.size()) != f.dimension())
        throw std::invalid_argument("slice: direction dimension mismatch");
    double nrm2 = 0.0;
    for (const auto& z : direction) nrm2 += std::norm(z);
    if (std::abs(std::sqrt(nrm2) - 1.0) > 1e-12) throw std::invalid_argument("slice: direction must have unit norm");
    TruncatedSeries g(1, f.degree_cap());
    for (const auto& [a, v] : f.terms()) {
        Complex m = v;
        for (int j = 0; j < a.dimension(); ++j)
            for (int i = 0; i < a[j]; ++i) m *= direction[static_cast<size_t>(j)];
        g.add_to_coefficient(MultiIndex({a.order()}), m);
    }
    return g;
}

namespace detail {

inline std::vector<Complex> slice_coefficients(const TruncatedSeries& f, const std::vector<Complex>& direction) {
    std::vector<Complex> c(static_cast<size_t>(std::max(f.total_degree(), 0)) + 1, Complex(0.0));
    for (const auto& [a, v] : f.terms()) {
        Complex m = v;
        for (int j = 0; j < a.dimension(); ++j)
            for (int i = 0; i < a[j]; ++i) m *= direction[static_cast<size_t>(j)];
        c[static_cast<size_t>(a.order())] += m;
    }
    return c;
}

}  // namespace detail

// For each sampled direction, solve for all roots of the univariate slice
// and record the global minimum root modulus. Stable iff min >= 1 - 1e-9.
inline StabilityEvidence stability_check(const TruncatedSeries& p, const SampleConfig& cfg) {
    if (p.is_zero()) throw std::invalid_argument("stability_check: zero polynomial");
    StabilityEvidence ev;
    const auto dirs = sphere_points(p.dimension(), cfg.sphere_samples, cfg.rng_seed);
    for (const auto& zeta : dirs) {
        auto coeffs = detail::slice_coefficients(p, zeta);
        double maxc = 0.0;
        for (const auto& v : coeffs) maxc = std::max(maxc, std::abs(v));
        if (maxc == 0.0) continue;  // slice collapsed to zero; no root information
        const auto roots = polynomial_roots(coeffs);
        if (roots.empty()) continue;
        const double mn = clustered_min_modulus(roots);
        if (mn < ev.min_root_modulus) {
            ev.min_root_modulus = mn;
            ev.witness_direction = zeta;
            Complex best = roots.front();
            for (const auto& r : roots)
                if (std::abs(r) < std::abs(best)) best = r;
            ev.witness_root = best;
        }
    }
    ev.stable = ev.min_root_modulus >= 1.0 - kStabilityTolerance;
    return ev;
}

namespace detail {

// argument change of f along the segment [z0, z1], by adaptive halving until
// each sub-step turns by less than pi/2; throws with a witness when f hits 0
inline double arg_change_on_segment(const TruncatedSeries& f, const std::vector<Complex>& z0,
                                    const std::vector<Complex>& z1, Complex f0, Complex f1, int depth) {
    if (std::abs(f1) < 1e-300 || !std::isfinite(std::abs(f1)))
        throw InstabilityError("argument tracking: zero of the polynomial on a segment", z1);
    const double da = std::arg(f1 / f0);
    if (std::abs(da) < M_PI / 2.0) return da;
    if (depth >= 60) throw InstabilityError("argument tracking: no convergence (zero on segment?)", z1);
    std::vector<Complex> zm(z0.size());
    for (size_t j = 0; j < z0.size(); ++j) zm[j] = 0.5 * (z0[j] + z1[j]);
    const Complex fm = evaluate(f, zm);
    return arg_change_on_segment(f, z0, zm, f0, fm, depth + 1) + arg_change_on_segment(f, zm, z1, fm, f1, depth + 1);
}

}  // namespace detail

// sup over samples z = r*zeta of |Im(log p(z) - log p(0))|, with the branch
// tracked continuously along each ray from the origin.
inline double bounded_argument_estimate(const StablePolynomial& p, const SampleConfig& cfg) {
    const auto dirs = sphere_points(p.base.dimension(), cfg.sphere_samples, cfg.rng_seed);
    const auto radii = radial_grid_points(cfg.radial_grid);
    const Complex p0 = p.base.constant_term();
    double sup = 0.0;
    for (const auto& zeta : dirs) {
        double cum = 0.0;
        std::vector<Complex> zprev(zeta.size(), Complex(0.0));
        Complex fprev = p0;
        for (const double r : radii) {
            std::vector<Complex> z(zeta.size());
            for (size_t j = 0; j < zeta.size(); ++j) z[j] = r * zeta[j];
            const Complex fz = evaluate(p.base, z);
            cum += detail::arg_change_on_segment(p.base, zprev, z, fprev, fz, 0);
            sup = std::max(sup, std::abs(cum));
            zprev = std::move(z);
            fprev = fz;
        }
    }
    return sup;
}

// max |f| over the sample set; a lower bound for the sup norm of the truncation
inline double sup_norm_estimate(const TruncatedSeries& f, const SampleConfig& cfg) {
    const auto dirs = sphere_points(f.dimension(), cfg.sphere_samples, cfg.rng_seed);
    const auto radii = radial_grid_points(cfg.radial_grid);
    double sup = 0.0;
    for (const auto& zeta : dirs) {
        std::vector<Complex> z(zeta.size());
        for (const double r : radii) {
            for (size_t j = 0; j < zeta.size(); ++j) z[j] = r * zeta[j];
            sup = std::max(sup, std::abs(evaluate(f, z)));
        }
    }
    return sup;
}

// Random stable univariate polynomial c * prod (z - lambda_j) with
// |lambda_j| = 1 + |N(0,1)|; used by the randomized verification suites.
inline std::vector<Complex> random_stable_coefficients(int degree, std::uint64_t seed) {
    detail::NormalSource g(detail::splitmix64(seed ^ 0xabcd1234u));
    std::vector<Complex> c{1.0};
    for (int j = 0; j < degree; ++j) {
        const double rad = 1.0 + std::abs(g());
        const double th = 2.0 * M_PI * g.uniform01();
        const Complex lam = rad * Complex(std::cos(th), std::sin(th));
        std::vector<Complex> nc(c.size() + 1, Complex(0.0));
        for (size_t k = 0; k < c.size(); ++k) {
            nc[k] += c[k] * (-lam);
            nc[k + 1] += c[k];
        }
        c = std::move(nc);
    }
    return c;
}

inline StablePolynomial random_stable_polynomial(int degree, std::uint64_t seed) {
    const auto c = random_stable_coefficients(degree, seed);
    TruncatedSeries p(1, std::max(degree, 0));
    for (size_t k = 0; k < c.size(); ++k)
        if (c[k] != Complex(0.0)) p.set_coefficient(MultiIndex({static_cast<int>(k)}), c[k]);
    return StablePolynomial(std::move(p), degree);
}

}  // namespace dakit

#endif
