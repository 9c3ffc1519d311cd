#ifndef DAKIT_NORMS_HPP
#define DAKIT_NORMS_HPP

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "quadrature.hpp"
#include "sampling.hpp"
#include "series.hpp"
#include "weights.hpp"

namespace dakit {

// A norm definition: either the pure H^2_d coefficient formula, or a
// radially weighted Besov norm
//   omega(B_d)|f(0)|^2 + sum_{n>=1} n^{2N} omega_n ||f_n||^2_{H^2_d}.
// The order N enters only through the factor n^{2N} and may be any real
// >= 0. The canonical Dirichlet space is d=1, N=1/2, mu = delta_1, for
// which the sum is exactly |f(0)|^2 + sum n |f^(n)|^2, the disk Dirichlet
// integral |f(0)|^2 + int |f'|^2 dA/pi.
struct SpaceSpec {
    enum class Kind { H2d, Besov };

    Kind kind = Kind::H2d;
    int dimension = 1;
    double order = 0.0;
    RadialMeasure measure = RadialMeasure::sigma();
    std::string label = "h2d:d=1";

    static SpaceSpec h2d(int d) {
        SpaceSpec s;
        s.kind = Kind::H2d;
        s.dimension = d;
        s.label = "h2d:d=" + std::to_string(d);
        return s;
    }

    static SpaceSpec besov(int d, double N, RadialMeasure mu, std::string label = "") {
        if (d < 1) throw std::invalid_argument("SpaceSpec: dimension must be >= 1");
        if (N < 0.0) throw std::invalid_argument("SpaceSpec: order must be >= 0");
        SpaceSpec s;
        s.kind = Kind::Besov;
        s.dimension = d;
        s.order = N;
        s.measure = std::move(mu);
        if (label.empty()) {
            std::ostringstream os;
            os << "besov:d=" << d << ",N=" << N << ",measure=" << s.measure.to_string();
            label = os.str();
        }
        s.label = std::move(label);
        return s;
    }

    static SpaceSpec dirichlet() { return besov(1, 0.5, RadialMeasure::sigma(), "dirichlet"); }

    // "h2d:d=<d>" | "dirichlet" | "besov:d=<d>,N=<N>,measure=<measure>"
    static SpaceSpec parse(const std::string& str);
};

inline SpaceSpec SpaceSpec::parse(const std::string& str) {
    if (str == "dirichlet") return dirichlet();
    if (str.rfind("h2d:d=", 0) == 0) {
        const int d = std::stoi(str.substr(6));
        if (d < 1) throw std::invalid_argument("SpaceSpec: bad dimension in " + str);
        return h2d(d);
    }
    if (str.rfind("besov:", 0) == 0) {
        std::string rest = str.substr(6);
        int d = -1;
        double N = -1.0;
        std::string measure;
        size_t pos = 0;
        while (pos < rest.size()) {
            size_t comma = rest.find(',', pos);
            // the measure value may itself contain ':'; it is always last
            std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (item.rfind("measure=", 0) == 0) {
                measure = rest.substr(pos + 8);
                break;
            }
            if (item.rfind("d=", 0) == 0)
                d = std::stoi(item.substr(2));
            else if (item.rfind("N=", 0) == 0)
                N = std::stod(item.substr(2));
            else
                throw std::invalid_argument("SpaceSpec: bad field in " + str);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (d < 1 || N < 0.0 || measure.empty()) throw std::invalid_argument("SpaceSpec: incomplete spec " + str);
        return besov(d, N, RadialMeasure::parse(measure));
    }
    throw std::invalid_argument("SpaceSpec: unknown space string: " + str);
}

// ||f||^2_{H^2_d} = sum_alpha alpha!/|alpha|! |f^(alpha)|^2 over |alpha| <= D
inline double h2d_norm_sq(const TruncatedSeries& f) {
    double s = 0.0;
    for (const auto& [a, v] : f.terms()) s += h2d_coefficient_weight(a) * std::norm(v);
    return s;
}

// ||f_n||^2_{H^2(dB)} = n!(d-1)!/(n+d-1)! ||f_n||^2_{H^2_d} for homogeneous f_n
inline double hardy_sphere_norm_sq(const HomogeneousPart& p) {
    for (const auto& [a, v] : p.series.terms())
        if (a.order() != p.degree) throw std::invalid_argument("hardy_sphere_norm_sq: input is not homogeneous");
    return hardy_factorial_ratio(p.degree, p.series.dimension()) * h2d_norm_sq(p.series);
}

namespace detail {

// per-degree contributions of ||.||^2 in the given space; index = degree
inline std::vector<double> degree_contributions(const TruncatedSeries& f, const SpaceSpec& s) {
    if (f.dimension() != s.dimension) throw std::invalid_argument("norm: dimension mismatch");
    const int cap = f.degree_cap();
    std::vector<double> contrib(static_cast<size_t>(cap) + 1, 0.0);
    if (s.kind == SpaceSpec::Kind::H2d) {
        for (const auto& [a, v] : f.terms())
            contrib[static_cast<size_t>(a.order())] += h2d_coefficient_weight(a) * std::norm(v);
        return contrib;
    }
    WeightSequence w(s.dimension, s.measure, cap);
    std::vector<double> part_norm(static_cast<size_t>(cap) + 1, 0.0);
    for (const auto& [a, v] : f.terms())
        part_norm[static_cast<size_t>(a.order())] += h2d_coefficient_weight(a) * std::norm(v);
    contrib[0] = s.measure.total_mass() * std::norm(f.constant_term());
    for (int n = 1; n <= cap; ++n)
        contrib[static_cast<size_t>(n)] = std::pow(static_cast<double>(n), 2.0 * s.order) * w.omega(n) *
                                          part_norm[static_cast<size_t>(n)];
    return contrib;
}

}  // namespace detail

// Eq-style Besov sum: omega(B_d)|f(0)|^2 + sum n^{2N} omega_n ||f_n||^2_{H^2_d}
inline double besov_norm_sq(const TruncatedSeries& f, const SpaceSpec& s) {
    if (s.kind != SpaceSpec::Kind::Besov) throw std::invalid_argument("besov_norm_sq: spec is not a Besov space");
    const auto contrib = detail::degree_contributions(f, s);
    double total = 0.0;
    for (double c : contrib) total += c;
    return total;
}

// squared norm of f in the given space (coefficient formulas throughout)
inline double norm_sq(const TruncatedSeries& f, const SpaceSpec& s) {
    const auto contrib = detail::degree_contributions(f, s);
    double total = 0.0;
    for (double c : contrib) total += c;
    return total;
}

// Partial squared norms of truncations: s_D = ||f restricted to degree <= D||^2,
// with increments s_D - s_{D-1} and a least-squares slope of log(increment)
// against log(D) over the top half of degrees. The slope is the diagnostic
// decay rate; no limit claim is attached to it.
struct TailProfile {
    std::string space_label;
    std::vector<double> partial_norms;  // index = D
    std::vector<double> increments;     // index = D, increments[0] = s_0
    double decay_slope = -std::numeric_limits<double>::infinity();
    int slope_points = 0;
    bool slope_defined = false;

    std::string to_csv() const {
        std::ostringstream os;
        os.precision(17);
        os << "degree,partial_norm_sq,increment\n";
        for (size_t d = 0; d < partial_norms.size(); ++d)
            os << d << "," << partial_norms[d] << "," << increments[d] << "\n";
        return os.str();
    }
};

inline TailProfile tail_profile(const TruncatedSeries& f, const SpaceSpec& s) {
    const auto contrib = detail::degree_contributions(f, s);
    TailProfile t;
    t.space_label = s.label;
    t.increments = contrib;
    t.partial_norms.resize(contrib.size());
    double run = 0.0;
    for (size_t d = 0; d < contrib.size(); ++d) {
        run += contrib[d];
        t.partial_norms[d] = run;
    }
    const int cap = static_cast<int>(contrib.size()) - 1;
    const int lo = std::max(1, (cap + 1) / 2);
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int npts = 0;
    for (int d = lo; d <= cap; ++d) {
        const double inc = contrib[static_cast<size_t>(d)];
        if (inc <= 0.0) continue;
        const double x = std::log(static_cast<double>(d));
        const double y = std::log(inc);
        sx += x, sy += y, sxx += x * x, sxy += x * y;
        ++npts;
    }
    t.slope_points = npts;
    if (npts >= 2) {
        const double den = npts * sxx - sx * sx;
        if (den > 0.0) {
            t.decay_slope = (npts * sxy - sx * sy) / den;
            t.slope_defined = true;
        }
    }
    return t;
}

// |f(0)|^2 + int_D |f'|^2 dA/pi for a univariate function given with its
// derivative; agrees with the Dirichlet-space coefficient sum for
// polynomial inputs up to quadrature tolerance.
inline QuadResult dirichlet_norm_sq_integral(const std::function<Complex(Complex)>& f,
                                             const std::function<Complex(Complex)>& fprime, double tol = 1e-8) {
    QuadResult q = disk_integral([&fprime](Complex z) { return std::norm(fprime(z)); }, tol);
    q.value += std::norm(f(Complex(0.0)));
    return q;
}

// max over z = r*zeta in the sample set of |Rf(z)|(1-|z|); a lower bound
// for the Bloch seminorm of the truncation
inline double bloch_seminorm_estimate(const TruncatedSeries& f, const SampleConfig& cfg) {
    const TruncatedSeries rf = radial_derivative(f);
    const auto dirs = sphere_points(f.dimension(), cfg.sphere_samples, cfg.rng_seed);
    const auto radii = radial_grid_points(cfg.radial_grid);
    double sup = 0.0;
    for (const auto& zeta : dirs) {
        std::vector<Complex> z(zeta.size());
        for (const double r : radii) {
            for (size_t j = 0; j < zeta.size(); ++j) z[j] = r * zeta[j];
            sup = std::max(sup, std::abs(evaluate(rf, z)) * (1.0 - r));
        }
    }
    return sup;
}

}  // namespace dakit

#endif
