#ifndef DAKIT_VERIFY_HPP
#define DAKIT_VERIFY_HPP

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "identities.hpp"
#include "norms.hpp"
#include "quadrature.hpp"
#include "transforms.hpp"

namespace dakit {

struct CheckRow {
    std::string name;
    double observed = 0.0;
    double bound = 0.0;  // the threshold `observed` is held against
    bool pass = false;
    std::string note;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    long long mc_points = 1'000'000;
    int sphere_samples = 200;
    int radial_grid = 50;
    double tol = 1e-6;
};

namespace verify_detail {

inline std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

// integer partition count, independent of enumerate_A_m
inline long long partition_count(int m) {
    std::vector<long long> p(static_cast<size_t>(m) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= m; ++part)
        for (int s = part; s <= m; ++s) p[static_cast<size_t>(s)] += p[static_cast<size_t>(s - part)];
    return p[static_cast<size_t>(m)];
}

// Bell numbers by the Bell triangle
inline std::vector<double> bell_numbers(int mmax) {
    std::vector<double> bell{1.0};
    std::vector<double> row{1.0};
    for (int i = 1; i <= mmax; ++i) {
        std::vector<double> next{row.back()};
        for (double v : row) next.push_back(next.back() + v);
        bell.push_back(next.front());
        row = std::move(next);
    }
    return bell;  // bell[m] = B_m with B_0 = 1
}

inline TruncatedSeries random_series(int d, int cap, std::uint64_t seed, double scale, bool zero_constant) {
    detail::NormalSource g(detail::mix_seed(seed, 0x5e71e5));
    TruncatedSeries f(d, cap);
    // dense through the cap, magnitudes damped by total degree
    std::vector<int> e(static_cast<size_t>(d), 0);
    const auto rec = [&](auto&& self, int j, int remaining) -> void {
        if (j == d - 1) {
            e[static_cast<size_t>(j)] = remaining;
            MultiIndex a(e);
            const double mag = scale / (1.0 + a.order());
            const Complex c(mag * (2.0 * g.uniform01() - 1.0), mag * (2.0 * g.uniform01() - 1.0));
            if (!(zero_constant && a.order() == 0)) f.set_coefficient(a, c);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            e[static_cast<size_t>(j)] = v;
            self(self, j + 1, remaining - v);
        }
    };
    for (int n = 0; n <= cap; ++n) rec(rec, 0, n);
    return f;
}

}  // namespace verify_detail

// Lemma 6.1: |Im log p(z) - log p(0)| <= n*pi for stable p of degree <= n.
inline std::vector<CheckRow> verify_lemma61(const VerifyOptions& opt, int corpus = 50) {
    std::vector<CheckRow> rows;
    SampleConfig cfg{opt.sphere_samples, opt.radial_grid, opt.seed};
    auto check = [&rows, &cfg](const std::string& name, const StablePolynomial& p) {
        CheckRow r;
        r.name = "lemma-6.1 " + name;
        r.bound = p.declared_degree * M_PI + 1e-6;
        r.observed = bounded_argument_estimate(p, cfg);
        r.pass = r.observed <= r.bound;
        r.note = "sampled sup |Im(log p - log p(0))| vs n*pi";
        rows.push_back(r);
    };
    for (int i = 0; i < corpus; ++i) {
        const int deg = 1 + i % 4;
        check("random deg " + std::to_string(deg) + " #" + std::to_string(i),
              random_stable_polynomial(deg, detail::mix_seed(opt.seed, 1000 + static_cast<std::uint64_t>(i))));
    }
    {  // p1 = 1 - 3^{3/2} z1 z2 z3 on B_3
        TruncatedSeries p(3, 3);
        p.set_coefficient(MultiIndex::zero(3), 1.0);
        p.set_coefficient(MultiIndex({1, 1, 1}), -std::pow(3.0, 1.5));
        check("p1 = 1 - 3^{3/2} z1 z2 z3", StablePolynomial(p, 3));
    }
    {  // p2 = 1 - (z1^2 + z2^2 + z3^2) on B_3
        TruncatedSeries p(3, 2);
        p.set_coefficient(MultiIndex::zero(3), 1.0);
        p.set_coefficient(MultiIndex({2, 0, 0}), -1.0);
        p.set_coefficient(MultiIndex({0, 2, 0}), -1.0);
        p.set_coefficient(MultiIndex({0, 0, 2}), -1.0);
        check("p2 = 1 - (z1^2+z2^2+z3^2)", StablePolynomial(p, 2));
    }
    {  // 1 - (z1+z2)/2 on B_2
        TruncatedSeries p(2, 1);
        p.set_coefficient(MultiIndex::zero(2), 1.0);
        p.set_coefficient(MultiIndex({1, 0}), -0.5);
        p.set_coefficient(MultiIndex({0, 1}), -0.5);
        check("1 - (z1+z2)/2", StablePolynomial(p, 1));
    }
    return rows;
}

// Lemma 6.2: int_D h(2|l|/|z-l|) dA/pi <= 16 for |l| >= 1, h = x^2/(1+log x)^2.
inline std::vector<CheckRow> verify_lemma62(const VerifyOptions& opt) {
    std::vector<CheckRow> rows;
    const double moduli[] = {1.0, 1.1, 1.5, 2.0, 4.0};
    const double phases[] = {0.0, 0.7, 2.1, 4.4};
    for (double s : moduli) {
        double vmin = std::numeric_limits<double>::infinity(), vmax = -vmin, errmax = 0.0;
        for (double ph : phases) {
            const Complex lambda = s * Complex(std::cos(ph), std::sin(ph));
            const QuadResult q = lemma_h_integral(lambda, opt.tol);
            vmin = std::min(vmin, q.value);
            vmax = std::max(vmax, q.value);
            errmax = std::max(errmax, q.error_estimate);
            std::ostringstream nm;
            nm << "lemma-6.2 |lambda|=" << s << " phase=" << ph;
            rows.push_back({nm.str() + " value", q.value, 16.0, q.value <= 16.0, "integral vs bound 16"});
            rows.push_back({nm.str() + " quad error", q.error_estimate, 1e-4, q.error_estimate <= 1e-4, ""});
            if (ph == phases[0]) {
                const MCResult mc = lemma_h_mc(lambda, opt.mc_points, opt.seed);
                const double sigma = std::sqrt(mc.std_error * mc.std_error + q.error_estimate * q.error_estimate);
                const double dev = std::abs(mc.value - q.value);
                rows.push_back({nm.str() + " MC deviation", dev, 3.0 * sigma, dev <= 3.0 * sigma,
                                "importance-sampled MC, " + std::to_string(opt.mc_points) + " points"});
            }
        }
        std::ostringstream nm;
        nm << "lemma-6.2 |lambda|=" << s << " rotation invariance";
        const double spread = vmax - vmin;
        rows.push_back({nm.str(), spread, 2.0 * errmax + 1e-9, spread <= 2.0 * errmax + 1e-9,
                        "value spread across phases vs combined error"});
    }
    return rows;
}

// Lemma 6.3: int_D |F'|^2 dA/pi <= 16 n^2 for F = log(1+log(2^n p(0)/p)).
inline std::vector<CheckRow> verify_lemma63(const VerifyOptions& opt, int corpus = 50) {
    std::vector<CheckRow> rows;
    auto check = [&rows, &opt](const std::string& name, const std::vector<Complex>& coeffs, int n) {
        double min_re = 0.0;
        const QuadResult q = dirichlet_integral_F(coeffs, n, std::max(opt.tol, 1e-5), &min_re);
        CheckRow r;
        r.name = "lemma-6.3 " + name;
        r.bound = 16.0 * n * n;
        r.observed = q.value;
        r.pass = q.value - q.error_estimate <= r.bound;
        r.note = "error estimate " + verify_detail::fmt(q.error_estimate);
        rows.push_back(r);
        rows.push_back({"lemma-6.3 " + name + " Re(1+log W) floor", min_re, 1.0 - 1e-9, min_re >= 1.0 - 1e-9,
                        "denominator lower bound on quadrature nodes"});
    };
    check("p = 1-z, n=1", {Complex(1.0), Complex(-1.0)}, 1);
    for (int i = 0; i < corpus; ++i) {
        const int deg = 1 + i % 4;
        const auto c = random_stable_coefficients(deg, detail::mix_seed(opt.seed, 2000 + static_cast<std::uint64_t>(i)));
        check("random deg " + std::to_string(deg) + " #" + std::to_string(i), c, deg);
    }
    return rows;
}

// Theorem 6.4: the sphere average of slice Dirichlet integrals stays <= 16 n^2.
inline std::vector<CheckRow> verify_theorem64(const VerifyOptions& opt) {
    std::vector<CheckRow> rows;
    SampleConfig cfg{opt.sphere_samples, opt.radial_grid, opt.seed};
    {
        TruncatedSeries p(2, 1);
        p.set_coefficient(MultiIndex::zero(2), 1.0);
        p.set_coefficient(MultiIndex({1, 0}), -1.0);
        const QuadResult q = slice_besov_integral(p, 1, cfg, 1e-3);
        rows.push_back({"theorem-6.4 1-z1 on B_2 value", q.value, 16.0, q.value <= 16.0,
                        "mean slice integral, n=1"});
        rows.push_back({"theorem-6.4 1-z1 on B_2 std error", q.error_estimate, 0.5, q.error_estimate <= 0.5, ""});
    }
    {
        TruncatedSeries p(3, 2);
        p.set_coefficient(MultiIndex::zero(3), 1.0);
        p.set_coefficient(MultiIndex({2, 0, 0}), -1.0);
        p.set_coefficient(MultiIndex({0, 2, 0}), -1.0);
        p.set_coefficient(MultiIndex({0, 0, 2}), -1.0);
        const QuadResult q = slice_besov_integral(p, 2, cfg, 1e-3);
        rows.push_back({"theorem-6.4 p2 on B_3 value", q.value, 64.0, q.value <= 64.0,
                        "mean slice integral, n=2"});
        rows.push_back({"theorem-6.4 p2 on B_3 std error", q.error_estimate, 0.5, q.error_estimate <= 0.5, ""});
    }
    return rows;
}

// Faa di Bruno expansion of R^m log(1+F) against m-fold R of log(1+F),
// plus the partition-count and Bell-weight combinatorial guards.
inline std::vector<CheckRow> verify_faa_di_bruno(const VerifyOptions& opt, int per_case = 20) {
    std::vector<CheckRow> rows;
    const std::pair<int, int> combos[] = {{1, 12}, {2, 10}, {3, 8}};
    for (const auto& [d, cap] : combos) {
        for (int m = 1; m <= 5; ++m) {
            double worst = 0.0;
            for (int i = 0; i < per_case; ++i) {
                const auto F = verify_detail::random_series(
                    d, cap, detail::mix_seed(opt.seed, 3000 + static_cast<std::uint64_t>(100 * d + 10 * m + i)), 0.3,
                    true);
                worst = std::max(worst, verify_faa_di_bruno(F, m));
            }
            std::ostringstream nm;
            nm << "faa-di-bruno d=" << d << " D=" << cap << " m=" << m;
            rows.push_back({nm.str(), worst, 1e-9, worst <= 1e-9,
                            "max relative coefficient discrepancy over " + std::to_string(per_case) + " random F"});
        }
    }
    for (int m = 1; m <= 12; ++m) {
        const auto Am = enumerate_A_m(m);
        const double pm = static_cast<double>(verify_detail::partition_count(m));
        rows.push_back({"faa-di-bruno |A_" + std::to_string(m) + "| = p(" + std::to_string(m) + ")",
                        static_cast<double>(Am.size()), pm, static_cast<double>(Am.size()) == pm,
                        "partition-count oracle"});
        // sum of FdB weights m!/(eta! prod (j!)^{eta_j}) must be the Bell number
        double ws = 0.0;
        for (const auto& eta : Am) {
            double mfact = 1.0;
            for (int i = 2; i <= m; ++i) mfact *= i;
            double w = mfact / eta.factorial();
            double jf = 1.0;
            for (int j = 1; j <= m; ++j) {
                jf *= j;
                for (int rep = 0; rep < eta.eta[static_cast<size_t>(j - 1)]; ++rep) w /= jf;
            }
            ws += w;
        }
        const double bell = verify_detail::bell_numbers(m)[static_cast<size_t>(m)];
        rows.push_back({"faa-di-bruno weight sum m=" + std::to_string(m), ws, bell,
                        std::abs(ws - bell) <= 1e-9 * bell, "Bell-number oracle"});
    }
    return rows;
}

// Lemma 4.1's two R-identities as exact series identities.
inline std::vector<CheckRow> verify_r_identities(const VerifyOptions& opt, int cases = 20) {
    std::vector<CheckRow> rows;
    double worst_exp = 0.0, worst_log = 0.0;
    for (int i = 0; i < cases; ++i) {
        const int d = 1 + i % 2;
        const int cap = 8;
        auto phi = verify_detail::random_series(d, cap, detail::mix_seed(opt.seed, 4000 + static_cast<std::uint64_t>(i)), 0.5, false);
        auto psi = verify_detail::random_series(d, cap, detail::mix_seed(opt.seed, 4500 + static_cast<std::uint64_t>(i)), 0.5, false);
        psi.set_coefficient(MultiIndex::zero(d), 1.0);
        worst_exp = std::max(worst_exp, verify_R_exp_identity(phi, psi, i % 3));

        auto phi2 = verify_detail::random_series(d, cap, detail::mix_seed(opt.seed, 5000 + static_cast<std::uint64_t>(i)), 0.4, false);
        phi2.set_coefficient(MultiIndex::zero(d), Complex(1.0, 0.2));
        worst_log = std::max(worst_log, verify_R_log_identity(phi2, i % 3));
    }
    rows.push_back({"r-identities R(psi^{n+2} e^{-phi/psi})", worst_exp, 1e-9, worst_exp <= 1e-9,
                    "max relative discrepancy over " + std::to_string(cases) + " random inputs, n in {0,1,2}"});
    rows.push_back({"r-identities R(phi^{n+1} log phi)", worst_log, 1e-9, worst_log <= 1e-9,
                    "max relative discrepancy over " + std::to_string(cases) + " random inputs, n in {0,1,2}"});
    return rows;
}

// Lemma 3.3's (1-phi) log(1-phi) expansion.
inline std::vector<CheckRow> verify_log1m(const VerifyOptions& opt, int cases = 20) {
    std::vector<CheckRow> rows;
    {
        TruncatedSeries phi = TruncatedSeries::variable(1, 15, 0);
        const double d = verify_log1m_expansion(phi);
        rows.push_back({"log1m phi = z, D=15", d, 1e-10, d <= 1e-10, ""});
    }
    {
        TruncatedSeries phi(2, 10);
        phi.set_coefficient(MultiIndex({1, 0}), 0.5);
        phi.set_coefficient(MultiIndex({0, 1}), 0.5);
        const double d = verify_log1m_expansion(phi);
        rows.push_back({"log1m phi = (z1+z2)/2, D=10", d, 1e-10, d <= 1e-10, ""});
    }
    double worst = 0.0;
    for (int i = 0; i < cases; ++i) {
        const int d = 1 + i % 2;
        auto phi = verify_detail::random_series(d, 10, detail::mix_seed(opt.seed, 6000 + static_cast<std::uint64_t>(i)), 0.5, true);
        worst = std::max(worst, verify_log1m_expansion(phi));
    }
    rows.push_back({"log1m random inputs", worst, 1e-9, worst <= 1e-9,
                    "max relative discrepancy over " + std::to_string(cases) + " random phi with phi(0)=0"});
    return rows;
}

// Weight sequences: closed forms and the two-sided n^{2N} omega_n bounds
// behind the Drury-Arveson identification.
inline std::vector<CheckRow> verify_weights(const VerifyOptions&) {
    std::vector<CheckRow> rows;
    {
        WeightSequence w(2, RadialMeasure::lebesgue(), 256);
        double worst = 0.0;
        bool exact = true;
        for (int n = 1; n <= 256; ++n) {
            const double inv = 1.0 / (n + 1.0);
            const double expected = inv * inv;
            if (w.omega(n) != expected) exact = false;
            worst = std::max(worst, std::abs(w.omega(n) - expected));
        }
        rows.push_back({"weights d=2 lebesgue omega_n = 1/(n+1)^2", worst, 0.0, exact, "bitwise, n <= 256"});
        double lo = 2.0, hi = 0.0;
        for (int n = 1; n <= 256; ++n) {
            const double v = n * n * w.omega(n);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        rows.push_back({"weights d=2 lebesgue n^2 omega_n lower", lo, 0.25, lo >= 0.25, "range [1/4, 1)"});
        rows.push_back({"weights d=2 lebesgue n^2 omega_n upper", hi, 1.0, hi < 1.0, "range [1/4, 1)"});
    }
    {
        WeightSequence w(3, RadialMeasure::sigma(), 256);
        double worst = 0.0;
        for (int n = 0; n <= 256; ++n) {
            const double expected = 2.0 / ((n + 1.0) * (n + 2.0));
            worst = std::max(worst, std::abs(w.omega(n) - expected) / expected);
        }
        rows.push_back({"weights d=3 sigma omega_n = 2/((n+1)(n+2))", worst, 1e-14, worst <= 1e-14, "relative"});
        double lo = 10.0, hi = 0.0;
        for (int n = 1; n <= 256; ++n) {
            const double v = n * n * w.omega(n);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        rows.push_back({"weights d=3 sigma n^2 omega_n lower", lo, 1.0 / 3.0, lo >= 1.0 / 3.0 - 1e-15, "range [1/3, 2)"});
        rows.push_back({"weights d=3 sigma n^2 omega_n upper", hi, 2.0, hi < 2.0, "range [1/3, 2)"});
    }
    for (const auto& mu : {RadialMeasure::sigma(), RadialMeasure::lebesgue(), RadialMeasure::power(0.5),
                           RadialMeasure::power(2.0)}) {
        bool mono = true;
        for (int n = 1; n <= 128; ++n)
            if (mu.moment(n) > mu.moment(n - 1) * (1.0 + 1e-14)) mono = false;
        rows.push_back({"weights moments non-increasing (" + mu.to_string() + ")", mono ? 1.0 : 0.0, 1.0, mono, ""});
    }
    return rows;
}

inline std::vector<CheckRow> verify_suite(const std::string& suite, const VerifyOptions& opt) {
    std::vector<CheckRow> rows;
    auto append = [&rows](std::vector<CheckRow> more) {
        rows.insert(rows.end(), more.begin(), more.end());
    };
    bool known = false;
    if (suite == "lemma-6.1" || suite == "all") append(verify_lemma61(opt)), known = true;
    if (suite == "lemma-6.2" || suite == "all") append(verify_lemma62(opt)), known = true;
    if (suite == "lemma-6.3" || suite == "all") append(verify_lemma63(opt)), known = true;
    if (suite == "theorem-6.4" || suite == "all") append(verify_theorem64(opt)), known = true;
    if (suite == "faa-di-bruno" || suite == "all") append(verify_faa_di_bruno(opt)), known = true;
    if (suite == "r-identities" || suite == "all") append(verify_r_identities(opt)), known = true;
    if (suite == "log1m" || suite == "all") append(verify_log1m(opt)), known = true;
    if (suite == "weights" || suite == "all") append(verify_weights(opt)), known = true;
    if (!known) throw std::invalid_argument("verify: unknown suite: " + suite);
    return rows;
}

}  // namespace dakit

#endif
