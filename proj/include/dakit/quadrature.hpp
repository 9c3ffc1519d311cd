#ifndef DAKIT_QUADRATURE_HPP
#define DAKIT_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "transforms.hpp"

namespace dakit {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long long evaluations = 0;
    bool converged = false;
};

struct MCResult {
    double value = 0.0;
    double std_error = 0.0;
    long long evaluations = 0;
};

namespace detail {

inline const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<double> x(static_cast<size_t>(n)), w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[static_cast<size_t>(i)] = z;
        w[static_cast<size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

// quintic rolloff, 1 for rho <= R/2, 0 for rho >= R
inline double cap_bump(double rho, double R) {
    double t = (rho - 0.5 * R) / (0.5 * R);
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    return 1.0 - t * t * t * (10.0 - 15.0 * t + 6.0 * t * t);
}

inline double wrap_to_pi(double x) {
    x = std::fmod(x + M_PI, 2.0 * M_PI);
    if (x < 0.0) x += 2.0 * M_PI;
    return x - M_PI;
}

// rho(v) = 2 e^{1 - 1/v}: the radial substitution that flattens boundary
// log singularities; log rho is always available even when rho underflows
inline double log_rho_of_v(double v) { return std::log(2.0) + 1.0 - 1.0 / v; }

inline double v_of_rho(double rho) { return 1.0 / (1.0 + std::log(2.0 / rho)); }

}  // namespace detail

// Boundary patch for a log-type singularity of the integrand at a point of
// the unit circle. `scaled(k, v, phi)` must return g(z) * rho^2 at
// z = c_k (1 + rho e^{i phi}), rho = 2 e^{1-1/v}; supplying it lets the
// integrator capture the full boundary tail in log space.
struct BoundaryPeak {
    Complex center;  // unit modulus
    double radius = 0.35;
};

using ScaledPeakEval = std::function<double(int peak, double v, double phi)>;

namespace detail {

struct EngineCounters {
    long long evals = 0;
    double tail_allowance = 0.0;
};

inline double patch_integral(const std::function<double(Complex)>& g, const std::vector<BoundaryPeak>& peaks,
                             const ScaledPeakEval& scaled, int k, int level, EngineCounters& ct) {
    const BoundaryPeak& pk = peaks[static_cast<size_t>(k)];
    const double R = pk.radius;
    const int nphi = 8 + 4 * level;
    const int nv = 8 + 4 * level;
    const auto& [gx, gw] = gauss_legendre(nphi);
    const auto& [vx, vw] = gauss_legendre(nv);

    // phi breakpoints on (pi/2, pi]: dyadic toward pi/2, plus the kink where
    // the chord length -2 cos(phi) crosses the patch radius
    std::vector<double> bps;
    for (int j = 48; j >= 0; --j) bps.push_back(M_PI / 2.0 + (M_PI / 2.0) * std::pow(2.0, -j));
    const double kink = std::acos(-R / 2.0);
    bps.push_back(kink);
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    // generic integrands cannot be evaluated below representable offsets;
    // the remaining sliver goes into the error allowance instead
    const double v_floor = scaled ? 0.0 : detail::v_of_rho(1e-13);

    double total = 0.0;
    for (size_t i = 0; i + 1 < bps.size(); ++i) {
        for (int half = 0; half < 2; ++half) {
            const double pa = half == 0 ? bps[i] : 2.0 * M_PI - bps[i + 1];
            const double pb = half == 0 ? bps[i + 1] : 2.0 * M_PI - bps[i];
            for (int iq = 0; iq < nphi; ++iq) {
                const double phi = 0.5 * (pa + pb) + 0.5 * (pb - pa) * gx[static_cast<size_t>(iq)];
                const double wph = 0.5 * (pb - pa) * gw[static_cast<size_t>(iq)];
                const double Rphi = std::min(-2.0 * std::cos(phi), R);
                const double vR = detail::v_of_rho(Rphi);

                std::vector<double> vb;
                if (!scaled) vb.push_back(std::min(v_floor, vR * 0.5));
                else vb.push_back(0.0);
                for (int j = 14; j >= 0; --j) {
                    const double v = vR * std::pow(2.0, -j);
                    if (v > vb.back()) vb.push_back(v);
                }

                double acc = 0.0;
                double first_panel = 0.0;
                for (size_t pjj = 0; pjj + 1 < vb.size(); ++pjj) {
                    double panel = 0.0;
                    for (int q = 0; q < nv; ++q) {
                        const double v = 0.5 * (vb[pjj] + vb[pjj + 1]) + 0.5 * (vb[pjj + 1] - vb[pjj]) * vx[static_cast<size_t>(q)];
                        const double wv = 0.5 * (vb[pjj + 1] - vb[pjj]) * vw[static_cast<size_t>(q)];
                        const double logrho = detail::log_rho_of_v(v);
                        const double rho = logrho > -700.0 ? std::exp(logrho) : 0.0;
                        const double chi = detail::cap_bump(rho, R);
                        if (chi == 0.0) continue;
                        double grho2;
                        if (scaled) {
                            grho2 = scaled(k, v, phi);
                        } else {
                            const Complex z = pk.center * (1.0 + rho * Complex(std::cos(phi), std::sin(phi)));
                            grho2 = g(z) * rho * rho;
                        }
                        ++ct.evals;
                        panel += wv * chi * grho2 / (v * v);
                    }
                    if (pjj == 0) first_panel = panel;
                    acc += panel;
                }
                total += wph * acc;
                if (!scaled) ct.tail_allowance += std::abs(wph * first_panel);
            }
        }
    }
    return total / M_PI;
}

inline double smooth_integral(const std::function<double(Complex)>& g, const std::vector<BoundaryPeak>& peaks,
                              int level, int base_ntheta, EngineCounters& ct) {
    const int nr = 12 + 6 * level;
    const int jr = 10 + 2 * level;
    const int ntheta = base_ntheta << level;
    const auto& [gx, gw] = gauss_legendre(nr);

    std::vector<double> rb{0.0};
    for (int j = 1; j <= jr; ++j) rb.push_back(1.0 - std::pow(2.0, -j));
    rb.push_back(1.0);

    double total = 0.0;
    for (size_t i = 0; i + 1 < rb.size(); ++i) {
        for (int q = 0; q < nr; ++q) {
            const double r = 0.5 * (rb[i] + rb[i + 1]) + 0.5 * (rb[i + 1] - rb[i]) * gx[static_cast<size_t>(q)];
            const double wr = 0.5 * (rb[i + 1] - rb[i]) * gw[static_cast<size_t>(q)];
            double ring = 0.0;
            for (int m = 0; m < ntheta; ++m) {
                const double th = 2.0 * M_PI * (m + 0.5) / ntheta;
                const Complex z = r * Complex(std::cos(th), std::sin(th));
                double cut = 1.0;
                for (const auto& pk : peaks) cut -= detail::cap_bump(std::abs(z - pk.center), pk.radius);
                if (cut <= 0.0) continue;
                ring += cut * g(z);
                ++ct.evals;
            }
            total += wr * r * ring * (2.0 * M_PI / ntheta);
        }
    }
    return total / M_PI;
}

inline double engine_level(const std::function<double(Complex)>& g, const std::vector<BoundaryPeak>& peaks,
                           const ScaledPeakEval& scaled, int level, int base_ntheta, EngineCounters& ct) {
    double total = 0.0;
    for (size_t k = 0; k < peaks.size(); ++k)
        total += patch_integral(g, peaks, scaled, static_cast<int>(k), level, ct);
    total += smooth_integral(g, peaks, level, base_ntheta, ct);
    return total;
}

}  // namespace detail

// Adaptive integration of g over the unit disk against dA/pi. Peaks mark
// boundary points where g has a log-type singularity; each gets a local
// polar patch with the radial substitution v = 1/(1+log(2/rho)), and the
// remainder is integrated on a polar tensor grid (dyadic radial panels
// toward r=1, uniform midpoint rule in the angle). The error estimate is
// the difference between successive refinement levels.
inline QuadResult integrate_disk(const std::function<double(Complex)>& g, std::vector<BoundaryPeak> peaks,
                                 const ScaledPeakEval& scaled, double tol, int max_level = 3) {
    // shrink overlapping patches so the bump supports stay disjoint
    for (size_t a = 0; a < peaks.size(); ++a)
        for (size_t b = a + 1; b < peaks.size(); ++b) {
            const double d = std::abs(peaks[a].center - peaks[b].center);
            peaks[a].radius = std::min(peaks[a].radius, 0.45 * d);
            peaks[b].radius = std::min(peaks[b].radius, 0.45 * d);
        }
    int base_ntheta = 512;
    for (const auto& pk : peaks)
        while (2.0 * M_PI / base_ntheta > pk.radius / 4.0 && base_ntheta < (1 << 14)) base_ntheta *= 2;

    detail::EngineCounters ct;
    QuadResult res;
    double prev = detail::engine_level(g, peaks, scaled, 0, base_ntheta, ct);
    for (int level = 1; level <= max_level; ++level) {
        detail::EngineCounters ct2;
        const double cur = detail::engine_level(g, peaks, scaled, level, base_ntheta, ct2);
        ct.evals += ct2.evals;
        ct.tail_allowance = ct2.tail_allowance;
        res.value = cur;
        res.error_estimate = std::abs(cur - prev) + ct.tail_allowance;
        res.converged = res.error_estimate <= tol;
        prev = cur;
        if (res.converged) break;
    }
    res.evaluations = ct.evals;
    return res;
}

// int_D g dA/pi for integrands with at most log-type boundary singularities.
// Singular boundary rays are detected by a coarse scan of a near-boundary
// ring; pass peaks explicitly through integrate_disk for full control.
inline QuadResult disk_integral(const std::function<double(Complex)>& g, double tol) {
    std::vector<BoundaryPeak> peaks;
    const int nscan = 2048;
    std::vector<double> vals(static_cast<size_t>(nscan));
    double med_acc = 0.0;
    for (int m = 0; m < nscan; ++m) {
        const double th = 2.0 * M_PI * (m + 0.5) / nscan;
        vals[static_cast<size_t>(m)] = std::abs(g(0.999 * Complex(std::cos(th), std::sin(th))));
        med_acc += std::min(vals[static_cast<size_t>(m)], 1e12);
    }
    const double scale = med_acc / nscan + 1e-300;
    for (int m = 0; m < nscan; ++m) {
        const double v = vals[static_cast<size_t>(m)];
        const double prev = vals[static_cast<size_t>((m + nscan - 1) % nscan)];
        const double next = vals[static_cast<size_t>((m + 1) % nscan)];
        if (v > 1e3 * scale && v >= prev && v >= next) {
            const double th = 2.0 * M_PI * (m + 0.5) / nscan;
            peaks.push_back({Complex(std::cos(th), std::sin(th)), 0.1});
        }
    }
    if (peaks.size() > 8) peaks.clear();  // not isolated singularities; integrate as-is
    return integrate_disk(g, peaks, nullptr, tol);
}

// plain uniform rejection sampling on the disk; estimates int g dA/pi
inline MCResult mc_disk_integral(const std::function<double(Complex)>& g, long long npoints, std::uint64_t seed) {
    detail::NormalSource rng(detail::splitmix64(seed ^ 0x5eedf00dULL));
    double sum = 0.0, sumsq = 0.0;
    long long n = 0;
    while (n < npoints) {
        const double x = 2.0 * rng.uniform01() - 1.0;
        const double y = 2.0 * rng.uniform01() - 1.0;
        if (x * x + y * y > 1.0) continue;
        const double v = g(Complex(x, y));
        sum += v;
        sumsq += v * v;
        ++n;
    }
    MCResult r;
    r.value = sum / npoints;
    const double var = std::max(0.0, (sumsq - sum * sum / npoints) / (npoints - 1.0));
    r.std_error = std::sqrt(var / npoints);
    r.evaluations = npoints;
    return r;
}

// Importance-sampled disk integral for integrands peaked at boundary points:
// mixture of the uniform law and, per peak, the density proportional to
// 1/(rho^2 (1+log(2/rho))^2) in the boundary-centered chart. Weights for
// peak draws are computed through `scaled` so the deep tail never needs a
// representable rho. Unbiased for int g dA/pi, with finite variance for
// log-type singularities.
inline MCResult mc_disk_integral_peaked(const std::function<double(Complex)>& g, const std::vector<BoundaryPeak>& peaks,
                                        const ScaledPeakEval& scaled, long long npoints, std::uint64_t seed) {
    if (peaks.empty()) return mc_disk_integral(g, npoints, seed);
    detail::NormalSource rng(detail::splitmix64(seed ^ 0x9eacedULL));
    const double w0 = 0.5;
    const double wk = (1.0 - w0) / static_cast<double>(peaks.size());
    const double lo = 1e-9;

    auto v_r_of_phi = [](double phi) { return detail::v_of_rho(-2.0 * std::cos(phi)); };

    double sum = 0.0, sumsq = 0.0;
    for (long long i = 0; i < npoints; ++i) {
        double est;
        if (rng.uniform01() < w0) {
            // uniform component
            double x, y;
            do {
                x = 2.0 * rng.uniform01() - 1.0;
                y = 2.0 * rng.uniform01() - 1.0;
            } while (x * x + y * y > 1.0);
            const Complex z(x, y);
            double pmix = w0 / M_PI;
            for (const auto& pk : peaks) {
                const Complex u = z / pk.center - 1.0;
                const double rho = std::abs(u);
                const double phi = std::arg(u);
                const double vR = v_r_of_phi(phi);
                const double v = detail::v_of_rho(rho);
                if (v > lo && v < vR) pmix += wk * v * v / (M_PI * rho * rho * (vR - lo));
            }
            est = g(z) / (M_PI * pmix);
        } else {
            const int k = std::min(static_cast<int>(rng.uniform01() * peaks.size()),
                                   static_cast<int>(peaks.size()) - 1);
            const double phi = M_PI / 2.0 + M_PI * rng.uniform01();
            const double vR = v_r_of_phi(phi);
            const double v = lo + (vR - lo) * rng.uniform01();
            const double logrho = detail::log_rho_of_v(v);
            const double rho = logrho > -700.0 ? std::exp(logrho) : 0.0;
            const double grho2 = scaled(k, v, phi);
            // pi * rho^2 * pmix, assembled so rho underflow is harmless
            double den = w0 * rho * rho + wk * v * v / (vR - lo);
            const Complex zc = peaks[static_cast<size_t>(k)].center * (1.0 + rho * Complex(std::cos(phi), std::sin(phi)));
            for (size_t j = 0; j < peaks.size(); ++j) {
                if (static_cast<int>(j) == k) continue;
                const Complex u = zc / peaks[j].center - 1.0;
                const double rhoj = std::abs(u);
                const double vRj = v_r_of_phi(std::arg(u));
                const double vj = detail::v_of_rho(rhoj);
                if (vj > lo && vj < vRj) den += wk * vj * vj * (rho * rho) / (rhoj * rhoj * (vRj - lo));
            }
            est = grho2 / den;
        }
        sum += est;
        sumsq += est * est;
    }
    MCResult r;
    r.value = sum / npoints;
    const double var = std::max(0.0, (sumsq - sum * sum / npoints) / (npoints - 1.0));
    r.std_error = std::sqrt(var / npoints);
    r.evaluations = npoints;
    return r;
}

// ---------------------------------------------------------------------------
// Lemma 6.2 integrand: h(x) = x^2/(1+log x)^2 evaluated at x = 2|l|/|z-l|
// ---------------------------------------------------------------------------

namespace detail {

struct LemmaHIntegrand {
    double s;        // |lambda| >= 1
    Complex lambda;  // actual (possibly rotated) parameter

    double plain(Complex z) const {
        const double x = 2.0 * s / std::abs(z - lambda);
        const double lg = 1.0 + std::log(x);
        return x * x / (lg * lg);
    }

    // g * rho^2 at z = c(1 + rho e^{i phi}), c = lambda/|lambda|, in log space
    double scaled(double v, double phi) const {
        const double logrho = log_rho_of_v(v);
        double t;  // (s-1)/rho
        if (s <= 1.0) {
            t = 0.0;
        } else {
            const double lt = std::log(s - 1.0) - logrho;
            t = lt > 700.0 ? std::numeric_limits<double>::infinity() : std::exp(lt);
        }
        const double hyp = std::hypot(t + std::abs(std::cos(phi)), std::sin(phi));
        if (!std::isfinite(hyp)) return 0.0;
        const double xrho = 2.0 * s / hyp;
        const double logx = std::log(2.0 * s) - logrho - std::log(hyp);
        const double lg = 1.0 + logx;
        return xrho * xrho / (lg * lg);
    }
};

}  // namespace detail

// int_D h(2|lambda|/|z-lambda|) dA/pi with h(x) = x^2/(1+log x)^2; requires
// |lambda| >= 1. The integrand's boundary singularity at lambda/|lambda|
// (sharp for |lambda| near 1) is handled by a dedicated patch.
inline QuadResult lemma_h_integral(Complex lambda, double tol = 1e-6) {
    const double s = std::abs(lambda);
    if (s < 1.0 - 1e-12) throw std::domain_error("lemma_h_integral: |lambda| must be >= 1");
    detail::LemmaHIntegrand in{std::max(s, 1.0), lambda};
    const Complex c = lambda / s;
    std::vector<BoundaryPeak> peaks{{c, 0.5}};
    auto plain = [in](Complex z) { return in.plain(z); };
    auto scaled = [in](int, double v, double phi) { return in.scaled(v, phi); };
    return integrate_disk(plain, peaks, scaled, tol);
}

inline MCResult lemma_h_mc(Complex lambda, long long npoints, std::uint64_t seed) {
    const double s = std::abs(lambda);
    if (s < 1.0 - 1e-12) throw std::domain_error("lemma_h_mc: |lambda| must be >= 1");
    detail::LemmaHIntegrand in{std::max(s, 1.0), lambda};
    const Complex c = lambda / s;
    std::vector<BoundaryPeak> peaks{{c, 0.5}};
    auto plain = [in](Complex z) { return in.plain(z); };
    auto scaled = [in](int, double v, double phi) { return in.scaled(v, phi); };
    return mc_disk_integral_peaked(plain, peaks, scaled, npoints, seed);
}

// ---------------------------------------------------------------------------
// Lemma 6.3 integrand: |F'|^2 for F = log(1 + log(2^n p(0)/p)), p stable
// ---------------------------------------------------------------------------

namespace detail {

// Root-factored evaluation of |F'|^2. Using the roots keeps the evaluation
// stable arbitrarily close to boundary zeros: p'/p = sum 1/(z - lambda_k)
// and log|p| = log|c_lead| + sum log|z - lambda_k|. The imaginary part of
// log W is wrapped to (-pi, pi], matching pointwise principal evaluation.
struct DirichletFIntegrand {
    std::vector<Complex> roots;
    Complex clead = 1.0;
    Complex p0 = 1.0;
    int n = 0;
    std::vector<Complex> centers;  // patch centers (subset of root projections)
    mutable double min_re = std::numeric_limits<double>::infinity();

    double value_from(Complex rpop, double sum_logabs, double sum_arg, double logrho_total) const {
        const double relog = n * std::log(2.0) + std::log(std::abs(p0)) - std::log(std::abs(clead)) - sum_logabs;
        const double imlog = wrap_to_pi(std::arg(p0) - std::arg(clead) - sum_arg);
        if (1.0 + relog < min_re) min_re = 1.0 + relog;
        const double den2 = (1.0 + relog) * (1.0 + relog) + imlog * imlog;
        (void)logrho_total;
        return std::norm(rpop) / den2;
    }

    double plain(Complex z) const {
        Complex rpop = 0.0;
        double sum_logabs = 0.0, sum_arg = 0.0;
        for (const Complex& lam : roots) {
            const Complex d = z - lam;
            rpop += 1.0 / d;
            sum_logabs += std::log(std::abs(d));
            sum_arg += std::arg(d);
        }
        return value_from(rpop, sum_logabs, sum_arg, 0.0);
    }

    // |F'|^2 * rho^2 at z = c(1 + rho e^{i phi}); near roots are handled in
    // the scaled chart so rho may be far below the representable offset
    double scaled(int k, double v, double phi) const {
        const Complex c = centers[static_cast<size_t>(k)];
        const double logrho = log_rho_of_v(v);
        const double rho = logrho > -700.0 ? std::exp(logrho) : 0.0;
        const Complex u = c * Complex(std::cos(phi), std::sin(phi));
        Complex rpop = 0.0;  // rho * p'/p
        double sum_logabs = 0.0, sum_arg = 0.0;
        for (const Complex& lam : roots) {
            const Complex d0 = c - lam;
            const double a0 = std::abs(d0);
            if (a0 < 1e-3) {
                Complex t = 0.0;
                if (a0 > 0.0) {
                    const double lt = std::log(a0) - logrho;
                    t = lt > 700.0 ? Complex(std::numeric_limits<double>::infinity(), 0.0) : (d0 / a0) * std::exp(lt);
                }
                const Complex q = t + u;  // (z - lam)/rho
                if (!std::isfinite(q.real()) || !std::isfinite(q.imag())) {
                    // far in units of rho: no local contribution
                    sum_logabs += std::log(a0);
                    sum_arg += std::arg(d0);
                    continue;
                }
                rpop += 1.0 / q;
                sum_logabs += logrho + std::log(std::abs(q));
                sum_arg += std::arg(q);
            } else {
                const Complex z = c * (1.0 + rho * Complex(std::cos(phi), std::sin(phi)));
                const Complex d = z - lam;
                rpop += rho / d;
                sum_logabs += std::log(std::abs(d));
                sum_arg += std::arg(d);
            }
        }
        return value_from(rpop, sum_logabs, sum_arg, logrho);
    }
};

inline DirichletFIntegrand make_dirichlet_integrand(const std::vector<Complex>& coeffs, int n) {
    double maxc = 0.0;
    for (const auto& v : coeffs) maxc = std::max(maxc, std::abs(v));
    if (maxc == 0.0) throw std::invalid_argument("dirichlet_integral_F: zero polynomial");
    std::vector<Complex> c = coeffs;
    while (c.size() > 1 && std::abs(c.back()) <= 1e-14 * maxc) c.pop_back();

    DirichletFIntegrand in;
    in.p0 = coeffs[0];
    in.n = n;
    if (in.p0 == Complex(0.0)) throw InstabilityError("dirichlet_integral_F: p(0) = 0 (zero at the origin)");
    if (c.size() == 1) return in;  // constant: F' == 0
    if (n < static_cast<int>(c.size()) - 1)
        throw std::invalid_argument("dirichlet_integral_F: n must be >= deg p");
    in.clead = c.back();
    in.roots = polynomial_roots(c);
    if (clustered_min_modulus(in.roots) < 1.0 - kStabilityTolerance) {
        Complex worst = in.roots.front();
        for (const auto& r : in.roots)
            if (std::abs(r) < std::abs(worst)) worst = r;
        throw InstabilityError("dirichlet_integral_F: polynomial has a zero inside the disk", {worst});
    }
    for (const Complex& lam : in.roots) {
        const Complex c0 = lam / std::abs(lam);
        if (std::abs(lam) < 1.3) {
            bool dup = false;
            for (const Complex& e : in.centers)
                if (std::abs(e - c0) < 1e-8) dup = true;
            if (!dup) in.centers.push_back(c0);
        }
    }
    return in;
}

}  // namespace detail

// int_D |F'|^2 dA/pi for F = log(1 + log(2^n p(0)/p)), p a stable univariate
// polynomial given by coefficients (low to high), n >= deg p. F' is evaluated
// from the root factorization with the principal log; min_re_out, when given,
// receives the smallest Re(1 + log(2^n p(0)/p)) seen on quadrature nodes.
inline QuadResult dirichlet_integral_F(const std::vector<Complex>& coeffs, int n, double tol = 1e-5,
                                       double* min_re_out = nullptr) {
    auto in = std::make_shared<detail::DirichletFIntegrand>(detail::make_dirichlet_integrand(coeffs, n));
    if (in->roots.empty()) {
        if (min_re_out) *min_re_out = 1.0 + n * std::log(2.0);
        return {0.0, 0.0, 0, true};
    }
    std::vector<BoundaryPeak> peaks;
    for (const Complex& c : in->centers) peaks.push_back({c, 0.35});
    auto plain = [in](Complex z) { return in->plain(z); };
    auto scaled = [in](int k, double v, double phi) { return in->scaled(k, v, phi); };
    QuadResult r = integrate_disk(plain, peaks, scaled, tol);
    if (min_re_out) *min_re_out = in->min_re;
    return r;
}

inline std::vector<Complex> univariate_coefficients(const TruncatedSeries& p) {
    if (p.dimension() != 1) throw std::invalid_argument("univariate_coefficients: series is not univariate");
    std::vector<Complex> c(static_cast<size_t>(std::max(p.total_degree(), 0)) + 1, Complex(0.0));
    for (const auto& [a, v] : p.terms()) c[static_cast<size_t>(a.order())] = v;
    return c;
}

inline QuadResult dirichlet_integral_F(const StablePolynomial& p, int n, double tol = 1e-5,
                                       double* min_re_out = nullptr) {
    return dirichlet_integral_F(univariate_coefficients(p.base), n, tol, min_re_out);
}

inline MCResult dirichlet_F_mc(const std::vector<Complex>& coeffs, int n, long long npoints, std::uint64_t seed) {
    auto in = std::make_shared<detail::DirichletFIntegrand>(detail::make_dirichlet_integrand(coeffs, n));
    if (in->roots.empty()) return {0.0, 0.0, 0};
    std::vector<BoundaryPeak> peaks;
    for (const Complex& c : in->centers) peaks.push_back({c, 0.35});
    auto plain = [in](Complex z) { return in->plain(z); };
    auto scaled = [in](int k, double v, double phi) { return in->scaled(k, v, phi); };
    if (peaks.empty()) return mc_disk_integral(plain, npoints, seed);
    return mc_disk_integral_peaked(plain, peaks, scaled, npoints, seed);
}

// Monte Carlo over sphere directions of the slice Dirichlet integrals
// int_D |(F_zeta)'|^2 dA/pi with F_zeta built from the slice polynomial
// p_zeta(lambda) = p(lambda zeta); returns the mean and its standard error.
inline QuadResult slice_besov_integral(const TruncatedSeries& p, int n, const SampleConfig& cfg, double tol = 1e-4) {
    const auto dirs = sphere_points(p.dimension(), cfg.sphere_samples, cfg.rng_seed);
    double sum = 0.0, sumsq = 0.0, err_sum = 0.0;
    long long evals = 0;
    bool all_conv = true;
    for (const auto& zeta : dirs) {
        auto coeffs = detail::slice_coefficients(p, zeta);
        double maxc = 0.0;
        for (const auto& v : coeffs) maxc = std::max(maxc, std::abs(v));
        double val = 0.0;
        if (maxc > 0.0) {
            QuadResult q;
            try {
                q = dirichlet_integral_F(coeffs, n, tol);
            } catch (const InstabilityError& e) {
                throw InstabilityError(std::string("slice_besov_integral: unstable slice: ") + e.what(), zeta);
            }
            val = q.value;
            err_sum += q.error_estimate;
            evals += q.evaluations;
            all_conv = all_conv && q.converged;
        }
        sum += val;
        sumsq += val * val;
    }
    const double m = static_cast<double>(cfg.sphere_samples);
    QuadResult r;
    r.value = sum / m;
    const double var = std::max(0.0, (sumsq - sum * sum / m) / std::max(1.0, m - 1.0));
    r.error_estimate = std::sqrt(var / m) + err_sum / m;
    r.evaluations = evals;
    r.converged = all_conv;
    return r;
}

}  // namespace dakit

#endif
