#ifndef DAKIT_ROOTS_HPP
#define DAKIT_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace dakit {

namespace detail {

inline std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> p = 0.0;
    for (size_t k = c.size(); k-- > 0;) p = p * z + c[k];
    return p;
}

inline std::complex<double> horner_deriv(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> p = 0.0;
    for (size_t k = c.size(); k-- > 1;) p = p * z + static_cast<double>(k) * c[k];
    return p;
}

}  // namespace detail

// All roots of a complex polynomial given by coefficients c[0] + c[1] z + ...
// Aberth-Ehrlich with Newton polish; leading coefficients below
// 1e-14 * max|c| are treated as zero (roots at infinity are dropped).
inline std::vector<std::complex<double>> polynomial_roots(std::vector<std::complex<double>> c) {
    using C = std::complex<double>;
    double maxc = 0.0;
    for (const auto& v : c) maxc = std::max(maxc, std::abs(v));
    if (maxc == 0.0) throw std::invalid_argument("polynomial_roots: zero polynomial");
    while (c.size() > 1 && std::abs(c.back()) <= 1e-14 * maxc) c.pop_back();

    std::vector<C> roots;
    // trailing zero coefficients are roots at the origin
    size_t shift = 0;
    while (shift + 1 < c.size() && c[shift] == C(0.0)) ++shift;
    for (size_t i = 0; i < shift; ++i) roots.push_back(C(0.0));
    if (shift) c.erase(c.begin(), c.begin() + static_cast<long>(shift));

    const int m = static_cast<int>(c.size()) - 1;
    if (m <= 0) return roots;
    if (m == 1) {
        roots.push_back(-c[0] / c[1]);
        return roots;
    }

    // initial guesses on a circle at the geometric mean root radius
    double r = std::pow(std::abs(c[0] / c.back()), 1.0 / m);
    r = std::clamp(r, 0.25, 16.0);
    std::vector<C> z(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double th = 2.0 * M_PI * (j + 0.35) / m + 0.5;
        z[static_cast<size_t>(j)] = r * C(std::cos(th), std::sin(th));
    }

    for (int iter = 0; iter < 400; ++iter) {
        double step = 0.0;
        for (int j = 0; j < m; ++j) {
            const C zj = z[static_cast<size_t>(j)];
            const C p = detail::horner(c, zj);
            if (p == C(0.0)) continue;
            C dp = detail::horner_deriv(c, zj);
            if (dp == C(0.0)) dp = C(1e-30);
            const C nr = p / dp;
            C s = 0.0;
            for (int k = 0; k < m; ++k)
                if (k != j) {
                    C d = zj - z[static_cast<size_t>(k)];
                    if (d == C(0.0)) d = C(1e-12);
                    s += 1.0 / d;
                }
            const C w = nr / (1.0 - nr * s);
            z[static_cast<size_t>(j)] -= w;
            step = std::max(step, std::abs(w) / (1.0 + std::abs(zj)));
        }
        if (step < 1e-14) break;
    }
    for (int j = 0; j < m; ++j) {  // Newton polish
        C zj = z[static_cast<size_t>(j)];
        for (int it = 0; it < 3; ++it) {
            const C p = detail::horner(c, zj);
            const C dp = detail::horner_deriv(c, zj);
            if (std::abs(dp) < 1e-280) break;
            const C w = p / dp;
            if (!(std::abs(w) < 1.0)) break;
            zj -= w;
        }
        if (std::abs(detail::horner(c, zj)) <= std::abs(detail::horner(c, z[static_cast<size_t>(j)])))
            z[static_cast<size_t>(j)] = zj;
    }

    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

// Minimum root modulus with clustering: computed roots closer than
// 1e-6*(1+|z|) are replaced by their centroid, which recovers accuracy
// for multiple roots (a double root computed as 1 +- 1e-7 has centroid
// accurate to machine precision).
inline double clustered_min_modulus(const std::vector<std::complex<double>>& roots) {
    using C = std::complex<double>;
    if (roots.empty()) return std::numeric_limits<double>::infinity();
    std::vector<int> group(roots.size(), -1);
    int ngroups = 0;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (group[i] >= 0) continue;
        group[i] = ngroups;
        for (size_t k = i + 1; k < roots.size(); ++k)
            if (group[k] < 0 && std::abs(roots[i] - roots[k]) < 1e-6 * (1.0 + std::abs(roots[i]))) group[k] = ngroups;
        ++ngroups;
    }
    std::vector<C> sum(static_cast<size_t>(ngroups), C(0.0));
    std::vector<int> cnt(static_cast<size_t>(ngroups), 0);
    for (size_t i = 0; i < roots.size(); ++i) {
        sum[static_cast<size_t>(group[i])] += roots[i];
        cnt[static_cast<size_t>(group[i])] += 1;
    }
    double mn = std::numeric_limits<double>::infinity();
    for (int g = 0; g < ngroups; ++g) mn = std::min(mn, std::abs(sum[static_cast<size_t>(g)] / static_cast<double>(cnt[static_cast<size_t>(g)])));
    return mn;
}

}  // namespace dakit

#endif
