#ifndef DAKIT_IDENTITIES_HPP
#define DAKIT_IDENTITIES_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "series.hpp"

namespace dakit {

// m-tuple eta = (eta_1, ..., eta_m) of non-negative integers with
// sum_{i=1}^m i*eta_i = m; the index set A_m of the Faa di Bruno expansion.
struct PartitionTuple {
    std::vector<int> eta;

    int m() const { return static_cast<int>(eta.size()); }

    int weight() const {  // |eta| = sum eta_i
        int s = 0;
        for (int e : eta) s += e;
        return s;
    }

    double factorial() const {  // eta! = prod eta_i!
        double f = 1.0;
        for (int e : eta)
            for (int i = 2; i <= e; ++i) f *= i;
        return f;
    }
};

// all of A_m in lexicographic order; |A_m| equals the partition number p(m)
inline std::vector<PartitionTuple> enumerate_A_m(int m) {
    if (m < 1) throw std::invalid_argument("enumerate_A_m: m must be >= 1");
    std::vector<PartitionTuple> out;
    std::vector<int> eta(static_cast<size_t>(m), 0);
    const auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == m) {
            eta[static_cast<size_t>(m - 1)] = 0;
            if (remaining % m == 0 && remaining / m >= 0) {
                eta[static_cast<size_t>(m - 1)] = remaining / m;
                out.push_back({eta});
            }
            return;
        }
        for (int e = 0; e * i <= remaining; ++e) {
            eta[static_cast<size_t>(i - 1)] = e;
            self(self, i + 1, remaining - e * i);
        }
        eta[static_cast<size_t>(i - 1)] = 0;
    };
    rec(rec, 1, m);
    return out;
}

// T_eta(F) = prod_{i=1}^m (R^i F)^{eta_i}
inline TruncatedSeries T_eta(const TruncatedSeries& F, const PartitionTuple& eta) {
    TruncatedSeries prod = TruncatedSeries::one(F.dimension(), F.degree_cap());
    TruncatedSeries riF = F;
    for (int i = 1; i <= eta.m(); ++i) {
        riF = radial_derivative(riF);
        for (int rep = 0; rep < eta.eta[static_cast<size_t>(i - 1)]; ++rep) prod = multiply(prod, riF);
    }
    return prod;
}

// Faa di Bruno expansion of R^m log(1 + F):
//   sum_{eta in A_m} (m!/eta!) ((-1)^{|eta|-1} (|eta|-1)! / (1+F)^{|eta|})
//                    prod_j (1/j!)^{eta_j} T_eta(F)
inline TruncatedSeries rm_log1p_faa(const TruncatedSeries& F, int m) {
    if (F.constant_term() == Complex(-1.0)) throw std::domain_error("rm_log1p_faa: F(0) = -1");
    const TruncatedSeries inv1pF = reciprocal(F + Complex(1.0));
    TruncatedSeries total(F.dimension(), F.degree_cap());
    double mfact = 1.0;
    for (int i = 2; i <= m; ++i) mfact *= i;
    for (const auto& eta : enumerate_A_m(m)) {
        const int k = eta.weight();
        double coef = mfact / eta.factorial();
        double km1fact = 1.0;
        for (int i = 2; i <= k - 1; ++i) km1fact *= i;
        coef *= (k % 2 == 1 ? 1.0 : -1.0) * km1fact;
        double jf = 1.0;
        for (int j = 1; j <= m; ++j) {
            jf *= j;
            for (int rep = 0; rep < eta.eta[static_cast<size_t>(j - 1)]; ++rep) coef /= jf;
        }
        TruncatedSeries term = multiply(pow_series(inv1pF, k), T_eta(F, eta));
        total = total + term * coef;
    }
    return total;
}

namespace detail {

// max |L^(alpha) - R^(alpha)| / (1 + max coefficient magnitude)
inline double relative_discrepancy(const TruncatedSeries& L, const TruncatedSeries& R) {
    double scale = 0.0;
    for (const auto& [a, v] : L.terms()) scale = std::max(scale, std::abs(v));
    for (const auto& [a, v] : R.terms()) scale = std::max(scale, std::abs(v));
    const TruncatedSeries d = L - R;
    double mx = 0.0;
    for (const auto& [a, v] : d.terms()) mx = std::max(mx, std::abs(v));
    return mx / (1.0 + scale);
}

}  // namespace detail

// coefficientwise check of the Faa di Bruno expansion against m applications
// of R to log(1+F); returns the max relative coefficient discrepancy
inline double verify_faa_di_bruno(const TruncatedSeries& F, int m) {
    const Complex c = F.constant_term();
    if (c.imag() == 0.0 && c.real() <= -1.0)
        throw std::domain_error("verify_faa_di_bruno: F(0) on the branch cut (-inf, -1]");
    TruncatedSeries direct = log_series(F + Complex(1.0));
    for (int i = 0; i < m; ++i) direct = radial_derivative(direct);
    return detail::relative_discrepancy(rm_log1p_faa(F, m), direct);
}

// R(psi^{n+2} e^{-phi/psi}) = psi^n e^{-phi/psi} ((n+2)(R psi)psi - ((R phi)psi - (R psi)phi))
inline double verify_R_exp_identity(const TruncatedSeries& phi, const TruncatedSeries& psi, int n) {
    if (psi.constant_term() == Complex(0.0)) throw std::domain_error("verify_R_exp_identity: psi(0) = 0");
    const TruncatedSeries expf = exp_series(multiply(phi, reciprocal(psi)) * Complex(-1.0));
    const TruncatedSeries lhs = radial_derivative(multiply(pow_series(psi, n + 2), expf));
    const TruncatedSeries rphi = radial_derivative(phi);
    const TruncatedSeries rpsi = radial_derivative(psi);
    const TruncatedSeries bracket =
        multiply(rpsi, psi) * Complex(static_cast<double>(n + 2)) - (multiply(rphi, psi) - multiply(rpsi, phi));
    const TruncatedSeries rhs = multiply(multiply(pow_series(psi, n), expf), bracket);
    return detail::relative_discrepancy(lhs, rhs);
}

// R(phi^{n+1} log phi) = ((n+1) log phi + 1) phi^n R phi
inline double verify_R_log_identity(const TruncatedSeries& phi, int n) {
    const Complex c = phi.constant_term();
    if (c.imag() == 0.0 && c.real() <= 0.0)
        throw std::domain_error("verify_R_log_identity: phi(0) on the branch cut (-inf, 0]");
    const TruncatedSeries logphi = log_series(phi);
    const TruncatedSeries lhs = radial_derivative(multiply(pow_series(phi, n + 1), logphi));
    const TruncatedSeries rhs =
        multiply(multiply(logphi * Complex(static_cast<double>(n + 1)) + Complex(1.0), pow_series(phi, n)),
                 radial_derivative(phi));
    return detail::relative_discrepancy(lhs, rhs);
}

// (1-phi) log(1-phi) = -phi (1 - sum_{n>=1} phi^n/(n(n+1))), phi(0) = 0.
// (The classical expansion; through the cap both sides are exact.)
inline double verify_log1m_expansion(const TruncatedSeries& phi) {
    if (phi.constant_term() != Complex(0.0)) throw std::domain_error("verify_log1m_expansion: phi(0) must be 0");
    const TruncatedSeries one_minus = TruncatedSeries::one(phi.dimension(), phi.degree_cap()) - phi;
    const TruncatedSeries lhs = multiply(one_minus, log_series(one_minus));
    TruncatedSeries sum(phi.dimension(), phi.degree_cap());
    TruncatedSeries phin = phi;
    for (int n = 1; n <= phi.degree_cap(); ++n) {
        sum = sum + phin * Complex(1.0 / (static_cast<double>(n) * (n + 1.0)));
        if (n < phi.degree_cap()) phin = multiply(phin, phi);
    }
    const TruncatedSeries rhs = multiply(phi * Complex(-1.0), TruncatedSeries::one(phi.dimension(), phi.degree_cap()) - sum);
    return detail::relative_discrepancy(lhs, rhs);
}

}  // namespace dakit

#endif
