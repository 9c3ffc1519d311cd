#ifndef DAKIT_SERIES_HPP
#define DAKIT_SERIES_HPP

#include <algorithm>
#include <complex>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "multi_index.hpp"

namespace dakit {

using Complex = std::complex<double>;

// Multivariate power series with exact coefficients through a total-degree
// cap D. Storage is a sparse map in graded-lex order; an absent index means
// coefficient zero. Values are immutable in spirit: all operations return
// new series and never mutate their arguments.
class TruncatedSeries {
  public:
    using CoeffMap = std::map<MultiIndex, Complex>;

    TruncatedSeries(int dimension, int degree_cap) : dim_(dimension), cap_(degree_cap) {
        if (dimension < 1) throw std::invalid_argument("TruncatedSeries: dimension must be >= 1");
        if (degree_cap < 0) throw std::invalid_argument("TruncatedSeries: degree cap must be >= 0");
    }

    static TruncatedSeries constant(int dim, int cap, Complex c) {
        TruncatedSeries f(dim, cap);
        f.set_coefficient(MultiIndex::zero(dim), c);
        return f;
    }

    static TruncatedSeries one(int dim, int cap) { return constant(dim, cap, 1.0); }

    // the coordinate function z_j (throws if the cap cannot hold degree 1)
    static TruncatedSeries variable(int dim, int cap, int j) {
        TruncatedSeries f(dim, cap);
        f.set_coefficient(MultiIndex::unit(dim, j), 1.0);
        return f;
    }

    int dimension() const { return dim_; }
    int degree_cap() const { return cap_; }
    const CoeffMap& terms() const { return c_; }
    size_t term_count() const { return c_.size(); }

    Complex coefficient(const MultiIndex& a) const {
        auto it = c_.find(a);
        return it == c_.end() ? Complex(0.0) : it->second;
    }

    Complex constant_term() const { return coefficient(MultiIndex::zero(dim_)); }

    void set_coefficient(const MultiIndex& a, Complex v) {
        check_index(a);
        if (v == Complex(0.0))
            c_.erase(a);
        else
            c_[a] = v;
    }

    void add_to_coefficient(const MultiIndex& a, Complex v) {
        check_index(a);
        auto [it, fresh] = c_.try_emplace(a, v);
        if (!fresh) it->second += v;
    }

    // largest total degree with a stored (nonzero) coefficient; -1 for the zero series
    int total_degree() const { return c_.empty() ? -1 : c_.rbegin()->first.order(); }

    bool is_zero() const { return c_.empty(); }

    // re-cap: truncates when smaller, extends (with zeros) when larger
    TruncatedSeries with_cap(int new_cap) const {
        TruncatedSeries g(dim_, new_cap);
        for (const auto& [a, v] : c_)
            if (a.order() <= new_cap) g.c_.emplace(a, v);
        return g;
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const { return combined(o, 1.0); }
    TruncatedSeries operator-(const TruncatedSeries& o) const { return combined(o, -1.0); }

    TruncatedSeries operator*(Complex s) const {
        TruncatedSeries g(dim_, cap_);
        if (s == Complex(0.0)) return g;
        for (const auto& [a, v] : c_) g.c_.emplace(a, v * s);
        return g;
    }

    TruncatedSeries operator+(Complex s) const {
        TruncatedSeries g = *this;
        g.add_to_coefficient(MultiIndex::zero(dim_), s);
        return g;
    }

    // equal iff the coefficient maps agree on every |alpha| <= min of the caps
    bool operator==(const TruncatedSeries& o) const {
        if (dim_ != o.dim_) return false;
        const int cap = std::min(cap_, o.cap_);
        auto it = c_.begin();
        auto jt = o.c_.begin();
        while (true) {
            while (it != c_.end() && (it->first.order() > cap || it->second == Complex(0.0))) ++it;
            while (jt != o.c_.end() && (jt->first.order() > cap || jt->second == Complex(0.0))) ++jt;
            const bool ei = (it == c_.end());
            const bool ej = (jt == o.c_.end());
            if (ei || ej) return ei && ej;
            if (!(it->first == jt->first) || it->second != jt->second) return false;
            ++it, ++jt;
        }
    }

    // coefficients grouped by total degree, index = degree (empty slots allowed)
    std::vector<std::vector<std::pair<MultiIndex, Complex>>> by_degree() const {
        std::vector<std::vector<std::pair<MultiIndex, Complex>>> out(static_cast<size_t>(cap_) + 1);
        for (const auto& [a, v] : c_) out[static_cast<size_t>(a.order())].emplace_back(a, v);
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "series[d=" << dim_ << ",cap=" << cap_ << "]{";
        bool first = true;
        for (const auto& [a, v] : c_) {
            if (!first) os << ", ";
            first = false;
            os << a.to_string() << ": " << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
        }
        os << "}";
        return os.str();
    }

  private:
    void check_index(const MultiIndex& a) const {
        if (a.dimension() != dim_) throw std::invalid_argument("TruncatedSeries: index dimension mismatch");
        if (a.order() > cap_) throw std::invalid_argument("TruncatedSeries: index exceeds degree cap");
    }

    TruncatedSeries combined(const TruncatedSeries& o, double sign) const {
        if (o.dim_ != dim_) throw std::invalid_argument("TruncatedSeries: dimension mismatch");
        TruncatedSeries g(dim_, std::min(cap_, o.cap_));
        for (const auto& [a, v] : c_)
            if (a.order() <= g.cap_) g.c_.emplace(a, v);
        for (const auto& [a, v] : o.c_)
            if (a.order() <= g.cap_) {
                auto [it, fresh] = g.c_.try_emplace(a, sign * v);
                if (!fresh) it->second += sign * v;
            }
        return g;
    }

    int dim_;
    int cap_;
    CoeffMap c_;
};

inline TruncatedSeries operator*(Complex s, const TruncatedSeries& f) { return f * s; }

// degree-n homogeneous piece of a series
struct HomogeneousPart {
    int degree;
    TruncatedSeries series;
};

// Cauchy product restricted to |alpha| <= min(cap_f, cap_g)
inline TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.dimension() != g.dimension()) throw std::invalid_argument("multiply: dimension mismatch");
    TruncatedSeries h(f.dimension(), std::min(f.degree_cap(), g.degree_cap()));
    const int cap = h.degree_cap();
    for (const auto& [a, va] : f.terms()) {
        if (a.order() > cap) continue;
        for (const auto& [b, vb] : g.terms()) {
            if (a.order() + b.order() > cap) break;  // graded order: later terms only larger
            h.add_to_coefficient(a + b, va * vb);
        }
    }
    return h;
}

inline TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) { return multiply(f, g); }

// f^k through cap, k >= 0
inline TruncatedSeries pow_series(const TruncatedSeries& f, int k) {
    if (k < 0) throw std::invalid_argument("pow_series: negative exponent");
    TruncatedSeries r = TruncatedSeries::one(f.dimension(), f.degree_cap());
    for (int i = 0; i < k; ++i) r = multiply(r, f);
    return r;
}

// coefficient at alpha becomes |alpha| * f(alpha); R = sum_j z_j d/dz_j
inline TruncatedSeries radial_derivative(const TruncatedSeries& f) {
    TruncatedSeries g(f.dimension(), f.degree_cap());
    for (const auto& [a, v] : f.terms())
        if (a.order() > 0) g.set_coefficient(a, static_cast<double>(a.order()) * v);
    return g;
}

namespace detail {

using DegreeSlices = std::vector<std::vector<std::pair<MultiIndex, Complex>>>;

// convolve two homogeneous slices into `out` (a degree bucket)
inline void conv_into(const std::vector<std::pair<MultiIndex, Complex>>& a,
                      const std::vector<std::pair<MultiIndex, Complex>>& b,
                      std::map<MultiIndex, Complex>& out, Complex scale = 1.0) {
    for (const auto& [ia, va] : a)
        for (const auto& [ib, vb] : b) {
            auto [it, fresh] = out.try_emplace(ia + ib, scale * va * vb);
            if (!fresh) it->second += scale * va * vb;
        }
}

inline std::vector<std::pair<MultiIndex, Complex>> materialize(const std::map<MultiIndex, Complex>& m) {
    return {m.begin(), m.end()};
}

}  // namespace detail

// series inverse: multiply(f, reciprocal(f)) == 1 through the cap; needs f(0) != 0
inline TruncatedSeries reciprocal(const TruncatedSeries& f) {
    const Complex f0 = f.constant_term();
    if (f0 == Complex(0.0)) throw std::domain_error("reciprocal: zero constant term");
    const int cap = f.degree_cap();
    auto fs = f.by_degree();
    detail::DegreeSlices gs(static_cast<size_t>(cap) + 1);
    gs[0] = {{MultiIndex::zero(f.dimension()), 1.0 / f0}};
    for (int n = 1; n <= cap; ++n) {
        std::map<MultiIndex, Complex> acc;
        for (int k = 1; k <= n; ++k) detail::conv_into(fs[static_cast<size_t>(k)], gs[static_cast<size_t>(n - k)], acc);
        std::vector<std::pair<MultiIndex, Complex>> slice;
        for (const auto& [a, v] : acc)
            if (v != Complex(0.0)) slice.emplace_back(a, -v / f0);
        gs[static_cast<size_t>(n)] = std::move(slice);
    }
    TruncatedSeries g(f.dimension(), cap);
    for (const auto& slice : gs)
        for (const auto& [a, v] : slice) g.add_to_coefficient(a, v);
    return g;
}

// Graded ODE solve of R L = Rf/f: clearing the denominator,
//   n f_0 L_n = n f_n - sum_{k=1}^{n-1} f_k (n-k) L_{n-k}.
// Constant term is the principal log of f(0) (imaginary part in (-pi, pi]).
inline TruncatedSeries log_series(const TruncatedSeries& f) {
    const Complex f0 = f.constant_term();
    if (f0 == Complex(0.0)) throw std::domain_error("log_series: zero constant term");
    const int cap = f.degree_cap();
    auto fs = f.by_degree();
    detail::DegreeSlices ls(static_cast<size_t>(cap) + 1);
    ls[0] = {{MultiIndex::zero(f.dimension()), std::log(f0)}};
    for (int n = 1; n <= cap; ++n) {
        std::map<MultiIndex, Complex> acc;
        for (const auto& [a, v] : fs[static_cast<size_t>(n)]) acc.emplace(a, static_cast<double>(n) * v);
        for (int k = 1; k < n; ++k)
            detail::conv_into(fs[static_cast<size_t>(k)], ls[static_cast<size_t>(n - k)], acc,
                              -static_cast<double>(n - k));
        std::vector<std::pair<MultiIndex, Complex>> slice;
        const Complex den = static_cast<double>(n) * f0;
        for (const auto& [a, v] : acc)
            if (v != Complex(0.0)) slice.emplace_back(a, v / den);
        ls[static_cast<size_t>(n)] = std::move(slice);
    }
    TruncatedSeries L(f.dimension(), cap);
    for (const auto& slice : ls)
        for (const auto& [a, v] : slice) L.add_to_coefficient(a, v);
    return L;
}

// graded solve of R E = E Rf:  n E_n = sum_{k=1}^n k f_k E_{n-k},  E_0 = exp f(0)
inline TruncatedSeries exp_series(const TruncatedSeries& f) {
    const int cap = f.degree_cap();
    auto fs = f.by_degree();
    detail::DegreeSlices es(static_cast<size_t>(cap) + 1);
    es[0] = {{MultiIndex::zero(f.dimension()), std::exp(f.constant_term())}};
    for (int n = 1; n <= cap; ++n) {
        std::map<MultiIndex, Complex> acc;
        for (int k = 1; k <= n; ++k)
            detail::conv_into(fs[static_cast<size_t>(k)], es[static_cast<size_t>(n - k)], acc,
                              static_cast<double>(k));
        std::vector<std::pair<MultiIndex, Complex>> slice;
        for (const auto& [a, v] : acc)
            if (v != Complex(0.0)) slice.emplace_back(a, v / static_cast<double>(n));
        es[static_cast<size_t>(n)] = std::move(slice);
    }
    TruncatedSeries E(f.dimension(), cap);
    for (const auto& slice : es)
        for (const auto& [a, v] : slice) E.add_to_coefficient(a, v);
    return E;
}

// f o w by Horner over the series ring; f univariate, w(0) = 0. The result
// carries w's cap, so only f-coefficients up to min(deg f, cap w) matter.
inline TruncatedSeries substitute(const TruncatedSeries& f, const TruncatedSeries& w) {
    if (f.dimension() != 1) throw std::invalid_argument("substitute: outer series must be univariate");
    if (w.constant_term() != Complex(0.0))
        throw std::invalid_argument("substitute: inner series must have zero constant term");
    const int cap = w.degree_cap();
    const int top = std::min(f.degree_cap(), cap);
    auto coeff = [&f](int k) { return f.coefficient(MultiIndex({k})); };
    TruncatedSeries r = TruncatedSeries::constant(w.dimension(), cap, coeff(top));
    for (int k = top - 1; k >= 0; --k) r = multiply(r, w) + coeff(k);
    return r;
}

// sum of coefficients times z^alpha, accumulated in graded order
inline Complex evaluate(const TruncatedSeries& f, std::span<const Complex> z) {
    if (static_cast<int>(z.size()) != f.dimension()) throw std::invalid_argument("evaluate: point dimension mismatch");
    Complex s = 0.0;
    for (const auto& [a, v] : f.terms()) {
        Complex m = v;
        for (int j = 0; j < a.dimension(); ++j)
            for (int i = 0; i < a[j]; ++i) m *= z[static_cast<size_t>(j)];
        s += m;
    }
    return s;
}

inline Complex evaluate(const TruncatedSeries& f, const std::vector<Complex>& z) {
    return evaluate(f, std::span<const Complex>(z));
}

inline std::vector<HomogeneousPart> homogeneous_parts(const TruncatedSeries& f) {
    std::vector<HomogeneousPart> parts;
    auto slices = f.by_degree();
    for (int n = 0; n <= f.degree_cap(); ++n) {
        const auto& slice = slices[static_cast<size_t>(n)];
        if (slice.empty()) continue;
        TruncatedSeries s(f.dimension(), f.degree_cap());
        for (const auto& [a, v] : slice) s.set_coefficient(a, v);
        parts.push_back({n, std::move(s)});
    }
    return parts;
}

}  // namespace dakit

#endif
