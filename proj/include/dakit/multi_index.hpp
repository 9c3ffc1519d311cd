#ifndef DAKIT_MULTI_INDEX_HPP
#define DAKIT_MULTI_INDEX_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dakit {

// Exponent tuple alpha in N_0^d. Ordered graded-lexicographically (total
// degree first), which makes sorted containers iterate series terms in
// graded order.
class MultiIndex {
  public:
    explicit MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
        if (e_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
        for (int a : e_)
            if (a < 0) throw std::invalid_argument("MultiIndex: negative exponent");
        order_ = std::accumulate(e_.begin(), e_.end(), 0);
    }

    static MultiIndex zero(int dim) { return MultiIndex(std::vector<int>(static_cast<size_t>(dim), 0)); }

    static MultiIndex unit(int dim, int j) {
        std::vector<int> e(static_cast<size_t>(dim), 0);
        e.at(static_cast<size_t>(j)) = 1;
        return MultiIndex(std::move(e));
    }

    int dimension() const { return static_cast<int>(e_.size()); }
    int order() const { return order_; }  // |alpha|
    int operator[](int j) const { return e_[static_cast<size_t>(j)]; }
    const std::vector<int>& exponents() const { return e_; }

    MultiIndex operator+(const MultiIndex& o) const {
        if (o.dimension() != dimension()) throw std::invalid_argument("MultiIndex: dimension mismatch");
        std::vector<int> e(e_);
        for (size_t j = 0; j < e.size(); ++j) e[j] += o.e_[j];
        return MultiIndex(std::move(e));
    }

    // log(alpha!) = sum_j log(alpha_j!), safe for large orders
    double log_factorial() const {
        double s = 0.0;
        for (int a : e_) s += std::lgamma(static_cast<double>(a) + 1.0);
        return s;
    }

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }

    // graded-lex: by |alpha|, then lexicographic on the exponent tuple
    std::strong_ordering operator<=>(const MultiIndex& o) const {
        if (auto c = order_ <=> o.order_; c != 0) return c;
        for (size_t j = 0; j < e_.size() && j < o.e_.size(); ++j)
            if (auto c = e_[j] <=> o.e_[j]; c != 0) return c;
        return e_.size() <=> o.e_.size();
    }

    std::string to_string() const {
        std::string s = "(";
        for (size_t j = 0; j < e_.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(e_[j]);
        }
        return s + ")";
    }

  private:
    std::vector<int> e_;
    int order_ = 0;
};

namespace detail {

// n! as an exact double for n <= 18 (19! exceeds 2^53)
inline double exact_factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= static_cast<double>(i);
    return f;
}

}  // namespace detail

// alpha!/|alpha|!, the H^2_d coefficient weight. Exact up to |alpha| = 18,
// then a descending-factor product that cannot overflow.
inline double h2d_coefficient_weight(const MultiIndex& a) {
    const int n = a.order();
    if (n <= 18) {
        double num = 1.0;
        for (int j = 0; j < a.dimension(); ++j) num *= detail::exact_factorial(a[j]);
        return num / detail::exact_factorial(n);
    }
    double w = 1.0;
    int consumed = 0;
    for (int j = 0; j < a.dimension(); ++j) {
        for (int i = 1; i <= a[j]; ++i) {
            w *= static_cast<double>(i) / static_cast<double>(consumed + i);
        }
        consumed += a[j];
    }
    return w;
}

}  // namespace dakit

#endif
