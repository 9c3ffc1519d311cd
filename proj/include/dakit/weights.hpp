#ifndef DAKIT_WEIGHTS_HPP
#define DAKIT_WEIGHTS_HPP

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dakit {

// Admissible radial measure mu on [0,1], accessed purely through its even
// moments m(n) = int r^{2n} dmu(r). All built-in kinds are normalized to
// total mass 1; custom tables carry their own normalization.
class RadialMeasure {
  public:
    enum class Kind { PointMassAtOne, NormalizedLebesgue, PowerWeight, CustomMoments };

    static RadialMeasure sigma() { return RadialMeasure(Kind::PointMassAtOne, 0.0, {}); }
    static RadialMeasure lebesgue() { return RadialMeasure(Kind::NormalizedLebesgue, 0.0, {}); }

    static RadialMeasure power(double beta) {
        if (!(beta > -1.0)) throw std::invalid_argument("RadialMeasure::power: beta must be > -1");
        return RadialMeasure(Kind::PowerWeight, beta, {});
    }

    static RadialMeasure custom(std::vector<double> moments) {
        if (moments.empty()) throw std::invalid_argument("RadialMeasure::custom: empty moment table");
        const size_t check = std::min<size_t>(moments.size(), 64);
        for (size_t n = 0; n < check; ++n) {
            if (!(moments[n] > 0.0)) throw std::invalid_argument("RadialMeasure::custom: moments must be positive");
            if (n > 0 && moments[n] > moments[n - 1] * (1.0 + 1e-12))
                throw std::invalid_argument("RadialMeasure::custom: moments must be non-increasing");
        }
        return RadialMeasure(Kind::CustomMoments, 0.0, std::move(moments));
    }

    Kind kind() const { return kind_; }
    double beta() const { return beta_; }

    // the 2n-th radial moment
    double moment(int n) const {
        if (n < 0) throw std::invalid_argument("RadialMeasure::moment: negative index");
        switch (kind_) {
            case Kind::PointMassAtOne:
                return 1.0;
            case Kind::NormalizedLebesgue:
                return 1.0 / (n + 1.0);
            case Kind::PowerWeight:
                // (beta+1) * B(n+1, beta+1), so that moment(0) = 1
                return std::exp(std::log(beta_ + 1.0) + std::lgamma(n + 1.0) + std::lgamma(beta_ + 1.0) -
                                std::lgamma(n + beta_ + 2.0));
            case Kind::CustomMoments:
                if (static_cast<size_t>(n) >= moments_.size())
                    throw std::out_of_range("RadialMeasure::moment: index beyond custom moment table");
                return moments_[static_cast<size_t>(n)];
        }
        throw std::logic_error("RadialMeasure: bad kind");
    }

    double total_mass() const { return moment(0); }

    // "sigma" | "lebesgue" | "power:beta=<x>" | "moments:<path is handled by the caller>"
    static RadialMeasure parse(const std::string& s) {
        if (s == "sigma") return sigma();
        if (s == "lebesgue") return lebesgue();
        if (s.rfind("power:beta=", 0) == 0) {
            const std::string v = s.substr(std::string("power:beta=").size());
            size_t pos = 0;
            double beta;
            try {
                beta = std::stod(v, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("RadialMeasure: bad power weight parameter: " + s);
            }
            if (pos != v.size()) throw std::invalid_argument("RadialMeasure: bad power weight parameter: " + s);
            return power(beta);
        }
        throw std::invalid_argument("RadialMeasure: unknown measure string: " + s);
    }

    std::string to_string() const {
        switch (kind_) {
            case Kind::PointMassAtOne:
                return "sigma";
            case Kind::NormalizedLebesgue:
                return "lebesgue";
            case Kind::PowerWeight: {
                std::ostringstream os;
                os << "power:beta=" << beta_;
                return os.str();
            }
            case Kind::CustomMoments:
                return "moments[" + std::to_string(moments_.size()) + "]";
        }
        return "?";
    }

  private:
    RadialMeasure(Kind k, double beta, std::vector<double> m) : kind_(k), beta_(beta), moments_(std::move(m)) {}

    Kind kind_;
    double beta_;
    std::vector<double> moments_;
};

// n!(d-1)!/(n+d-1)!. Exact factorial ratio while it fits a double exactly,
// then a stable product of factors j/(n+j) <= 1.
inline double hardy_factorial_ratio(int n, int d) {
    if (n < 0 || d < 1) throw std::invalid_argument("hardy_factorial_ratio: bad arguments");
    if (n + d - 1 <= 18) {
        double num = 1.0;
        for (int i = 2; i <= n; ++i) num *= i;
        for (int i = 2; i <= d - 1; ++i) num *= i;
        double den = 1.0;
        for (int i = 2; i <= n + d - 1; ++i) den *= i;
        return num / den;
    }
    double w = 1.0;
    for (int j = 1; j <= d - 1; ++j) w *= static_cast<double>(j) / static_cast<double>(n + j);
    return w;
}

// The weight sequence omega_n = n!(d-1)!/(n+d-1)! * moment(n). Values are
// precomputed through max_degree at construction; instances are immutable.
class WeightSequence {
  public:
    WeightSequence(int dimension, RadialMeasure mu, int max_degree)
        : d_(dimension), mu_(std::move(mu)) {
        if (dimension < 1) throw std::invalid_argument("WeightSequence: dimension must be >= 1");
        if (max_degree < 0) throw std::invalid_argument("WeightSequence: max_degree must be >= 0");
        omega_.reserve(static_cast<size_t>(max_degree) + 1);
        for (int n = 0; n <= max_degree; ++n) omega_.push_back(hardy_factorial_ratio(n, d_) * mu_.moment(n));
    }

    int dimension() const { return d_; }
    const RadialMeasure& measure() const { return mu_; }
    int max_degree() const { return static_cast<int>(omega_.size()) - 1; }

    double omega(int n) const {
        if (n < 0) throw std::invalid_argument("WeightSequence::omega: negative index");
        if (static_cast<size_t>(n) >= omega_.size()) throw std::out_of_range("WeightSequence::omega: beyond max_degree");
        return omega_[static_cast<size_t>(n)];
    }

  private:
    int d_;
    RadialMeasure mu_;
    std::vector<double> omega_;
};

}  // namespace dakit

#endif
