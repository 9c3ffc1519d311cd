#ifndef DAKIT_SAMPLING_HPP
#define DAKIT_SAMPLING_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "series.hpp"

namespace dakit {

// Sampling parameters for all randomized estimators. The same seed always
// reproduces the same sample sets, and per-direction streams are derived
// from (rng_seed, index) so batched/parallel evaluation orders agree.
struct SampleConfig {
    int sphere_samples = 200;
    int radial_grid = 50;
    std::uint64_t rng_seed = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
}

// Box-Muller from explicit uniform bits; pinned here so sample sets do not
// depend on the standard library's normal_distribution implementation.
class NormalSource {
  public:
    explicit NormalSource(std::uint64_t seed) : eng_(seed) {}

    double operator()() {
        if (have_) {
            have_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 1e-300) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

  private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_ = false;
};

}  // namespace detail

// Pseudo-uniform sigma-distributed points on the complex unit sphere of C^d,
// via normalized d-dimensional complex Gaussian vectors. Deterministic per
// (seed, index).
inline std::vector<std::vector<Complex>> sphere_points(int d, int count, std::uint64_t seed) {
    std::vector<std::vector<Complex>> pts;
    pts.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        detail::NormalSource g(detail::mix_seed(seed, static_cast<std::uint64_t>(i)));
        std::vector<Complex> z(static_cast<size_t>(d));
        double nrm2 = 0.0;
        do {
            nrm2 = 0.0;
            for (auto& zj : z) {
                zj = Complex(g(), g());
                nrm2 += std::norm(zj);
            }
        } while (nrm2 < 1e-200);
        const double inv = 1.0 / std::sqrt(nrm2);
        for (auto& zj : z) zj *= inv;
        pts.push_back(std::move(z));
    }
    return pts;
}

// Radial grid on (0,1): i/G for i = 1..G-1 plus a near-boundary point, so
// suprema over the open ball are probed close to the sphere.
inline std::vector<double> radial_grid_points(int count) {
    std::vector<double> r;
    r.reserve(static_cast<size_t>(count));
    for (int i = 1; i < count; ++i) r.push_back(static_cast<double>(i) / count);
    r.push_back(1.0 - 1e-6);
    return r;
}

}  // namespace dakit

#endif
