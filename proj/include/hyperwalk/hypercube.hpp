#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hyperwalk {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Hypercube dimension n with vertex count N = 2^n.
struct Dim {
    int n = 0;

    explicit Dim(int n_) : n(n_) {
        if (n_ < 2)
            throw std::domain_error("Dim: n must be >= 2");
        if (n_ > 30)
            throw std::domain_error("Dim: n > 30 not supported");
    }
    std::uint64_t vertex_count() const { return std::uint64_t{1} << n; }
};

using VertexId = std::uint32_t;

inline int hamming_weight(VertexId x) { return std::popcount(x); }

// Exact binomial coefficient; valid for 0 <= k <= n <= 64.
inline std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > 64)
        throw std::domain_error("binomial: need 0 <= k <= n <= 64");
    if (k > n - k) k = n - k;
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        // c * (n-k+i) is divisible by i at every step of the recurrence
        c = c / i * (n - k + i) + c % i * (n - k + i) / i;
    }
    return c;
}

inline double log_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("log_binomial: need 0 <= k <= n");
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// binomial(n, k) as a double, exact for n <= 64, log-space beyond.
inline double binomial_d(int n, int k) {
    if (n <= 64) return static_cast<double>(binomial(n, k));
    return std::exp(log_binomial(n, k));
}

// Mode indices m run over [-n+1, n]; {k, sign} = {|m|, sgn(m)}. m = 0 and
// m = n are the single-mode cases (the two signs coincide there).
inline void check_mode(const Dim& dim, int m) {
    if (m < -dim.n + 1 || m > dim.n)
        throw std::domain_error("mode index out of range [-n+1, n]");
}

// Position of mode m in mode_iter order.
inline int mode_slot(const Dim& dim, int m) {
    check_mode(dim, m);
    return m + dim.n - 1;
}

// The 2n modes in ascending order m = -n+1, ..., n.
inline std::vector<int> mode_iter(const Dim& dim) {
    std::vector<int> ms;
    ms.reserve(2 * dim.n);
    for (int m = -dim.n + 1; m <= dim.n; ++m) ms.push_back(m);
    return ms;
}

// Eigenphase of the unperturbed walk for mode m: cos(omega) = 1 - 2|m|/n,
// sign matched to m; omega_0 = 0, omega_n = pi.
inline double omega_m(const Dim& dim, int m) {
    check_mode(dim, m);
    const int k = m < 0 ? -m : m;
    if (k == 0) return 0.0;
    const double w = std::acos(1.0 - 2.0 * k / dim.n);
    return m > 0 ? w : -w;
}

// beta is sqrt(2) at the two single-mode cases, 1 otherwise.
inline double beta_m(const Dim& dim, int m) {
    check_mode(dim, m);
    const int k = m < 0 ? -m : m;
    return (k == 0 || k == dim.n) ? std::sqrt(2.0) : 1.0;
}

// Coin-space phase: e^{i phi_m} = (sqrt(k) + i sgn(m) sqrt(n-k)) / sqrt(n).
// Convention at the single-mode cases: phi_0 = +pi/2, phi_n = 0 (continuity
// with the m > 0 branch).
inline double phi_m(const Dim& dim, int m) {
    check_mode(dim, m);
    const int k = m < 0 ? -m : m;
    const double a = std::atan2(std::sqrt(double(dim.n - k)), std::sqrt(double(k)));
    return m >= 0 ? a : -a;
}

struct SpectralParams {
    double omega = 0.0;
    double phi = 0.0;
    double beta = 1.0;
};

inline SpectralParams spectral_params(const Dim& dim, int m) {
    return SpectralParams{omega_m(dim, m), phi_m(dim, m), beta_m(dim, m)};
}

// Wrap a phase into (-pi, pi].
inline double principal_phase(double x) {
    x = std::remainder(x, 2.0 * kPi);
    if (x <= -kPi) x += 2.0 * kPi;
    return x;
}

}  // namespace hyperwalk
