#include "hyperwalk/walk.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

int max_full_n() {
    static const int cap = [] {
        int v = 20;
        if (const char* s = std::getenv("HYPERWALK_MAX_FULL_N")) {
            v = std::atoi(s);
            if (v < 2) v = 2;
        }
        return v > 24 ? 24 : v;
    }();
    return cap;
}

void check_full_space(const Dim& dim) {
    if (dim.n > max_full_n())
        throw capability_error("full-space state for n = " + std::to_string(dim.n) +
                               " exceeds cap " + std::to_string(max_full_n()) +
                               " (HYPERWALK_MAX_FULL_N)");
}

double norm(const StateVector& psi) {
    double s = 0.0;
    for (const Complex& a : psi.amp) s += std::norm(a);
    return std::sqrt(s);
}

Complex inner(const StateVector& a, const StateVector& b) {
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.amp.size(); ++i) s += std::conj(a.amp[i]) * b.amp[i];
    return s;
}

void apply_coin(StateVector& psi) {
    const int n = psi.n;
    const std::int64_t N = std::int64_t{1} << n;
    const double two_over_n = 2.0 / n;
    std::vector<Complex> acc(N, Complex{0.0, 0.0});
    for (int d = 0; d < n; ++d) {
        const Complex* row = psi.amp.data() + (std::size_t(d) << n);
        for (std::int64_t x = 0; x < N; ++x) acc[x] += row[x];
    }
#pragma omp parallel for schedule(static)
    for (std::int64_t x = 0; x < N; ++x) acc[x] *= two_over_n;
    for (int d = 0; d < n; ++d) {
        Complex* row = psi.amp.data() + (std::size_t(d) << n);
#pragma omp parallel for schedule(static)
        for (std::int64_t x = 0; x < N; ++x) row[x] = acc[x] - row[x];
    }
}

void apply_shift(StateVector& psi) {
    const int n = psi.n;
    const std::int64_t N = std::int64_t{1} << n;
    for (int d = 0; d < n; ++d) {
        Complex* row = psi.amp.data() + (std::size_t(d) << n);
        const std::int64_t bit = std::int64_t{1} << d;
#pragma omp parallel for schedule(static)
        for (std::int64_t x = 0; x < N; ++x) {
            if (!(x & bit)) std::swap(row[x], row[x | bit]);
        }
    }
}

void step_u_lambda(StateVector& psi, const WalkConfig& cfg) {
    const int n = psi.n;
    // The walk family is exactly 2-periodic in lambda.
    const double lam = std::fmod(cfg.lambda, 2.0);
    if (lam != 0.0) {
        const Complex factor = std::polar(1.0, lam * kPi) - 1.0;
        const double inv_sqrt_n = 1.0 / std::sqrt(double(n));
        Complex ip{0.0, 0.0};
        for (int d = 0; d < n; ++d) ip += psi.at(d, cfg.marked);
        ip *= inv_sqrt_n;
        const Complex add = factor * ip * inv_sqrt_n;
        for (int d = 0; d < n; ++d) psi.at(d, cfg.marked) += add;
    }
    apply_coin(psi);
    apply_shift(psi);
}

StateVector sv_state(const WalkConfig& cfg) {
    check_full_space(cfg.dim);
    StateVector psi(cfg.dim);
    const double a = 1.0 / std::sqrt(double(cfg.dim.n));
    for (int d = 0; d < cfg.dim.n; ++d) psi.at(d, cfg.marked) = a;
    return psi;
}

StateVector build_eigenvector(const Dim& dim, VertexId kvec, int sign) {
    check_full_space(dim);
    const int n = dim.n;
    const int k = hamming_weight(kvec);
    const std::uint64_t N = dim.vertex_count();

    StateVector psi(dim);
    const double beta = (k == 0 || k == n) ? std::sqrt(2.0) : 1.0;
    const double pref = beta * std::pow(2.0, -0.5 * n) / std::sqrt(2.0);
    // alpha per direction: 1/sqrt(k) on set bits, -sign * i/sqrt(n-k) on clear
    for (int d = 0; d < n; ++d) {
        Complex alpha;
        if ((kvec >> d) & 1u)
            alpha = Complex{1.0 / std::sqrt(double(k)), 0.0};
        else
            alpha = Complex{0.0, (sign > 0 ? -1.0 : 1.0) / std::sqrt(double(n - k))};
        const Complex base = pref * alpha;
        Complex* row = psi.amp.data() + (std::size_t(d) << n);
        for (std::uint64_t x = 0; x < N; ++x) {
            const bool odd = std::popcount(std::uint32_t(x) & kvec) & 1;
            row[x] = odd ? -base : base;
        }
    }
    return psi;
}

void relabel_marked(StateVector& psi, VertexId v) {
    if (v == 0) return;
    const int n = psi.n;
    const std::uint64_t N = std::uint64_t{1} << n;
    for (int d = 0; d < n; ++d) {
        Complex* row = psi.amp.data() + (std::size_t(d) << n);
        for (std::uint64_t x = 0; x < N; ++x) {
            const std::uint64_t y = x ^ v;
            if (x < y) std::swap(row[x], row[y]);
        }
    }
}

static StepRecord record_step(const StateVector& psi, const WalkConfig& cfg, int t) {
    const int n = psi.n;
    const std::uint64_t N = std::uint64_t{1} << n;
    StepRecord rec;
    rec.t = t;
    rec.shell.assign(n + 1, 0.0);
    std::vector<double> vertex_prob(N, 0.0);
    for (int d = 0; d < n; ++d) {
        const Complex* row = psi.amp.data() + (std::size_t(d) << n);
        for (std::uint64_t x = 0; x < N; ++x) vertex_prob[x] += std::norm(row[x]);
    }
    for (std::uint64_t x = 0; x < N; ++x)
        rec.shell[std::popcount(std::uint32_t(x) ^ cfg.marked)] += vertex_prob[x];
    rec.p_marked = vertex_prob[cfg.marked];
    rec.p_neighbors = rec.shell[1];
    return rec;
}

std::vector<StepRecord> evolve(StateVector psi, const WalkConfig& cfg, int steps) {
    if (steps < 0) throw std::domain_error("evolve: steps must be >= 0");
    std::vector<StepRecord> out;
    out.reserve(steps + 1);
    out.push_back(record_step(psi, cfg, 0));
    for (int t = 1; t <= steps; ++t) {
        step_u_lambda(psi, cfg);
        out.push_back(record_step(psi, cfg, t));
    }
    return out;
}

// Krawtchouk sum K_a(w; nn) = sum_j (-1)^j C(w, j) C(nn - w, a - j).
static double krawtchouk(int a, int w, int nn) {
    if (a < 0 || a > nn) return 0.0;
    double s = 0.0;
    const int jlo = std::max(0, a - (nn - w));
    const int jhi = std::min(a, w);
    for (int j = jlo; j <= jhi; ++j) {
        const double term = binomial_d(w, j) * binomial_d(nn - w, a - j);
        s += (j & 1) ? -term : term;
    }
    return s;
}

StateVector omega_basis_state(const Dim& dim, int m) {
    check_mode(dim, m);
    check_full_space(dim);
    const int n = dim.n;
    const int k = m < 0 ? -m : m;
    const int sign = m >= 0 ? +1 : -1;
    const std::uint64_t N = dim.vertex_count();

    const double beta = beta_m(dim, m);
    const double pref =
        beta * std::pow(2.0, -0.5 * n) / std::sqrt(2.0 * binomial_d(n, k));

    // Sum over all |kvec| = k of the eigenvector amplitudes. With l_d split
    // off, the vertex sums reduce to Krawtchouk values at weight |x| - x_d
    // over the remaining n-1 coordinates.
    std::vector<double> k_set(n, 0.0), k_clear(n, 0.0);  // indexed by |x'|
    for (int w = 0; w < n; ++w) {
        k_set[w] = krawtchouk(k - 1, w, n - 1);
        k_clear[w] = krawtchouk(k, w, n - 1);
    }
    const double c_set = k > 0 ? 1.0 / std::sqrt(double(k)) : 0.0;
    const double c_clear = k < n ? 1.0 / std::sqrt(double(n - k)) : 0.0;

    StateVector psi(dim);
    for (int d = 0; d < n; ++d) {
        Complex* row = psi.amp.data() + (std::size_t(d) << n);
        for (std::uint64_t x = 0; x < N; ++x) {
            const int xd = int((x >> d) & 1u);
            const int wrest = std::popcount(std::uint32_t(x)) - xd;
            double re = 0.0, im = 0.0;
            if (k > 0) {
                double v = c_set * k_set[wrest];
                re = xd ? -v : v;
            }
            if (k < n) im = -sign * c_clear * k_clear[wrest];
            row[x] = pref * Complex{re, im};
        }
    }
    return psi;
}

}  // namespace hyperwalk
