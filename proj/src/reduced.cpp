#include "hyperwalk/reduced.hpp"

#include <cmath>
#include <string>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

ReducedState sv_components(const Dim& dim) {
    const int n = dim.n;
    ReducedState s(2 * n);
    const double pref = std::pow(2.0, -0.5 * (n + 1));
    for (int m : mode_iter(dim)) {
        const int k = m < 0 ? -m : m;
        const double mag = pref * std::sqrt(binomial_d(n, k)) * beta_m(dim, m);
        s[mode_slot(dim, m)] = std::polar(mag, phi_m(dim, m));
    }
    return s;
}

CMatrix build_reduced_u_lambda(const Dim& dim, double lambda) {
    const int n = dim.n;
    const ReducedState s = sv_components(dim);
    const Complex factor = std::polar(1.0, std::fmod(lambda, 2.0) * kPi) - 1.0;
    CMatrix u(2 * n);
    for (int a = 0; a < 2 * n; ++a) {
        const Complex ea = std::polar(1.0, omega_m(dim, a - n + 1));
        for (int b = 0; b < 2 * n; ++b) {
            Complex v = factor * s[a] * std::conj(s[b]);
            if (a == b) v += 1.0;
            u(a, b) = ea * v;
        }
    }
    return u;
}

ReducedState reduced_basis_state(const Dim& dim, int m) {
    ReducedState psi(2 * dim.n, Complex{0.0, 0.0});
    psi[mode_slot(dim, m)] = 1.0;
    return psi;
}

ReducedState project_full_to_reduced(const StateVector& psi, const Dim& dim) {
    if (dim.n > 12)
        throw capability_error("project_full_to_reduced: n = " + std::to_string(dim.n) +
                               " exceeds the n <= 12 basis-construction bound");
    ReducedState coeffs(2 * dim.n);
    for (int m : mode_iter(dim)) {
        const StateVector basis = omega_basis_state(dim, m);
        coeffs[mode_slot(dim, m)] = inner(basis, psi);
    }
    return coeffs;
}

StateVector lift_reduced_to_full(const ReducedState& coeffs, const Dim& dim) {
    if (dim.n > 12)
        throw capability_error("lift_reduced_to_full: n exceeds the n <= 12 bound");
    StateVector out(dim);
    for (int m : mode_iter(dim)) {
        const Complex c = coeffs[mode_slot(dim, m)];
        if (c == Complex{0.0, 0.0}) continue;
        const StateVector basis = omega_basis_state(dim, m);
        for (std::size_t i = 0; i < out.amp.size(); ++i) out.amp[i] += c * basis.amp[i];
    }
    return out;
}

std::vector<ReducedStepRecord> reduced_evolve(ReducedState psi, const Dim& dim,
                                              double lambda, int steps) {
    if (steps < 0) throw std::domain_error("reduced_evolve: steps must be >= 0");
    const CMatrix u = build_reduced_u_lambda(dim, lambda);
    const ReducedState s = sv_components(dim);
    std::vector<ReducedStepRecord> out;
    out.reserve(steps + 1);
    for (int t = 0; t <= steps; ++t) {
        if (t > 0) psi = matvec(u, psi);
        ReducedStepRecord rec;
        rec.t = t;
        rec.p_sv = std::norm(vdot(s, psi));
        rec.coeffs = psi;
        out.push_back(rec);
    }
    return out;
}

}  // namespace hyperwalk
