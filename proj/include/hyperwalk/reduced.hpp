#pragma once

#include <vector>

#include "hyperwalk/cmatrix.hpp"
#include "hyperwalk/hypercube.hpp"
#include "hyperwalk/walk.hpp"

namespace hyperwalk {

// Coefficients over the 2n symmetrised basis states, ordered as mode_iter.
using ReducedState = std::vector<Complex>;

// Components of |sv> in the symmetrised basis:
// s_m = 2^{-(n+1)/2} sqrt(C(n,|m|)) e^{i phi_m} beta_m.
ReducedState sv_components(const Dim& dim);

// The 2n x 2n walk in the symmetrised basis:
// entries[a][b] = e^{i omega_a} (delta_ab + (e^{i lambda pi} - 1) s_a conj(s_b)).
CMatrix build_reduced_u_lambda(const Dim& dim, double lambda);

// Basis state for mode m.
ReducedState reduced_basis_state(const Dim& dim, int m);

// Project a full-space state onto the symmetrised basis (marked vertex 0;
// relabel first for general v). Requires n <= 12.
ReducedState project_full_to_reduced(const StateVector& psi, const Dim& dim);

// Lift reduced coefficients back to the full space.
StateVector lift_reduced_to_full(const ReducedState& coeffs, const Dim& dim);

struct ReducedStepRecord {
    int t = 0;
    double p_sv = 0.0;   // |<s|psi>|^2
    ReducedState coeffs;
};

std::vector<ReducedStepRecord> reduced_evolve(ReducedState psi0, const Dim& dim,
                                              double lambda, int steps);

}  // namespace hyperwalk
