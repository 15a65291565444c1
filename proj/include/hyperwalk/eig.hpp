#pragma once

#include <vector>

#include "hyperwalk/cmatrix.hpp"

namespace hyperwalk {

struct EigenDecomposition {
    std::vector<double> phases;  // ascending in (-pi, pi]
    CMatrix vectors;             // column j pairs with phases[j]; empty if not requested
};

// Full eigensystem of a unitary matrix: Hessenberg reduction, shifted QR for
// the eigenvalues, inverse iteration on the original matrix for the vectors,
// Rayleigh-quotient phase polish. Throws numeric_error on non-unitary input
// (defect above unitarity_tol) or QR stagnation.
EigenDecomposition eig_unitary(const CMatrix& m, bool want_vectors = true,
                               double unitarity_tol = 1e-10);

// Eigenphases only (skips inverse iteration), ascending in (-pi, pi].
std::vector<double> eig_phases(const CMatrix& m, double unitarity_tol = 1e-10);

}  // namespace hyperwalk
