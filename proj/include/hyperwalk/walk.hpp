#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hyperwalk/hypercube.hpp"

namespace hyperwalk {

// Wavefunction over the directed states |d, x>, d in [0, n), x in [0, 2^n),
// stored flat with index d * 2^n + x.
struct StateVector {
    int n = 0;
    std::vector<Complex> amp;

    StateVector() = default;
    explicit StateVector(const Dim& dim)
        : n(dim.n), amp(std::size_t(dim.n) << dim.n, Complex{0.0, 0.0}) {}

    std::size_t size() const { return amp.size(); }
    Complex& at(int d, VertexId x) { return amp[(std::size_t(d) << n) + x]; }
    const Complex& at(int d, VertexId x) const { return amp[(std::size_t(d) << n) + x]; }
};

struct WalkConfig {
    Dim dim;
    VertexId marked = 0;
    double lambda = 0.0;

    WalkConfig(Dim d, VertexId v, double lam) : dim(d), marked(v), lambda(lam) {
        if (v >= d.vertex_count())
            throw std::domain_error("WalkConfig: marked vertex out of range");
    }
};

// Largest n for which full-space states may be allocated. Reads
// HYPERWALK_MAX_FULL_N (default 20); values above the hard ceiling 24 clamp.
int max_full_n();
void check_full_space(const Dim& dim);

double norm(const StateVector& psi);
Complex inner(const StateVector& a, const StateVector& b);  // <a|b>

// Grover coin on every vertex: a_d <- (2/n) sum_d' a_d' - a_d.
void apply_coin(StateVector& psi);

// Shift along the walked direction: amplitude at (d, x) moves to (d, x ^ e_d).
// Involution.
void apply_shift(StateVector& psi);

// One step of the perturbed walk: S C (1 + (e^{i lambda pi} - 1)|sv><sv|).
// lambda = 0 is the unperturbed walk, lambda = 1 the fully marked one.
void step_u_lambda(StateVector& psi, const WalkConfig& cfg);

// State |sv>: uniform over the n directions at the marked vertex.
StateVector sv_state(const WalkConfig& cfg);

// Exact eigenvector of the unperturbed walk for bit pattern kvec and sign
// branch (+1 or -1); eigenvalue e^{i sign omega_k}, k = |kvec|. For k = 0 and
// k = n the two branches give the same vector.
StateVector build_eigenvector(const Dim& dim, VertexId kvec, int sign);

// Relabel vertices by XOR with v: conjugates a search at v into one at 0.
void relabel_marked(StateVector& psi, VertexId v);

struct StepRecord {
    int t = 0;
    double p_marked = 0.0;
    double p_neighbors = 0.0;
    std::vector<double> shell;  // probability per Hamming distance from marked
};

// Evolve psi0 under the walk of cfg, recording per step the probability at
// the marked vertex and the Hamming-shell distribution around it.
std::vector<StepRecord> evolve(StateVector psi0, const WalkConfig& cfg, int steps);

// Symmetrised eigenvector |omega_m>: the normalised sum of build_eigenvector
// over all kvec with |kvec| = |m| on the sign branch of m (marked vertex 0).
// Closed form via Krawtchouk sums, O(n 2^n).
StateVector omega_basis_state(const Dim& dim, int m);

}  // namespace hyperwalk
