#pragma once

#include <array>
#include <vector>

#include "hyperwalk/eig.hpp"
#include "hyperwalk/hypercube.hpp"

namespace hyperwalk {

// Eigenphases of the reduced walk over a lambda grid, stitched into
// continuous tracks by eigenvector overlap and unwrapped across +-pi.
struct EigenphaseCurve {
    std::vector<double> lambdas;
    // tracks[j][i] = phase of track j at lambdas[i]
    std::vector<std::vector<double>> tracks;
};

std::vector<double> uniform_grid(double lo, double hi, int points);

// Sweep the reduced operator over the grid. Grid must be strictly increasing
// within [0, 2] with at least 2 points.
EigenphaseCurve sweep_eigenphases(const Dim& dim, const std::vector<double>& lambda_grid);

// Finite-difference slope of a track at lambda0, taken over +-half_width so
// the stencil clears the avoided-crossing region.
double track_slope(const EigenphaseCurve& curve, int track, double lambda0, double half_width);

struct CrossingNumeric {
    int m = 0;
    double lambda_star = 0.0;
    double gap = 0.0;
    std::array<double, 2> phases_at_min{};
};

// Separation of the two eigenphases straddling omega_m at this lambda.
double phase_separation_at(const Dim& dim, int m, double lambda);

// Locate the avoided crossing of mode m: coarse scan of the separation, 10x
// local refinement, then golden-section to |dlambda| < 1e-8.
CrossingNumeric find_crossing(const Dim& dim, int m, int coarse_points = 400);

}  // namespace hyperwalk
