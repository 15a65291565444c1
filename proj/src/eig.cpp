#include "hyperwalk/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

namespace {

// In-place Householder reduction to upper Hessenberg form.
void hessenberg(CMatrix& h) {
    const int n = h.size;
    std::vector<Complex> v(n);
    for (int k = 0; k + 2 < n; ++k) {
        double colnorm = 0.0;
        for (int i = k + 1; i < n; ++i) colnorm += std::norm(h(i, k));
        colnorm = std::sqrt(colnorm);
        if (colnorm < 1e-300) continue;

        const Complex x0 = h(k + 1, k);
        const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex{1.0, 0.0};
        const Complex alpha = -phase * colnorm;

        double vnorm2 = 0.0;
        v[k + 1] = x0 - alpha;
        vnorm2 += std::norm(v[k + 1]);
        for (int i = k + 2; i < n; ++i) {
            v[i] = h(i, k);
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 < 1e-300) continue;
        const double inv = 2.0 / vnorm2;

        // H <- (I - 2vv*/|v|^2) H
        for (int j = k; j < n; ++j) {
            Complex s{0.0, 0.0};
            for (int i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, j);
            s *= inv;
            for (int i = k + 1; i < n; ++i) h(i, j) -= s * v[i];
        }
        // H <- H (I - 2vv*/|v|^2)
        for (int i = 0; i < n; ++i) {
            Complex s{0.0, 0.0};
            for (int j = k + 1; j < n; ++j) s += h(i, j) * v[j];
            s *= inv;
            for (int j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[j]);
        }
    }
}

struct Givens {
    double c = 1.0;
    Complex s{0.0, 0.0};
};

// Rotation with G [a; b] = [r; 0], c real.
Givens make_givens(Complex a, Complex b) {
    Givens g;
    const double r = std::hypot(std::abs(a), std::abs(b));
    if (r < 1e-300 || std::abs(b) == 0.0) return g;
    if (std::abs(a) == 0.0) {
        g.c = 0.0;
        g.s = std::conj(b) / std::abs(b);
        return g;
    }
    g.c = std::abs(a) / r;
    g.s = (a / std::abs(a)) * std::conj(b) / r;
    return g;
}

// Eigenvalue of [[a, b], [c, d]] closest to d.
Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
    const Complex tr = a + d;
    const Complex disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
    const Complex r1 = 0.5 * (tr + disc);
    const Complex r2 = 0.5 * (tr - disc);
    return std::abs(r1 - d) < std::abs(r2 - d) ? r1 : r2;
}

// Eigenvalues of an upper Hessenberg matrix by explicit-shift QR with
// deflation. Off-window coupling blocks are ignored; they do not affect the
// spectrum once a subdiagonal deflates.
std::vector<Complex> hessenberg_qr_eigenvalues(CMatrix h) {
    const int n = h.size;
    std::vector<Complex> eig(n);
    const double eps = std::numeric_limits<double>::epsilon();

    int hi = n - 1;
    int iters_in_window = 0;
    int total_iters = 0;
    const int max_total = 60 * n + 200;

    while (hi >= 0) {
        if (hi == 0) {
            eig[0] = h(0, 0);
            break;
        }
        // deflate trailing subdiagonals
        bool deflated = false;
        if (std::abs(h(hi, hi - 1)) <=
            eps * (std::abs(h(hi - 1, hi - 1)) + std::abs(h(hi, hi))) + 1e-300) {
            eig[hi] = h(hi, hi);
            --hi;
            iters_in_window = 0;
            deflated = true;
        }
        if (deflated) continue;

        if (++total_iters > max_total)
            throw numeric_error("eig_unitary: QR iteration failed to converge");

        // active window [lo, hi]
        int lo = hi;
        while (lo > 0 && std::abs(h(lo, lo - 1)) >
                             eps * (std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo))) + 1e-300)
            --lo;

        Complex sigma = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
        if (++iters_in_window % 13 == 0)
            sigma = h(hi, hi) + Complex{0.75, 0.1} * std::abs(h(hi, hi - 1));

        // explicit shifted QR pass on the window
        const int w = hi - lo + 1;
        std::vector<Givens> rots(w - 1);
        for (int i = lo; i < hi; ++i) h(i, i) -= sigma;
        h(hi, hi) -= sigma;
        for (int i = lo; i < hi; ++i) {
            const Givens g = make_givens(h(i, i), h(i + 1, i));
            rots[i - lo] = g;
            for (int j = i; j <= hi; ++j) {
                const Complex a = h(i, j), b = h(i + 1, j);
                h(i, j) = g.c * a + g.s * b;
                h(i + 1, j) = -std::conj(g.s) * a + g.c * b;
            }
        }
        for (int i = lo; i < hi; ++i) {
            const Givens g = rots[i - lo];
            const int top = lo;
            for (int r = top; r <= std::min(i + 1, hi); ++r) {
                const Complex a = h(r, i), b = h(r, i + 1);
                h(r, i) = g.c * a + std::conj(g.s) * b;
                h(r, i + 1) = -g.s * a + g.c * b;
            }
        }
        for (int i = lo; i <= hi; ++i) h(i, i) += sigma;
    }
    return eig;
}

// Partial-pivot LU of (a - shift I); solves in place afterwards.
struct LUSolver {
    int n;
    CMatrix lu;
    std::vector<int> piv;

    LUSolver(const CMatrix& a, Complex shift) : n(a.size), lu(a), piv(a.size) {
        for (int i = 0; i < n; ++i) lu(i, i) -= shift;
        std::iota(piv.begin(), piv.end(), 0);
        for (int k = 0; k < n; ++k) {
            int p = k;
            double best = std::abs(lu(k, k));
            for (int i = k + 1; i < n; ++i)
                if (std::abs(lu(i, k)) > best) {
                    best = std::abs(lu(i, k));
                    p = i;
                }
            if (p != k) {
                for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
                std::swap(piv[k], piv[p]);
            }
            Complex pivot = lu(k, k);
            if (std::abs(pivot) < 1e-300) {
                pivot = Complex{1e-300, 0.0};  // shift sits on an eigenvalue
                lu(k, k) = pivot;
            }
            for (int i = k + 1; i < n; ++i) {
                lu(i, k) /= pivot;
                const Complex f = lu(i, k);
                if (f == Complex{0.0, 0.0}) continue;
                for (int j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
            }
        }
    }

    std::vector<Complex> solve(const std::vector<Complex>& b) const {
        std::vector<Complex> x(n);
        for (int i = 0; i < n; ++i) x[i] = b[piv[i]];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) x[i] -= lu(i, j) * x[j];
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j) x[i] -= lu(i, j) * x[j];
            x[i] /= lu(i, i);
        }
        return x;
    }
};

void normalize(std::vector<Complex>& v) {
    const double nrm = vnorm(v);
    if (nrm > 0.0)
        for (Complex& x : v) x /= nrm;
}

}  // namespace

EigenDecomposition eig_unitary(const CMatrix& m, bool want_vectors, double unitarity_tol) {
    const int n = m.size;
    if (n == 0) return {};
    const double defect = unitarity_defect(m);
    if (defect > unitarity_tol)
        throw numeric_error("eig_unitary: input is not unitary (defect " +
                            std::to_string(defect) + ")");

    CMatrix h = m;
    hessenberg(h);
    std::vector<Complex> vals = hessenberg_qr_eigenvalues(std::move(h));

    EigenDecomposition out;
    out.phases.resize(n);
    for (int i = 0; i < n; ++i) out.phases[i] = principal_phase(std::arg(vals[i]));
    std::sort(out.phases.begin(), out.phases.end());
    if (!want_vectors) return out;

    out.vectors = CMatrix(n);
    std::vector<std::vector<Complex>> cols(n);
    for (int j = 0; j < n; ++j) {
        const Complex lam = std::polar(1.0, out.phases[j]);
        LUSolver lu(m, lam);

        std::vector<Complex> v(n);
        for (int i = 0; i < n; ++i)
            v[i] = Complex{std::cos(0.9 * i + 1.0 + 1.7 * j), std::sin(0.4 * i - 2.0 + 0.3 * j)};
        normalize(v);

        // members of a near-degenerate cluster get orthogonalised against the
        // vectors already found for it
        std::vector<int> cluster;
        for (int k = 0; k < j; ++k)
            if (std::abs(principal_phase(out.phases[j] - out.phases[k])) < 1e-6)
                cluster.push_back(k);

        for (int pass = 0; pass < 3; ++pass) {
            v = lu.solve(v);
            for (const Complex& x : v)
                if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
                    throw numeric_error("eig_unitary: inverse iteration overflow");
            for (int k : cluster) {
                const Complex ov = vdot(cols[k], v);
                for (int i = 0; i < n; ++i) v[i] -= ov * cols[k][i];
            }
            normalize(v);
        }
        cols[j] = std::move(v);
    }

    // Rayleigh-quotient polish, then residual check.
    std::vector<std::pair<double, int>> order(n);
    for (int j = 0; j < n; ++j) {
        const std::vector<Complex> mv = matvec(m, cols[j]);
        const Complex mu = vdot(cols[j], mv);
        double res = 0.0;
        for (int i = 0; i < n; ++i) res += std::norm(mv[i] - mu * cols[j][i]);
        if (std::sqrt(res) > 1e-10)
            throw numeric_error("eig_unitary: eigenvector residual " +
                                std::to_string(std::sqrt(res)) + " above 1e-10");
        order[j] = {principal_phase(std::arg(mu)), j};
    }
    std::sort(order.begin(), order.end());
    for (int j = 0; j < n; ++j) {
        out.phases[j] = order[j].first;
        for (int i = 0; i < n; ++i) out.vectors(i, j) = cols[order[j].second][i];
    }
    return out;
}

std::vector<double> eig_phases(const CMatrix& m, double unitarity_tol) {
    return eig_unitary(m, false, unitarity_tol).phases;
}

}  // namespace hyperwalk
