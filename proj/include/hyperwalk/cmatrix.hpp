#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hyperwalk/hypercube.hpp"

namespace hyperwalk {

// Dense square complex matrix, row-major. Sized for the reduced space
// (2n <= 60), so no blocking or cleverness.
struct CMatrix {
    int size = 0;
    std::vector<Complex> data;

    CMatrix() = default;
    explicit CMatrix(int n) : size(n), data(std::size_t(n) * n, Complex{0.0, 0.0}) {}

    Complex& operator()(int i, int j) { return data[std::size_t(i) * size + j]; }
    const Complex& operator()(int i, int j) const { return data[std::size_t(i) * size + j]; }

    static CMatrix identity(int n) {
        CMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline std::vector<Complex> matvec(const CMatrix& m, const std::vector<Complex>& v) {
    std::vector<Complex> out(m.size, Complex{0.0, 0.0});
    for (int i = 0; i < m.size; ++i) {
        Complex s{0.0, 0.0};
        const Complex* row = m.data.data() + std::size_t(i) * m.size;
        for (int j = 0; j < m.size; ++j) s += row[j] * v[j];
        out[i] = s;
    }
    return out;
}

inline CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.size);
    for (int i = 0; i < a.size; ++i)
        for (int k = 0; k < a.size; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < a.size; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline CMatrix adjoint(const CMatrix& m) {
    CMatrix a(m.size);
    for (int i = 0; i < m.size; ++i)
        for (int j = 0; j < m.size; ++j) a(j, i) = std::conj(m(i, j));
    return a;
}

// max_ij |(M' M - I)_ij|
inline double unitarity_defect(const CMatrix& m) {
    const CMatrix p = matmul(adjoint(m), m);
    double worst = 0.0;
    for (int i = 0; i < m.size; ++i)
        for (int j = 0; j < m.size; ++j) {
            const Complex want = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            worst = std::max(worst, std::abs(p(i, j) - want));
        }
    return worst;
}

inline Complex vdot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline double vnorm(const std::vector<Complex>& a) {
    double s = 0.0;
    for (const Complex& x : a) s += std::norm(x);
    return std::sqrt(s);
}

}  // namespace hyperwalk
