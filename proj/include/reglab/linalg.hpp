#pragma once

#include "reglab/bigfloat.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace reglab {

using RMatrix = std::vector<std::vector<BigReal>>;
using CMatrix = std::vector<std::vector<BigComplex>>;

// determinant by LU with partial pivoting; matrices here are tiny (<= 7x7)
inline BigReal det_lu(RMatrix a) {
    const size_t n = a.size();
    BigReal det(1);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        for (size_t i = k + 1; i < n; ++i)
            if (abs(a[i][k]) > abs(a[piv][k])) piv = i;
        if (a[piv][k] == 0) return BigReal(0);
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            BigReal f = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

inline BigComplex det_lu(CMatrix a) {
    const size_t n = a.size();
    BigComplex det(BigReal(1), BigReal(0));
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        for (size_t i = k + 1; i < n; ++i)
            if (abs(a[i][k]) > abs(a[piv][k])) piv = i;
        if (abs(a[piv][k]) == 0) return BigComplex();
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det = det * a[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            BigComplex f = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
        }
    }
    return det;
}

// eigenvalues of a symmetric matrix by cyclic Jacobi rotations
inline std::vector<BigReal> symmetric_eigenvalues(RMatrix a, int sweeps = 64) {
    const size_t n = a.size();
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        BigReal off(0);
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off == 0) break;
        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0) continue;
                BigReal theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                BigReal t = (theta >= 0 ? BigReal(1) : BigReal(-1)) /
                            (abs(theta) + sqrt(theta * theta + 1));
                BigReal c = 1 / sqrt(t * t + 1), s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    BigReal akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    BigReal apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<BigReal> ev(n);
    for (size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    return ev;
}

// singular values of an m x n matrix (m >= n) via eigenvalues of A^T A
inline std::vector<BigReal> singular_values(const RMatrix& a) {
    if (a.empty()) return {};
    const size_t m = a.size(), n = a[0].size();
    RMatrix ata(n, std::vector<BigReal>(n, BigReal(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            BigReal s(0);
            for (size_t k = 0; k < m; ++k) s += a[k][i] * a[k][j];
            ata[i][j] = s;
        }
    auto ev = symmetric_eigenvalues(std::move(ata));
    for (auto& x : ev) x = x > 0 ? BigReal(sqrt(x)) : BigReal(0);
    std::sort(ev.begin(), ev.end(), [](const BigReal& x, const BigReal& y) { return x > y; });
    return ev;
}

}  // namespace reglab
