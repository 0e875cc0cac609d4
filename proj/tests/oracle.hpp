// SPDX-License-Identifier: Apache-2.0
// Naive reference implementation of the Koszul connection and curvature.
// Works on plain mpq_class arrays and shares no code with the engine.
#pragma once

#include <gmpxx.h>

#include <vector>

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;
using Cube = std::vector<Mat>;
using Quad = std::vector<Cube>;

inline Cube cube(int n) { return Cube(n, Mat(n, Vec(n, Q(0)))); }

// Gauss-Jordan inverse.
inline Mat invert(Mat a)
{
    const int n = static_cast<int>(a.size());
    Mat inv(n, Vec(n, Q(0)));
    for (int i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (a[piv][col] == 0)
            ++piv;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Q d = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            Q f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// g(u, v) for frame components.
inline Q g(const Mat& metric, const Vec& u, const Vec& v)
{
    Q s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            s += u[i] * metric[i][j] * v[j];
    return s;
}

// gamma[i][j][k]: e_k component of nabla_{e_i} e_j, from
// 2 g(nabla_i e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j).
inline Cube connection(const Cube& c, const Mat& metric)
{
    const int n = static_cast<int>(metric.size());
    auto e = [n](int i) {
        Vec v(n, Q(0));
        v[i] = 1;
        return v;
    };
    Mat ginv = invert(metric);
    Cube gamma = cube(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec low(n);
            for (int k = 0; k < n; ++k)
                low[k] = (g(metric, c[i][j], e(k)) - g(metric, c[j][k], e(i)) + g(metric, c[k][i], e(j))) / 2;
            for (int k = 0; k < n; ++k) {
                Q s = 0;
                for (int a = 0; a < n; ++a)
                    s += ginv[k][a] * low[a];
                gamma[i][j][k] = s;
            }
        }
    return gamma;
}

// nabla_{e_i} of a frame-constant vector field.
inline Vec nabla(const Cube& gamma, int i, const Vec& v)
{
    const int n = static_cast<int>(v.size());
    Vec out(n, Q(0));
    for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k)
            out[k] += v[a] * gamma[i][a][k];
    return out;
}

// riem[i][j][k][l]: e_l component of R(e_i,e_j)e_k.
inline Quad curvature(const Cube& c, const Cube& gamma)
{
    const int n = static_cast<int>(c.size());
    Quad r(n, cube(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec ij = nabla(gamma, i, gamma[j][k]);
                Vec ji = nabla(gamma, j, gamma[i][k]);
                Vec br(n, Q(0));
                for (int a = 0; a < n; ++a)
                    for (int l = 0; l < n; ++l)
                        br[l] += c[i][j][a] * gamma[a][k][l];
                for (int l = 0; l < n; ++l)
                    r[i][j][k][l] = ij[l] - ji[l] - br[l];
            }
    return r;
}

}  // namespace oracle
