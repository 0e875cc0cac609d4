// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "oracle.hpp"
#include "solitonkit/catalog.hpp"

#include <random>

namespace testing {

inline sk::Rational q(std::int64_t n, std::int64_t d = 1) { return sk::Rational(n, d); }
inline sk::ParamScalar ps(std::string_view text) { return sk::ParamScalar::parse(text); }
inline sk::ParamScalar P() { return sk::ParamScalar::symbol("p"); }

inline sk::FrameVector fv(std::initializer_list<std::int64_t> xs)
{
    sk::FrameVector v;
    for (auto x : xs)
        v.emplace_back(x);
    return v;
}

inline sk::RationalVector rv(std::initializer_list<std::int64_t> xs)
{
    sk::RationalVector v;
    for (auto x : xs)
        v.emplace_back(x);
    return v;
}

inline sk::RationalVector unit(int n, int i)
{
    sk::RationalVector v(n);
    v[i] = 1;
    return v;
}

// Random rational with numerator in [-lo, lo] and denominator in [1, den].
inline sk::Rational random_rational(std::mt19937& rng, int lo = 10, int den = 6)
{
    std::uniform_int_distribution<int> num(-lo, lo), d(1, den);
    return sk::Rational(num(rng), d(rng));
}

inline oracle::Cube oracle_structure(const sk::FrameManifold& m)
{
    oracle::Cube c = oracle::cube(m.dim);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            for (int k = 0; k < m.dim; ++k)
                c[i][j][k] = m.c(i, j, k).raw();
    return c;
}

inline oracle::Mat oracle_metric(const sk::FrameManifold& m)
{
    oracle::Mat g(m.dim, oracle::Vec(m.dim));
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            g[i][j] = m.metric(i, j).raw();
    return g;
}

// g([e_a,[e_b,e_c]] + [e_b,[e_c,e_a]] + [e_c,[e_a,e_b]], e_d), straight from
// the structure constants.
inline sk::Rational lowered_jacobiator(const sk::FrameManifold& m, int a, int b, int c, int d)
{
    sk::Rational s;
    for (int l = 0; l < m.dim; ++l)
        for (int k = 0; k < m.dim; ++k)
            s += (m.c(b, c, l) * m.c(a, l, k) + m.c(c, a, l) * m.c(b, l, k) + m.c(a, b, l) * m.c(c, l, k))
               * m.metric(k, d);
    return s;
}

inline bool satisfies_jacobi(const sk::FrameManifold& m)
{
    for (int a = 0; a < m.dim; ++a)
        for (int b = 0; b < m.dim; ++b)
            for (int c = 0; c < m.dim; ++c)
                for (int d = 0; d < m.dim; ++d)
                    if (!lowered_jacobiator(m, a, b, c, d).is_zero())
                        return false;
    return true;
}

inline sk::Rational as_rational(const sk::ParamScalar& s) { return s.constant_value(); }

}  // namespace testing
