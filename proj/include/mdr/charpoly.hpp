#pragma once

#include "mdr/matrix.hpp"
#include "mdr/multipoly.hpp"
#include "mdr/tpoly.hpp"

namespace mdr {

namespace detail {

template <class T>
T char_div_exact(const T& v, long k);

template <>
inline MultiPoly char_div_exact<MultiPoly>(const MultiPoly& v, long k) {
    return v.div_exact(BigInt(k));
}

template <>
inline Rational char_div_exact<Rational>(const Rational& v, long k) {
    return v / Rational(k);
}

// Faddeev-LeVerrier: exact over any torsion-free ring; every division by a
// loop index is exact because the outputs are genuine char-poly coefficients.
template <class T>
std::vector<T> char_poly_coeffs(const Matrix<T>& a, const T& one) {
    const int n = a.dim();
    std::vector<T> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = one;
    if (n == 0) return c;
    Matrix<T> m(n);
    Matrix<T> p(n);
    for (int k = 1; k <= n; ++k) {
        // M_k = A*M_{k-1} + c_{n-k+1} I, with M_0 = 0.
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = (k == 1 ? T{} : p.at(i, j));
            }
            m.at(i, i) += c[static_cast<std::size_t>(n - k + 1)];
        }
        p = a * m;
        c[static_cast<std::size_t>(n - k)] = char_div_exact<T>(-p.trace(), k);
    }
    return c;
}

}  // namespace detail

// det(lambda*I - M) as a monic polynomial; coefficient k of the result is the
// coefficient of lambda^k. Entries must be Laurent-free.
TPoly char_poly(const Matrix<MultiPoly>& m);

std::vector<Rational> char_poly_rational(const Matrix<Rational>& m);

// det(I - t*M): the char poly with coefficient order reversed.
TPoly det_identity_minus_t(const Matrix<MultiPoly>& m);

}  // namespace mdr
