#include "mdr/charpoly.hpp"

#include <stdexcept>

namespace mdr {

namespace {

void require_laurent_free(const Matrix<MultiPoly>& m) {
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            for (const auto& [mono, c] : m.at(i, j).terms()) {
                for (const auto& [key, e] : mono.factors) {
                    if (e < 0) {
                        throw std::domain_error(
                            "char_poly: Laurent exponents not allowed in matrix entries");
                    }
                }
            }
        }
    }
}

}  // namespace

TPoly char_poly(const Matrix<MultiPoly>& m) {
    require_laurent_free(m);
    auto c = detail::char_poly_coeffs<MultiPoly>(m, MultiPoly(BigInt(1)));
    return TPoly::from_coeffs(std::move(c));
}

std::vector<Rational> char_poly_rational(const Matrix<Rational>& m) {
    return detail::char_poly_coeffs<Rational>(m, Rational(1));
}

TPoly det_identity_minus_t(const Matrix<MultiPoly>& m) {
    TPoly p = char_poly(m);
    const int n = m.dim();
    std::vector<MultiPoly> rev(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) rev[static_cast<std::size_t>(k)] = p.coeff(n - k);
    return TPoly::from_coeffs(std::move(rev));
}

}  // namespace mdr
