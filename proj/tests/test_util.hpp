#pragma once

#include <map>
#include <vector>

#include "mdr/bigint.hpp"
#include "mdr/multipoly.hpp"
#include "mdr/tpoly.hpp"

namespace mdr::testutil {

inline std::map<VarKey, Rational> point_xyz(long x, long y, long z) {
    return {{VarKey::x(), Rational(x)}, {VarKey::y(), Rational(y)}, {VarKey::z(), Rational(z)}};
}

// Specialize a TPoly's coefficients at a rational point.
inline std::vector<Rational> specialize_tpoly(const TPoly& p,
                                              const std::map<VarKey, Rational>& at) {
    std::vector<Rational> out(static_cast<std::size_t>(p.degree() + 1), Rational(0));
    for (int k = 0; k <= p.degree(); ++k) {
        out[static_cast<std::size_t>(k)] = p.coeff(k).eval(at);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Long division over Q[t]; returns true and the quotient when the remainder
// vanishes. Independent route for the "divisible by" checks.
inline bool divides_exactly(const std::vector<Rational>& divisor,
                            std::vector<Rational> dividend,
                            std::vector<Rational>* quotient_out = nullptr) {
    if (divisor.empty()) return false;
    if (dividend.size() < divisor.size()) {
        bool all_zero = true;
        for (const auto& c : dividend) all_zero = all_zero && c == 0;
        if (all_zero && quotient_out) quotient_out->clear();
        return all_zero;
    }
    std::vector<Rational> q(dividend.size() - divisor.size() + 1, Rational(0));
    const Rational lead = divisor.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational f = dividend[k + divisor.size() - 1] / lead;
        q[k] = f;
        for (std::size_t i = 0; i < divisor.size(); ++i) {
            dividend[k + i] -= f * divisor[i];
        }
    }
    for (const auto& c : dividend) {
        if (c != 0) return false;
    }
    if (quotient_out) *quotient_out = std::move(q);
    return true;
}

// uniform-variable monomial helper: c * x^a y^b z^c2
inline MultiPoly xyz_term(long coeff, int a, int b, int c) {
    Monomial m = Monomial::var(VarKey::x(), a) * Monomial::var(VarKey::y(), b) *
                 Monomial::var(VarKey::z(), c);
    return MultiPoly::term(m, BigInt(coeff));
}

}  // namespace mdr::testutil
