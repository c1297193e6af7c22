#pragma once

#include <string>
#include <vector>

#include "mdr/multipoly.hpp"

namespace mdr {

// Dense univariate polynomial over MultiPoly coefficients. The indeterminate
// is t for generating functions; char_poly reuses the container for lambda.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(MultiPoly constant);
    static TPoly variable();  // t
    static TPoly from_coeffs(std::vector<MultiPoly> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const MultiPoly& coeff(int k) const;  // zero above degree
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

    friend bool operator==(const TPoly&, const TPoly&) = default;

    TPoly operator-() const;
    friend TPoly operator+(const TPoly& a, const TPoly& b);
    friend TPoly operator-(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly operator*(const MultiPoly& c) const;
    TPoly shifted(int k) const;  // multiply by t^k

    Rational eval(const Rational& t, const std::map<VarKey, Rational>& point) const;

    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<MultiPoly> coeffs_;  // index = power, no trailing zeros
};

// Ratio of two TPoly; denom nonzero. Equality is by cross-multiplication,
// never by reduction to a canonical form.
struct RationalFunction {
    TPoly numer;
    TPoly denom;
};

RationalFunction make_ratfun(TPoly numer, TPoly denom);  // throws on zero denom
bool ratfun_equal(const RationalFunction& a, const RationalFunction& b);

// First `count` Taylor coefficients of numer/denom around t = 0. The constant
// term of denom must be a unit of the Laurent ring (single term, coeff +-1).
std::vector<MultiPoly> series_coeffs(const RationalFunction& f, int count);

}  // namespace mdr
