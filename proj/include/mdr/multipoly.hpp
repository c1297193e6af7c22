#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mdr/bigint.hpp"
#include "mdr/varkey.hpp"

namespace mdr {

// Exponent vector of a term: sorted by VarKey, all exponents nonzero.
// Negative exponents are legal only on x-kind keys.
struct Monomial {
    std::vector<std::pair<VarKey, int>> factors;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    bool is_unit() const { return factors.empty(); }
    int exponent(const VarKey& v) const;

    Monomial operator*(const Monomial& rhs) const;
    Monomial pow(int e) const;       // e >= 0
    Monomial inverse() const;        // negate all exponents

    void validate() const;           // throws on illegal Laurent exponents
    std::string str() const;         // "x^2*y[1,2]" ("1" for the unit)

    static Monomial unit() { return {}; }
    static Monomial var(const VarKey& v, int exp = 1);
};

// Sparse multivariate Laurent polynomial with BigInt coefficients.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, BigInt>;

    MultiPoly() = default;
    explicit MultiPoly(BigInt c);
    explicit MultiPoly(long c) : MultiPoly(BigInt(c)) {}
    static MultiPoly variable(const VarKey& v);
    static MultiPoly term(Monomial m, BigInt c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Nonzero single-term test; used by substitution and series division.
    bool is_monomial() const { return terms_.size() == 1; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

    MultiPoly pow(int e) const;  // e >= 0

    // Exact division of every coefficient; throws std::domain_error otherwise.
    MultiPoly div_exact(const BigInt& k) const;

    // Division by a single-term polynomial with coefficient +-1 (a unit of the
    // Laurent ring). Throws std::domain_error when a non-Laurent exponent
    // would go negative.
    MultiPoly div_unit_monomial(const MultiPoly& unit) const;

    std::set<VarKey> variables() const;

    // Every variable of *this must have an image; images of variables carrying
    // negative exponents must be single terms with coefficient +-1.
    MultiPoly substitute(const std::map<VarKey, MultiPoly>& images) const;

    Rational eval(const std::map<VarKey, Rational>& point) const;

    std::string str() const;  // deterministic: term-map order

    void add_term(const Monomial& m, const BigInt& c);  // accumulate + normalize

private:
    TermMap terms_;
};

inline MultiPoly operator*(const BigInt& c, const MultiPoly& p) {
    return MultiPoly(c) * p;
}

// Convenience uniform-variable polynomials.
MultiPoly poly_x();
MultiPoly poly_y();
MultiPoly poly_z();

// Free-function form of substitution with a full image map.
MultiPoly poly_substitute(const MultiPoly& p, const std::map<VarKey, MultiPoly>& images);

}  // namespace mdr
