#include "mdr/tpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mdr {

namespace {
const MultiPoly kZero{};
}

TPoly::TPoly(MultiPoly constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

TPoly TPoly::variable() {
    return from_coeffs({MultiPoly{}, MultiPoly(BigInt(1))});
}

TPoly TPoly::from_coeffs(std::vector<MultiPoly> coeffs) {
    TPoly p;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

void TPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const MultiPoly& TPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

TPoly TPoly::operator-() const {
    TPoly out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
    std::vector<MultiPoly> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    }
    return TPoly::from_coeffs(std::move(out));
}

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<MultiPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return TPoly::from_coeffs(std::move(out));
}

TPoly TPoly::operator*(const MultiPoly& c) const {
    std::vector<MultiPoly> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
    return from_coeffs(std::move(out));
}

TPoly TPoly::shifted(int k) const {
    if (k < 0) throw std::domain_error("TPoly::shifted: negative shift");
    if (is_zero()) return {};
    std::vector<MultiPoly> out(coeffs_.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return from_coeffs(std::move(out));
}

Rational TPoly::eval(const Rational& t, const std::map<VarKey, Rational>& point) const {
    Rational total(0);
    Rational tp(1);
    for (const auto& c : coeffs_) {
        total += c.eval(point) * tp;
        tp *= t;
    }
    return total;
}

std::string TPoly::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << "(" << coeffs_[k].str() << ")";
        } else {
            os << "(" << coeffs_[k].str() << ")*" << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

RationalFunction make_ratfun(TPoly numer, TPoly denom) {
    if (denom.is_zero()) throw std::domain_error("rational function with zero denominator");
    return {std::move(numer), std::move(denom)};
}

bool ratfun_equal(const RationalFunction& a, const RationalFunction& b) {
    return a.numer * b.denom == b.numer * a.denom;
}

std::vector<MultiPoly> series_coeffs(const RationalFunction& f, int count) {
    if (count < 0) throw std::domain_error("series_coeffs: negative count");
    const MultiPoly& d0 = f.denom.coeff(0);
    if (d0.is_zero()) {
        throw std::domain_error("denominator has zero constant term: not a power series");
    }
    if (!d0.is_monomial()) {
        throw std::domain_error("denominator constant term is not a unit monomial");
    }
    std::vector<MultiPoly> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        MultiPoly acc = f.numer.coeff(n);
        for (int k = 1; k <= n && k <= f.denom.degree(); ++k) {
            acc -= f.denom.coeff(k) * out[static_cast<std::size_t>(n - k)];
        }
        out.push_back(acc.div_unit_monomial(d0));
    }
    return out;
}

}  // namespace mdr
