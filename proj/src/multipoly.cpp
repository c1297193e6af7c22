#include "mdr/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mdr {

int Monomial::exponent(const VarKey& v) const {
    for (const auto& [key, e] : factors) {
        if (key == v) return e;
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out;
    out.factors.reserve(factors.size() + rhs.factors.size());
    auto a = factors.begin(), ae = factors.end();
    auto b = rhs.factors.begin(), be = rhs.factors.end();
    while (a != ae && b != be) {
        if (a->first < b->first) {
            out.factors.push_back(*a++);
        } else if (b->first < a->first) {
            out.factors.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) out.factors.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    out.factors.insert(out.factors.end(), a, ae);
    out.factors.insert(out.factors.end(), b, be);
    out.validate();
    return out;
}

Monomial Monomial::pow(int e) const {
    if (e < 0) throw std::domain_error("Monomial::pow: negative exponent");
    Monomial out;
    if (e == 0) return out;
    out.factors = factors;
    for (auto& [key, exp] : out.factors) exp *= e;
    out.validate();
    return out;
}

Monomial Monomial::inverse() const {
    Monomial out;
    out.factors = factors;
    for (auto& [key, exp] : out.factors) exp = -exp;
    out.validate();
    return out;
}

void Monomial::validate() const {
    for (const auto& [key, e] : factors) {
        if (e < 0 && !key.laurent_ok()) {
            throw std::domain_error("negative exponent on non-Laurent variable " + key.str());
        }
        if (e == 0) throw std::logic_error("zero exponent stored in monomial");
        if (key.kind == VarKind::T && key.indexed) {
            throw std::domain_error("t never carries indices");
        }
    }
}

std::string Monomial::str() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, e] : factors) {
        if (!first) os << "*";
        first = false;
        os << key.str();
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

Monomial Monomial::var(const VarKey& v, int exp) {
    Monomial m;
    if (exp != 0) m.factors.emplace_back(v, exp);
    m.validate();
    return m;
}

MultiPoly::MultiPoly(BigInt c) {
    if (c != 0) terms_.emplace(Monomial::unit(), std::move(c));
}

MultiPoly MultiPoly::variable(const VarKey& v) {
    return term(Monomial::var(v), BigInt(1));
}

MultiPoly MultiPoly::term(Monomial m, BigInt c) {
    MultiPoly p;
    p.add_term(m, c);
    return p;
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    m.validate();
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("MultiPoly::pow: negative exponent");
    MultiPoly result(BigInt(1));
    MultiPoly base(*this);
    while (e > 0) {
        if (e & 1) result *= base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

MultiPoly MultiPoly::div_exact(const BigInt& k) const {
    if (k == 0) throw std::domain_error("division by zero");
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
        if (r != 0) throw std::domain_error("inexact integer division of coefficient");
        out.terms_.emplace(m, std::move(q));
    }
    return out;
}

MultiPoly MultiPoly::div_unit_monomial(const MultiPoly& unit) const {
    if (!unit.is_monomial()) throw std::domain_error("divisor is not a single term");
    const auto& [m, c] = *unit.terms_.begin();
    if (c != 1 && c != -1) throw std::domain_error("divisor coefficient is not a unit");
    Monomial inv = m.inverse();  // throws when a non-Laurent exponent flips sign
    MultiPoly out;
    for (const auto& [tm, tc] : terms_) {
        out.add_term(tm * inv, c == 1 ? tc : -tc);
    }
    return out;
}

std::set<VarKey> MultiPoly::variables() const {
    std::set<VarKey> vars;
    for (const auto& [m, c] : terms_) {
        for (const auto& [key, e] : m.factors) vars.insert(key);
    }
    return vars;
}

MultiPoly MultiPoly::substitute(const std::map<VarKey, MultiPoly>& images) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        MultiPoly acc{c};
        for (const auto& [key, e] : m.factors) {
            auto it = images.find(key);
            if (it == images.end()) {
                throw std::invalid_argument("no image for variable " + key.str());
            }
            const MultiPoly& img = it->second;
            if (e >= 0) {
                acc *= img.pow(e);
            } else {
                // Inverting the image requires a unit of the Laurent ring.
                if (!img.is_monomial()) {
                    throw std::domain_error("non-monomial image for Laurent variable " +
                                            key.str());
                }
                const auto& [im, ic] = *img.terms().begin();
                if (ic != 1 && ic != -1) {
                    throw std::domain_error("non-unit coefficient in image of Laurent variable " +
                                            key.str());
                }
                BigInt coeff = (ic == -1 && (e % 2 != 0)) ? BigInt(-1) : BigInt(1);
                acc *= MultiPoly::term(im.inverse().pow(-e), coeff);
            }
        }
        out += acc;
    }
    return out;
}

Rational MultiPoly::eval(const std::map<VarKey, Rational>& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v(c);
        for (const auto& [key, e] : m.factors) {
            auto it = point.find(key);
            if (it == point.end()) {
                throw std::invalid_argument("no value for variable " + key.str());
            }
            const Rational& x = it->second;
            if (e < 0 && x == 0) throw std::domain_error("zero raised to negative power");
            Rational p(1);
            Rational base = e < 0 ? Rational(x.get_den(), x.get_num()) : x;
            if (e < 0) base.canonicalize();
            for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= base;
            v *= p;
        }
        total += v;
    }
    return total;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_unit()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << m.str();
        }
    }
    return os.str();
}

MultiPoly poly_x() { return MultiPoly::variable(VarKey::x()); }
MultiPoly poly_y() { return MultiPoly::variable(VarKey::y()); }
MultiPoly poly_z() { return MultiPoly::variable(VarKey::z()); }

MultiPoly poly_substitute(const MultiPoly& p, const std::map<VarKey, MultiPoly>& images) {
    return p.substitute(images);
}

}  // namespace mdr
