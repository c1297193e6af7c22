#include "mdr/transfer.hpp"

#include <bit>

namespace mdr {

namespace {

// sum over matchings of G[allowed] of y^{edges} z^{isolated}.
MultiPoly column_poly(const BaseGraph& g, unsigned allowed) {
    std::vector<unsigned> usable;  // endpoint masks of edges inside `allowed`
    for (auto [u, v] : g.edges) {
        unsigned mask = (1u << u) | (1u << v);
        if ((mask & allowed) == mask) usable.push_back(mask);
    }
    const int verts = std::popcount(allowed);
    MultiPoly sum;
    auto rec = [&](auto&& self, std::size_t next, unsigned covered, int used) -> void {
        sum.add_term(Monomial::var(VarKey::y(), used) *
                         Monomial::var(VarKey::z(), verts - 2 * used),
                     BigInt(1));
        for (std::size_t e = next; e < usable.size(); ++e) {
            if (covered & usable[e]) continue;
            self(self, e + 1, covered | usable[e], used + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return sum;
}

Matrix<Rational> specialize(const TransferMatrix& t, const Rational& x, const Rational& y,
                            const Rational& z) {
    const std::map<VarKey, Rational> point{
        {VarKey::x(), x}, {VarKey::y(), y}, {VarKey::z(), z}};
    Matrix<Rational> out(t.entries.dim());
    for (int i = 0; i < out.dim(); ++i) {
        for (int j = 0; j < out.dim(); ++j) {
            out.at(i, j) = t.entries.at(i, j).eval(point);
        }
    }
    return out;
}

Rational power_entry_00(Matrix<Rational> base, long n) {
    const int dim = base.dim();
    Matrix<Rational> acc = Matrix<Rational>::identity(dim, Rational(1));
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc.at(0, 0);
}

}  // namespace

TransferMatrix build_transfer(const BaseGraph& g) {
    g.validate();
    if (g.m > 20) {
        throw mdr_error("size_guard", "transfer matrix guard: base graph has " +
                                          std::to_string(g.m) + " vertices > 20");
    }
    const int dim = 1 << g.m;
    const unsigned full = static_cast<unsigned>(dim - 1);
    std::vector<MultiPoly> col(static_cast<std::size_t>(dim));
    for (unsigned mask = 0; mask < static_cast<unsigned>(dim); ++mask) {
        col[mask] = column_poly(g, mask);
    }
    TransferMatrix t;
    t.m = g.m;
    t.entries = Matrix<MultiPoly>(dim);
    for (unsigned a = 0; a < static_cast<unsigned>(dim); ++a) {
        for (unsigned b = 0; b < static_cast<unsigned>(dim); ++b) {
            if (a & b) continue;  // stays zero
            t.entries.at(static_cast<int>(a), static_cast<int>(b)) =
                MultiPoly::term(Monomial::var(VarKey::x(), std::popcount(b)), BigInt(1)) *
                col[full & ~(a | b)];
        }
    }
    return t;
}

BigInt count_fast(const BaseGraph& g, long n) {
    if (n < 0) {
        throw mdr_error("domain",
                        "count_fast requires n >= 0; use the recurrence module for n < 0");
    }
    Rational value = count_specialized(g, n, Rational(1), Rational(1), Rational(1));
    return value.get_num();  // integral at (1,1,1)
}

Rational count_specialized(const BaseGraph& g, long n, const Rational& x, const Rational& y,
                           const Rational& z) {
    if (n < 0) throw mdr_error("domain", "count_specialized requires n >= 0");
    TransferMatrix t = build_transfer(g);
    return power_entry_00(specialize(t, x, y, z), n);
}

std::vector<MultiPoly> series_scalar(const BaseGraph& g, int count) {
    if (count < 0) throw mdr_error("domain", "series_scalar: negative count");
    TransferMatrix t = build_transfer(g);
    const int dim = t.entries.dim();
    std::vector<MultiPoly> row(static_cast<std::size_t>(dim));
    row[0] = MultiPoly(BigInt(1));
    std::vector<MultiPoly> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        out.push_back(row[0]);
        std::vector<MultiPoly> next(static_cast<std::size_t>(dim));
        for (int b = 0; b < dim; ++b) {
            MultiPoly acc;
            for (int a = 0; a < dim; ++a) {
                if (row[static_cast<std::size_t>(a)].is_zero()) continue;
                acc += row[static_cast<std::size_t>(a)] * t.entries.at(a, b);
            }
            next[static_cast<std::size_t>(b)] = std::move(acc);
        }
        row = std::move(next);
    }
    return out;
}

std::vector<Rational> count_sequence(const BaseGraph& g, int count, const Rational& x,
                                     const Rational& y, const Rational& z) {
    if (count < 0) throw mdr_error("domain", "count_sequence: negative count");
    TransferMatrix t = build_transfer(g);
    Matrix<Rational> s = specialize(t, x, y, z);
    const int dim = s.dim();
    std::vector<Rational> row(static_cast<std::size_t>(dim), Rational(0));
    row[0] = Rational(1);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        out.push_back(row[0]);
        std::vector<Rational> next(static_cast<std::size_t>(dim), Rational(0));
        for (int b = 0; b < dim; ++b) {
            Rational acc(0);
            for (int a = 0; a < dim; ++a) {
                if (row[static_cast<std::size_t>(a)] == 0) continue;
                acc += row[static_cast<std::size_t>(a)] * s.at(a, b);
            }
            next[static_cast<std::size_t>(b)] = acc;
        }
        row = std::move(next);
    }
    return out;
}

RationalFunction genfunc(const BaseGraph& g) {
    if (g.m > 6) {
        throw mdr_error("size_guard", "genfunc guard: base graph has " +
                                          std::to_string(g.m) + " vertices > 6");
    }
    TransferMatrix t = build_transfer(g);
    TPoly denom = det_identity_minus_t(t.entries);
    TPoly numer = det_identity_minus_t(t.entries.minor_at(0, 0));
    return make_ratfun(std::move(numer), std::move(denom));
}

Recurrence recurrence_from_charpoly(const TransferMatrix& t, const Rational& x,
                                    const Rational& y, const Rational& z) {
    std::vector<Rational> cp = char_poly_rational(specialize(t, x, y, z));
    const int k = static_cast<int>(cp.size()) - 1;
    std::vector<Rational> coeffs(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) coeffs[static_cast<std::size_t>(i - 1)] = -cp[static_cast<std::size_t>(k - i)];
    return make_recurrence(std::move(coeffs));
}

std::vector<MultiPoly> symbolic_recurrence(const TransferMatrix& t) {
    TPoly cp = char_poly(t.entries);
    const int k = cp.degree();
    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) coeffs[static_cast<std::size_t>(i - 1)] = -cp.coeff(k - i);
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

}  // namespace mdr
