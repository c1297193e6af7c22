#pragma once

#include <vector>

#include "mdr/base_graph.hpp"
#include "mdr/charpoly.hpp"
#include "mdr/errors.hpp"
#include "mdr/matrix.hpp"
#include "mdr/multipoly.hpp"
#include "mdr/recurrence.hpp"
#include "mdr/tpoly.hpp"

namespace mdr {

// Column transfer matrix indexed by vertex subsets of the base graph.
// T[A][B] = x^|B| * sum over matchings mu of G[V \ (A u B)] of
// y^|mu| z^{#isolated}, and 0 when A and B intersect. A is the set of
// vertices already covered by a hedge from the previous column, B the set
// sending a hedge to the next column; rows/cols are bitmask-indexed.
struct TransferMatrix {
    int m = 0;
    Matrix<MultiPoly> entries;
};

TransferMatrix build_transfer(const BaseGraph& g);  // guard: m <= 20

// (T^n)[empty][empty] at x=y=z=1; the number of matchings of G x P_n for
// n > 0 and 1 for n = 0. Negative n is a domain error (use the recurrence
// module for backward extension).
BigInt count_fast(const BaseGraph& g, long n);

// Same with an arbitrary exact specialization of (x, y, z).
Rational count_specialized(const BaseGraph& g, long n, const Rational& x,
                           const Rational& y, const Rational& z);

// [f_0, ..., f_{count-1}] as polynomials in the uniform x, y, z.
std::vector<MultiPoly> series_scalar(const BaseGraph& g, int count);

// Prefix of the count sequence [M(0)=1, M(1), ..., M(count-1)] at a given
// specialization, computed by iterated matrix-vector products.
std::vector<Rational> count_sequence(const BaseGraph& g, int count, const Rational& x,
                                     const Rational& y, const Rational& z);

// F(t,x,y,z) = det(I - tT minus the empty row/column) / det(I - tT);
// the generating function sum_{n>=0} f_n t^n. Guard: m <= 6.
RationalFunction genfunc(const BaseGraph& g);

// Recurrence read off the characteristic polynomial of T specialized at
// (x, y, z); annihilates the count sequence, possibly non-minimally.
Recurrence recurrence_from_charpoly(const TransferMatrix& t, const Rational& x,
                                    const Rational& y, const Rational& z);

// Same with polynomial coefficients: f_n = c_1 f_{n-1} + ... + c_k f_{n-k}.
std::vector<MultiPoly> symbolic_recurrence(const TransferMatrix& t);

}  // namespace mdr
