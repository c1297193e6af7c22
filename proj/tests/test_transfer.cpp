#include <doctest.h>

#include "mdr/enumerate.hpp"
#include "mdr/transfer.hpp"
#include "test_util.hpp"

using namespace mdr;
using mdr::testutil::divides_exactly;
using mdr::testutil::point_xyz;
using mdr::testutil::specialize_tpoly;
using mdr::testutil::xyz_term;

TEST_CASE("build_transfer: P1 is [[z, x], [1, 0]]") {
    TransferMatrix t = build_transfer(path_graph(1));
    REQUIRE(t.entries.dim() == 2);
    CHECK(t.entries.at(0, 0) == poly_z());
    CHECK(t.entries.at(0, 1) == poly_x());
    CHECK(t.entries.at(1, 0) == MultiPoly(BigInt(1)));
    CHECK(t.entries.at(1, 1).is_zero());
}

TEST_CASE("build_transfer: P2 entries") {
    TransferMatrix t = build_transfer(path_graph(2));
    REQUIRE(t.entries.dim() == 4);
    // one free column of P2: two monomers or the vedge
    CHECK(t.entries.at(0, 0) == xyz_term(1, 0, 0, 2) + xyz_term(1, 0, 1, 0));
    CHECK(t.entries.at(0, 0).eval(point_xyz(1, 1, 1)) == Rational(2));
    // blocked entries vanish
    CHECK(t.entries.at(1, 1).is_zero());
    CHECK(t.entries.at(3, 1).is_zero());
    // hedge weight attaches on emission: T[A][B] x^|A| = T[B][A] x^|B|
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            MultiPoly lhs = t.entries.at(a, b) *
                            MultiPoly::term(Monomial::var(VarKey::x(), __builtin_popcount(a)), BigInt(1));
            MultiPoly rhs = t.entries.at(b, a) *
                            MultiPoly::term(Monomial::var(VarKey::x(), __builtin_popcount(b)), BigInt(1));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("count_fast: known count sequences") {
    const long fib[] = {1, 1, 2, 3, 5, 8, 13};
    for (int n = 0; n <= 6; ++n) CHECK(count_fast(path_graph(1), n) == fib[n]);
    const long m2[] = {1, 2, 7, 22, 71, 228, 733, 2356};
    for (int n = 0; n <= 7; ++n) CHECK(count_fast(path_graph(2), n) == m2[n]);
    CHECK(count_fast(path_graph(2), 0) == 1);
    CHECK_THROWS_AS(count_fast(path_graph(2), -1), mdr_error);
}

TEST_CASE("oracle equivalence: transfer counts match brute force") {
    for (const BaseGraph& g :
         {path_graph(1), path_graph(2), path_graph(3), cycle_graph(3), cycle_graph(4)}) {
        for (int n = 1; n <= 4; ++n) {
            CHECK(count_fast(g, n) == signed_count(build_rectangle(g, n)));
        }
    }
}

TEST_CASE("series_scalar examples") {
    auto s1 = series_scalar(path_graph(1), 3);
    REQUIRE(s1.size() == 3);
    CHECK(s1[0] == MultiPoly(BigInt(1)));
    CHECK(s1[1] == poly_z());
    CHECK(s1[2] == poly_z() * poly_z() + poly_x());

    auto s2 = series_scalar(path_graph(2), 2);
    REQUIRE(s2.size() == 2);
    CHECK(s2[0] == MultiPoly(BigInt(1)));
    CHECK(s2[1] == xyz_term(1, 0, 0, 2) + xyz_term(1, 0, 1, 0));

    // x=y=1, z=0: a path has one perfect matching iff even length
    auto sp = series_scalar(path_graph(1), 6);
    for (int n = 0; n < 6; ++n) {
        CHECK(sp[static_cast<std::size_t>(n)].eval(point_xyz(1, 1, 0)) ==
              Rational(n % 2 == 0 ? 1 : 0));
    }
}

TEST_CASE("series_scalar equals the enumeration oracle") {
    for (int m = 1; m <= 3; ++m) {
        auto s = series_scalar(path_graph(m), 5);
        for (int n = 0; n < 5; ++n) {
            CHECK(s[static_cast<std::size_t>(n)] == matching_poly_scalar(path_graph(m), n));
        }
    }
    auto sc3 = series_scalar(cycle_graph(3), 4);
    for (int n = 0; n < 4; ++n) {
        CHECK(sc3[static_cast<std::size_t>(n)] == matching_poly_scalar(cycle_graph(3), n));
    }
}

TEST_CASE("genfunc: F_1 = 1/(1 - z t - x t^2)") {
    RationalFunction f = genfunc(path_graph(1));
    TPoly one(MultiPoly(BigInt(1)));
    TPoly want_den = one - TPoly(poly_z()).shifted(1) - TPoly(poly_x()).shifted(2);
    CHECK(ratfun_equal(f, make_ratfun(one, want_den)));

    // t^2 x / (1 - z t - x t^2) == x t^2 F_1
    auto lhs = make_ratfun(TPoly(poly_x()).shifted(2), want_den);
    auto rhs = make_ratfun(f.numer.shifted(2) * poly_x(), f.denom);
    CHECK(ratfun_equal(lhs, rhs));
}

TEST_CASE("genfunc: P2 denominator divisible by the minimal cube") {
    RationalFunction f = genfunc(path_graph(2));
    auto den = specialize_tpoly(f.denom, point_xyz(1, 1, 1));
    // 1 - 3t - t^2 + t^3 reversed from a_n = 3a_{n-1} + a_{n-2} - a_{n-3}
    std::vector<Rational> divisor{Rational(1), Rational(-3), Rational(-1), Rational(1)};
    CHECK(divides_exactly(divisor, den));
}

TEST_CASE("genfunc series reproduces series_scalar") {
    for (int m = 1; m <= 3; ++m) {
        RationalFunction f = genfunc(path_graph(m));
        auto via_series = series_coeffs(f, 6);
        auto direct = series_scalar(path_graph(m), 6);
        REQUIRE(via_series.size() == direct.size());
        for (std::size_t i = 0; i < direct.size(); ++i) CHECK(via_series[i] == direct[i]);
    }
    RationalFunction fc = genfunc(cycle_graph(3));
    auto vs = series_coeffs(fc, 5);
    auto dr = series_scalar(cycle_graph(3), 5);
    for (std::size_t i = 0; i < dr.size(); ++i) CHECK(vs[i] == dr[i]);
}

TEST_CASE("genfunc guard") {
    CHECK_THROWS_AS(genfunc(path_graph(7)), mdr_error);
}

TEST_CASE("char_poly of the P2 transfer matrix at (1,1,1)") {
    TransferMatrix t = build_transfer(path_graph(2));
    Matrix<MultiPoly> at_ones(4);
    const auto pt = point_xyz(1, 1, 1);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            at_ones.at(i, j) = MultiPoly(t.entries.at(i, j).eval(pt).get_num());
        }
    }
    TPoly cp = char_poly(at_ones);
    REQUIRE(cp.degree() == 4);
    CHECK(cp.coeff(4) == MultiPoly(BigInt(1)));  // monic
    // divisible by lambda^3 - 3 lambda^2 - lambda + 1
    auto coeffs = specialize_tpoly(cp, pt);
    std::vector<Rational> divisor{Rational(1), Rational(-1), Rational(-3), Rational(1)};
    CHECK(divides_exactly(divisor, coeffs));
}

TEST_CASE("recurrence_from_charpoly: specialized and symbolic") {
    // P1 at (1,1,1): a_n = a_{n-1} + a_{n-2}
    TransferMatrix t1 = build_transfer(path_graph(1));
    Recurrence r1 = recurrence_from_charpoly(t1, Rational(1), Rational(1), Rational(1));
    REQUIRE(r1.order() == 2);
    CHECK(r1.coeffs[0] == 1);
    CHECK(r1.coeffs[1] == 1);

    // P1 symbolic: f_n = z f_{n-1} + x f_{n-2}
    auto sym = symbolic_recurrence(t1);
    REQUIRE(sym.size() == 2);
    CHECK(sym[0] == poly_z());
    CHECK(sym[1] == poly_x());

    // P2 at (1,1,1): degree-4 recurrence annihilating 2,7,22,71,228,733
    TransferMatrix t2 = build_transfer(path_graph(2));
    Recurrence r2 = recurrence_from_charpoly(t2, Rational(1), Rational(1), Rational(1));
    REQUIRE(r2.order() == 4);
    const long seq[] = {1, 2, 7, 22, 71, 228, 733, 2356};  // M(2,0..7)
    for (int n = 4; n < 8; ++n) {
        Rational acc(0);
        for (int i = 1; i <= 4; ++i) {
            acc += r2.coeffs[static_cast<std::size_t>(i - 1)] * Rational(seq[n - i]);
        }
        CHECK(acc == Rational(seq[n]));
    }
}

TEST_CASE("charpoly recurrences annihilate the count sequences") {
    for (const BaseGraph& g : {path_graph(1), path_graph(2), path_graph(3), cycle_graph(3)}) {
        TransferMatrix t = build_transfer(g);
        Recurrence rec = recurrence_from_charpoly(t, Rational(1), Rational(1), Rational(1));
        const int k = rec.order();
        const int need = (1 << g.m) + 5 + k;
        auto seq = count_sequence(g, need, Rational(1), Rational(1), Rational(1));
        for (int n = k; n < need; ++n) {
            Rational acc(0);
            for (int i = 1; i <= k; ++i) {
                acc += rec.coeffs[static_cast<std::size_t>(i - 1)] *
                       seq[static_cast<std::size_t>(n - i)];
            }
            CHECK(acc == seq[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("count_sequence and count_specialized agree with count_fast") {
    auto seq = count_sequence(path_graph(2), 6, Rational(1), Rational(1), Rational(1));
    for (int n = 0; n < 6; ++n) {
        CHECK(seq[static_cast<std::size_t>(n)] == Rational(count_fast(path_graph(2), n)));
        CHECK(count_specialized(path_graph(2), n, Rational(1), Rational(1), Rational(1)) ==
              Rational(count_fast(path_graph(2), n)));
    }
    // dimer specialization: N(2,n) = 1,1,2,3,5
    auto dimers = count_sequence(path_graph(2), 5, Rational(1), Rational(1), Rational(0));
    const long want[] = {1, 1, 2, 3, 5};
    for (int n = 0; n < 5; ++n) CHECK(dimers[static_cast<std::size_t>(n)] == Rational(want[n]));
}

TEST_CASE("transfer guard") {
    BaseGraph big;
    big.m = 21;
    CHECK_THROWS_AS(build_transfer(big), mdr_error);
}

TEST_CASE("row sums at (1,1,1) are positive") {
    TransferMatrix t = build_transfer(path_graph(3));
    const auto pt = point_xyz(1, 1, 1);
    for (int a = 0; a < t.entries.dim(); ++a) {
        Rational row(0);
        for (int b = 0; b < t.entries.dim(); ++b) row += t.entries.at(a, b).eval(pt);
        CHECK(row > 0);
    }
}
