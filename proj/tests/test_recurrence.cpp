#include <doctest.h>

#include "mdr/enumerate.hpp"
#include "mdr/recurrence.hpp"
#include "mdr/transfer.hpp"

using namespace mdr;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("minimal_recurrence: known sequences") {
    Recurrence fib = minimal_recurrence(rationals({1, 2, 3, 5, 8, 13}));
    REQUIRE(fib.order() == 2);
    CHECK(fib.coeffs[0] == 1);
    CHECK(fib.coeffs[1] == 1);

    Recurrence m2 = minimal_recurrence(rationals({2, 7, 22, 71, 228, 733, 2356}));
    REQUIRE(m2.order() == 3);
    CHECK(m2.coeffs[0] == 3);
    CHECK(m2.coeffs[1] == 1);
    CHECK(m2.coeffs[2] == -1);

    Recurrence pow2 = minimal_recurrence(rationals({2, 4, 8, 16, 32}));
    REQUIRE(pow2.order() == 1);
    CHECK(pow2.coeffs[0] == 2);
}

TEST_CASE("minimal_recurrence error paths") {
    CHECK_THROWS_AS(minimal_recurrence(rationals({0, 0, 0, 0})), mdr_error);
    // eventually-zero: no reversible recurrence
    CHECK_THROWS_AS(minimal_recurrence(rationals({1, 0, 0, 0, 0, 0})), mdr_error);
}

TEST_CASE("minimality: no shorter recurrence fits") {
    auto values = rationals({2, 7, 22, 71, 228, 733, 2356});
    Recurrence rec = minimal_recurrence(values);
    CHECK(fit_recurrence(values, rec.order()).has_value());
    CHECK_FALSE(fit_recurrence(values, rec.order() - 1).has_value());

    // independent-route cross-check: the fitted recurrence is the same one
    auto fitted = fit_recurrence(values, 3);
    REQUIRE(fitted.has_value());
    CHECK(fitted->coeffs == rec.coeffs);
}

TEST_CASE("minimal_recurrence on rational-valued sequences") {
    // halving sequence: a_n = (1/2) a_{n-1}
    std::vector<Rational> vals{Rational(8), Rational(4), Rational(2), Rational(1),
                               make_rational(1, 2), make_rational(1, 4)};
    Recurrence rec = minimal_recurrence(vals);
    REQUIRE(rec.order() == 1);
    CHECK(rec.coeffs[0] == make_rational(1, 2));
}

TEST_CASE("extend_forward examples") {
    Recurrence fib{rationals({1, 1})};
    SeqWindow w{1, rationals({1, 2, 3})};
    SeqWindow out = extend_forward(fib, w, 5);
    CHECK(out.hi() == 5);
    CHECK(out.at(4) == 5);
    CHECK(out.at(5) == 8);

    Recurrence m2{rationals({3, 1, -1})};
    SeqWindow w2{1, rationals({2, 7, 22})};
    SeqWindow out2 = extend_forward(m2, w2, 5);
    CHECK(out2.at(4) == 71);
    CHECK(out2.at(5) == 228);

    // hi2 == hi leaves the window unchanged
    SeqWindow same = extend_forward(fib, w, w.hi());
    CHECK(same.values == w.values);
    CHECK(same.lo == w.lo);

    SeqWindow tiny{1, rationals({1})};
    CHECK_THROWS_AS(extend_forward(fib, tiny, 4), mdr_error);
}

TEST_CASE("extend_backward: bi-infinite reference windows") {
    // Fibonacci down to -7: a_0..a_-7 = 1, 0, 1, -1, 2, -3, 5, -8
    Recurrence fib{rationals({1, 1})};
    SeqWindow w{1, rationals({1, 2, 3, 5, 8})};
    SeqWindow out = extend_backward(fib, w, -7);
    const std::pair<long, long> want[] = {{0, 1},  {-1, 0}, {-2, 1},  {-3, -1},
                                          {-4, 2}, {-5, -3}, {-6, 5}, {-7, -8}};
    for (auto [idx, v] : want) CHECK(out.at(idx) == v);

    // M(2,.) down to -7: 1, 0, 1, 0, 3, 2, 11, 14
    Recurrence m2{rationals({3, 1, -1})};
    SeqWindow w2{1, rationals({2, 7, 22})};
    SeqWindow out2 = extend_backward(m2, w2, -7);
    const std::pair<long, long> want2[] = {{0, 1},  {-1, 0}, {-2, 1},  {-3, 0},
                                           {-4, 3}, {-5, 2}, {-6, 11}, {-7, 14}};
    for (auto [idx, v] : want2) CHECK(out2.at(idx) == v);

    // 2^n loses integrality at -1: a_0 = 1, a_-1 = 1/2
    Recurrence pow2{rationals({2})};
    SeqWindow w3{1, rationals({2, 4, 8})};
    SeqWindow out3 = extend_backward(pow2, w3, -1);
    CHECK(out3.at(0) == 1);
    CHECK(out3.at(-1) == make_rational(1, 2));
}

TEST_CASE("round trip: backward then forward reproduces the window") {
    Recurrence m2{rationals({3, 1, -1})};
    SeqWindow w{1, rationals({2, 7, 22, 71})};
    SeqWindow back = extend_backward(m2, w, -6);
    SeqWindow again = extend_forward(m2, SeqWindow{back.lo, {back.values.begin(),
                                                             back.values.begin() + 3}},
                                     w.hi());
    for (long idx = back.lo; idx <= w.hi(); ++idx) CHECK(again.at(idx) == back.at(idx));
}

TEST_CASE("is_integral reports the largest offending index") {
    SeqWindow ok{-7, rationals({14, 11, 2, 3, 0, 1, 0, 1, 2, 7, 22, 71, 228})};
    CHECK(is_integral(ok).integral);

    SeqWindow bad{-2, std::vector<Rational>{make_rational(1, 4), make_rational(1, 2),
                                            Rational(1), Rational(2)}};
    auto rep = is_integral(bad);
    CHECK_FALSE(rep.integral);
    CHECK(rep.offending_index == -1);

    SeqWindow empty_ext{0, rationals({5})};
    CHECK(is_integral(empty_ext).integral);
}

TEST_CASE("backward extension matches the oracle for all tested bases") {
    // the central integrality-and-meaning claim, at unit-test scale
    for (const BaseGraph& g : {path_graph(1), path_graph(2), cycle_graph(3)}) {
        const int terms = 2 * (1 << g.m) + 2;
        auto seq = count_sequence(g, terms + 1, Rational(1), Rational(1), Rational(1));
        std::vector<Rational> values(seq.begin() + 1, seq.end());  // n = 1..terms
        Recurrence rec = minimal_recurrence(values);
        SeqWindow w{1, values};
        SeqWindow ext = extend_backward(rec, w, -4);
        for (int n = -1; n >= -4; --n) {
            CHECK(ext.at(n) == Rational(signed_count(build_rectangle(g, n))));
        }
    }
}

TEST_CASE("backward integrality for m <= 4 over n >= -8") {
    for (int m = 1; m <= 4; ++m) {
        const BaseGraph g = path_graph(m);
        const int terms = 2 * (1 << m) + 2;
        auto seq = count_sequence(g, terms + 1, Rational(1), Rational(1), Rational(1));
        std::vector<Rational> values(seq.begin() + 1, seq.end());
        Recurrence rec = minimal_recurrence(values);
        SeqWindow ext = extend_backward(rec, SeqWindow{1, values}, -8);
        CHECK(is_integral(ext).integral);
    }
}

TEST_CASE("sequence JSON parsing") {
    auto v = parse_sequence_json(R"(["2", "7", "22/1", "1/2"])");
    REQUIRE(v.size() == 4);
    CHECK(v[0] == 2);
    CHECK(v[3] == make_rational(1, 2));
    auto nums = parse_sequence_json("[2, 7, 22]");
    CHECK(nums[2] == 22);
    CHECK_THROWS_AS(parse_sequence_json("{\"a\":1}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sequence_json("[1.5]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sequence_json("not json"), std::invalid_argument);
}
