#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdr/bigint.hpp"
#include "mdr/errors.hpp"

namespace mdr {

// a_n = c_1 a_{n-1} + ... + c_k a_{n-k}; c_k != 0 so the recurrence is
// reversible.
struct Recurrence {
    std::vector<Rational> coeffs;
    int order() const { return static_cast<int>(coeffs.size()); }
};

// Finite window of a bi-infinite sequence: values[i] is the term at lo + i.
struct SeqWindow {
    long lo = 0;
    std::vector<Rational> values;

    long hi() const { return lo + static_cast<long>(values.size()) - 1; }
    const Rational& at(long idx) const { return values.at(static_cast<std::size_t>(idx - lo)); }
};

struct IntegralityReport {
    bool integral = true;
    long offending_index = 0;  // largest index with a non-integer value
};

// Strips trailing zero coefficients; rejects the empty result.
Recurrence make_recurrence(std::vector<Rational> coeffs);

// Shortest recurrence consistent with every supplied term (Berlekamp-Massey
// over the rationals), verified against the whole input before returning.
// Supply at least twice the expected order.
Recurrence minimal_recurrence(const std::vector<Rational>& values);

// Exact fit of a fixed-order recurrence; nullopt when no such recurrence
// reproduces the supplied terms. Independent of minimal_recurrence's path.
std::optional<Recurrence> fit_recurrence(const std::vector<Rational>& values, int order);

SeqWindow extend_forward(const Recurrence& rec, const SeqWindow& w, long hi2);
SeqWindow extend_backward(const Recurrence& rec, const SeqWindow& w, long lo2);

IntegralityReport is_integral(const SeqWindow& w);

// JSON array of decimal strings; rationals as "p/q". Plain JSON numbers are
// accepted when integral.
std::vector<Rational> parse_sequence_json(const std::string& text);

}  // namespace mdr
