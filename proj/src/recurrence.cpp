#include "mdr/recurrence.hpp"

#include <json.hpp>

#include <algorithm>

namespace mdr {

Recurrence make_recurrence(std::vector<Rational> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) {
        throw mdr_error("degenerate",
                        "eventually-zero sequence: no reversible recurrence exists");
    }
    return {std::move(coeffs)};
}

namespace {

// Does the recurrence reproduce values[n] for all n >= order?
bool reproduces(const std::vector<Rational>& coeffs, const std::vector<Rational>& values) {
    const std::size_t k = coeffs.size();
    for (std::size_t n = k; n < values.size(); ++n) {
        Rational acc(0);
        for (std::size_t i = 1; i <= k; ++i) acc += coeffs[i - 1] * values[n - i];
        if (acc != values[n]) return false;
    }
    return true;
}

}  // namespace

Recurrence minimal_recurrence(const std::vector<Rational>& values) {
    if (std::all_of(values.begin(), values.end(), [](const Rational& v) { return v == 0; })) {
        throw mdr_error("degenerate", "identically zero sequence");
    }
    // Berlekamp-Massey over Q. The connection polynomial c satisfies
    // s[n] + sum_{i=1..L} c[i] s[n-i] = 0 for L <= n < N.
    const std::size_t n_terms = values.size();
    std::vector<Rational> c{Rational(1)}, b{Rational(1)};
    std::size_t len = 0, gap = 1;
    Rational last_disc(1);
    for (std::size_t n = 0; n < n_terms; ++n) {
        Rational d = values[n];
        for (std::size_t i = 1; i <= len; ++i) d += c[i] * values[n - i];
        if (d == 0) {
            ++gap;
            continue;
        }
        Rational coef = d / last_disc;
        if (2 * len <= n) {
            std::vector<Rational> keep = c;
            c.resize(std::max(c.size(), b.size() + gap), Rational(0));
            for (std::size_t i = 0; i < b.size(); ++i) c[i + gap] -= coef * b[i];
            len = n + 1 - len;
            b = std::move(keep);
            last_disc = d;
            gap = 1;
        } else {
            c.resize(std::max(c.size(), b.size() + gap), Rational(0));
            for (std::size_t i = 0; i < b.size(); ++i) c[i + gap] -= coef * b[i];
            ++gap;
        }
    }
    std::vector<Rational> coeffs(len);
    for (std::size_t i = 1; i <= len; ++i) {
        coeffs[i - 1] = i < c.size() ? -c[i] : Rational(0);
    }
    Recurrence rec = make_recurrence(std::move(coeffs));
    if (!reproduces(rec.coeffs, values)) {
        throw mdr_error("inconsistency",
                        "recurrence synthesis failed to reproduce the supplied terms");
    }
    return rec;
}

std::optional<Recurrence> fit_recurrence(const std::vector<Rational>& values, int order) {
    if (order < 1) return std::nullopt;
    const std::size_t k = static_cast<std::size_t>(order);
    if (values.size() < k + 1) return std::nullopt;
    // Rows: [s[n-1] ... s[n-k] | s[n]] for n = k..N-1; Gauss-Jordan over Q.
    std::vector<std::vector<Rational>> rows;
    for (std::size_t n = k; n < values.size(); ++n) {
        std::vector<Rational> row(k + 1);
        for (std::size_t i = 1; i <= k; ++i) row[i - 1] = values[n - i];
        row[k] = values[n];
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < k && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        Rational inv = Rational(1) / rows[rank][col];
        for (auto& v : rows[rank]) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rational f = rows[r][col];
            for (std::size_t cc = 0; cc <= k; ++cc) rows[r][cc] -= f * rows[rank][cc];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (rows[r][k] != 0) return std::nullopt;  // inconsistent
    }
    std::vector<Rational> coeffs(k, Rational(0));  // free variables set to zero
    for (std::size_t r = 0; r < rank; ++r) coeffs[pivot_col[r]] = rows[r][k];
    if (!reproduces(coeffs, values)) return std::nullopt;
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) return std::nullopt;
    return Recurrence{std::move(coeffs)};
}

SeqWindow extend_forward(const Recurrence& rec, const SeqWindow& w, long hi2) {
    const int k = rec.order();
    if (static_cast<long>(w.values.size()) < k) {
        throw mdr_error("insufficient_data", "window shorter than the recurrence order");
    }
    if (hi2 < w.hi()) throw mdr_error("domain", "extend_forward: hi2 < window hi");
    SeqWindow out = w;
    for (long idx = w.hi() + 1; idx <= hi2; ++idx) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i) acc += rec.coeffs[static_cast<std::size_t>(i - 1)] * out.at(idx - i);
        out.values.push_back(acc);
    }
    return out;
}

SeqWindow extend_backward(const Recurrence& rec, const SeqWindow& w, long lo2) {
    const int k = rec.order();
    if (static_cast<long>(w.values.size()) < k) {
        throw mdr_error("insufficient_data", "window shorter than the recurrence order");
    }
    if (lo2 > w.lo) throw mdr_error("domain", "extend_backward: lo2 > window lo");
    SeqWindow out = w;
    for (long idx = w.lo - 1; idx >= lo2; --idx) {
        // Solve a_{idx} from a_{idx+k} = c_1 a_{idx+k-1} + ... + c_k a_{idx}.
        Rational acc = out.at(idx + k);
        for (int i = 1; i < k; ++i) acc -= rec.coeffs[static_cast<std::size_t>(i - 1)] * out.at(idx + k - i);
        acc /= rec.coeffs[static_cast<std::size_t>(k - 1)];
        out.values.insert(out.values.begin(), acc);
        out.lo = idx;
    }
    return out;
}

IntegralityReport is_integral(const SeqWindow& w) {
    IntegralityReport rep;
    for (long idx = w.lo; idx <= w.hi(); ++idx) {
        if (!is_integer(w.at(idx))) {
            rep.integral = false;
            rep.offending_index = idx;  // ends at the largest offending index
        }
    }
    return rep;
}

std::vector<Rational> parse_sequence_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bad sequence JSON: ") + e.what());
    }
    if (!doc.is_array()) throw std::invalid_argument("sequence JSON must be an array");
    std::vector<Rational> out;
    for (const auto& item : doc) {
        if (item.is_string()) {
            out.push_back(parse_rational(item.get<std::string>()));
        } else if (item.is_number_integer()) {
            out.push_back(Rational(static_cast<long>(item.get<long long>())));
        } else {
            throw std::invalid_argument(
                "sequence entries must be decimal strings (\"p\" or \"p/q\")");
        }
    }
    return out;
}

}  // namespace mdr
