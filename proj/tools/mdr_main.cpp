// mdr: exact monomer-dimer matching counts, recurrences, and reciprocity
// checks for generalized rectangles G x P_n over any integer n.
//
// One JSON document per invocation on stdout. Exit codes: 0 success (all
// verdicts pass), 1 verdict failure, 2 usage or guard error.

#include <CLI11.hpp>
#include <json.hpp>

#include <climits>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mdr/base_graph.hpp"
#include "mdr/enumerate.hpp"
#include "mdr/reciprocity.hpp"
#include "mdr/recurrence.hpp"
#include "mdr/signed_graph.hpp"
#include "mdr/transfer.hpp"

using json = nlohmann::ordered_json;

namespace {

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

[[noreturn]] void fail(const std::string& code, const std::string& detail) {
    json doc;
    doc["error"] = {{"code", code}, {"detail", detail}};
    emit(doc);
    std::exit(2);
}

// "a..b" (inclusive) or a single integer.
std::vector<long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) return {std::stol(s)};
        long a = std::stol(s.substr(0, dots));
        long b = std::stol(s.substr(dots + 2));
        if (b < a) throw std::invalid_argument(s);
        std::vector<long> out;
        for (long v = a; v <= b; ++v) out.push_back(v);
        return out;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + s + "' (want INT or A..B)");
    }
}

// comma-separated ranges: "2,-3,1" or "-3..3,-3..3" (cartesian product)
std::vector<std::vector<int>> parse_int_lists(const std::string& s) {
    std::vector<std::vector<long>> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(parse_range(item));
    if (parts.empty()) throw std::invalid_argument("empty list");
    std::vector<std::vector<int>> out{{}};
    for (const auto& choices : parts) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : out) {
            for (long c : choices) {
                auto row = prefix;
                row.push_back(static_cast<int>(c));
                next.push_back(std::move(row));
            }
        }
        out = std::move(next);
    }
    return out;
}

// Rectangles built explicitly (oracle counting, censuses, polynomials, graph
// export) are capped before construction; counting guards alone would fire
// only after a huge allocation.
void check_rect_size(int m, long n) {
    const long cols = n < 0 ? -n : n;
    if (cols > 100000 || m * (cols + 2) > 2000000) {
        throw mdr::mdr_error("size_guard", "rectangle too large to materialize");
    }
}

mdr::SignedGraph build_for_cli(const mdr::BaseGraph& g, long n) {
    check_rect_size(g.m, n);
    return mdr::build_rectangle(g, static_cast<int>(n));
}

int int_checked(long v) {
    if (v < INT_MIN || v > INT_MAX) {
        throw std::invalid_argument("index out of range: " + std::to_string(v));
    }
    return static_cast<int>(v);
}

mdr::BigInt count_via_recurrence(const mdr::BaseGraph& g, long n) {
    const int terms = 2 * (1 << g.m) + 2;
    auto seq = mdr::count_sequence(g, terms + 1, mdr::Rational(1), mdr::Rational(1),
                                   mdr::Rational(1));
    std::vector<mdr::Rational> values(seq.begin() + 1, seq.end());
    mdr::Recurrence rec = mdr::minimal_recurrence(values);
    mdr::SeqWindow w{1, values};
    if (n < 1) w = mdr::extend_backward(rec, w, n);
    if (n > w.hi()) w = mdr::extend_forward(rec, w, n);
    mdr::Rational v = w.at(n);
    if (!mdr::is_integer(v)) {
        throw mdr::mdr_error("non_integral", "recurrence extension gave " + mdr::to_string(v));
    }
    return v.get_num();
}

int run_verify(const std::string& claim, std::vector<mdr::Verdict> verdicts) {
    bool all = true;
    json arr = json::array();
    for (const auto& v : verdicts) {
        all = all && v.pass;
        arr.push_back(json::parse(mdr::verdict_to_json(v)));
    }
    json doc;
    doc["claim"] = claim;
    doc["verdicts"] = arr;
    doc["pass"] = all;
    emit(doc);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matching counts and reciprocity checks for G x P_n"};
    app.require_subcommand(1);

    std::string base_spec = "path:1";
    long n_arg = 0;
    std::string method = "auto";
    int m_arg = 1;
    bool formal = false;
    int terms_arg = 0;
    std::string seq_file;
    long lo_arg = 0, hi_arg = 0;
    long start_arg = 1;
    bool dot = false;
    std::string range_arg = "0..4";
    std::string ns_arg;
    int nmax_arg = 5;

    auto* count = app.add_subcommand("count", "signed matching count M(G x P_n)");
    count->add_option("--base", base_spec, "base graph (path:m|cycle:m|complete:m|file:PATH)")
        ->required();
    count->add_option("--n", n_arg, "index n (any integer)")->required();
    count->add_option("--method", method, "oracle|transfer|recurrence|auto")
        ->check(CLI::IsMember({"oracle", "transfer", "recurrence", "auto"}));

    auto* census = app.add_subcommand("census", "positive/negative matching census");
    census->add_option("--base", base_spec)->required();
    census->add_option("--n", n_arg)->required();

    auto* poly = app.add_subcommand("poly", "matching polynomial of G(m,n)");
    poly->add_option("--m", m_arg)->required();
    poly->add_option("--n", n_arg)->required();
    poly->add_flag("--formal", formal, "indexed variables x[i,j], y[i,j], z[i,j]");

    auto* genfunc_cmd = app.add_subcommand("genfunc", "rational generating function F(t,x,y,z)");
    genfunc_cmd->add_option("--base", base_spec)->required();

    auto* recurrence_cmd = app.add_subcommand("recurrence", "minimal recurrence of the count sequence");
    recurrence_cmd->add_option("--base", base_spec)->required();
    recurrence_cmd->add_option("--terms", terms_arg, "terms to synthesize from (default 2*2^m+2)");

    auto* extend = app.add_subcommand("extend", "extend a sequence by its minimal recurrence");
    extend->add_option("--seq", seq_file, "JSON array of decimal strings")->required();
    extend->add_option("--lo", lo_arg)->required();
    extend->add_option("--hi", hi_arg)->required();
    extend->add_option("--start", start_arg, "index of the first supplied term (default 1)");

    auto* graph = app.add_subcommand("graph", "emit the signed graph G x P_n");
    graph->add_option("--base", base_spec)->required();
    graph->add_option("--n", n_arg)->required();
    graph->add_flag("--dot", dot, "DOT output instead of JSON");

    auto* verify = app.add_subcommand("verify", "machine-check a claim");
    verify->require_subcommand(1);
    auto* v_rec1 = verify->add_subcommand("reciprocity1", "M(G x P_{-n-2}) = M(G* x P_n)");
    v_rec1->add_option("--base", base_spec)->required();
    v_rec1->add_option("--n", range_arg, "n or range a..b");
    auto* v_adj = verify->add_subcommand("adjunction", "M(chain) = M(G x P_{sum})");
    v_adj->add_option("--base", base_spec)->required();
    v_adj->add_option("--ns", ns_arg, "comma list of indices; ranges sweep")->required();
    auto* v_eq1 = verify->add_subcommand("eq1", "f_n(x,-y,-z) = x^{m(n+1)} f_{-n-2}(x,y,z)");
    v_eq1->add_option("--m", m_arg)->required();
    v_eq1->add_option("--n", range_arg, "n or range a..b");
    auto* v_rec2 = verify->add_subcommand("reciprocity2",
                                          "x^m t^2 F(t,x,y,z) = -F(1/(t x^m),x,-y,-z)");
    v_rec2->add_option("--base", base_spec)->required();
    auto* v_stanley = verify->add_subcommand("stanley", "N(m,-2-n) = epsilon N(m,n)");
    v_stanley->add_option("--m", m_arg)->required();
    v_stanley->add_option("--n", range_arg, "n or range a..b");
    auto* v_mod2 = verify->add_subcommand("mod2", "M(m,n) = M(m,-2-n) mod 2");
    v_mod2->add_option("--m", m_arg)->required();
    v_mod2->add_option("--nmax", nmax_arg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        fail("usage", e.what());
    }

    try {
        if (*count) {
            const mdr::BaseGraph g = mdr::parse_base_spec(base_spec);
            std::string used = method;
            mdr::BigInt value;
            if (method == "auto") used = n_arg >= 0 ? "transfer" : "recurrence";
            if (used == "oracle") {
                value = mdr::signed_count(build_for_cli(g, n_arg));
            } else if (used == "transfer") {
                value = mdr::count_fast(g, n_arg);
            } else {
                value = count_via_recurrence(g, n_arg);
            }
            json doc;
            doc["n"] = n_arg;
            doc["value"] = mdr::to_string(value);
            doc["method"] = used;
            emit(doc);
            return 0;
        }
        if (*census) {
            const mdr::BaseGraph g = mdr::parse_base_spec(base_spec);
            mdr::Census c = mdr::signed_census(build_for_cli(g, n_arg));
            json doc;
            doc["n"] = n_arg;
            doc["positive"] = mdr::to_string(c.positive);
            doc["negative"] = mdr::to_string(c.negative);
            emit(doc);
            return 0;
        }
        if (*poly) {
            check_rect_size(m_arg, n_arg);
            mdr::MultiPoly p = formal
                                   ? mdr::matching_poly_formal(m_arg, int_checked(n_arg))
                                   : mdr::matching_poly_scalar(mdr::path_graph(m_arg),
                                                               int_checked(n_arg));
            json doc;
            doc["m"] = m_arg;
            doc["n"] = n_arg;
            doc["formal"] = formal;
            doc["poly"] = p.str();
            emit(doc);
            return 0;
        }
        if (*genfunc_cmd) {
            const mdr::BaseGraph g = mdr::parse_base_spec(base_spec);
            mdr::RationalFunction f = mdr::genfunc(g);
            json doc;
            doc["base"] = base_spec;
            doc["numer"] = f.numer.str();
            doc["denom"] = f.denom.str();
            emit(doc);
            return 0;
        }
        if (*recurrence_cmd) {
            const mdr::BaseGraph g = mdr::parse_base_spec(base_spec);
            const int terms = terms_arg > 0 ? terms_arg : 2 * (1 << g.m) + 2;
            auto seq = mdr::count_sequence(g, terms + 1, mdr::Rational(1), mdr::Rational(1),
                                           mdr::Rational(1));
            std::vector<mdr::Rational> values(seq.begin() + 1, seq.end());
            mdr::Recurrence rec = mdr::minimal_recurrence(values);
            json coeffs = json::array();
            for (const auto& c : rec.coeffs) coeffs.push_back(mdr::to_string(c));
            json doc;
            doc["base"] = base_spec;
            doc["order"] = rec.order();
            doc["coeffs"] = coeffs;
            doc["terms_used"] = terms;
            emit(doc);
            return 0;
        }
        if (*extend) {
            std::ifstream in(seq_file);
            if (!in) fail("usage", "cannot open sequence file: " + seq_file);
            std::stringstream buf;
            buf << in.rdbuf();
            auto values = mdr::parse_sequence_json(buf.str());
            mdr::Recurrence rec = mdr::minimal_recurrence(values);
            mdr::SeqWindow w{start_arg, values};
            if (lo_arg > w.lo || hi_arg < w.hi()) {
                fail("usage", "[lo, hi] must contain the supplied window");
            }
            w = mdr::extend_backward(rec, w, lo_arg);
            w = mdr::extend_forward(rec, w, hi_arg);
            auto rep = mdr::is_integral(w);
            json coeffs = json::array();
            for (const auto& c : rec.coeffs) coeffs.push_back(mdr::to_string(c));
            json vals = json::array();
            for (long idx = w.lo; idx <= w.hi(); ++idx) vals.push_back(mdr::to_string(w.at(idx)));
            json doc;
            doc["recurrence"] = coeffs;
            doc["lo"] = w.lo;
            doc["hi"] = w.hi();
            doc["values"] = vals;
            doc["integral"] = rep.integral;
            if (!rep.integral) doc["first_nonintegral_index"] = rep.offending_index;
            emit(doc);
            return 0;
        }
        if (*graph) {
            const mdr::BaseGraph g = mdr::parse_base_spec(base_spec);
            mdr::SignedGraph h = build_for_cli(g, n_arg);
            if (dot) {
                std::cout << mdr::to_dot(h);
            } else {
                std::cout << json::parse(mdr::to_json(h)).dump(2) << "\n";
            }
            return 0;
        }
        if (*verify) {
            if (*v_rec1) {
                const mdr::BaseGraph g = mdr::parse_base_spec(base_spec);
                std::vector<mdr::Verdict> vs;
                for (long n : parse_range(range_arg)) {
                    vs.push_back(mdr::check_reciprocity_I(g, int_checked(n)));
                }
                return run_verify("reciprocity1", std::move(vs));
            }
            if (*v_adj) {
                const mdr::BaseGraph g = mdr::parse_base_spec(base_spec);
                std::vector<mdr::Verdict> vs;
                for (const auto& ns : parse_int_lists(ns_arg)) {
                    vs.push_back(mdr::check_adjunction(g, ns));
                }
                return run_verify("adjunction", std::move(vs));
            }
            if (*v_eq1) {
                std::vector<mdr::Verdict> vs;
                for (long n : parse_range(range_arg)) {
                    vs.push_back(mdr::check_eq1(m_arg, int_checked(n)));
                }
                return run_verify("eq1", std::move(vs));
            }
            if (*v_rec2) {
                const mdr::BaseGraph g = mdr::parse_base_spec(base_spec);
                return run_verify("reciprocity2", {mdr::check_reciprocity_II(g)});
            }
            if (*v_stanley) {
                std::vector<mdr::Verdict> vs;
                for (long n : parse_range(range_arg)) {
                    vs.push_back(mdr::check_stanley_sign(m_arg, int_checked(n)));
                }
                return run_verify("stanley", std::move(vs));
            }
            if (*v_mod2) {
                return run_verify("mod2", {mdr::check_mod2(m_arg, nmax_arg)});
            }
        }
    } catch (const mdr::mdr_error& e) {
        fail(e.code(), e.what());
    } catch (const std::invalid_argument& e) {
        fail("usage", e.what());
    } catch (const std::domain_error& e) {
        fail("domain", e.what());
    }
    fail("usage", "no subcommand executed");
}
