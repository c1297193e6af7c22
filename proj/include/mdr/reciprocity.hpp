#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mdr/base_graph.hpp"
#include "mdr/enumerate.hpp"
#include "mdr/transfer.hpp"

namespace mdr {

// epsilon_{m,n} in N(m,-2-n) = epsilon_{m,n} N(m,n): -1 exactly when
// m = 2 (mod 4) and n is odd.
struct StanleySign {
    int m = 0;
    long n = 0;
    int epsilon = 1;
};

StanleySign stanley_sign(int m, long n);

// A checked claim instance. Failing verdicts are first-class results: both
// sides are always reported exactly.
struct Verdict {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

// M(G x P_{-n-2}) = M(G* x P_n), counted by the oracle on both sides.
Verdict check_reciprocity_I(const BaseGraph& g, int n);

// M of the left-associated adjunction equals M(G x P_{sum}).
Verdict check_adjunction(const BaseGraph& g, const std::vector<int>& ns);

// f_n(x,-y,-z) = x^{m(n+1)} f_{-n-2}(x,y,z), as exact Laurent polynomials.
Verdict check_eq1(int m, int n);

// x^m t^2 F(t,x,y,z) = -F(1/(t x^m), x, -y, -z), as exact rational functions.
Verdict check_reciprocity_II(const BaseGraph& g);

// N(m,-2-n) = epsilon_{m,n} N(m,n); perfect matchings with sign.
Verdict check_stanley_sign(int m, int n);

// M(m,n) = M(m,-2-n) (mod 2) for all 0 <= n <= nmax.
Verdict check_mod2(int m, int nmax);

std::string verdict_to_json(const Verdict& v);

}  // namespace mdr
