#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mdr/bigint.hpp"
#include "mdr/errors.hpp"
#include "mdr/multipoly.hpp"
#include "mdr/signed_graph.hpp"

namespace mdr {

// The oracle is exponential by design; refuse anything that could run away.
// The acceptance sweeps need up to 39 edges (G x P_{-6} over C3).
inline constexpr int kOracleMaxEdges = 40;
inline constexpr int kOracleMaxVertices = 64;

struct Matching {
    std::vector<int> edge_ids;  // strictly increasing
};

struct Census {
    BigInt positive{0};
    BigInt negative{0};
};

namespace detail {

struct EnumState {
    std::uint64_t covered = 0;     // bitmask over vertex ids
    int covered_empty = 0;
    int covered_anti = 0;
    int anti_vedges = 0;           // AntiVedge edges in the current matching
    std::vector<int> edge_ids;
};

void check_oracle_guard(const SignedGraph& h);

// Visits every matching exactly once, in lexicographic order of its edge-id
// set (the empty matching first). Visitor sees the running EnumState.
template <class Visitor>
void visit_matchings(const SignedGraph& h, Visitor&& visit) {
    check_oracle_guard(h);
    const auto& edges = h.edges;
    const int ne = static_cast<int>(edges.size());
    std::vector<std::uint64_t> edge_mask(edges.size());
    for (int e = 0; e < ne; ++e) {
        edge_mask[static_cast<std::size_t>(e)] =
            (std::uint64_t(1) << edges[static_cast<std::size_t>(e)].u) |
            (std::uint64_t(1) << edges[static_cast<std::size_t>(e)].v);
    }
    EnumState st;
    auto touch = [&](int e, int dir) {
        const auto& ed = edges[static_cast<std::size_t>(e)];
        if (ed.kind == EdgeKind::AntiVedge) st.anti_vedges += dir;
        for (int v : {ed.u, ed.v}) {
            switch (h.vertices[static_cast<std::size_t>(v)].kind) {
                case VertexKind::Empty: st.covered_empty += dir; break;
                case VertexKind::Anti: st.covered_anti += dir; break;
                case VertexKind::Plain: break;
            }
        }
    };
    auto rec = [&](auto&& self, int next) -> void {
        visit(static_cast<const EnumState&>(st));
        for (int e = next; e < ne; ++e) {
            if (st.covered & edge_mask[static_cast<std::size_t>(e)]) continue;
            st.covered |= edge_mask[static_cast<std::size_t>(e)];
            st.edge_ids.push_back(e);
            touch(e, +1);
            self(self, e + 1);
            touch(e, -1);
            st.edge_ids.pop_back();
            st.covered &= ~edge_mask[static_cast<std::size_t>(e)];
        }
    };
    rec(rec, 0);
}

}  // namespace detail

std::vector<Matching> enumerate_matchings(const SignedGraph& h);

// Product of component weights: {-1, 0, +1}.
int scalar_weight(const SignedGraph& h, const Matching& mu);

// Sum of scalar weights over all matchings; M(G x P_n) when h is a rectangle.
BigInt signed_count(const SignedGraph& h);

// Counts of +1 and -1 weight matchings (weight-0 ones excluded).
Census signed_census(const SignedGraph& h);

// Sum of scalar weights over matchings covering every vertex; equals the
// matching polynomial specialized at x=1, y=1, z=0.
BigInt signed_perfect_count(const SignedGraph& h);

// The formal Laurent-monomial weight w(mu); nullopt for weight-0 matchings
// (an empty vertex left uncovered).
std::optional<MultiPoly> matching_weight_formal(const SignedGraph& h, const Matching& mu);

// Sum of w(mu) over all matchings of G(m,n) with indexed variables.
MultiPoly matching_poly_formal(int m, int n);

// Same with all variables collapsed to uniform x, y, z; a Laurent polynomial
// in x when n < 0.
MultiPoly matching_poly_scalar(const BaseGraph& g, int n);

}  // namespace mdr
