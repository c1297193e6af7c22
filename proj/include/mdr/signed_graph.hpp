#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "mdr/base_graph.hpp"

namespace mdr {

// Scalar weights: Plain +1, Anti -1, Empty 0; Hedge +1, Vedge +1, AntiVedge -1.
enum class VertexKind : unsigned char { Plain, Anti, Empty };
enum class EdgeKind : unsigned char { Hedge, Vedge, AntiVedge };

int weight(VertexKind k);
int weight(EdgeKind k);
const char* name(VertexKind k);
const char* name(EdgeKind k);

// Lattice vertices carry (row, col); boundary empty vertices carry a side + row.
struct VertexLabel {
    enum class Type : unsigned char { Cell, BoundaryLeft, BoundaryRight };
    Type type = Type::Cell;
    int row = 0;
    int col = 0;  // unused for boundary labels

    friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
    std::string str() const;
};

// Hedge labels (i,j) name the variable x_{i,j} joining columns j and j+1.
// Vedge labels (e,j) name y_{e,j} for base-graph edge index e (1-based) in
// column j; for path bases this coincides with the top row index. Boundary hedges
// (incident to empty vertices) and seam hedges added by adjunction carry
// weight 1 and no variable.
struct EdgeLabel {
    enum class Type : unsigned char { Lattice, Boundary, Seam };
    Type type = Type::Lattice;
    int row = 0;
    int col = 0;

    friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
    std::string str(EdgeKind kind) const;
};

struct SignedGraph {
    struct Vertex {
        VertexKind kind;
        VertexLabel label;
    };
    struct Edge {
        int u;
        int v;
        EdgeKind kind;
        EdgeLabel label;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    // Adjunction interface: the facing column of each side, ordered by base
    // vertex (empty boundary column for n <= 0 parts, outer copy of G
    // otherwise). Cleared when no longer meaningful.
    std::vector<int> left_boundary;
    std::vector<int> right_boundary;

    int base_m = 0;                // vertex count of the base graph
    std::optional<int> rect_n;     // set when this is exactly G x P_n as built

    int vertex_count(VertexKind k) const;
    int edge_count(EdgeKind k) const;
    int degree(int v) const;
    void check_consistent() const;  // throws on dangling edge endpoints
};

// G x P_n for any integer n. n > 0: n plain copies of G joined by hedges.
// n < 0: |n| conjugated copies (columns labeled 0, -1, ..., n+1 right to
// left) flanked by empty columns wired to the outer anti columns. n = 0: the
// empty bridge, m hedges joining left and right empty columns directly.
SignedGraph build_rectangle(const BaseGraph& g, int n);

// Swap Plain<->Anti and Vedge<->AntiVedge; hedges and empty vertices unchanged.
SignedGraph conjugate(const SignedGraph& h);

// Join the facing boundary columns of two parts with m new hedges. When both
// parts are positively built rectangles over the same base, the result is
// relabeled to the canonical G x P_{n1+n2}.
SignedGraph adjoin(const SignedGraph& h1, const SignedGraph& h2);

// Replace the path a -hedge- empty -hedge- empty -hedge- b by one hedge a-b.
SignedGraph contract_empty_path(const SignedGraph& h, int a, int b);

// Structural equality keyed by construction labels (order-insensitive).
bool labeled_equal(const SignedGraph& a, const SignedGraph& b);

std::string to_json(const SignedGraph& h);
std::string to_dot(const SignedGraph& h);

}  // namespace mdr
