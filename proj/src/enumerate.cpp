#include "mdr/enumerate.hpp"

#include <algorithm>

namespace mdr {

namespace detail {

void check_oracle_guard(const SignedGraph& h) {
    if (static_cast<int>(h.edges.size()) > kOracleMaxEdges) {
        throw mdr_error("size_guard",
                        "oracle guard: " + std::to_string(h.edges.size()) + " edges > " +
                            std::to_string(kOracleMaxEdges));
    }
    if (static_cast<int>(h.vertices.size()) > kOracleMaxVertices) {
        throw mdr_error("size_guard",
                        "oracle guard: " + std::to_string(h.vertices.size()) +
                            " vertices > " + std::to_string(kOracleMaxVertices));
    }
}

}  // namespace detail

std::vector<Matching> enumerate_matchings(const SignedGraph& h) {
    std::vector<Matching> out;
    detail::visit_matchings(h, [&](const detail::EnumState& st) {
        out.push_back({st.edge_ids});
    });
    return out;
}

int scalar_weight(const SignedGraph& h, const Matching& mu) {
    std::uint64_t covered = 0;
    int sign = 1;
    for (int e : mu.edge_ids) {
        const auto& ed = h.edges[static_cast<std::size_t>(e)];
        covered |= (std::uint64_t(1) << ed.u) | (std::uint64_t(1) << ed.v);
        sign *= weight(ed.kind);
    }
    for (std::size_t v = 0; v < h.vertices.size(); ++v) {
        if (covered & (std::uint64_t(1) << v)) continue;
        int w = weight(h.vertices[v].kind);
        if (w == 0) return 0;
        sign *= w;
    }
    return sign;
}

namespace {

// Weight of the current matching from the incremental counters alone.
inline int state_weight(const detail::EnumState& st, int total_empty, int total_anti) {
    if (st.covered_empty != total_empty) return 0;  // an uncovered needy vertex
    int parity = st.anti_vedges + (total_anti - st.covered_anti);
    return (parity & 1) ? -1 : 1;
}

}  // namespace

BigInt signed_count(const SignedGraph& h) {
    const int total_empty = h.vertex_count(VertexKind::Empty);
    const int total_anti = h.vertex_count(VertexKind::Anti);
    long pos = 0, neg = 0;
    detail::visit_matchings(h, [&](const detail::EnumState& st) {
        int w = state_weight(st, total_empty, total_anti);
        if (w > 0) {
            ++pos;
        } else if (w < 0) {
            ++neg;
        }
    });
    return BigInt(pos) - BigInt(neg);
}

Census signed_census(const SignedGraph& h) {
    const int total_empty = h.vertex_count(VertexKind::Empty);
    const int total_anti = h.vertex_count(VertexKind::Anti);
    long pos = 0, neg = 0;
    detail::visit_matchings(h, [&](const detail::EnumState& st) {
        int w = state_weight(st, total_empty, total_anti);
        if (w > 0) {
            ++pos;
        } else if (w < 0) {
            ++neg;
        }
    });
    return {BigInt(pos), BigInt(neg)};
}

BigInt signed_perfect_count(const SignedGraph& h) {
    // Forced coverage prunes far harder than the free enumeration, so this
    // path only needs the bitmask bound.
    if (static_cast<int>(h.vertices.size()) > kOracleMaxVertices ||
        static_cast<int>(h.edges.size()) > 64) {
        throw mdr_error("size_guard", "perfect-count guard: graph too large");
    }
    const int nv = static_cast<int>(h.vertices.size());
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(nv));
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        const auto& ed = h.edges[e];
        adj[static_cast<std::size_t>(ed.u)].emplace_back(static_cast<int>(e), ed.v);
        adj[static_cast<std::size_t>(ed.v)].emplace_back(static_cast<int>(e), ed.u);
    }
    long pos = 0, neg = 0;
    std::uint64_t covered = 0;
    auto rec = [&](auto&& self, int first_free, int anti_vedges) -> void {
        while (first_free < nv && (covered & (std::uint64_t(1) << first_free))) {
            ++first_free;
        }
        if (first_free == nv) {
            if (anti_vedges & 1) {
                ++neg;
            } else {
                ++pos;
            }
            return;
        }
        for (auto [e, other] : adj[static_cast<std::size_t>(first_free)]) {
            if (covered & (std::uint64_t(1) << other)) continue;
            covered |= (std::uint64_t(1) << first_free) | (std::uint64_t(1) << other);
            int av = anti_vedges +
                     (h.edges[static_cast<std::size_t>(e)].kind == EdgeKind::AntiVedge);
            self(self, first_free + 1, av);
            covered &= ~((std::uint64_t(1) << first_free) | (std::uint64_t(1) << other));
        }
    };
    rec(rec, 0, 0);
    return BigInt(pos) - BigInt(neg);
}

namespace {

inline int sgn_col(int j) { return j >= 1 ? 1 : -1; }

}  // namespace

std::optional<MultiPoly> matching_weight_formal(const SignedGraph& h, const Matching& mu) {
    std::uint64_t covered = 0;
    int sign = 1;
    Monomial mono;
    auto mul_var = [&mono](VarKey key, int exp) {
        mono = mono * Monomial::var(key, exp);
    };
    for (int e : mu.edge_ids) {
        const auto& ed = h.edges[static_cast<std::size_t>(e)];
        covered |= (std::uint64_t(1) << ed.u) | (std::uint64_t(1) << ed.v);
        if (ed.label.type != EdgeLabel::Type::Lattice) continue;  // weight-1 hedges
        if (ed.kind == EdgeKind::Hedge) {
            mul_var(VarKey::x(ed.label.row, ed.label.col), 1);
        } else {
            mul_var(VarKey::y(ed.label.row, ed.label.col), 1);
            sign *= sgn_col(ed.label.col);
        }
    }
    for (std::size_t v = 0; v < h.vertices.size(); ++v) {
        if (covered & (std::uint64_t(1) << v)) continue;
        const auto& vert = h.vertices[v];
        if (vert.kind == VertexKind::Empty) return std::nullopt;  // weight 0
        mul_var(VarKey::z(vert.label.row, vert.label.col), 1);
        sign *= sgn_col(vert.label.col);
    }
    // Definition-1 denominator: every lattice hedge with sgn(j) = -1.
    for (const auto& ed : h.edges) {
        if (ed.kind == EdgeKind::Hedge && ed.label.type == EdgeLabel::Type::Lattice &&
            sgn_col(ed.label.col) == -1) {
            mul_var(VarKey::x(ed.label.row, ed.label.col), -1);
        }
    }
    return MultiPoly::term(mono, BigInt(sign));
}

MultiPoly matching_poly_formal(int m, int n) {
    SignedGraph h = build_rectangle(path_graph(m), n);
    MultiPoly sum;
    detail::visit_matchings(h, [&](const detail::EnumState& st) {
        auto w = matching_weight_formal(h, {st.edge_ids});
        if (w) sum += *w;
    });
    return sum;
}

MultiPoly matching_poly_scalar(const BaseGraph& g, int n) {
    SignedGraph h = build_rectangle(g, n);
    const int total_empty = h.vertex_count(VertexKind::Empty);
    const int total_cells =
        h.vertex_count(VertexKind::Plain) + h.vertex_count(VertexKind::Anti);
    int labeled_hedges = 0;
    for (const auto& ed : h.edges) {
        labeled_hedges += (ed.kind == EdgeKind::Hedge &&
                           ed.label.type == EdgeLabel::Type::Lattice);
    }
    const int denom_x = n < 0 ? labeled_hedges : 0;  // all columns have sgn(j) = -1
    MultiPoly sum;
    detail::visit_matchings(h, [&](const detail::EnumState& st) {
        if (st.covered_empty != total_empty) return;
        int hedges_in = 0, vedges_in = 0;
        for (int e : st.edge_ids) {
            const auto& ed = h.edges[static_cast<std::size_t>(e)];
            if (ed.label.type != EdgeLabel::Type::Lattice) continue;
            if (ed.kind == EdgeKind::Hedge) {
                ++hedges_in;
            } else {
                ++vedges_in;
            }
        }
        int covered_cells = st.covered_anti;
        if (n > 0) {
            covered_cells = 2 * static_cast<int>(st.edge_ids.size());
        }
        const int uncovered_cells = total_cells - covered_cells;
        int sign = 1;
        if (n < 0 && ((vedges_in + uncovered_cells) & 1)) sign = -1;
        Monomial mono = Monomial::var(VarKey::x(), hedges_in - denom_x) *
                        Monomial::var(VarKey::y(), vedges_in) *
                        Monomial::var(VarKey::z(), uncovered_cells);
        sum.add_term(mono, BigInt(sign));
    });
    return sum;
}

}  // namespace mdr
