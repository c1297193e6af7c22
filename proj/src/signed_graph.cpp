#include "mdr/signed_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace mdr {

int weight(VertexKind k) {
    switch (k) {
        case VertexKind::Plain: return 1;
        case VertexKind::Anti: return -1;
        case VertexKind::Empty: return 0;
    }
    return 0;
}

int weight(EdgeKind k) { return k == EdgeKind::AntiVedge ? -1 : 1; }

const char* name(VertexKind k) {
    switch (k) {
        case VertexKind::Plain: return "plain";
        case VertexKind::Anti: return "anti";
        case VertexKind::Empty: return "empty";
    }
    return "?";
}

const char* name(EdgeKind k) {
    switch (k) {
        case EdgeKind::Hedge: return "hedge";
        case EdgeKind::Vedge: return "vedge";
        case EdgeKind::AntiVedge: return "antivedge";
    }
    return "?";
}

std::string VertexLabel::str() const {
    switch (type) {
        case Type::Cell:
            return "v(" + std::to_string(row) + "," + std::to_string(col) + ")";
        case Type::BoundaryLeft: return "empty(L," + std::to_string(row) + ")";
        case Type::BoundaryRight: return "empty(R," + std::to_string(row) + ")";
    }
    return "?";
}

std::string EdgeLabel::str(EdgeKind kind) const {
    switch (type) {
        case Type::Lattice: {
            const char* var = kind == EdgeKind::Hedge ? "x" : "y";
            return std::string(var) + "(" + std::to_string(row) + "," +
                   std::to_string(col) + ")";
        }
        case Type::Boundary: return "boundary";
        case Type::Seam: return "seam";
    }
    return "?";
}

int SignedGraph::vertex_count(VertexKind k) const {
    int n = 0;
    for (const auto& v : vertices) n += (v.kind == k);
    return n;
}

int SignedGraph::edge_count(EdgeKind k) const {
    int n = 0;
    for (const auto& e : edges) n += (e.kind == k);
    return n;
}

int SignedGraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges) d += (e.u == v) + (e.v == v);
    return d;
}

void SignedGraph::check_consistent() const {
    const int n = static_cast<int>(vertices.size());
    for (const auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
            throw std::logic_error("signed graph edge with bad endpoints");
        }
    }
    for (int v : left_boundary) {
        if (v < 0 || v >= n) throw std::logic_error("bad left boundary id");
    }
    for (int v : right_boundary) {
        if (v < 0 || v >= n) throw std::logic_error("bad right boundary id");
    }
}

SignedGraph build_rectangle(const BaseGraph& g, int n) {
    g.validate();
    const int m = g.m;
    SignedGraph h;
    h.base_m = m;
    h.rect_n = n;

    auto cell = [m](int i, int j_index) { return j_index * m + (i - 1); };

    if (n > 0) {
        for (int jc = 0; jc < n; ++jc) {
            for (int i = 1; i <= m; ++i) {
                h.vertices.push_back({VertexKind::Plain,
                                      {VertexLabel::Type::Cell, i, jc + 1}});
            }
        }
        for (int jc = 0; jc < n; ++jc) {
            for (std::size_t e = 0; e < g.edges.size(); ++e) {
                auto [u, v] = g.edges[e];
                h.edges.push_back({cell(u + 1, jc), cell(v + 1, jc), EdgeKind::Vedge,
                                   {EdgeLabel::Type::Lattice, static_cast<int>(e) + 1,
                                    jc + 1}});
            }
        }
        for (int jc = 0; jc + 1 < n; ++jc) {
            for (int i = 1; i <= m; ++i) {
                h.edges.push_back({cell(i, jc), cell(i, jc + 1), EdgeKind::Hedge,
                                   {EdgeLabel::Type::Lattice, i, jc + 1}});
            }
        }
        for (int i = 1; i <= m; ++i) {
            h.left_boundary.push_back(cell(i, 0));
            h.right_boundary.push_back(cell(i, n - 1));
        }
    } else if (n == 0) {
        for (int i = 1; i <= m; ++i) {
            h.vertices.push_back({VertexKind::Empty,
                                  {VertexLabel::Type::BoundaryLeft, i, 0}});
        }
        for (int i = 1; i <= m; ++i) {
            h.vertices.push_back({VertexKind::Empty,
                                  {VertexLabel::Type::BoundaryRight, i, 0}});
        }
        for (int i = 0; i < m; ++i) {
            h.edges.push_back({i, m + i, EdgeKind::Hedge, {EdgeLabel::Type::Boundary, 0, 0}});
            h.left_boundary.push_back(i);
            h.right_boundary.push_back(m + i);
        }
    } else {
        const int k = -n;  // columns labeled j = n+1 .. 0, left to right
        for (int jc = 0; jc < k; ++jc) {
            const int j = n + 1 + jc;
            for (int i = 1; i <= m; ++i) {
                h.vertices.push_back({VertexKind::Anti, {VertexLabel::Type::Cell, i, j}});
            }
        }
        for (int jc = 0; jc < k; ++jc) {
            const int j = n + 1 + jc;
            for (std::size_t e = 0; e < g.edges.size(); ++e) {
                auto [u, v] = g.edges[e];
                h.edges.push_back({cell(u + 1, jc), cell(v + 1, jc), EdgeKind::AntiVedge,
                                   {EdgeLabel::Type::Lattice, static_cast<int>(e) + 1, j}});
            }
        }
        for (int jc = 0; jc + 1 < k; ++jc) {
            const int j = n + 1 + jc;  // hedge x_{i,j} joins columns j and j+1
            for (int i = 1; i <= m; ++i) {
                h.edges.push_back({cell(i, jc), cell(i, jc + 1), EdgeKind::Hedge,
                                   {EdgeLabel::Type::Lattice, i, j}});
            }
        }
        const int base = k * m;
        for (int i = 1; i <= m; ++i) {
            h.vertices.push_back({VertexKind::Empty,
                                  {VertexLabel::Type::BoundaryLeft, i, 0}});
        }
        for (int i = 1; i <= m; ++i) {
            h.vertices.push_back({VertexKind::Empty,
                                  {VertexLabel::Type::BoundaryRight, i, 0}});
        }
        for (int i = 1; i <= m; ++i) {
            h.edges.push_back({base + (i - 1), cell(i, 0), EdgeKind::Hedge,
                               {EdgeLabel::Type::Boundary, 0, 0}});
            h.edges.push_back({base + m + (i - 1), cell(i, k - 1), EdgeKind::Hedge,
                               {EdgeLabel::Type::Boundary, 0, 0}});
            h.left_boundary.push_back(base + (i - 1));
            h.right_boundary.push_back(base + m + (i - 1));
        }
    }
    h.check_consistent();
    return h;
}

SignedGraph conjugate(const SignedGraph& h) {
    SignedGraph out = h;
    out.rect_n.reset();  // a conjugated rectangle is not G x P_n for any n
    for (auto& v : out.vertices) {
        if (v.kind == VertexKind::Plain) {
            v.kind = VertexKind::Anti;
        } else if (v.kind == VertexKind::Anti) {
            v.kind = VertexKind::Plain;
        }
    }
    for (auto& e : out.edges) {
        if (e.kind == EdgeKind::Vedge) {
            e.kind = EdgeKind::AntiVedge;
        } else if (e.kind == EdgeKind::AntiVedge) {
            e.kind = EdgeKind::Vedge;
        }
    }
    return out;
}

SignedGraph adjoin(const SignedGraph& h1, const SignedGraph& h2) {
    if (h1.base_m != h2.base_m || h1.base_m == 0) {
        throw std::invalid_argument("adjoin: parts built over different base graphs");
    }
    if (h1.right_boundary.size() != static_cast<std::size_t>(h1.base_m) ||
        h2.left_boundary.size() != static_cast<std::size_t>(h2.base_m)) {
        throw std::invalid_argument("adjoin: part has no usable boundary column");
    }

    const bool canonical = h1.rect_n && h2.rect_n && *h1.rect_n > 0 && *h2.rect_n > 0;
    const int shift = canonical ? *h1.rect_n : 0;

    SignedGraph out;
    out.base_m = h1.base_m;
    out.vertices = h1.vertices;
    const int off = static_cast<int>(h1.vertices.size());
    for (auto v : h2.vertices) {
        if (canonical && v.label.type == VertexLabel::Type::Cell) v.label.col += shift;
        out.vertices.push_back(v);
    }
    out.edges = h1.edges;
    for (auto e : h2.edges) {
        e.u += off;
        e.v += off;
        if (canonical && e.label.type == EdgeLabel::Type::Lattice) e.label.col += shift;
        out.edges.push_back(e);
    }
    for (int i = 0; i < h1.base_m; ++i) {
        EdgeLabel lab = canonical
                            ? EdgeLabel{EdgeLabel::Type::Lattice, i + 1, shift}
                            : EdgeLabel{EdgeLabel::Type::Seam, 0, 0};
        out.edges.push_back({h1.right_boundary[i], h2.left_boundary[i] + off,
                             EdgeKind::Hedge, lab});
    }
    out.left_boundary = h1.left_boundary;
    for (int v : h2.right_boundary) out.right_boundary.push_back(v + off);
    if (canonical) out.rect_n = *h1.rect_n + *h2.rect_n;
    out.check_consistent();
    return out;
}

SignedGraph contract_empty_path(const SignedGraph& h, int a, int b) {
    const int n = static_cast<int>(h.vertices.size());
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
        throw std::invalid_argument("contract_empty_path: bad vertex ids");
    }
    // Find hedges a-p, p-q, q-b with p, q empty.
    auto hedge_between = [&h](int u, int v) -> int {
        for (std::size_t i = 0; i < h.edges.size(); ++i) {
            const auto& e = h.edges[i];
            if (e.kind != EdgeKind::Hedge) continue;
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
                return static_cast<int>(i);
            }
        }
        return -1;
    };
    int p = -1, q = -1, e1 = -1, e2 = -1, e3 = -1;
    for (int pc = 0; pc < n && p < 0; ++pc) {
        if (h.vertices[pc].kind != VertexKind::Empty) continue;
        int f1 = hedge_between(a, pc);
        if (f1 < 0) continue;
        for (int qc = 0; qc < n; ++qc) {
            if (qc == pc || h.vertices[qc].kind != VertexKind::Empty) continue;
            int f2 = hedge_between(pc, qc);
            if (f2 < 0) continue;
            int f3 = hedge_between(qc, b);
            if (f3 < 0) continue;
            p = pc;
            q = qc;
            e1 = f1;
            e2 = f2;
            e3 = f3;
            break;
        }
    }
    if (p < 0) {
        throw std::invalid_argument(
            "contract_empty_path: no hedge-empty-hedge-empty-hedge path between the "
            "given vertices");
    }

    SignedGraph out;
    out.base_m = h.base_m;
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (v == p || v == q) continue;
        remap[static_cast<std::size_t>(v)] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(h.vertices[v]);
    }
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        if (static_cast<int>(i) == e1 || static_cast<int>(i) == e2 ||
            static_cast<int>(i) == e3) {
            continue;
        }
        auto e = h.edges[i];
        e.u = remap[static_cast<std::size_t>(e.u)];
        e.v = remap[static_cast<std::size_t>(e.v)];
        if (e.u < 0 || e.v < 0) {
            throw std::invalid_argument("contract_empty_path: path vertices carry extra edges");
        }
        out.edges.push_back(e);
    }
    out.edges.push_back({remap[static_cast<std::size_t>(a)],
                         remap[static_cast<std::size_t>(b)], EdgeKind::Hedge,
                         {EdgeLabel::Type::Seam, 0, 0}});
    // Boundaries survive only if untouched by the contraction.
    auto remap_boundary = [&remap](const std::vector<int>& src, std::vector<int>& dst) {
        for (int v : src) {
            if (remap[static_cast<std::size_t>(v)] < 0) {
                dst.clear();
                return;
            }
            dst.push_back(remap[static_cast<std::size_t>(v)]);
        }
    };
    remap_boundary(h.left_boundary, out.left_boundary);
    remap_boundary(h.right_boundary, out.right_boundary);
    out.check_consistent();
    return out;
}

namespace {

using VKey = std::pair<VertexLabel, VertexKind>;
using EKey = std::tuple<VertexLabel, VertexLabel, EdgeKind, EdgeLabel>;

}  // namespace

bool labeled_equal(const SignedGraph& a, const SignedGraph& b) {
    auto vertex_key = [](const SignedGraph& g) {
        std::set<VKey> keys;
        for (const auto& v : g.vertices) {
            if (!keys.insert({v.label, v.kind}).second) {
                throw std::invalid_argument("labeled_equal: duplicate vertex label");
            }
        }
        return keys;
    };
    auto edge_key = [](const SignedGraph& g) {
        std::multiset<EKey> keys;
        for (const auto& e : g.edges) {
            VertexLabel lu = g.vertices[static_cast<std::size_t>(e.u)].label;
            VertexLabel lv = g.vertices[static_cast<std::size_t>(e.v)].label;
            if (lv < lu) std::swap(lu, lv);
            keys.insert({lu, lv, e.kind, e.label});
        }
        return keys;
    };
    return vertex_key(a) == vertex_key(b) && edge_key(a) == edge_key(b);
}

std::string to_json(const SignedGraph& h) {
    std::ostringstream os;
    os << "{\"vertices\":[";
    for (std::size_t i = 0; i < h.vertices.size(); ++i) {
        const auto& v = h.vertices[i];
        if (i) os << ",";
        os << "{\"id\":" << i << ",\"kind\":\"" << name(v.kind) << "\",\"label\":\""
           << v.label.str() << "\"}";
    }
    os << "],\"edges\":[";
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const auto& e = h.edges[i];
        if (i) os << ",";
        os << "{\"u\":" << e.u << ",\"v\":" << e.v << ",\"kind\":\"" << name(e.kind)
           << "\",\"label\":\"" << e.label.str(e.kind) << "\"}";
    }
    os << "]}";
    return os.str();
}

std::string to_dot(const SignedGraph& h) {
    std::ostringstream os;
    os << "graph signed {\n";
    for (std::size_t i = 0; i < h.vertices.size(); ++i) {
        const auto& v = h.vertices[i];
        const char* shape = v.kind == VertexKind::Plain ? "circle"
                            : v.kind == VertexKind::Anti ? "box"
                                                         : "diamond";
        os << "  n" << i << " [shape=" << shape << ",label=\"" << v.label.str()
           << "\"];\n";
    }
    for (const auto& e : h.edges) {
        const char* style = e.kind == EdgeKind::Hedge ? "solid"
                            : e.kind == EdgeKind::Vedge ? "bold"
                                                        : "dashed";
        os << "  n" << e.u << " -- n" << e.v << " [style=" << style << ",label=\""
           << e.label.str(e.kind) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace mdr
