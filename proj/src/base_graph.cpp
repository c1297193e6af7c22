#include "mdr/base_graph.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mdr {

void BaseGraph::validate() const {
    if (m < 1) throw std::invalid_argument("base graph needs at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge in base graph");
        if (u < 0 || v < 0 || u >= m || v >= m) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) {
            throw std::invalid_argument("duplicate edge in base graph");
        }
    }
}

BaseGraph path_graph(int m) {
    BaseGraph g;
    g.m = m;
    for (int i = 0; i + 1 < m; ++i) g.edges.emplace_back(i, i + 1);
    g.validate();
    return g;
}

BaseGraph cycle_graph(int m) {
    if (m < 3) throw std::invalid_argument("cycle graph needs at least 3 vertices");
    BaseGraph g;
    g.m = m;
    for (int i = 0; i < m; ++i) g.edges.emplace_back(i, (i + 1) % m);
    g.validate();
    return g;
}

BaseGraph complete_graph(int m) {
    BaseGraph g;
    g.m = m;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) g.edges.emplace_back(i, j);
    }
    g.validate();
    return g;
}

BaseGraph parse_base_graph(std::istream& in) {
    BaseGraph g;
    bool have_m = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "vertices") {
            if (have_m || !(ls >> g.m)) {
                throw std::invalid_argument("bad 'vertices' line " + std::to_string(lineno));
            }
            have_m = true;
        } else if (kw == "edge") {
            int u, v;
            if (!have_m || !(ls >> u >> v)) {
                throw std::invalid_argument("bad 'edge' line " + std::to_string(lineno));
            }
            g.edges.emplace_back(u, v);
        } else {
            throw std::invalid_argument("unknown keyword '" + kw + "' at line " +
                                        std::to_string(lineno));
        }
    }
    if (!have_m) throw std::invalid_argument("missing 'vertices' line");
    g.validate();
    return g;
}

BaseGraph load_base_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return parse_base_graph(in);
}

BaseGraph parse_base_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("base spec must look like path:m, cycle:m, complete:m "
                                    "or file:<path>");
    }
    std::string kind = spec.substr(0, colon);
    std::string arg = spec.substr(colon + 1);
    if (kind == "file") return load_base_graph_file(arg);
    int m;
    try {
        std::size_t pos = 0;
        m = std::stoi(arg, &pos);
        if (pos != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad vertex count in base spec: '" + arg + "'");
    }
    if (kind == "path") return path_graph(m);
    if (kind == "cycle") return cycle_graph(m);
    if (kind == "complete") return complete_graph(m);
    throw std::invalid_argument("unknown base graph kind: '" + kind + "'");
}

}  // namespace mdr
