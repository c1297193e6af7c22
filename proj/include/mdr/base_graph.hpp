#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mdr {

// Finite simple graph over vertex ids 0..m-1; the G of the box product G x P_n.
struct BaseGraph {
    int m = 0;
    std::vector<std::pair<int, int>> edges;

    void validate() const;  // throws on loops, duplicates, out-of-range ids
};

BaseGraph path_graph(int m);
BaseGraph cycle_graph(int m);     // m >= 3
BaseGraph complete_graph(int m);

// Text format: "vertices <m>" then one "edge <u> <v>" per line; '#' comments.
BaseGraph parse_base_graph(std::istream& in);
BaseGraph load_base_graph_file(const std::string& path);

// "path:m" | "cycle:m" | "complete:m" | "file:<path>"
BaseGraph parse_base_spec(const std::string& spec);

}  // namespace mdr
