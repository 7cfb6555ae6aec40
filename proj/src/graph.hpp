#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"

namespace wildtree {

// Labeled simple undirected graph. Vertices are 1..n; edge labels are the
// 1-based positions in the edge list, so the input order is significant.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::pair<int, int> edge(int label) const { return edges_[static_cast<std::size_t>(label - 1)]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Labels of the edges incident to v.
    const std::vector<int>& incident(int v) const { return incident_[static_cast<std::size_t>(v - 1)]; }

    EdgeSet all_edges() const;
    bool has_isolated_vertex() const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> incident_;
};

// Ground set {1..m} plus an ordered list of nonempty hyperedges; the order is
// the imposition order of the row engines.
struct Hypergraph {
    int ground_size = 0;
    std::vector<EdgeSet> edges;

    void validate() const;  // throws on an empty hyperedge
};

Graph complete_graph(int n);

// Lexicographic Com(n) edge label of {u,v}, u != v, both in 1..n.
int complete_label(int n, int u, int v);

// Graph file format: first non-comment line "n m", then m lines "u v"
// (1-based). '#' starts a comment. Edge label = 1-based order of appearance.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph parse_graph_file(const std::string& path);

bool is_connected(const Graph& g);
bool is_connected(const Graph& g, const EdgeSet& active);

// One EdgeSet per good partition V = V1 (+) V2 with v1 in V1, both sides
// inducing connected subgraphs. Ordered by |V1| ascending, then V1 in
// lexicographic order of sorted vertex indices; for Com(n) this is the
// natural order.
Hypergraph enumerate_mincuts(const Graph& g);

// Mincuts of Com(n) in natural order.
Hypergraph mincuts_natural_order(int n);

// All simple cycles as EdgeSets, sorted by (cardinality, lexicographic label
// order). Throws Status::Limit when more than max_cycles are found.
Hypergraph enumerate_cycles(const Graph& g, std::uint64_t max_cycles = UINT64_C(2000000));

// star(v) for each vertex in index order; errors on an isolated vertex.
Hypergraph stars(const Graph& g);

}  // namespace wildtree
