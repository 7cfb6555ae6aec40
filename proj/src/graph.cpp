#include "graph.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "error.hpp"

namespace wildtree {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) fail(Status::InvalidArgument, "vertex count must be at least 1");
    std::set<std::pair<int, int>> seen;
    incident_.resize(static_cast<std::size_t>(n_));
    int label = 0;
    for (auto& [u, v] : edges_) {
        ++label;
        if (u < 1 || u > n_ || v < 1 || v > n_)
            fail(Status::InvalidArgument,
                 "edge " + std::to_string(label) + ": vertex out of range 1.." + std::to_string(n_));
        if (u == v) fail(Status::InvalidArgument, "edge " + std::to_string(label) + ": self-loop rejected");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            fail(Status::InvalidArgument, "edge " + std::to_string(label) + ": duplicate edge rejected");
        incident_[static_cast<std::size_t>(u - 1)].push_back(label);
        incident_[static_cast<std::size_t>(v - 1)].push_back(label);
    }
}

EdgeSet Graph::all_edges() const {
    EdgeSet s(edge_count());
    for (int l = 1; l <= edge_count(); ++l) s.add(l);
    return s;
}

bool Graph::has_isolated_vertex() const {
    for (const auto& inc : incident_)
        if (inc.empty()) return true;
    return false;
}

void Hypergraph::validate() const {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].universe() != ground_size)
            fail(Status::InvalidArgument, "hyperedge " + std::to_string(i + 1) + ": ground set mismatch");
        if (edges[i].empty()) fail(Status::InvalidArgument, "hyperedge " + std::to_string(i + 1) + " is empty");
    }
}

Graph complete_graph(int n) {
    if (n < 2) fail(Status::InvalidArgument, "complete graph needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

int complete_label(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n || u == v) fail(Status::InvalidArgument, "invalid vertex pair");
    return (u - 1) * n - u * (u + 1) / 2 + v;
}

namespace {

// Strips comments and splits into whitespace tokens.
std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, int lineno, const char* what) {
    try {
        std::size_t pos = 0;
        int value = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        fail(Status::Parse, "line " + std::to_string(lineno) + ": expected " + what + ", got '" + tok + "'");
    }
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (n < 0) {
            if (toks.size() != 2)
                fail(Status::Parse, "line " + std::to_string(lineno) + ": expected header 'n m'");
            n = parse_int(toks[0], lineno, "vertex count");
            m = parse_int(toks[1], lineno, "edge count");
            if (n < 1) fail(Status::Parse, "line " + std::to_string(lineno) + ": vertex count must be >= 1");
            if (m < 0) fail(Status::Parse, "line " + std::to_string(lineno) + ": edge count must be >= 0");
            continue;
        }
        if (static_cast<int>(edges.size()) == m)
            fail(Status::Parse, "line " + std::to_string(lineno) + ": more than " + std::to_string(m) + " edges");
        if (toks.size() != 2) fail(Status::Parse, "line " + std::to_string(lineno) + ": expected edge 'u v'");
        int u = parse_int(toks[0], lineno, "vertex");
        int v = parse_int(toks[1], lineno, "vertex");
        edges.emplace_back(u, v);
    }
    if (n < 0) fail(Status::Parse, "empty graph file");
    if (static_cast<int>(edges.size()) != m)
        fail(Status::Parse, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    try {
        return Graph(n, std::move(edges));
    } catch (const Error& e) {
        fail(Status::Parse, e.what());
    }
}

Graph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Status::Io, "cannot open graph file '" + path + "'");
    return parse_graph(in);
}

bool is_connected(const Graph& g) { return is_connected(g, g.all_edges()); }

bool is_connected(const Graph& g, const EdgeSet& active) {
    const int n = g.vertex_count();
    if (n == 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> queue{1};
    seen[1] = 1;
    std::size_t head = 0;
    while (head < queue.size()) {
        int u = queue[head++];
        for (int l : g.incident(u)) {
            if (!active.contains(l)) continue;
            auto [a, b] = g.edge(l);
            int w = a == u ? b : a;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    return static_cast<int>(queue.size()) == n;
}

namespace {

constexpr int kMaxMincutVertices = 30;

// Connectivity of the subgraph induced on the vertex mask (bit v-1 = vertex v).
bool induced_connected(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
    if (mask == 0) return false;
    std::uint32_t start = mask & (~mask + 1);
    std::uint32_t reach = start;
    while (true) {
        std::uint32_t frontier = 0;
        std::uint32_t cur = reach;
        while (cur) {
            int v = __builtin_ctz(cur);
            cur &= cur - 1;
            frontier |= adj[static_cast<std::size_t>(v)] & mask;
        }
        frontier |= reach;
        if (frontier == reach) break;
        reach = frontier;
    }
    return reach == mask;
}

}  // namespace

Hypergraph enumerate_mincuts(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (n > kMaxMincutVertices)
        fail(Status::Limit, "mincut enumeration supports at most " + std::to_string(kMaxMincutVertices) +
                                " vertices (got " + std::to_string(n) + ")");
    if (!is_connected(g)) fail(Status::Precondition, "mincut enumeration requires a connected graph");

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int l = 1; l <= m; ++l) {
        auto [u, v] = g.edge(l);
        adj[static_cast<std::size_t>(u - 1)] |= std::uint32_t{1} << (v - 1);
        adj[static_cast<std::size_t>(v - 1)] |= std::uint32_t{1} << (u - 1);
    }
    const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;

    Hypergraph h;
    h.ground_size = m;
    // V1 always contains v1; iterate the companions of v1 by size, then
    // lexicographically, which realizes the natural order on Com(n).
    std::vector<int> pick;
    for (int k = 0; k <= n - 2; ++k) {
        pick.assign(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;  // indices into {v2..vn}
        while (true) {
            std::uint32_t v1mask = 1;  // vertex 1
            for (int i : pick) v1mask |= std::uint32_t{1} << (i + 1);
            std::uint32_t v2mask = full & ~v1mask;
            if (induced_connected(adj, v1mask) && induced_connected(adj, v2mask)) {
                EdgeSet cut(m);
                for (int l = 1; l <= m; ++l) {
                    auto [u, v] = g.edge(l);
                    bool a = (v1mask >> (u - 1)) & 1;
                    bool b = (v1mask >> (v - 1)) & 1;
                    if (a != b) cut.add(l);
                }
                h.edges.push_back(std::move(cut));
            }
            // next k-combination of {0..n-2}
            int i = k - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - 2 - (k - 1 - i)) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return h;
}

Hypergraph mincuts_natural_order(int n) { return enumerate_mincuts(complete_graph(n)); }

namespace {

struct CycleSearch {
    const Graph& g;
    std::uint64_t max_cycles;
    std::vector<EdgeSet> found;
    std::vector<int> path;        // vertices, path[0] is the anchor (minimum vertex)
    std::vector<int> path_edges;  // labels along the path
    std::vector<char> on_path;

    explicit CycleSearch(const Graph& graph, std::uint64_t limit) : g(graph), max_cycles(limit) {
        on_path.assign(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    }

    void extend(int u) {
        int s = path[0];
        for (int l : g.incident(u)) {
            auto [a, b] = g.edge(l);
            int w = a == u ? b : a;
            if (w == s) {
                // Closing edge. Each cycle is found once per direction from
                // its anchor; keep the direction with the smaller second vertex.
                if (path.size() >= 3 && path[1] < u) {
                    if (found.size() >= max_cycles)
                        fail(Status::Limit, "cycle count exceeds limit of " + std::to_string(max_cycles));
                    EdgeSet cycle(g.edge_count());
                    for (int pl : path_edges) cycle.add(pl);
                    cycle.add(l);
                    found.push_back(std::move(cycle));
                }
                continue;
            }
            if (w < s || on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            path_edges.push_back(l);
            extend(w);
            path.pop_back();
            path_edges.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    }

    void run() {
        for (int s = 1; s <= g.vertex_count(); ++s) {
            path.assign(1, s);
            path_edges.clear();
            on_path[static_cast<std::size_t>(s)] = 1;
            extend(s);
            on_path[static_cast<std::size_t>(s)] = 0;
        }
    }
};

}  // namespace

Hypergraph enumerate_cycles(const Graph& g, std::uint64_t max_cycles) {
    CycleSearch search(g, max_cycles);
    search.run();
    std::sort(search.found.begin(), search.found.end(), [](const EdgeSet& a, const EdgeSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return lex_less(a, b);
    });
    Hypergraph h;
    h.ground_size = g.edge_count();
    h.edges = std::move(search.found);
    return h;
}

Hypergraph stars(const Graph& g) {
    Hypergraph h;
    h.ground_size = g.edge_count();
    for (int v = 1; v <= g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        if (inc.empty())
            fail(Status::Precondition, "vertex " + std::to_string(v) + " is isolated; its star is empty");
        EdgeSet star(g.edge_count());
        for (int l : inc) star.add(l);
        h.edges.push_back(std::move(star));
    }
    return h;
}

}  // namespace wildtree
