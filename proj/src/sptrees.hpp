#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "engine.hpp"
#include "graph.hpp"
#include "row.hpp"

namespace wildtree {

// Totals accumulated over the final rows of one engine run.
struct CompressSummary {
    std::uint64_t final_rows = 0;
    mpz_class member_total = 0;   // sum of row cardinalities
    mpz_class max_capacity = 0;   // largest row cardinality
    std::uint64_t tree_rows = 0;  // rows whose minimal/maximal sets have n-1 edges
    mpz_class tree_total = 0;     // sum over tree rows of prod |bubble|
    std::vector<mpz_class> size_counts;  // c_i: members of cardinality i (when requested)
    EngineStats engine;

    bool all_tree_rows() const { return tree_rows == final_rows; }
};

// Number of edges in every minimal (E) resp. maximal (N) set of the row.
int minimal_set_size(const Row012e& r);
int maximal_set_size(const Row012n& r);

// Product of bubble sizes = number of minimal (maximal) sets.
template <Wildcard K>
mpz_class extremal_set_count(const BasicRow<K>& r);

// Tree rows: final rows of the mincut run with |ones| + #bubbles = n-1, twos
// moved into zeros. Their row-minimal sets are exactly the spanning trees.
struct McutsResult {
    std::vector<Row012e> tree_rows;
    CompressSummary summary;
};
McutsResult mcuts_to_sptrees(const Graph& g, const EngineOptions& opts = {}, bool want_size_counts = false);

// Dual pipeline over the cycle hypergraph: final rows with
// m - |zeros| - #bubbles = n-1 keep their role as tree rows; their
// row-maximal sets are exactly the spanning trees.
struct CyclesResult {
    std::vector<Row012n> tree_rows;
    CompressSummary summary;
};
CyclesResult cycles_to_sptrees(const Graph& g, const EngineOptions& opts = {},
                               std::uint64_t max_cycles = UINT64_C(2000000), bool want_size_counts = false);

// Transversals of the vertex stars = edge sets without isolated vertices.
struct EdgeCoversResult {
    std::vector<Row012e> rows;
    mpz_class cover_count;
    CompressSummary summary;
};
EdgeCoversResult edge_covers(const Graph& g, const EngineOptions& opts = {});

// Natural-order run on Com(n), reporting the observations behind the two
// row-count conjectures. Never asserts them.
struct ConjectureReport {
    int n = 0;
    std::uint64_t rows = 0;
    mpz_class factorial;  // (n-1)!
    bool rows_equal_factorial = false;
    bool all_tree_rows = false;
    mpz_class max_capacity;
    bool max_capacity_equals_factorial = false;
    mpz_class tree_total;
    mpz_class cayley;  // n^(n-2)
    bool tree_total_matches = false;

    std::string to_string() const;
};
ConjectureReport check_conjectures(int n, const EngineOptions& opts = {});

// Explicit spanning-tree sets, sorted lexicographically.
std::vector<EdgeSet> tree_set(const McutsResult& r);
std::vector<EdgeSet> tree_set(const CyclesResult& r);

}  // namespace wildtree
