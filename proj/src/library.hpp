#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "engine.hpp"
#include "graph.hpp"
#include "row.hpp"

namespace wildtree {

// Precomputed 01e tree rows of Com(n) under the natural mincut order, in
// engine emission order, stored compactly as 64-bit position masks (which
// caps n at 11, i.e. m = 55). Column bit vectors over row indices support the
// vertical-layout sieve; they are derived data, recomputed on load.
class Library {
public:
    struct RowRef {
        std::uint64_t ones = 0;
        std::uint32_t bubble_begin = 0;
        std::uint16_t bubble_count = 0;
    };

    int order() const { return n_; }          // n
    int positions() const { return m_; }      // n(n-1)/2
    std::size_t row_count() const { return rows_.size(); }
    const mpz_class& tree_total() const { return tree_total_; }

    std::uint64_t row_ones(std::size_t i) const { return rows_[i].ones; }
    const std::uint64_t* row_bubbles(std::size_t i) const { return arena_.data() + rows_[i].bubble_begin; }
    int row_bubble_count(std::size_t i) const { return rows_[i].bubble_count; }

    // Materializes row i as a general 01e row (zeros = complement).
    Row012e row(std::size_t i) const;

    const std::vector<BitVec>& columns() const { return columns_; }

    // Builder interface (used by build_library and load_library).
    void start(int n);
    void append_row(std::uint64_t ones, const std::vector<std::uint64_t>& bubbles);
    void finish();  // computes columns and the tree total

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<RowRef> rows_;
    std::vector<std::uint64_t> arena_;
    std::vector<BitVec> columns_;
    mpz_class tree_total_;
};

inline constexpr int kLibraryHardLimit = 11;  // ones/bubble masks are single 64-bit words
inline constexpr int kLibraryDefaultBound = 9;

// Runs the mincut pipeline on Com(n) once and keeps the tree rows. Refuses
// n above `bound` (memory guard) and any n above the hard limit.
Library build_library(int n, int bound = kLibraryDefaultBound, const EngineOptions& opts = {});

// Versioned text format:
//   WILDTREE-LIB v1 n=<n> rows=<N> trees=<T> checksum=<hex>
//   O:<sorted one labels>|B:<group1>;<group2>;...
// with labels comma-separated and groups in bubble order. The checksum is
// FNV-1a 64 over the row lines.
void save_library(const Library& lib, const std::string& path);
Library load_library(const std::string& path);

// Interprets the subgraph edge set E as the 02-row with twos(r_E) = E.
// Returns the indices i with ones(r_i) disjoint from the complement of E,
// computed by OR-ing the columns of the complement.
std::vector<std::size_t> relevant_rows(const Library& lib, const EdgeSet& subgraph_mask);

// Same set computed row by row, without the column trick (test oracle).
std::vector<std::size_t> relevant_rows_naive(const Library& lib, const EdgeSet& subgraph_mask);

// Intersection of a 01e row with the 02-row of the mask: nothing when a
// bubble is swallowed by the zeros of the mask, otherwise the row with every
// bubble cut down to the mask (singletons become ones) and all positions
// outside the mask set to 0. Requires ones(r) disjoint from zeros(mask).
std::optional<Row012e> intersect_row(const Row012e& r, const EdgeSet& subgraph_mask);

struct SieveResult {
    std::vector<Row012e> rows;  // over Com(n) positions
    mpz_class tree_total = 0;
    bool spanning = true;   // no isolated vertex
    bool connected = true;
    std::size_t relevant = 0;  // candidate rows after the column sieve
};

// Sieves the library through a graph on exactly lib.order() vertices; edges
// are mapped to lexicographic Com(n) labels. The minimal sets of the
// returned rows are exactly the spanning trees of g.
SieveResult sieve(const Library& lib, const Graph& g);

// Lexicographic Com(n) mask of a graph's edge set.
EdgeSet subgraph_mask(const Library& lib, const Graph& g);

}  // namespace wildtree
