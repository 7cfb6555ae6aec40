#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "graph.hpp"
#include "row.hpp"

namespace wildtree {

struct EngineOptions {
    int jobs = 1;
    bool skip_satisfied = true;
    std::uint64_t max_rows = UINT64_C(100000000);
};

struct EngineStats {
    std::uint64_t impositions = 0;
    std::uint64_t finalized = 0;
    std::size_t peak_stack = 0;
};

// A pending row tagged with the index of the first constraint not yet
// imposed on it. Items are independent of each other, which is what makes
// the stack distributable.
template <Wildcard K>
struct WorkItem {
    BasicRow<K> row;
    std::size_t next = 0;
};

// True when every member of the row already meets the constraint: for E rows
// when a fixed 1 lies in it, for N rows when a fixed 0 lies in it or some
// bubble is contained in it.
template <Wildcard K>
bool constraint_satisfied(const BasicRow<K>& r, const EdgeSet& constraint);

// Splits r into pairwise disjoint children whose union is exactly the set of
// members meeting the constraint. Children are ordered by their supplier
// group: bubbles with a nonempty constraint part in bubble order, then the
// twos part. An empty result means no member qualifies.
template <Wildcard K>
std::vector<BasicRow<K>> impose(const BasicRow<K>& r, const EdgeSet& constraint);

inline std::vector<Row012e> impose_transversal(const Row012e& r, const EdgeSet& h) { return impose(r, h); }
inline std::vector<Row012n> impose_noncover(const Row012n& r, const EdgeSet& c) { return impose(r, c); }

// Removes hyperedges that are supersets of other hyperedges (first of equal
// pairs wins); transversals and noncovers are unchanged. Skipped above an
// internal size limit, where inputs are pipeline-generated antichains.
Hypergraph drop_supersets(const Hypergraph& h);

template <Wildcard K>
using RowSink = std::function<void(BasicRow<K>&&)>;

// LIFO engine: pops an item, fast-forwards over satisfied constraints,
// imposes the first pending one and pushes the children in reverse emission
// order, so they pop in emission order. Rows whose index reaches the end are
// final and go to the sink. With jobs > 1 the stack is split after a
// sequential prefix and the per-item subtrees run on worker threads; finals
// are re-serialized into the exact sequential emission order, so the sink
// never needs to be thread-safe.
template <Wildcard K>
void run_engine(const Hypergraph& h, const EngineOptions& opts, const RowSink<K>& sink,
                EngineStats* stats = nullptr);

std::vector<Row012e> compress_transversals(const Hypergraph& h, const EngineOptions& opts = {},
                                           EngineStats* stats = nullptr);
std::vector<Row012n> compress_noncovers(const Hypergraph& h, const EngineOptions& opts = {},
                                        EngineStats* stats = nullptr);

}  // namespace wildtree
