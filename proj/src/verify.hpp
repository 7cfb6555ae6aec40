#pragma once

#include <cstdint>
#include <string>

#include "engine.hpp"
#include "graph.hpp"

namespace wildtree {

struct VerifyOptions {
    int jobs = 1;
    std::string library_path;  // optional; empty builds a fresh library when feasible
    std::uint64_t max_cycles = UINT64_C(2000000);
    std::uint64_t enumeration_cap = UINT64_C(65536);
    int max_fresh_library = 8;  // build a throwaway library up to this n
};

struct VerifyOutcome {
    bool pass = false;
    std::string report;  // one line per check
};

// Runs every applicable pipeline plus the oracles on g: tree counts must
// agree with the Kirchhoff count, and small instances additionally get
// explicit tree-set equality and row-disjointness checks.
VerifyOutcome verify_graph(const Graph& g, const VerifyOptions& opts = {});

}  // namespace wildtree
