#include "verify.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"
#include "library.hpp"
#include "oracles.hpp"
#include "sptrees.hpp"

namespace wildtree {

namespace {

bool no_duplicates(const std::vector<EdgeSet>& sorted_sets) {
    return std::adjacent_find(sorted_sets.begin(), sorted_sets.end()) == sorted_sets.end();
}

}  // namespace

VerifyOutcome verify_graph(const Graph& g, const VerifyOptions& opts) {
    std::ostringstream report;
    bool pass = true;
    auto check = [&](bool ok, const std::string& what) {
        report << (ok ? "ok   " : "FAIL ") << what << '\n';
        pass = pass && ok;
    };
    auto note = [&](const std::string& what) { report << "note " << what << '\n'; };

    EngineOptions engine_opts;
    engine_opts.jobs = opts.jobs;

    const mpz_class expected = kirchhoff_count(g);
    report << "kirchhoff count = " << expected.get_str() << '\n';
    if (!is_connected(g)) {
        check(expected == 0, "disconnected graph counts zero spanning trees");
        VerifyOutcome out;
        out.pass = pass;
        out.report = report.str();
        return out;
    }

    const bool small = expected <= mpz_class(static_cast<unsigned long>(opts.enumeration_cap));
    std::vector<EdgeSet> reference_trees;
    bool have_reference = false;

    // Brute-force oracle when the binomial stays within the cap.
    try {
        auto brute = brute_force_spanning_trees(g, opts.enumeration_cap);
        std::sort(brute.begin(), brute.end(), lex_less);
        check(mpz_class(static_cast<unsigned long>(brute.size())) == expected,
              "brute-force tree count matches kirchhoff");
        reference_trees = std::move(brute);
        have_reference = true;
    } catch (const Error& e) {
        if (e.status() != Status::Limit) throw;
        note(std::string("brute-force oracle skipped: ") + e.what());
    }

    // Mincut pipeline.
    try {
        auto mc = mcuts_to_sptrees(g, engine_opts);
        check(mc.summary.tree_total == expected, "mcuts tree total matches kirchhoff");
        if (small) {
            auto trees = tree_set(mc);
            check(no_duplicates(trees), "mcuts tree rows are pairwise disjoint");
            if (have_reference) check(trees == reference_trees, "mcuts tree set equals brute force");
        }
    } catch (const Error& e) {
        if (e.status() != Status::Limit) throw;
        note(std::string("mcuts pipeline skipped: ") + e.what());
    }

    // Cycle pipeline.
    try {
        auto cy = cycles_to_sptrees(g, engine_opts, opts.max_cycles);
        check(cy.summary.tree_total == expected, "cycles tree total matches kirchhoff");
        if (small) {
            auto trees = tree_set(cy);
            check(no_duplicates(trees), "cycle tree rows are pairwise disjoint");
            if (have_reference) check(trees == reference_trees, "cycle tree set equals brute force");
        }
    } catch (const Error& e) {
        if (e.status() != Status::Limit) throw;
        note(std::string("cycle pipeline skipped: ") + e.what());
    }

    // Library sieve: an explicit library file when given, else a fresh build
    // at small orders.
    try {
        Library lib;
        bool have_lib = false;
        if (!opts.library_path.empty()) {
            lib = load_library(opts.library_path);
            have_lib = true;
        } else if (g.vertex_count() <= opts.max_fresh_library) {
            lib = build_library(g.vertex_count(), kLibraryHardLimit, engine_opts);
            have_lib = true;
        } else {
            note("library sieve skipped: no library file and n too large for a fresh build");
        }
        if (have_lib) {
            auto sv = sieve(lib, g);
            check(sv.tree_total == expected, "library sieve tree total matches kirchhoff");
            if (small) {
                std::vector<EdgeSet> trees;
                for (const auto& row : sv.rows) {
                    auto sets = row_minimal_sets(row);
                    // Map Com(n) positions back to the graph's own labels.
                    for (const auto& s : sets) {
                        EdgeSet mapped(g.edge_count());
                        for (int l = 1; l <= g.edge_count(); ++l) {
                            auto [u, v] = g.edge(l);
                            if (s.contains(complete_label(lib.order(), u, v))) mapped.add(l);
                        }
                        trees.push_back(std::move(mapped));
                    }
                }
                std::sort(trees.begin(), trees.end(), lex_less);
                check(no_duplicates(trees), "sieve rows are pairwise disjoint");
                if (have_reference) check(trees == reference_trees, "sieve tree set equals brute force");
            }
        }
    } catch (const Error& e) {
        check(false, std::string("library sieve failed: ") + e.what());
    }

    VerifyOutcome out;
    out.pass = pass;
    out.report = report.str();
    return out;
}

}  // namespace wildtree
