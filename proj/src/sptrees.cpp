#include "sptrees.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"

namespace wildtree {

int minimal_set_size(const Row012e& r) { return r.ones.count() + static_cast<int>(r.bubbles.size()); }

int maximal_set_size(const Row012n& r) {
    return r.length() - r.zeros.count() - static_cast<int>(r.bubbles.size());
}

template <Wildcard K>
mpz_class extremal_set_count(const BasicRow<K>& r) {
    mpz_class p = 1;
    for (const auto& b : r.bubbles) p *= b.count();
    return p;
}

namespace {

template <Wildcard K>
class SummaryAccumulator {
public:
    SummaryAccumulator(int tree_size, int m, bool want_size_counts) : tree_size_(tree_size) {
        if (want_size_counts) summary_.size_counts.assign(static_cast<std::size_t>(m) + 1, mpz_class(0));
    }

    // Returns true when the row is a tree row.
    bool add(const BasicRow<K>& row) {
        ++summary_.final_rows;
        mpz_class card = row.cardinality();
        summary_.member_total += card;
        if (card > summary_.max_capacity) summary_.max_capacity = card;
        if (!summary_.size_counts.empty()) {
            RankPoly poly = row.rank_polynomial();
            for (std::size_t i = 0; i < poly.coeff.size(); ++i) summary_.size_counts[i] += poly.coeff[i];
        }
        int size;
        if constexpr (K == Wildcard::E)
            size = minimal_set_size(row);
        else
            size = maximal_set_size(row);
        if (size == tree_size_) {
            ++summary_.tree_rows;
            summary_.tree_total += extremal_set_count(row);
            return true;
        }
        return false;
    }

    CompressSummary take() { return std::move(summary_); }

private:
    int tree_size_;
    CompressSummary summary_;
};

Row012e to_tree_row(Row012e row) {
    row.zeros |= row.twos;
    row.twos = EdgeSet(row.length());
    return row;
}

}  // namespace

McutsResult mcuts_to_sptrees(const Graph& g, const EngineOptions& opts, bool want_size_counts) {
    Hypergraph mincuts = enumerate_mincuts(g);  // checks connectivity
    McutsResult result;
    SummaryAccumulator<Wildcard::E> acc(g.vertex_count() - 1, g.edge_count(), want_size_counts);
    RowSink<Wildcard::E> sink = [&](Row012e&& row) {
        if (acc.add(row)) result.tree_rows.push_back(to_tree_row(std::move(row)));
    };
    run_engine<Wildcard::E>(mincuts, opts, sink, nullptr);
    result.summary = acc.take();
    return result;
}

CyclesResult cycles_to_sptrees(const Graph& g, const EngineOptions& opts, std::uint64_t max_cycles,
                               bool want_size_counts) {
    if (!is_connected(g)) fail(Status::Precondition, "cycle pipeline requires a connected graph");
    Hypergraph cycles = enumerate_cycles(g, max_cycles);
    CyclesResult result;
    SummaryAccumulator<Wildcard::N> acc(g.vertex_count() - 1, g.edge_count(), want_size_counts);
    RowSink<Wildcard::N> sink = [&](Row012n&& row) {
        if (acc.add(row)) result.tree_rows.push_back(std::move(row));
    };
    run_engine<Wildcard::N>(cycles, opts, sink, nullptr);
    result.summary = acc.take();
    return result;
}

EdgeCoversResult edge_covers(const Graph& g, const EngineOptions& opts) {
    Hypergraph star_family = stars(g);  // errors on isolated vertices
    EdgeCoversResult result;
    SummaryAccumulator<Wildcard::E> acc(g.vertex_count() - 1, g.edge_count(), false);
    RowSink<Wildcard::E> sink = [&](Row012e&& row) {
        acc.add(row);
        result.rows.push_back(std::move(row));
    };
    run_engine<Wildcard::E>(star_family, opts, sink, nullptr);
    result.summary = acc.take();
    result.cover_count = result.summary.member_total;
    return result;
}

ConjectureReport check_conjectures(int n, const EngineOptions& opts) {
    if (n < 2) fail(Status::InvalidArgument, "conjecture check needs n >= 2");
    Hypergraph mincuts = mincuts_natural_order(n);
    SummaryAccumulator<Wildcard::E> acc(n - 1, n * (n - 1) / 2, false);
    RowSink<Wildcard::E> sink = [&](Row012e&& row) { acc.add(row); };
    run_engine<Wildcard::E>(mincuts, opts, sink, nullptr);
    CompressSummary summary = acc.take();

    ConjectureReport rep;
    rep.n = n;
    rep.rows = summary.final_rows;
    mpz_fac_ui(rep.factorial.get_mpz_t(), static_cast<unsigned long>(n - 1));
    rep.rows_equal_factorial = mpz_class(static_cast<unsigned long>(rep.rows)) == rep.factorial;
    rep.all_tree_rows = summary.all_tree_rows();
    rep.max_capacity = summary.max_capacity;
    rep.max_capacity_equals_factorial = rep.max_capacity == rep.factorial;
    rep.tree_total = summary.tree_total;
    mpz_ui_pow_ui(rep.cayley.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n - 2));
    rep.tree_total_matches = rep.tree_total == rep.cayley;
    return rep;
}

std::string ConjectureReport::to_string() const {
    std::ostringstream out;
    out << "n=" << n << " rows=" << rows << " factorial=" << factorial.get_str()
        << " rows_equal_factorial=" << (rows_equal_factorial ? "yes" : "no")
        << " all_tree_rows=" << (all_tree_rows ? "yes" : "no")
        << " max_capacity=" << max_capacity.get_str()
        << " max_capacity_equals_factorial=" << (max_capacity_equals_factorial ? "yes" : "no")
        << " trees=" << tree_total.get_str() << " cayley=" << cayley.get_str()
        << " trees_match_cayley=" << (tree_total_matches ? "yes" : "no");
    return out.str();
}

namespace {

std::vector<EdgeSet> sorted_sets(std::vector<EdgeSet> sets) {
    std::sort(sets.begin(), sets.end(), lex_less);
    return sets;
}

}  // namespace

std::vector<EdgeSet> tree_set(const McutsResult& r) {
    std::vector<EdgeSet> all;
    for (const auto& row : r.tree_rows) {
        auto sets = row_minimal_sets(row);
        all.insert(all.end(), sets.begin(), sets.end());
    }
    return sorted_sets(std::move(all));
}

std::vector<EdgeSet> tree_set(const CyclesResult& r) {
    std::vector<EdgeSet> all;
    for (const auto& row : r.tree_rows) {
        auto sets = row_maximal_sets(row);
        all.insert(all.end(), sets.begin(), sets.end());
    }
    return sorted_sets(std::move(all));
}

template mpz_class extremal_set_count<Wildcard::E>(const Row012e&);
template mpz_class extremal_set_count<Wildcard::N>(const Row012n&);

}  // namespace wildtree
