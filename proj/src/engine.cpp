#include "engine.hpp"

#include <atomic>
#include <mutex>
#include <optional>
#include <thread>

#include "error.hpp"

namespace wildtree {

template <Wildcard K>
bool constraint_satisfied(const BasicRow<K>& r, const EdgeSet& constraint) {
    if constexpr (K == Wildcard::E) {
        return r.ones.intersects(constraint);
    } else {
        if (r.zeros.intersects(constraint)) return true;
        for (const auto& b : r.bubbles)
            if (b.subset_of(constraint)) return true;
        return false;
    }
}

template <Wildcard K>
std::vector<BasicRow<K>> impose(const BasicRow<K>& r, const EdgeSet& constraint) {
    std::vector<BasicRow<K>> children;
    if (constraint_satisfied(r, constraint)) {
        children.push_back(r);
        return children;
    }

    // Positions that can supply the required symbol: a new 1 cannot sit on a
    // zero (E), a new 0 cannot sit on a one (N). The satisfied check above
    // guarantees the remaining positions lie in bubbles or twos.
    EdgeSet active = constraint;
    if constexpr (K == Wildcard::E)
        active.subtract(r.zeros);
    else
        active.subtract(r.ones);

    // Supplier groups: bubbles with a nonempty active part, in bubble order,
    // then the active part of the twos.
    struct Group {
        int bubble;  // index into r.bubbles, or -1 for the twos group
        EdgeSet part;
    };
    std::vector<Group> groups;
    for (std::size_t i = 0; i < r.bubbles.size(); ++i) {
        EdgeSet part = r.bubbles[i] & active;
        if (!part.empty()) groups.push_back({static_cast<int>(i), std::move(part)});
    }
    {
        EdgeSet part = r.twos & active;
        if (!part.empty()) groups.push_back({-1, std::move(part)});
    }
    if (groups.empty()) return children;  // no member meets the constraint

    const int m = r.length();
    for (std::size_t k = 0; k < groups.size(); ++k) {
        // Child k: group k is the first supplier; the parts of earlier groups
        // carry the opposite symbol.
        BasicRow<K> child;
        child.zeros = r.zeros;
        child.ones = r.ones;
        child.twos = r.twos;
        child.bubbles.reserve(r.bubbles.size() + 1);

        auto put_forced = [&](const EdgeSet& s) {
            if constexpr (K == Wildcard::E)
                child.ones |= s;
            else
                child.zeros |= s;
        };
        auto put_blocked = [&](const EdgeSet& s) {
            if constexpr (K == Wildcard::E)
                child.zeros |= s;
            else
                child.ones |= s;
        };

        std::size_t g = 0;  // walks groups alongside the bubble list
        for (std::size_t i = 0; i < r.bubbles.size(); ++i) {
            if (g < groups.size() && groups[g].bubble == static_cast<int>(i)) {
                const Group& grp = groups[g];
                if (g < k) {
                    // Earlier group: its part cannot supply; the rest of the
                    // bubble keeps the wildcard constraint.
                    put_blocked(grp.part);
                    EdgeSet rem = r.bubbles[i];
                    rem.subtract(grp.part);
                    if (rem.count() == 1)
                        put_forced(rem);
                    else
                        child.bubbles.push_back(std::move(rem));
                } else if (g == k) {
                    // Supplier bubble: the part becomes a new wildcard
                    // (appended below); the rest of the bubble is freed.
                    EdgeSet rem = r.bubbles[i];
                    rem.subtract(grp.part);
                    child.twos |= rem;
                } else {
                    child.bubbles.push_back(r.bubbles[i]);
                }
                ++g;
            } else {
                child.bubbles.push_back(r.bubbles[i]);
            }
        }
        if (groups[k].bubble < 0) child.twos.subtract(groups[k].part);
        if (groups[k].part.count() == 1)
            put_forced(groups[k].part);
        else
            child.bubbles.push_back(groups[k].part);

        (void)m;
        children.push_back(std::move(child));

        // A later child would force this whole bubble to the blocked symbol,
        // contradicting its own wildcard: stop emitting.
        if (groups[k].bubble >= 0 &&
            groups[k].part == r.bubbles[static_cast<std::size_t>(groups[k].bubble)])
            break;
    }
    return children;
}

namespace {

constexpr std::size_t kPreprocessLimit = 10000;

}  // namespace

Hypergraph drop_supersets(const Hypergraph& h) {
    if (h.edges.size() > kPreprocessLimit) return h;
    Hypergraph out;
    out.ground_size = h.ground_size;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < h.edges.size() && !drop; ++j) {
            if (j == i) continue;
            if (!h.edges[j].subset_of(h.edges[i])) continue;
            if (h.edges[j] == h.edges[i]) {
                if (j < i) drop = true;
            } else {
                drop = true;
            }
        }
        if (!drop) out.edges.push_back(h.edges[i]);
    }
    return out;
}

namespace {

template <Wildcard K, typename SinkT>
void run_item(const Hypergraph& h, WorkItem<K> start, const EngineOptions& opts, SinkT&& sink,
              EngineStats& stats, std::atomic<std::uint64_t>& total_rows) {
    std::vector<WorkItem<K>> stack;
    stack.push_back(std::move(start));
    while (!stack.empty()) {
        stats.peak_stack = std::max(stats.peak_stack, stack.size());
        WorkItem<K> item = std::move(stack.back());
        stack.pop_back();
        std::size_t next = item.next;
        if (opts.skip_satisfied)
            while (next < h.edges.size() && constraint_satisfied(item.row, h.edges[next])) ++next;
        if (next == h.edges.size()) {
            ++stats.finalized;
            if (total_rows.fetch_add(1, std::memory_order_relaxed) + 1 > opts.max_rows)
                fail(Status::Limit, "row limit of " + std::to_string(opts.max_rows) + " exceeded");
            sink(std::move(item.row));
            continue;
        }
        ++stats.impositions;
        auto children = impose(item.row, h.edges[next]);
        for (auto it = children.rbegin(); it != children.rend(); ++it)
            stack.push_back(WorkItem<K>{std::move(*it), next + 1});
    }
}

// Reorder buffer: subtree results arrive in any order but are flushed to the
// sink strictly by item index, reproducing the sequential emission order.
template <Wildcard K>
class OrderedFlush {
public:
    OrderedFlush(const RowSink<K>& sink, std::size_t items) : sink_(sink), pending_(items) {}

    void deliver(std::size_t index, std::vector<BasicRow<K>> rows) {
        std::lock_guard<std::mutex> lock(mu_);
        pending_[index] = std::move(rows);
        while (next_ < pending_.size() && pending_[next_].has_value()) {
            for (auto& row : *pending_[next_]) sink_(std::move(row));
            pending_[next_].reset();
            ++next_;
        }
    }

private:
    const RowSink<K>& sink_;
    std::vector<std::optional<std::vector<BasicRow<K>>>> pending_;
    std::size_t next_ = 0;
    std::mutex mu_;
};

}  // namespace

template <Wildcard K>
void run_engine(const Hypergraph& h, const EngineOptions& opts, const RowSink<K>& sink,
                EngineStats* stats_out) {
    h.validate();
    Hypergraph reduced = drop_supersets(h);
    EngineStats stats{};
    std::atomic<std::uint64_t> total_rows{0};
    WorkItem<K> root{BasicRow<K>::all_twos(reduced.ground_size), 0};

    if (opts.jobs <= 1) {
        run_item(reduced, std::move(root), opts, sink, stats, total_rows);
        if (stats_out) *stats_out = stats;
        return;
    }

    // Sequential prefix: run the ordinary loop until the stack is wide enough
    // to shard. Finals reached here are already in emission order.
    const std::size_t want_items = std::max<std::size_t>(64, static_cast<std::size_t>(opts.jobs) * 16);
    std::vector<WorkItem<K>> stack;
    stack.push_back(std::move(root));
    while (!stack.empty() && stack.size() < want_items) {
        stats.peak_stack = std::max(stats.peak_stack, stack.size());
        WorkItem<K> item = std::move(stack.back());
        stack.pop_back();
        std::size_t next = item.next;
        if (opts.skip_satisfied)
            while (next < reduced.edges.size() && constraint_satisfied(item.row, reduced.edges[next])) ++next;
        if (next == reduced.edges.size()) {
            ++stats.finalized;
            if (total_rows.fetch_add(1, std::memory_order_relaxed) + 1 > opts.max_rows)
                fail(Status::Limit, "row limit of " + std::to_string(opts.max_rows) + " exceeded");
            sink(std::move(item.row));
            continue;
        }
        ++stats.impositions;
        auto children = impose(item.row, reduced.edges[next]);
        for (auto it = children.rbegin(); it != children.rend(); ++it)
            stack.push_back(WorkItem<K>{std::move(*it), next + 1});
    }

    // Shard: the remaining items, top of stack first, are independent
    // subtrees processed by a small worker pool.
    std::vector<WorkItem<K>> items(std::make_move_iterator(stack.rbegin()),
                                   std::make_move_iterator(stack.rend()));
    stack.clear();
    OrderedFlush<K> flush(sink, items.size());
    std::atomic<std::size_t> cursor{0};
    std::mutex stats_mu;
    std::exception_ptr first_error;

    auto worker = [&]() {
        EngineStats local{};
        try {
            while (true) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= items.size()) break;
                std::vector<BasicRow<K>> rows;
                run_item(
                    reduced, std::move(items[i]), opts,
                    [&rows](BasicRow<K>&& r) { rows.push_back(std::move(r)); }, local, total_rows);
                flush.deliver(i, std::move(rows));
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(stats_mu);
            if (!first_error) first_error = std::current_exception();
            cursor.store(items.size());  // drain remaining work
        }
        std::lock_guard<std::mutex> lock(stats_mu);
        stats.impositions += local.impositions;
        stats.finalized += local.finalized;
        stats.peak_stack = std::max(stats.peak_stack, local.peak_stack);
    };

    std::vector<std::thread> pool;
    const std::size_t threads =
        std::min<std::size_t>(static_cast<std::size_t>(opts.jobs), std::max<std::size_t>(items.size(), 1));
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    if (stats_out) *stats_out = stats;
}

std::vector<Row012e> compress_transversals(const Hypergraph& h, const EngineOptions& opts,
                                           EngineStats* stats) {
    std::vector<Row012e> rows;
    RowSink<Wildcard::E> sink = [&rows](Row012e&& r) { rows.push_back(std::move(r)); };
    run_engine<Wildcard::E>(h, opts, sink, stats);
    return rows;
}

std::vector<Row012n> compress_noncovers(const Hypergraph& h, const EngineOptions& opts,
                                        EngineStats* stats) {
    std::vector<Row012n> rows;
    RowSink<Wildcard::N> sink = [&rows](Row012n&& r) { rows.push_back(std::move(r)); };
    run_engine<Wildcard::N>(h, opts, sink, stats);
    return rows;
}

template bool constraint_satisfied<Wildcard::E>(const Row012e&, const EdgeSet&);
template bool constraint_satisfied<Wildcard::N>(const Row012n&, const EdgeSet&);
template std::vector<Row012e> impose<Wildcard::E>(const Row012e&, const EdgeSet&);
template std::vector<Row012n> impose<Wildcard::N>(const Row012n&, const EdgeSet&);
template void run_engine<Wildcard::E>(const Hypergraph&, const EngineOptions&, const RowSink<Wildcard::E>&,
                                      EngineStats*);
template void run_engine<Wildcard::N>(const Hypergraph&, const EngineOptions&, const RowSink<Wildcard::N>&,
                                      EngineStats*);

}  // namespace wildtree
