#include "oracles.hpp"

#include <algorithm>

#include "error.hpp"

namespace wildtree {

mpz_class kirchhoff_count(const Graph& g, int drop_vertex) {
    const int n = g.vertex_count();
    if (n == 1) return 1;
    if (!is_connected(g)) return 0;
    if (drop_vertex < 1 || drop_vertex > n) drop_vertex = n;

    // Dense Laplacian minor.
    const int d = n - 1;
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(d));
    for (int v = 1; v <= n; ++v)
        if (v != drop_vertex) keep.push_back(v);
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
    for (int i = 0; i < d; ++i) pos[static_cast<std::size_t>(keep[static_cast<std::size_t>(i)])] = i;

    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(d),
                                          std::vector<mpz_class>(static_cast<std::size_t>(d), mpz_class(0)));
    for (int l = 1; l <= g.edge_count(); ++l) {
        auto [u, v] = g.edge(l);
        int pu = pos[static_cast<std::size_t>(u)];
        int pv = pos[static_cast<std::size_t>(v)];
        if (pu >= 0) a[static_cast<std::size_t>(pu)][static_cast<std::size_t>(pu)] += 1;
        if (pv >= 0) a[static_cast<std::size_t>(pv)][static_cast<std::size_t>(pv)] += 1;
        if (pu >= 0 && pv >= 0) {
            a[static_cast<std::size_t>(pu)][static_cast<std::size_t>(pv)] -= 1;
            a[static_cast<std::size_t>(pv)][static_cast<std::size_t>(pu)] -= 1;
        }
    }

    // Bareiss fraction-free elimination; every division is exact.
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < d - 1; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < d; ++i)
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i) {
            for (int j = k + 1; j < d; ++j) {
                mpz_class num = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                                    a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                                    a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                mpz_divexact(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_mpz_t(),
                             num.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    mpz_class det = a[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(d - 1)];
    return sign < 0 ? mpz_class(-det) : det;
}

std::vector<EdgeSet> brute_force_spanning_trees(const Graph& g, std::uint64_t cap) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int k = n - 1;
    if (k < 0 || k > m) return {};
    mpz_class total;
    mpz_bin_uiui(total.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    if (total > mpz_class(static_cast<unsigned long>(cap)))
        fail(Status::Limit, "C(" + std::to_string(m) + "," + std::to_string(k) + ") = " + total.get_str() +
                                " exceeds cap of " + std::to_string(cap));

    std::vector<EdgeSet> trees;
    if (k == 0) {
        if (n == 1) trees.emplace_back(m);
        return trees;
    }
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        EdgeSet subset(m);
        for (int l : pick) subset.add(l);
        if (is_connected(g, subset)) trees.push_back(subset);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return trees;
}

namespace {

template <typename Pred>
std::vector<EdgeSet> filter_subsets(const Hypergraph& h, std::uint64_t cap, Pred&& keep) {
    const int m = h.ground_size;
    if (m > 62 || (std::uint64_t{1} << m) > cap)
        fail(Status::Limit, "2^" + std::to_string(m) + " exceeds cap of " + std::to_string(cap));
    std::vector<EdgeSet> out;
    const std::uint64_t end = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        EdgeSet x(m);
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) x.add(i + 1);
        if (keep(x)) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace

std::vector<EdgeSet> brute_force_transversals(const Hypergraph& h, std::uint64_t cap) {
    return filter_subsets(h, cap, [&](const EdgeSet& x) {
        for (const auto& e : h.edges)
            if (!e.intersects(x)) return false;
        return true;
    });
}

std::vector<EdgeSet> brute_force_noncovers(const Hypergraph& h, std::uint64_t cap) {
    return filter_subsets(h, cap, [&](const EdgeSet& x) {
        for (const auto& e : h.edges)
            if (e.subset_of(x)) return false;
        return true;
    });
}

std::vector<mpz_class> connected_count_by_size(const std::vector<Row012e>& rows, int m) {
    std::vector<mpz_class> c(static_cast<std::size_t>(m) + 1, mpz_class(0));
    for (const auto& row : rows) {
        RankPoly poly = row.rank_polynomial();
        for (std::size_t i = 0; i < poly.coeff.size(); ++i) c[i] += poly.coeff[i];
    }
    return c;
}

std::vector<mpz_class> reliability_polynomial(const std::vector<mpz_class>& c) {
    const std::size_t m = c.size() - 1;
    std::vector<mpz_class> out(c.size(), mpz_class(0));
    // (1-p)^(m-i) expanded with alternating binomials.
    for (std::size_t i = 0; i <= m; ++i) {
        if (c[i] == 0) continue;
        const std::size_t r = m - i;
        mpz_class binom = 1;
        for (std::size_t k = 0; k <= r; ++k) {
            mpz_class term = c[i] * binom;
            if (k % 2) term = -term;
            out[i + k] += term;
            binom = binom * static_cast<unsigned long>(r - k) / static_cast<unsigned long>(k + 1);
        }
    }
    return out;
}

mpz_class eval_poly(const std::vector<mpz_class>& coeff, const mpz_class& x) {
    mpz_class v = 0;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) v = v * x + *it;
    return v;
}

}  // namespace wildtree
