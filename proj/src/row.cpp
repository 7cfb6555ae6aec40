#include "row.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"

namespace wildtree {

mpz_class pow2(unsigned long n) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
    return r;
}

mpz_class RankPoly::sum() const {
    mpz_class s = 0;
    for (const auto& c : coeff) s += c;
    return s;
}

std::string RankPoly::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (i) out << ' ';
        out << coeff[i].get_str();
    }
    return out.str();
}

template <Wildcard K>
bool BasicRow<K>::valid() const {
    const int m = length();
    if (ones.universe() != m || twos.universe() != m) return false;
    BitVec cover(static_cast<std::size_t>(m));
    std::size_t total = 0;
    auto absorb = [&](const EdgeSet& s) {
        total += static_cast<std::size_t>(s.count());
        cover |= s.bits();
    };
    absorb(zeros);
    absorb(ones);
    absorb(twos);
    for (const auto& b : bubbles) {
        if (b.universe() != m || b.empty()) return false;
        absorb(b);
    }
    // Pairwise disjoint and covering exactly {1..m}.
    return total == static_cast<std::size_t>(m) && cover.count() == static_cast<std::size_t>(m);
}

template <Wildcard K>
bool BasicRow<K>::contains(const EdgeSet& x) const {
    if (!ones.subset_of(x)) return false;
    if (x.intersects(zeros)) return false;
    for (const auto& b : bubbles) {
        if constexpr (K == Wildcard::E) {
            if (!b.intersects(x)) return false;
        } else {
            if (b.subset_of(x)) return false;
        }
    }
    return true;
}

template <Wildcard K>
mpz_class BasicRow<K>::cardinality() const {
    mpz_class c = pow2(static_cast<unsigned long>(twos.count()));
    for (const auto& b : bubbles) c *= pow2(static_cast<unsigned long>(b.count())) - 1;
    return c;
}

template <Wildcard K>
std::vector<EdgeSet> BasicRow<K>::members(std::uint64_t cap) const {
    static const mpz_class kHardCap = pow2(30);
    mpz_class card = cardinality();
    if (card > mpz_class(static_cast<unsigned long>(cap)) || card > kHardCap)
        fail(Status::Limit,
             "row cardinality " + card.get_str() + " exceeds enumeration cap of " + std::to_string(cap));
    std::vector<int> two_pos = twos.labels();
    std::vector<std::vector<int>> bubble_pos;
    bubble_pos.reserve(bubbles.size());
    for (const auto& b : bubbles) bubble_pos.push_back(b.labels());

    std::vector<EdgeSet> out;
    EdgeSet base(length());
    base |= ones;
    // Depth-first product over bubble assignments, then all twos subsets.
    std::vector<EdgeSet> stack{base};
    for (const auto& pos : bubble_pos) {
        std::vector<EdgeSet> next;
        const std::uint32_t full = (std::uint32_t{1} << pos.size()) - 1;
        for (const auto& cur : stack) {
            for (std::uint32_t mask = 0; mask <= full; ++mask) {
                if constexpr (K == Wildcard::E) {
                    if (mask == 0) continue;  // at least one 1
                } else {
                    if (mask == full) continue;  // at least one 0
                }
                EdgeSet e = cur;
                for (std::size_t i = 0; i < pos.size(); ++i)
                    if ((mask >> i) & 1) e.add(pos[i]);
                next.push_back(std::move(e));
            }
        }
        stack = std::move(next);
    }
    for (const auto& cur : stack) {
        const std::uint32_t full =
            two_pos.size() >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << two_pos.size()) - 1;
        for (std::uint32_t mask = 0;; ++mask) {
            EdgeSet e = cur;
            for (std::size_t i = 0; i < two_pos.size(); ++i)
                if ((mask >> i) & 1) e.add(two_pos[i]);
            out.push_back(std::move(e));
            if (mask == full) break;
        }
    }
    return out;
}

namespace {

// coeff vectors are dense in y, lowest degree first.
std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

std::vector<mpz_class> one_plus_y_pow(unsigned long k) {
    std::vector<mpz_class> r(k + 1);
    mpz_class c = 1;
    for (unsigned long i = 0; i <= k; ++i) {
        r[i] = c;
        c = c * (k - i) / (i + 1);
    }
    return r;
}

}  // namespace

template <Wildcard K>
RankPoly BasicRow<K>::rank_polynomial() const {
    std::vector<mpz_class> poly{1};
    if (twos.count() > 0) poly = poly_mul(poly, one_plus_y_pow(static_cast<unsigned long>(twos.count())));
    for (const auto& b : bubbles) {
        auto factor = one_plus_y_pow(static_cast<unsigned long>(b.count()));
        if constexpr (K == Wildcard::E) {
            factor[0] -= 1;  // (1+y)^k - 1
        } else {
            factor.back() -= 1;  // (1+y)^k - y^k
        }
        poly = poly_mul(poly, factor);
    }
    RankPoly out;
    out.coeff.assign(static_cast<std::size_t>(length()) + 1, mpz_class(0));
    const std::size_t shift = static_cast<std::size_t>(ones.count());
    for (std::size_t i = 0; i < poly.size(); ++i) out.coeff[i + shift] = std::move(poly[i]);
    return out;
}

template <Wildcard K>
std::string BasicRow<K>::to_string() const {
    const int m = length();
    std::vector<std::string> sym(static_cast<std::size_t>(m));
    zeros.for_each([&](int l) { sym[static_cast<std::size_t>(l - 1)] = "0"; });
    ones.for_each([&](int l) { sym[static_cast<std::size_t>(l - 1)] = "1"; });
    twos.for_each([&](int l) { sym[static_cast<std::size_t>(l - 1)] = "2"; });
    for (std::size_t i = 0; i < bubbles.size(); ++i) {
        std::string tag = std::string(1, static_cast<char>(K)) + std::to_string(i + 1);
        bubbles[i].for_each([&](int l) { sym[static_cast<std::size_t>(l - 1)] = tag; });
    }
    std::ostringstream out;
    for (int i = 0; i < m; ++i) {
        if (i) out << ',';
        out << sym[static_cast<std::size_t>(i)];
    }
    return out.str();
}

template <Wildcard K>
BasicRow<K> BasicRow<K>::all_twos(int m) {
    BasicRow<K> r;
    r.zeros = EdgeSet(m);
    r.ones = EdgeSet(m);
    r.twos = EdgeSet(m);
    for (int l = 1; l <= m; ++l) r.twos.add(l);
    return r;
}

template <Wildcard K>
BasicRow<K> normalize(BasicRow<K> row) {
    std::vector<EdgeSet> kept;
    kept.reserve(row.bubbles.size());
    for (auto& b : row.bubbles) {
        if (b.count() == 1) {
            if constexpr (K == Wildcard::E)
                row.ones |= b;
            else
                row.zeros |= b;
        } else {
            kept.push_back(std::move(b));
        }
    }
    row.bubbles = std::move(kept);
    return row;
}

template <Wildcard K>
BasicRow<K> make_row(int m, const std::vector<int>& zeros, const std::vector<int>& ones,
                     const std::vector<std::vector<int>>& bubbles) {
    BasicRow<K> r;
    r.zeros = EdgeSet(m);
    r.ones = EdgeSet(m);
    r.twos = EdgeSet(m);
    for (int l : zeros) r.zeros.add(l);
    for (int l : ones) r.ones.add(l);
    for (const auto& group : bubbles) {
        EdgeSet b(m);
        for (int l : group) b.add(l);
        if (b.empty()) fail(Status::InvalidArgument, "empty bubble");
        r.bubbles.push_back(std::move(b));
    }
    for (int l = 1; l <= m; ++l) r.twos.add(l);
    r.twos.subtract(r.zeros);
    r.twos.subtract(r.ones);
    for (const auto& b : r.bubbles) r.twos.subtract(b);
    r = normalize(std::move(r));
    if (!r.valid()) fail(Status::InvalidArgument, "overlapping position classes in row");
    return r;
}

template <Wildcard K>
bool same_row_unordered(const BasicRow<K>& a, const BasicRow<K>& b) {
    if (a.zeros != b.zeros || a.ones != b.ones || a.twos != b.twos) return false;
    if (a.bubbles.size() != b.bubbles.size()) return false;
    auto sorted = [](const std::vector<EdgeSet>& v) {
        auto s = v;
        std::sort(s.begin(), s.end(), lex_less);
        return s;
    };
    return sorted(a.bubbles) == sorted(b.bubbles);
}

std::vector<EdgeSet> row_minimal_sets(const Row012e& r) {
    std::vector<std::vector<int>> bubble_pos;
    bubble_pos.reserve(r.bubbles.size());
    for (const auto& b : r.bubbles) bubble_pos.push_back(b.labels());
    std::vector<EdgeSet> out;
    EdgeSet base(r.length());
    base |= r.ones;
    std::vector<std::size_t> pick(bubble_pos.size(), 0);
    while (true) {
        EdgeSet e = base;
        for (std::size_t i = 0; i < pick.size(); ++i) e.add(bubble_pos[i][pick[i]]);
        out.push_back(std::move(e));
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < bubble_pos[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    return out;
}

std::vector<EdgeSet> row_maximal_sets(const Row012n& r) {
    std::vector<std::vector<int>> bubble_pos;
    bubble_pos.reserve(r.bubbles.size());
    for (const auto& b : r.bubbles) bubble_pos.push_back(b.labels());
    std::vector<EdgeSet> out;
    EdgeSet base(r.length());
    base |= r.ones;
    base |= r.twos;
    for (const auto& b : r.bubbles) base |= b;
    std::vector<std::size_t> drop(bubble_pos.size(), 0);
    while (true) {
        EdgeSet e = base;
        for (std::size_t i = 0; i < drop.size(); ++i) e.remove(bubble_pos[i][drop[i]]);
        out.push_back(std::move(e));
        std::size_t i = 0;
        for (; i < drop.size(); ++i) {
            if (++drop[i] < bubble_pos[i].size()) break;
            drop[i] = 0;
        }
        if (i == drop.size()) break;
    }
    return out;
}

template struct BasicRow<Wildcard::E>;
template struct BasicRow<Wildcard::N>;
template Row012e make_row<Wildcard::E>(int, const std::vector<int>&, const std::vector<int>&,
                                       const std::vector<std::vector<int>>&);
template Row012n make_row<Wildcard::N>(int, const std::vector<int>&, const std::vector<int>&,
                                       const std::vector<std::vector<int>>&);
template Row012e normalize<Wildcard::E>(Row012e);
template Row012n normalize<Wildcard::N>(Row012n);
template bool same_row_unordered<Wildcard::E>(const Row012e&, const Row012e&);
template bool same_row_unordered<Wildcard::N>(const Row012n&, const Row012n&);

}  // namespace wildtree
