#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "bitset.hpp"

namespace wildtree {

// Wildcard polarity: an E bubble demands "at least one 1 among these
// positions", an N bubble "at least one 0".
enum class Wildcard : char { E = 'e', N = 'n' };

// Number of members per cardinality: coeff[i] counts members of size i.
struct RankPoly {
    std::vector<mpz_class> coeff;

    mpz_class sum() const;
    std::string to_string() const;
    bool operator==(const RankPoly&) const = default;
};

// A wildcard row over positions {1..m}: fixed zeros and ones, free twos, and
// an ordered list of pairwise disjoint bubbles. The five kinds partition
// {1..m}. Bubble order is the creation order and is part of the canonical
// serialized form. Rows are immutable values once built.
template <Wildcard K>
struct BasicRow {
    EdgeSet zeros;
    EdgeSet ones;
    EdgeSet twos;
    std::vector<EdgeSet> bubbles;

    int length() const { return zeros.universe(); }

    bool valid() const;

    // Membership: x must contain all ones, avoid all zeros, and satisfy every
    // bubble (intersect it for E, not contain it for N).
    bool contains(const EdgeSet& x) const;

    // 2^|twos| * prod over bubbles of (2^|b| - 1).
    mpz_class cardinality() const;

    // Explicit member list; refuses when the cardinality exceeds cap.
    std::vector<EdgeSet> members(std::uint64_t cap) const;

    RankPoly rank_polynomial() const;

    // Canonical text: per-position symbols 0,1,2,e1..ek (or n1..nk),
    // comma-separated, bubbles numbered in list order.
    std::string to_string() const;

    static BasicRow all_twos(int m);
};

using Row012e = BasicRow<Wildcard::E>;
using Row012n = BasicRow<Wildcard::N>;

// Builds a row from label lists; twos are the remaining positions. Singleton
// bubbles are normalized (into ones for E rows, zeros for N rows).
template <Wildcard K>
BasicRow<K> make_row(int m, const std::vector<int>& zeros, const std::vector<int>& ones,
                     const std::vector<std::vector<int>>& bubbles);

// Folds singleton bubbles into ones (E) or zeros (N). Idempotent.
template <Wildcard K>
BasicRow<K> normalize(BasicRow<K> row);

// Structural equality that ignores the order of the bubble list.
template <Wildcard K>
bool same_row_unordered(const BasicRow<K>& a, const BasicRow<K>& b);

// All sets ones(r) + one position per bubble; the inclusion-minimal members.
std::vector<EdgeSet> row_minimal_sets(const Row012e& r);

// All sets ones + twos + (each bubble minus one position); the maximal members.
std::vector<EdgeSet> row_maximal_sets(const Row012n& r);

mpz_class pow2(unsigned long n);

}  // namespace wildtree
