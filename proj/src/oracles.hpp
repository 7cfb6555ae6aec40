#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "row.hpp"

namespace wildtree {

// Spanning-tree count: determinant of a principal (n-1)x(n-1) minor of the
// Laplacian, exact integer arithmetic throughout. Returns 0 for a
// disconnected graph. `drop_vertex` selects the removed row/column; any
// choice yields the same value.
mpz_class kirchhoff_count(const Graph& g, int drop_vertex = -1);

// All (n-1)-subsets of E that connect the graph. Refuses when C(m, n-1)
// exceeds cap.
std::vector<EdgeSet> brute_force_spanning_trees(const Graph& g, std::uint64_t cap);

// Exhaustive filters over all 2^m subsets; refuse when 2^m exceeds cap.
std::vector<EdgeSet> brute_force_transversals(const Hypergraph& h, std::uint64_t cap);
std::vector<EdgeSet> brute_force_noncovers(const Hypergraph& h, std::uint64_t cap);

// c_i = number of members of cardinality i across a disjoint row family.
std::vector<mpz_class> connected_count_by_size(const std::vector<Row012e>& rows, int m);

// Coefficients (in p) of sum_i c_i p^i (1-p)^(m-i), exact integers.
std::vector<mpz_class> reliability_polynomial(const std::vector<mpz_class>& c);

// Evaluates a coefficient table at an integer point (for the end-point checks).
mpz_class eval_poly(const std::vector<mpz_class>& coeff, const mpz_class& x);

}  // namespace wildtree
