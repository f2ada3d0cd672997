#pragma once

// Brute-force reference implementations. Deliberately share nothing with the
// library beyond GMP.

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Set = std::vector<int>;  // sorted
using Family = std::set<Set>;
using Matrix = std::vector<std::vector<mpq_class>>;
using Adjacency = std::vector<std::vector<bool>>;

// All nonempty subsets of the given sets.
Family closure(const std::vector<Set>& sets);
// Cardinality first, then lexicographic.
std::vector<Set> canonical(const Family& f);
std::vector<std::int64_t> f_vector(const Family& f);
std::int64_t euler(const Family& f);

// Vertex sets of complete subgraphs, by testing every vertex subset.
Family cliques(const Adjacency& adj);
// Nonempty acyclic edge subsets; edges are vertex pairs.
std::vector<std::vector<std::size_t>> forests(int vertices, const std::vector<std::pair<int, int>>& edges);

Matrix connection(const std::vector<Set>& simplices);
// Gauss-Jordan over the rationals.
mpq_class det(Matrix m);
Matrix inverse(Matrix m);
// Leibniz expansion through every permutation.
mpz_class leibniz(const std::vector<std::vector<long>>& m);
mpz_class permanent(const std::vector<std::vector<long>>& m);

// sum of sign(z) over z containing both x and y
std::int64_t star_euler(const std::vector<Set>& simplices, const Set& x, const Set& y);
// euler of the link of x in the containment graph: simplices comparable to x,
// counted as chains.
std::int64_t sphere_euler(const std::vector<Set>& simplices, const Set& x);

// S(n, k) by the recurrence.
mpz_class stirling2(int n, int k);

// Contractibility straight from the recursive definition, no memo.
bool contractible(const Adjacency& adj, std::vector<int> vertices);

}  // namespace oracle
