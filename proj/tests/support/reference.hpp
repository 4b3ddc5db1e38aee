#pragma once

// Reference implementations used only by the tests. Where the point of a test
// is agreement between two computations, the version here deliberately takes
// a different route than the library (brute force, closed formulas, or an
// unrelated algorithm), so a shared bug cannot hide.

#include <cstdint>
#include <string>
#include <vector>

#include "treelap/oracle/dense.hpp"
#include "treelap/oracle/polynomial.hpp"
#include "treelap/rational.hpp"
#include "treelap/tree.hpp"

namespace testref {

// Complete isomorphism key: the minimum AHU bracket string over all choices
// of root. Quadratic, intended for small orders.
std::string ahu_key(const treelap::Tree& t);

// Number of isomorphism classes of trees on n vertices, obtained by decoding
// every Prufer sequence (all n^(n-2) labeled trees) and deduplicating with a
// centroid-rooted AHU code. Supported for n <= 10; n = 10 visits 10^8 trees.
long distinct_trees_by_labeled_enumeration(int n, int threads);

// Free-tree count by Otter's formula over the rooted-tree recurrence; pure
// integer arithmetic, no tree objects involved.
long long free_tree_count_formula(int n);

long brute_domination(const treelap::Tree& t);
long brute_independence(const treelap::Tree& t);

// Spanning trees by testing every (n-1)-edge subset for acyclic connectivity.
treelap::ZZ brute_spanning_count(const treelap::oracle::SimpleGraph& g);

// Exact value of an integer polynomial at a rational point.
treelap::QQ eval_at(const treelap::oracle::IntPolynomial& p, const treelap::QQ& x);

// Copy of t with vertex v renamed to perm[v].
treelap::Tree relabel(const treelap::Tree& t, const std::vector<int>& perm);

// The five-vertex fixture behind the golden-value tables: edges 5-3, 5-4,
// 3-1, 3-2 in 1-based labels.
treelap::Tree golden_tree5();

}  // namespace testref
