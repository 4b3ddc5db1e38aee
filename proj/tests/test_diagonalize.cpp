#include <doctest.h>

#include <vector>

#include "support/reference.hpp"
#include "treelap/diagonalize.hpp"
#include "treelap/oracle/oracle.hpp"
#include "treelap/rooted.hpp"
#include "treelap/tree.hpp"

using treelap::DiagResult;
using treelap::InertiaTriple;
using treelap::MatrixKind;
using treelap::QQ;
using treelap::RootedTree;
using treelap::Tree;

namespace {

// The elimination is built from unit row/column operations, so it preserves
// the determinant: the product of the output diagonal must equal
// det(M + x*I) = (-1)^n * charpoly(-x).
void check_determinant_identity(const Tree& t, const DiagResult& d) {
  QQ prod(1);
  for (const QQ& v : d.values) prod *= v;
  const auto m = d.matrix_kind == MatrixKind::adjacency
                     ? treelap::oracle::adjacency_matrix(t)
                     : treelap::oracle::laplacian_matrix(t);
  QQ det = testref::eval_at(treelap::oracle::char_poly(m), -d.shift);
  if (t.n % 2 == 1) det = -det;
  CHECK(prod == det);
}

}  // namespace

TEST_SUITE("diagonalize") {

TEST_CASE("five-vertex diagonals match the worked values") {
  Tree t = testref::golden_tree5();
  RootedTree rt = treelap::root_at(t, 4);

  DiagResult a2 = treelap::diagonalize_adjacency(rt, 2);
  std::vector<QQ> expected_a2{2, 2, 1, 2, QQ(1, 2)};
  for (int v = 0; v < 5; ++v) CHECK(a2.value_of(rt, v) == expected_a2[v]);
  CHECK(a2.n_pos == 5);

  DiagResult a0 = treelap::diagonalize_adjacency(rt, 0);
  std::vector<QQ> expected_a0{2, 0, QQ(-1, 2), 2, QQ(-1, 2)};
  for (int v = 0; v < 5; ++v) CHECK(a0.value_of(rt, v) == expected_a0[v]);
  CHECK(a0.n_pos == 2);
  CHECK(a0.n_neg == 2);
  CHECK(a0.n_zero == 1);

  DiagResult l1 = treelap::diagonalize_laplacian(rt, -1);
  std::vector<QQ> expected_l1{2, 0, QQ(-1, 2), 2, QQ(-1, 2)};
  for (int v = 0; v < 5; ++v) CHECK(l1.value_of(rt, v) == expected_l1[v]);

  // the fourth worked case; the last entry is pinned by the determinant
  // identity checked below
  DiagResult l85 = treelap::diagonalize_laplacian(rt, QQ(-8, 5));
  std::vector<QQ> expected_l85{QQ(-3, 5), QQ(-3, 5), QQ(71, 15), QQ(-3, 5), QQ(1976, 1065)};
  for (int v = 0; v < 5; ++v) CHECK(l85.value_of(rt, v) == expected_l85[v]);
  QQ prod(1);
  for (const QQ& v : l85.values) prod *= v;
  CHECK(prod == QQ(-5928, 3125));  // = det(L - (8/5) I), computed independently below
  check_determinant_identity(t, l85);

  for (const DiagResult& d : {a2, a0, l1})
    check_determinant_identity(t, d);
}

TEST_CASE("a zero child flips the pair and takes the earliest position") {
  // path 0-1-2 rooted at the middle: both children carry value 0 at x = 0,
  // the post-order-first one (vertex 0) becomes 2, the other stays untouched
  Tree p3 = treelap::generate_path(3);
  RootedTree rt = treelap::root_at(p3, 1);
  DiagResult d = treelap::diagonalize_adjacency(rt, 0);
  CHECK(d.value_of(rt, 0) == QQ(2));
  CHECK(d.value_of(rt, 1) == QQ(-1, 2));
  CHECK(d.value_of(rt, 2) == QQ(0));
  CHECK(d.n_zero == 1);
}

TEST_CASE("inertia agrees with the root-counting oracle") {
  std::vector<QQ> probes{0,         1,          2,  QQ(8, 5), -1, QQ(1, 2),
                         QQ(-3, 2), QQ(22, 7), -2, 3,        4,  QQ(7, 3)};
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    int n = 2 + static_cast<int>(seed) * 2 % 15;
    Tree t = treelap::random_tree(n, seed);
    treelap::oracle::RootCounter adj(
        treelap::oracle::char_poly(treelap::oracle::adjacency_matrix(t)));
    treelap::oracle::RootCounter lap(
        treelap::oracle::char_poly(treelap::oracle::laplacian_matrix(t)));
    for (const QQ& alpha : probes) {
      InertiaTriple ta = treelap::count_adjacency(t, alpha);
      auto ca = adj.count(alpha);
      CHECK(ta.greater == ca.greater);
      CHECK(ta.less == ca.less);
      CHECK(ta.multiplicity == ca.multiplicity);

      InertiaTriple tl = treelap::count_laplacian(t, alpha);
      auto cl = lap.count(alpha);
      CHECK(tl.greater == cl.greater);
      CHECK(tl.less == cl.less);
      CHECK(tl.multiplicity == cl.multiplicity);

      CHECK(ta.greater + ta.less + ta.multiplicity == t.n);
      CHECK(tl.greater + tl.less + tl.multiplicity == t.n);
    }
  }
}

TEST_CASE("determinant identity holds with and without severed edges") {
  std::vector<QQ> probes{0, 1, QQ(1, 3), -1, QQ(-8, 5), 2, QQ(5, 2)};
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Tree t = treelap::random_tree(3 + static_cast<int>(seed * 3) % 12, seed + 100);
    for (int r : {0, t.n - 1}) {
      RootedTree rt = treelap::root_at(t, r);
      for (const QQ& x : probes) {
        check_determinant_identity(t, treelap::diagonalize_adjacency(rt, x));
        check_determinant_identity(t, treelap::diagonalize_laplacian(rt, x));
      }
    }
  }
}

TEST_CASE("counting convention: shift is the negated probe") {
  Tree t = treelap::random_tree(9, 4);
  RootedTree rt = treelap::root_at(t, t.n - 1);
  DiagResult d = treelap::diagonalize_laplacian(rt, QQ(-8, 5));
  InertiaTriple c = treelap::count_laplacian(t, QQ(8, 5));
  CHECK(c.greater == d.n_pos);
  CHECK(c.less == d.n_neg);
  CHECK(c.multiplicity == d.n_zero);
  CHECK(d.shift == QQ(-8, 5));
  CHECK(d.matrix_kind == MatrixKind::laplacian);
}

TEST_CASE("known spectra at a glance") {
  // star on 4 vertices: adjacency eigenvalues -sqrt(3), 0, 0, sqrt(3)
  Tree s4 = treelap::generate_star(4);
  InertiaTriple at0 = treelap::count_adjacency(s4, 0);
  CHECK(at0.multiplicity == 2);
  CHECK(at0.greater == 1);
  CHECK(at0.less == 1);

  // Laplacian eigenvalues of the star: 0, 1, 1, 4
  CHECK((treelap::count_laplacian(s4, 1) == InertiaTriple{1, 1, 2}));
  CHECK((treelap::count_laplacian(s4, 0) == InertiaTriple{3, 0, 1}));
  CHECK((treelap::count_laplacian(s4, 4) == InertiaTriple{0, 3, 1}));
  CHECK((treelap::count_laplacian(s4, 5) == InertiaTriple{0, 4, 0}));
}

TEST_CASE("single vertex") {
  Tree t = treelap::make_tree(1, {});
  CHECK((treelap::count_adjacency(t, 0) == InertiaTriple{0, 0, 1}));
  CHECK((treelap::count_laplacian(t, 0) == InertiaTriple{0, 0, 1}));
  CHECK((treelap::count_laplacian(t, 1) == InertiaTriple{0, 1, 0}));
}

}  // TEST_SUITE
