#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "treelap/rational.hpp"
#include "treelap/tree.hpp"

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace treelap::oracle {

using MatZZ = Eigen::Matrix<ZZ, Eigen::Dynamic, Eigen::Dynamic>;
using MatQQ = Eigen::Matrix<QQ, Eigen::Dynamic, Eigen::Dynamic>;
using MatD = Eigen::MatrixXd;

// Simple graph, possibly disconnected; edges as unordered id pairs.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph graph_from_tree(const Tree& t);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

MatZZ adjacency_matrix(const SimpleGraph& g);
MatZZ laplacian_matrix(const SimpleGraph& g);
MatZZ adjacency_matrix(const Tree& t);
MatZZ laplacian_matrix(const Tree& t);

MatD to_double(const MatZZ& m);

}  // namespace treelap::oracle
