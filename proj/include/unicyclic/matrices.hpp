#pragma once

#include "unicyclic/graph.hpp"
#include "unicyclic/rational_matrix.hpp"

namespace unicyclic {

/// n x m vertex-edge incidence matrix: column e has ones at both endpoints of e.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(const Graph& g);

  const RationalMatrix& matrix() const noexcept { return m_; }
  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }

 private:
  RationalMatrix m_;
};

/// n x n matrix [(-1)^{d(i,j)}]. Symmetric with unit diagonal.
class ParityMatrix {
 public:
  explicit ParityMatrix(const DistanceTable& d);

  const RationalMatrix& matrix() const noexcept { return p_; }

 private:
  RationalMatrix p_;
};

IncidenceMatrix incidence_matrix(const Graph& g);
ParityMatrix parity_matrix(const Graph& g);
ParityMatrix parity_matrix(const DistanceTable& d);

/// Signless Laplacian Q = M M^T and its edge analogue S = M^T M.
struct SignlessLaplacians {
  RationalMatrix q;
  RationalMatrix s;
};

SignlessLaplacians signless_laplacians(const IncidenceMatrix& m);

}  // namespace unicyclic
