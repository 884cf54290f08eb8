#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "unicyclic/decomposition.hpp"
#include "unicyclic/graph.hpp"
#include "unicyclic/matrices.hpp"
#include "unicyclic/rational_matrix.hpp"

namespace unicyclic {

/// A = F G with F (rows x r) of full column rank and G (r x cols) of full
/// row rank. F holds the pivot columns of A; G the nonzero rows of its RREF.
struct RankFactorization {
  RationalMatrix f;
  RationalMatrix g;
  std::size_t rank = 0;
};

RankFactorization rank_factorize(const RationalMatrix& a);

/// Exact Moore-Penrose inverse, G^T (G G^T)^{-1} (F^T F)^{-1} F^T, from the
/// rank factorization. The result is run through check_penrose before it is
/// returned; a failure throws CertificationError.
RationalMatrix pinv_rank_factorization(const RationalMatrix& a);

struct PenroseWitness {
  int axiom;        // 1..4
  std::size_t row;  // 0-based
  std::size_t col;
};

/// Outcome of checking the four Penrose equations for a candidate X of A:
/// A X A = A, X A X = X, (A X)^T = A X, (X A)^T = X A.
struct PenroseReport {
  bool axiom1 = false;
  bool axiom2 = false;
  bool axiom3 = false;
  bool axiom4 = false;
  /// First failing entry, scanning axioms in order.
  std::optional<PenroseWitness> first_violation;

  bool all_pass() const noexcept { return axiom1 && axiom2 && axiom3 && axiom4; }
  /// {"axiom1":true,...,"witness":null}; witness coordinates are 1-based.
  std::string to_json() const;
};

/// Exact check of all four equations. Throws DimensionError unless A is p x q
/// and X is q x p.
PenroseReport check_penrose(const RationalMatrix& a, const RationalMatrix& x);

/// Whether [(-1)^{d(i,j)}] M is the zero matrix.
bool check_parity_annihilation(const Graph& g, const IncidenceMatrix& m);

/// Corollary-style fingerprints of a verified even-cycle pseudoinverse.
struct FingerprintReport {
  /// h(e,j) = (n-1)/n exactly at (pendant edge, its pendant vertex) pairs.
  bool pendant = false;
  /// (HM)(e,e) = (|C|-1)/|C| on cycle edges and 1 elsewhere.
  bool cycle_diagonal = false;

  bool all_pass() const noexcept { return pendant && cycle_diagonal; }
};

FingerprintReport check_fingerprints(const UnicyclicDecomposition& d, const RationalMatrix& h,
                                     const RationalMatrix& hm);

}  // namespace unicyclic
