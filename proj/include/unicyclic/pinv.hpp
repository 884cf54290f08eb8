#pragma once

#include <string_view>

#include "unicyclic/decomposition.hpp"
#include "unicyclic/graph.hpp"
#include "unicyclic/rational_matrix.hpp"

namespace unicyclic {

enum class PinvFormula {
  /// Moore-Penrose inverse of a singular (even-cycle) incidence matrix.
  EvenUnicyclicPinv,
  /// Ordinary inverse of a nonsingular (odd-cycle) incidence matrix.
  OddUnicyclicInverse,
};

std::string_view to_string(PinvFormula f);

/// Closed-form pseudoinverse of an incidence matrix. Rows of `h` are indexed
/// by edges and columns by vertices.
struct CombinatorialPinv {
  RationalMatrix h;
  GraphClass graph_class;
  PinvFormula provenance;
};

/**
 * Moore-Penrose inverse of the incidence matrix of an even unicyclic graph.
 *
 * With n vertices and cycle C, for an edge e and vertex j:
 *
 *   e off C, j in G-e(C):  (-1)^{d(e,j)} |G-e[C]| / n
 *   e off C, j in G-e[C]:  (-1)^{d(e,j)} |G-e(C)| / n
 *   e = {r,s} on C:        (-1)^{d'(r,j)} (sum_t n_t d'(r,t) - n d'(r,j*)) / (n|C|)
 *
 * where d' is distance in the tree G - e and r is the smaller-labelled
 * endpoint (the value does not depend on that choice). The per-edge sum
 * over cycle vertices is computed once per cycle edge, so the whole matrix
 * costs O(n^2).
 *
 * Throws GraphError for an odd cycle.
 */
CombinatorialPinv even_unicyclic_pinv(const UnicyclicDecomposition& d);

/**
 * Inverse of the incidence matrix of an odd unicyclic graph:
 *
 *   e on C:                 (-1)^{d(e,j)} / 2
 *   e off C, j in G-e[C]:   0
 *   e off C, j in G-e(C):   (-1)^{d(e,j)}
 *
 * Throws GraphError for an even cycle.
 */
CombinatorialPinv odd_unicyclic_inverse(const UnicyclicDecomposition& d);

/// Dispatches on cycle parity.
CombinatorialPinv combinatorial_pinv(const UnicyclicDecomposition& d);

/// Closed form of M M^+: I - P/n for even cycles (P the parity matrix), I otherwise.
RationalMatrix predicted_MH(const UnicyclicDecomposition& d);

/// Closed form of M^+ M for even cycles:
/// (-1)^{d(e_i,e_j)}/|C| times |C| (i = j off C), |C|-1 (i = j on C),
/// 1 (i != j both on C), 0 otherwise. For odd cycles M is invertible and
/// the identity is returned.
RationalMatrix predicted_HM(const UnicyclicDecomposition& d);

/// Pseudoinverses of Q = M M^T and S = M^T M from a verified M^+:
/// Q^+ = (M^+)^T M^+ and S^+ = M^+ (M^+)^T.
struct LaplacianPinvs {
  RationalMatrix q_plus;
  RationalMatrix s_plus;
};

LaplacianPinvs qplus_splus(const CombinatorialPinv& h);

}  // namespace unicyclic
