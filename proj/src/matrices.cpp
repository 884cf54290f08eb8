#include "unicyclic/matrices.hpp"

namespace unicyclic {

IncidenceMatrix::IncidenceMatrix(const Graph& g) : m_(g.vertex_count(), g.edge_count()) {
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    m_(g.edges()[e].u, e) = 1;
    m_(g.edges()[e].v, e) = 1;
  }
}

ParityMatrix::ParityMatrix(const DistanceTable& d) : p_(d.size(), d.size()) {
  for (Vertex i = 0; i < d.size(); ++i) {
    for (Vertex j = 0; j < d.size(); ++j) p_(i, j) = d(i, j) % 2 == 0 ? 1 : -1;
  }
}

IncidenceMatrix incidence_matrix(const Graph& g) { return IncidenceMatrix(g); }

ParityMatrix parity_matrix(const Graph& g) { return ParityMatrix(DistanceTable(g)); }

ParityMatrix parity_matrix(const DistanceTable& d) { return ParityMatrix(d); }

SignlessLaplacians signless_laplacians(const IncidenceMatrix& m) {
  const RationalMatrix mt = mat_transpose(m.matrix());
  return {mat_mul(m.matrix(), mt), mat_mul(mt, m.matrix())};
}

}  // namespace unicyclic
