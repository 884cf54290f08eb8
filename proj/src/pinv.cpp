#include "unicyclic/pinv.hpp"

#include <cstdint>

#include "unicyclic/errors.hpp"
#include "unicyclic/matrices.hpp"

namespace unicyclic {

namespace {

std::int64_t parity_sign(std::size_t distance) { return distance % 2 == 0 ? 1 : -1; }

}  // namespace

std::string_view to_string(PinvFormula f) {
  switch (f) {
    case PinvFormula::EvenUnicyclicPinv:
      return "even-unicyclic-pinv";
    case PinvFormula::OddUnicyclicInverse:
      return "odd-unicyclic-inverse";
  }
  return "unknown";
}

CombinatorialPinv even_unicyclic_pinv(const UnicyclicDecomposition& d) {
  if (!d.even()) throw GraphError("even_unicyclic_pinv: cycle length is odd");
  const Graph& g = d.graph();
  const std::size_t n = d.vertex_count();
  const std::size_t len = d.cycle_length();
  const auto ni = static_cast<std::int64_t>(n);
  const auto cycle_denominator = static_cast<std::int64_t>(n * len);

  RationalMatrix h(g.edge_count(), n);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    auto row = h.row(e);
    if (!d.edge_on_cycle(e)) {
      const auto detached = static_cast<std::int64_t>(d.detached_size(e));
      const auto attached = ni - detached;
      for (Vertex j = 0; j < n; ++j) {
        const std::int64_t size = d.in_detached(e, j) ? attached : detached;
        row[j] = Rational(parity_sign(d.dist_edge_vertex(e, j)) * size, ni);
      }
      continue;
    }
    const Vertex r = g.edges()[e].smaller();
    std::int64_t branch_sum = 0;
    for (Vertex t : d.cycle().vertices) {
      branch_sum += static_cast<std::int64_t>(d.branch_size(t) * d.dist_in_tree_minus_edge(e, r, t));
    }
    for (Vertex j = 0; j < n; ++j) {
      const auto to_anchor = static_cast<std::int64_t>(d.dist_in_tree_minus_edge(e, r, d.anchor(j)));
      const std::int64_t value = branch_sum - ni * to_anchor;
      row[j] = Rational(parity_sign(d.dist_in_tree_minus_edge(e, r, j)) * value, cycle_denominator);
    }
  }
  return {std::move(h), GraphClass::EvenUnicyclic, PinvFormula::EvenUnicyclicPinv};
}

CombinatorialPinv odd_unicyclic_inverse(const UnicyclicDecomposition& d) {
  if (d.even()) throw GraphError("odd_unicyclic_inverse: cycle length is even");
  const Graph& g = d.graph();
  const std::size_t n = d.vertex_count();

  RationalMatrix a(g.edge_count(), n);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    auto row = a.row(e);
    const bool cyclic = d.edge_on_cycle(e);
    for (Vertex j = 0; j < n; ++j) {
      const std::int64_t sign = parity_sign(d.dist_edge_vertex(e, j));
      if (cyclic) {
        row[j] = Rational(sign, 2);
      } else if (d.in_detached(e, j)) {
        row[j] = sign;
      }
    }
  }
  return {std::move(a), GraphClass::OddUnicyclic, PinvFormula::OddUnicyclicInverse};
}

CombinatorialPinv combinatorial_pinv(const UnicyclicDecomposition& d) {
  return d.even() ? even_unicyclic_pinv(d) : odd_unicyclic_inverse(d);
}

RationalMatrix predicted_MH(const UnicyclicDecomposition& d) {
  const std::size_t n = d.vertex_count();
  RationalMatrix out = RationalMatrix::identity(n);
  if (!d.even()) return out;
  const auto ni = static_cast<std::int64_t>(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) out(i, j) -= Rational(parity_sign(d.dist(i, j)), ni);
  }
  return out;
}

RationalMatrix predicted_HM(const UnicyclicDecomposition& d) {
  const std::size_t m = d.graph().edge_count();
  if (!d.even()) return RationalMatrix::identity(m);
  const auto len = static_cast<std::int64_t>(d.cycle_length());

  RationalMatrix out(m, m);
  for (EdgeIndex i = 0; i < m; ++i) {
    if (!d.edge_on_cycle(i)) {
      out(i, i) = 1;
      continue;
    }
    for (EdgeIndex j : d.cycle().edges) {
      const std::int64_t sign = parity_sign(d.dist_edge_edge(i, j));
      out(i, j) = Rational(sign * (i == j ? len - 1 : 1), len);
    }
  }
  return out;
}

LaplacianPinvs qplus_splus(const CombinatorialPinv& h) {
  const RationalMatrix ht = mat_transpose(h.h);
  return {mat_mul(ht, h.h), mat_mul(h.h, ht)};
}

}  // namespace unicyclic
