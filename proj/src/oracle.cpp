#include "unicyclic/oracle.hpp"

#include <sstream>

#include "unicyclic/errors.hpp"

namespace unicyclic {

namespace {

// Number of scalar multiply-adds mat_mul(a, b) performs.
std::size_t product_cost(const RationalMatrix& a, const RationalMatrix& b) {
  std::vector<std::size_t> col_nz(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) col_nz[k] += a(i, k).is_zero() ? 0 : 1;
  }
  std::size_t cost = 0;
  for (std::size_t k = 0; k < b.rows(); ++k) {
    std::size_t row_nz = 0;
    for (std::size_t j = 0; j < b.cols(); ++j) row_nz += b(k, j).is_zero() ? 0 : 1;
    cost += col_nz[k] * row_nz;
  }
  return cost;
}

// a * b * c with the cheaper association, given a*b and b*c are already known.
RationalMatrix triple_product(const RationalMatrix& a, const RationalMatrix& ab,
                              const RationalMatrix& bc, const RationalMatrix& c) {
  return product_cost(ab, c) <= product_cost(a, bc) ? mat_mul(ab, c) : mat_mul(a, bc);
}

std::optional<PenroseWitness> first_difference(int axiom, const RationalMatrix& lhs,
                                               const RationalMatrix& rhs) {
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      if (lhs(i, j) != rhs(i, j)) return PenroseWitness{axiom, i, j};
    }
  }
  return std::nullopt;
}

std::optional<PenroseWitness> first_asymmetry(int axiom, const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) return PenroseWitness{axiom, i, j};
    }
  }
  return std::nullopt;
}

}  // namespace

RankFactorization rank_factorize(const RationalMatrix& a) {
  RowEchelon echelon = reduced_row_echelon(a);
  const std::size_t r = echelon.rank();
  RankFactorization out{RationalMatrix(a.rows(), r), RationalMatrix(r, a.cols()), r};
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t col = echelon.pivot_columns[k];
    for (std::size_t i = 0; i < a.rows(); ++i) out.f(i, k) = a(i, col);
    for (std::size_t j = 0; j < a.cols(); ++j) out.g(k, j) = echelon.reduced(k, j);
  }
  return out;
}

RationalMatrix pinv_rank_factorization(const RationalMatrix& a) {
  const RankFactorization fg = rank_factorize(a);
  RationalMatrix result(a.cols(), a.rows());
  if (fg.rank > 0) {
    const RationalMatrix ft = mat_transpose(fg.f);
    const RationalMatrix gt = mat_transpose(fg.g);
    const RationalMatrix left = solve_full_rank(mat_mul(ft, fg.f), ft);
    const RationalMatrix middle = solve_full_rank(mat_mul(fg.g, gt), left);
    result = mat_mul(gt, middle);
  }
  const PenroseReport report = check_penrose(a, result);
  if (!report.all_pass()) {
    throw CertificationError("pinv_rank_factorization: result fails Penrose check " +
                             report.to_json());
  }
  return result;
}

std::string PenroseReport::to_json() const {
  std::ostringstream out;
  out << std::boolalpha << "{\"axiom1\":" << axiom1 << ",\"axiom2\":" << axiom2
      << ",\"axiom3\":" << axiom3 << ",\"axiom4\":" << axiom4 << ",\"witness\":";
  if (first_violation) {
    out << "{\"axiom\":" << first_violation->axiom << ",\"row\":" << first_violation->row + 1
        << ",\"col\":" << first_violation->col + 1 << "}";
  } else {
    out << "null";
  }
  out << "}";
  return out.str();
}

PenroseReport check_penrose(const RationalMatrix& a, const RationalMatrix& x) {
  if (x.rows() != a.cols() || x.cols() != a.rows()) {
    throw DimensionError("check_penrose: A is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " but X is " + std::to_string(x.rows()) +
                         "x" + std::to_string(x.cols()));
  }
  const RationalMatrix ax = mat_mul(a, x);
  const RationalMatrix xa = mat_mul(x, a);

  PenroseReport report;
  const auto w1 = first_difference(1, triple_product(a, ax, xa, a), a);
  const auto w2 = first_difference(2, triple_product(x, xa, ax, x), x);
  const auto w3 = first_asymmetry(3, ax);
  const auto w4 = first_asymmetry(4, xa);
  report.axiom1 = !w1;
  report.axiom2 = !w2;
  report.axiom3 = !w3;
  report.axiom4 = !w4;
  for (const auto* w : {&w1, &w2, &w3, &w4}) {
    if (*w) {
      report.first_violation = **w;
      break;
    }
  }
  return report;
}

bool check_parity_annihilation(const Graph& g, const IncidenceMatrix& m) {
  return mat_mul(parity_matrix(g).matrix(), m.matrix()).is_zero();
}

FingerprintReport check_fingerprints(const UnicyclicDecomposition& d, const RationalMatrix& h,
                                     const RationalMatrix& hm) {
  const Graph& g = d.graph();
  const auto n = static_cast<std::int64_t>(d.vertex_count());
  const auto len = static_cast<std::int64_t>(d.cycle_length());
  if (h.rows() != g.edge_count() || h.cols() != d.vertex_count() || hm.rows() != g.edge_count() ||
      hm.cols() != g.edge_count()) {
    throw DimensionError("check_fingerprints: matrix shapes do not match the graph");
  }

  FingerprintReport report{true, true};
  const Rational pendant_value(n - 1, n);
  for (EdgeIndex e = 0; e < g.edge_count() && report.pendant; ++e) {
    for (Vertex j = 0; j < d.vertex_count(); ++j) {
      const bool pendant_pair = g.edges()[e].has(j) && g.degree(j) == 1;
      if ((h(e, j) == pendant_value) != pendant_pair) {
        report.pendant = false;
        break;
      }
    }
  }
  const Rational cycle_value(len - 1, len);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Rational& expected = d.edge_on_cycle(e) ? cycle_value : Rational(1);
    if (hm(e, e) != expected) {
      report.cycle_diagonal = false;
      break;
    }
  }
  return report;
}

}  // namespace unicyclic
