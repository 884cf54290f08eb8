#include "doctest.h"
#include "fixtures.hpp"
#include "unicyclic/decomposition.hpp"
#include "unicyclic/errors.hpp"
#include "unicyclic/matrices.hpp"
#include "unicyclic/oracle.hpp"
#include "unicyclic/pinv.hpp"

using namespace unicyclic;

namespace {

UnicyclicDecomposition decompose_text(const char* text) { return UnicyclicDecomposition(parse_graph(text)); }

// Cycle-edge row evaluated from endpoint r (either endpoint may be passed).
std::vector<Rational> cycle_row_from(const UnicyclicDecomposition& d, EdgeIndex e, Vertex r) {
  const auto n = static_cast<std::int64_t>(d.vertex_count());
  const auto den = n * static_cast<std::int64_t>(d.cycle_length());
  std::int64_t sum = 0;
  for (Vertex t : d.cycle().vertices) {
    sum += static_cast<std::int64_t>(d.branch_size(t) * d.dist_in_tree_minus_edge(e, r, t));
  }
  std::vector<Rational> row;
  for (Vertex j = 0; j < d.vertex_count(); ++j) {
    const auto value = sum - n * static_cast<std::int64_t>(d.dist_in_tree_minus_edge(e, r, d.anchor(j)));
    const std::int64_t sign = d.dist_in_tree_minus_edge(e, r, j) % 2 == 0 ? 1 : -1;
    row.emplace_back(sign * value, den);
  }
  return row;
}

}  // namespace

TEST_SUITE("pinv") {
  TEST_CASE("even_unicyclic_pinv reproduces the worked example") {
    const auto d = decompose_text(fixtures::kExampleText);
    const CombinatorialPinv h = even_unicyclic_pinv(d);
    CHECK(h.graph_class == GraphClass::EvenUnicyclic);
    CHECK(h.provenance == PinvFormula::EvenUnicyclicPinv);
    CHECK(mat_scale(h.h, 36) == fixtures::to_matrix(fixtures::kExampleH36));
    CHECK(h.h(5, 6) == Rational(17, 36));  // (e6, vertex 7)
    CHECK(h.h(2, 0) == Rational(8, 9));    // pendant e3 at pendant vertex 1
  }

  TEST_CASE("C4 first row") {
    const auto d = decompose_text(fixtures::kFourCycleText);
    const RationalMatrix oracle = pinv_rank_factorization(incidence_matrix(d.graph()).matrix());
    const RationalMatrix expected_row{{Rational(3, 8), Rational(3, 8), Rational(-1, 8), Rational(-1, 8)}};
    for (std::size_t j = 0; j < 4; ++j) REQUIRE(oracle(0, j) == expected_row(0, j));
    const RationalMatrix h = even_unicyclic_pinv(d).h;
    for (std::size_t j = 0; j < 4; ++j) CHECK(h(0, j) == expected_row(0, j));
  }

  TEST_CASE("odd_unicyclic_inverse on the triangle") {
    const auto d = decompose_text(fixtures::kTriangleText);
    const CombinatorialPinv a = odd_unicyclic_inverse(d);
    const RationalMatrix m = incidence_matrix(d.graph()).matrix();
    REQUIRE(mat_mul(m, a.h) == RationalMatrix::identity(3));
    const Rational h(1, 2);
    CHECK(a.h == RationalMatrix{{h, h, -h}, {-h, h, h}, {h, -h, h}});
    CHECK(a.h(0, 2) == -h);
    CHECK(a.provenance == PinvFormula::OddUnicyclicInverse);
  }

  TEST_CASE("odd inverse: pendant edge at pendant vertex is 1") {
    // Triangle 1-2-3 with a pendant path 3-4-5.
    const auto d = decompose_text("5 5\n1 2\n2 3\n3 1\n3 4\n4 5\n");
    const RationalMatrix a = odd_unicyclic_inverse(d).h;
    CHECK(a(4, 4) == Rational(1));
    CHECK(a(4, 0) == Rational(0));
  }

  TEST_CASE("formulas reject the wrong parity") {
    CHECK_THROWS_AS(even_unicyclic_pinv(decompose_text(fixtures::kTriangleText)), GraphError);
    CHECK_THROWS_AS(odd_unicyclic_inverse(decompose_text(fixtures::kFourCycleText)), GraphError);
    CHECK(combinatorial_pinv(decompose_text(fixtures::kTriangleText)).provenance ==
          PinvFormula::OddUnicyclicInverse);
  }

  TEST_CASE("predicted_MH") {
    const auto d = decompose_text(fixtures::kExampleText);
    const RationalMatrix mh = predicted_MH(d);
    for (Vertex i = 0; i < 9; ++i) CHECK(mh(i, i) == Rational(8, 9));
    REQUIRE(fixtures::floyd_warshall(d.graph())[0][1] == 1);
    CHECK(mh(0, 1) == Rational(1, 9));
    CHECK(predicted_MH(decompose_text(fixtures::kTriangleText)) == RationalMatrix::identity(3));
  }

  TEST_CASE("predicted_HM") {
    const auto d = decompose_text(fixtures::kExampleText);
    const RationalMatrix hm = predicted_HM(d);
    CHECK(hm(5, 5) == Rational(3, 4));  // (e6, e6)
    CHECK(hm(5, 7) == Rational(1, 4));  // (e6, e8) share vertex 5
    CHECK(hm(0, 0) == Rational(1));
    CHECK(hm(0, 3) == Rational(0));
    CHECK(predicted_HM(decompose_text(fixtures::kTriangleText)) == RationalMatrix::identity(3));
  }

  TEST_CASE("qplus_splus") {
    const auto tri = decompose_text(fixtures::kTriangleText);
    const CombinatorialPinv a = odd_unicyclic_inverse(tri);
    const LaplacianPinvs lp = qplus_splus(a);
    const auto ql = signless_laplacians(incidence_matrix(tri.graph()));
    CHECK(lp.q_plus == mat_mul(mat_transpose(a.h), a.h));
    CHECK(mat_mul(mat_mul(ql.q, lp.q_plus), ql.q) == ql.q);

    const auto fig = decompose_text(fixtures::kExampleText);
    const LaplacianPinvs fp = qplus_splus(even_unicyclic_pinv(fig));
    const auto fl = signless_laplacians(incidence_matrix(fig.graph()));
    CHECK(check_penrose(fl.q, fp.q_plus).all_pass());
    CHECK(check_penrose(fl.s, fp.s_plus).all_pass());
    CHECK(fp.s_plus.is_symmetric());
  }

  TEST_CASE("even graphs: certification, products, annihilation, fingerprints, endpoints") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const UnicyclicDecomposition d(fixtures::random_unicyclic(seed, 4, 40, CycleParity::Even));
      const std::size_t n = d.vertex_count();
      const RationalMatrix m = incidence_matrix(d.graph()).matrix();
      const RationalMatrix h = even_unicyclic_pinv(d).h;
      CAPTURE(seed);

      CHECK(check_penrose(m, h).all_pass());
      CHECK(mat_mul(m, h) == predicted_MH(d));
      const RationalMatrix hm = mat_mul(h, m);
      CHECK(hm == predicted_HM(d));
      CHECK(mat_mul(h, parity_matrix(d.graph()).matrix()).is_zero());
      CHECK(check_fingerprints(d, h, hm).all_pass());

      const auto den = static_cast<std::int64_t>(n * d.cycle_length());
      for (EdgeIndex e = 0; e < n; ++e) {
        for (Vertex j = 0; j < n; ++j) {
          CHECK((den % h(e, j).denominator().get_si()) == 0);
        }
      }
      for (EdgeIndex e : d.cycle().edges) {
        const Edge& ed = d.graph().edges()[e];
        const auto from_r = cycle_row_from(d, e, ed.smaller());
        const auto from_s = cycle_row_from(d, e, ed.larger());
        CHECK(from_r == from_s);
        for (Vertex j = 0; j < n; ++j) CHECK(h(e, j) == from_r[j]);
      }
    }
  }

  TEST_CASE("even_unicyclic_pinv equals the rank-factorization oracle") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      const UnicyclicDecomposition d(fixtures::random_unicyclic(seed, 4, 24, CycleParity::Even));
      CAPTURE(seed);
      CHECK(even_unicyclic_pinv(d).h == pinv_rank_factorization(incidence_matrix(d.graph()).matrix()));
    }
  }

  TEST_CASE("odd graphs: two-sided inverse and entry set") {
    const std::vector<Rational> allowed{0, 1, -1, Rational(1, 2), Rational(-1, 2)};
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const UnicyclicDecomposition d(fixtures::random_unicyclic(seed, 3, 40, CycleParity::Odd));
      const RationalMatrix m = incidence_matrix(d.graph()).matrix();
      const RationalMatrix a = odd_unicyclic_inverse(d).h;
      const auto id = RationalMatrix::identity(d.vertex_count());
      CAPTURE(seed);
      CHECK(mat_mul(a, m) == id);
      CHECK(mat_mul(m, a) == id);
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (const Rational& x : a.row(i)) {
          CHECK(std::find(allowed.begin(), allowed.end(), x) != allowed.end());
        }
      }
    }
  }
}
