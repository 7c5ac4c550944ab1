#include <doctest.h>

#include "parageom/cohomology.hpp"
#include "parageom/errors.hpp"
#include "parageom/geometry.hpp"

#include <random>

using namespace parageom;

namespace {

// Curvature pair given directly: m = Delta+ (+) Delta- with J = diag(1,1,1,-1,-1,-1),
// h = 0, brackets only between same-type vectors.
HomogeneousModel model_from_xi(const QMatrix& xp, const QMatrix& xm) {
  LieAlgebra g({"p1", "p2", "p3", "q1", "q2", "q3"});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      PVector a(6), b(6);
      for (std::size_t r = 0; r < 3; ++r) {
        a[3 + r] = Poly(xp(r, pair_index(i, j, 3)));
        b[r] = Poly(xm(r, pair_index(i, j, 3)));
      }
      g.set(i, j, a);
      g.set(3 + i, 3 + j, b);
    }
  QMatrix J = QMatrix::identity(6);
  for (std::size_t i = 3; i < 6; ++i) J(i, i) = -1;
  return coordinate_model("xi", g, {}, {0, 1, 2, 3, 4, 5}, J);
}

QMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> val(-5, 5);
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = frac(val(rng), 1 + std::abs(val(rng)) % 3);
  return m;
}

HomogeneousModel su2_model() {
  return coordinate_model("su2", su2(), {}, {0, 1, 2}, QMatrix());
}

}  // namespace

TEST_CASE("classify_nijenhuis on the normal forms") {
  CHECK(classify_nijenhuis(QMatrix::from_rows({{2, 0, 0}, {0, frac(3, 2), 0}, {0, 0, frac(1, 3)}})) ==
        "real-diagonalizable");
  CHECK(classify_nijenhuis(QMatrix::from_rows({{1, 0, 0}, {0, frac(3, 5), frac(4, 5)}, {0, frac(-4, 5), frac(3, 5)}})) ==
        "complex-pair");
  CHECK(classify_nijenhuis(QMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}})) == "jordan-3");
  CHECK(classify_nijenhuis(QMatrix::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})) == "jordan-2");
  CHECK(classify_nijenhuis(QMatrix::from_rows({{4, 1, 0}, {0, 4, 0}, {0, 0, frac(1, 16)}})) == "jordan-2");
  CHECK(classify_nijenhuis(QMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, frac(1, 4)}})) == "real-diagonalizable");
  CHECK(classify_nijenhuis(QMatrix::identity(3)) == "real-diagonalizable");
  // scale invariance
  QMatrix c = QMatrix::from_rows({{1, 0, 0}, {0, frac(3, 5), frac(4, 5)}, {0, frac(-4, 5), frac(3, 5)}});
  CHECK(classify_nijenhuis(c * Scalar(-7)) == "complex-pair");
}

TEST_CASE("symbol of the trivial and standard curvature pairs") {
  QMatrix zero(3, 3);
  CurvaturePair z{zero, zero, {}, {}};
  CHECK(symbol_g1(z).size() == 18);
  // standard cross-product pair: Xi+(p_i,p_j) = eps_ijk q_k and likewise for Xi-.
  QMatrix eps(3, 3);
  eps(2, pair_index(0, 1, 3)) = 1;
  eps(1, pair_index(0, 2, 3)) = -1;
  eps(0, pair_index(1, 2, 3)) = 1;
  auto model = model_from_xi(eps, eps);
  auto xi = curvature_maps(model);
  CHECK(xi.xi_plus == eps);
  CHECK(xi.xi_minus == eps);
  CHECK(is_nondegenerate(xi));
  auto g1 = symbol_g1(xi);
  CHECK(g1.size() == 8);
  CHECK(prolongation_g2(xi) == 0);
  auto vn = volume_normalize(xi);
  REQUIRE(vn.exact);
  CHECK(vn.psi_bar == QMatrix::identity(3));
  CHECK(det(vn.psi_bar) == 1);
}

TEST_CASE("random invertible curvature pairs have g2 = 0 and dim g1 <= 8") {
  std::mt19937 rng(7);
  int done = 0;
  while (done < 25) {
    QMatrix a = random_matrix(rng, 3), b = random_matrix(rng, 3);
    if (sgn(det(a)) == 0 || sgn(det(b)) == 0) continue;
    CurvaturePair xi{a, b, {}, {}};
    CHECK(symbol_g1(xi).size() <= 8);
    CHECK(prolongation_g2(xi) == 0);
    ++done;
  }
}

TEST_CASE("symbol_g1 solutions satisfy the defining relation") {
  QMatrix eps(3, 3);
  eps(2, 0) = 1;
  eps(1, 1) = -1;
  eps(0, 2) = 1;
  auto model = model_from_xi(eps, eps);
  auto xi = curvature_maps(model);
  for (const auto& f : symbol_g1(xi)) {
    // f is a derivation-type map: Xi(f x, y) + Xi(x, f y) = f Xi(x, y)
    QMatrix fp(3, 3), fm(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        fp(r, c) = f(r, c);
        fm(r, c) = f(3 + r, 3 + c);
      }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        Vector lhs(3), rhs = fm.apply(xi.xi_plus.col(pair_index(i, j, 3)));
        for (std::size_t r = 0; r < 3; ++r) {
          if (r != j) {
            Scalar s = r < j ? Scalar(1) : Scalar(-1);
            auto col = xi.xi_plus.col(pair_index(std::min(r, j), std::max(r, j), 3));
            for (std::size_t t = 0; t < 3; ++t) lhs[t] += fp(r, i) * s * col[t];
          }
          if (r != i) {
            Scalar s = i < r ? Scalar(1) : Scalar(-1);
            auto col = xi.xi_plus.col(pair_index(std::min(r, i), std::max(r, i), 3));
            for (std::size_t t = 0; t < 3; ++t) lhs[t] += fp(r, j) * s * col[t];
          }
        }
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("bi-invariant metric on SU(2) is Einstein with lambda 1/4") {
  auto m = su2_model();
  QMatrix g = -killing_form(su2());
  auto v = is_einstein(m, g);
  CHECK(v.einstein);
  CHECK(v.lambda == frac(1, 4));
}

TEST_CASE("flat abelian model is Einstein with lambda 0") {
  auto m = coordinate_model("flat", LieAlgebra({"a", "b"}), {}, {0, 1}, QMatrix());
  auto v = is_einstein(m, QMatrix::from_rows({{1, 2}, {2, -3}}));
  CHECK(v.einstein);
  CHECK(v.lambda == 0);
}

TEST_CASE("su2 cubed Nijenhuis trichotomy") {
  CHECK(nijenhuis_family_su2cubed(1, 2) == "integrable");
  CHECK(nijenhuis_family_su2cubed(-1, -2) == "integrable");
  CHECK(nijenhuis_family_su2cubed(1, frac(1, 2)) == "degenerate-nonintegrable");
  CHECK(nijenhuis_family_su2cubed(0, 3) == "nondegenerate");
  CHECK_THROWS_AS(nijenhuis_family_su2cubed(1, 0), std::invalid_argument);
}

TEST_CASE("su2 cubed limiting chart") {
  // product structures of the double fibration
  CHECK(nijenhuis_verdict(su2_cubed_limit_model(1, 0)) == "integrable");
  CHECK(nijenhuis_verdict(su2_cubed_limit_model(-1, 0)) == "integrable");
  CHECK(nijenhuis_verdict(su2_cubed_limit_model(1, -2)) == "integrable");
  CHECK(nijenhuis_verdict(su2_cubed_limit_model(-1, 2)) == "integrable");
  CHECK(nijenhuis_verdict(su2_cubed_limit_model(1, 1)) == "degenerate-nonintegrable");
  CHECK_THROWS_AS(su2_cubed_limit_model(0, 1), std::invalid_argument);
  validate_model(su2_cubed_limit_model(1, frac(3, 7)));
}
