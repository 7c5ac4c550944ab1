#include <doctest.h>

#include "parageom/catalog.hpp"

#include <algorithm>
#include <set>

using namespace parageom;

namespace {

HomogeneousModel alpha_model(int c1, int c2, const Scalar& alpha) {
  auto g = alpha_family(c1, c2).substitute(std::map<std::string, Scalar>{{"alpha", alpha}});
  QMatrix J = QMatrix::identity(6);
  for (std::size_t i = 3; i < 6; ++i) J(i, i) = -1;
  return coordinate_model("alpha", g, {0, 1, 2, 3}, {4, 5, 6, 7, 8, 9}, J);
}

}  // namespace

TEST_CASE("case vocabulary") {
  auto iso = isotropy_case_names();
  CHECK(iso.size() == 12);
  auto all = case_names();
  CHECK(all.size() == iso.size() + geometry_case_names().size());
  CHECK(std::set<std::string>(all.begin(), all.end()).size() == all.size());
  for (const auto& n : all) CHECK(is_case(n));
  CHECK_FALSE(is_case("so3"));
  CHECK_THROWS_AS(isotropy_case("so3"), std::invalid_argument);
}

TEST_CASE("isotropy algebras have the listed dimensions and act on m") {
  std::map<std::string, std::size_t> dims{
      {"sl3", 8},      {"p1", 6},       {"p2", 6},          {"p12", 5},      {"sl2-semidirect", 5},
      {"gl2", 4},      {"rzrt-neg", 4}, {"rzrt-null", 4},   {"rzrt-pos", 4}, {"rz-b2-r", 4},
      {"s2-semidirect", 4},             {"sl2-semidirect-twisted", 5},
  };
  for (const auto& name : isotropy_case_names()) {
    auto c = isotropy_case(name, frac(1, 7));
    CHECK_MESSAGE(c.h->dim() == dims.at(name), name);
    CHECK(c.m.dim() == 6);
    CHECK(c.m_names.size() == 6);
    CHECK(is_lie_algebra(*c.h));
    CHECK_MESSAGE(c.m.homomorphism_defect().empty(), name);
    CHECK(is_subalgebra(sl3(), [&] {
      std::vector<Vector> span;
      // coordinates in the sl3 basis E12,E13,E21,E23,E31,E32,H1,H2
      for (const auto& x : c.h_matrices)
        span.push_back({x(0, 1), x(0, 2), x(1, 0), x(1, 2), x(2, 0), x(2, 1), x(0, 0), -x(2, 2)});
      return span;
    }()));
  }
}

TEST_CASE("generic levels avoid the exceptional set") {
  auto g = generic_l(42, 20);
  CHECK(g.size() == 20);
  CHECK(std::set<Scalar>(g.begin(), g.end()).size() == 20);
  for (const auto& l : g) CHECK(std::find(exceptional_l().begin(), exceptional_l().end(), l) == exceptional_l().end());
  CHECK(generic_l(42, 20) == g);
  CHECK(exceptional_l().size() == 9);
}

TEST_CASE("bracket list parser") {
  auto L = from_bracket_list({"e", "f", "h"}, "[h,e] = 2*e; [h,f] = -2*f; [e,f] = h");
  CHECK(L == sl2());
  CHECK_THROWS(from_bracket_list({"e", "f"}, "[e,g] = f"));
}

TEST_CASE("normalized alpha families") {
  for (auto [c1, c2] : {std::pair{0, 1}, std::pair{1, 0}}) {
    auto g = alpha_family(c1, c2);
    CHECK(jacobi_defect(g).empty());
    // the eigendistribution with vanishing brackets
    std::size_t first = c1 == 0 ? 7 : 4;
    for (std::size_t i = first; i < first + 3; ++i)
      for (std::size_t j = first; j < first + 3; ++j)
        for (std::size_t k = 0; k < g.dim(); ++k) CHECK(g.c(i, j, k).is_zero());
    for (const Scalar& a : {Scalar(0), Scalar(5), frac(-2, 3)}) {
      auto xi = curvature_maps(alpha_model(c1, c2, a));
      CHECK_FALSE(is_nondegenerate(xi));
      CHECK(det(c1 == 0 ? xi.xi_minus : xi.xi_plus) == 0);
    }
  }
}

TEST_CASE("Borel bound case") {
  auto b = borel_bound_case();
  CHECK(b.dims == std::vector<std::size_t>{5, 4, 3});
  CHECK(b.bound_holds);
}

TEST_CASE("g2* and sp(4)/gl2 models") {
  auto g2 = g2star_model();
  auto id = identify_simple(g2.g);
  CHECK(id.label == "g2_split");
  CHECK(id.signature == Inertia{8, 6, 0});
  auto xi = curvature_maps(g2);
  CHECK(is_nondegenerate(xi));
  CHECK(symbol_g1(xi).size() == 8);
  auto sp = sp4_gl2_model();
  CHECK(identify_simple(sp.g).label == "sp4_R");
  CHECK(is_nondegenerate(curvature_maps(sp)));
  for (const auto& model : {g2, sp}) {
    auto gc = canonical_metric(model);
    CHECK(signature(gc) == Inertia{3, 3, 0});
    CHECK(nearly_para_kahler(model, gc) == "strict");
    CHECK(check_p_identity(model, gc));
    CHECK(is_einstein(model, gc).einstein);
  }
}

TEST_CASE("geometry_model dispatch") {
  CHECK(geometry_model("su2cubed").m_span.size() == 6);
  CHECK(geometry_model("su2cubed", {{"r", 1}, {"t", 2}}).J == su2_cubed_model(1, 2).J);
  CHECK(geometry_model("su2").m_span.size() == 3);
  CHECK_THROWS(geometry_model("sl3"));
}
