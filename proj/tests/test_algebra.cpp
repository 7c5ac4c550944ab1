#include <doctest.h>

#include "parageom/catalog.hpp"
#include "parageom/cohomology.hpp"
#include "parageom/errors.hpp"

#include <random>

using namespace parageom;

namespace {

Vector random_vector(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> val(-4, 4);
  Vector v(n);
  for (auto& x : v) x = frac(val(rng), 1 + std::abs(val(rng)) % 3);
  return v;
}

bool all_zero(const SparseMatrix& m) {
  for (const auto& row : m.data)
    if (!row.empty()) return false;
  return true;
}

}  // namespace

TEST_CASE("sl2 Killing form values") {
  auto L = sl2();
  auto k = killing_form(L);
  std::size_t e = L.index("e"), f = L.index("f"), h = L.index("h");
  CHECK(k(h, h) == 8);
  CHECK(k(e, f) == 4);
  CHECK(k(e, e) == 0);
  CHECK(k(e, h) == 0);
  CHECK(signature(k) == Inertia{2, 1, 0});
}

TEST_CASE("Killing form is ad-invariant") {
  std::mt19937 rng(11);
  for (const auto& L : {sl2(), sl3(), su2()}) {
    auto k = killing_form(L);
    for (int s = 0; s < 10; ++s) {
      auto x = random_vector(rng, L.dim()), y = random_vector(rng, L.dim()), z = random_vector(rng, L.dim());
      CHECK(dot(L.bracket(x, y), k.apply(z)) + dot(y, k.apply(L.bracket(x, z))) == 0);
    }
  }
}

TEST_CASE("subalgebra closure") {
  auto L = sl3();
  auto unit = [&](const std::string& n) {
    Vector v(L.dim());
    v[L.index(n)] = 1;
    return v;
  };
  CHECK(is_subalgebra(L, {unit("H1"), unit("E12")}));
  CHECK_FALSE(is_subalgebra(L, {unit("E12"), unit("E21")}));
  CHECK(is_subalgebra(L, {unit("E12"), unit("E21"), unit("H1")}));
  CHECK_THROWS(is_subalgebra(L, {unit("E12"), unit("E12")}));
}

TEST_CASE("radical and derived algebra of the isotropy algebras") {
  CHECK(radical(sl3()).dim() == 0);
  CHECK(derived_subalgebra(sl3()).dim() == 8);
  auto gl2 = isotropy_case("gl2");
  CHECK(radical(*gl2.h).dim() == 1);
  CHECK(derived_subalgebra(*gl2.h).dim() == 3);
  auto p12 = isotropy_case("p12");
  CHECK(radical(*p12.h).dim() == 5);
  auto sl2s = isotropy_case("sl2-semidirect");
  CHECK(radical(*sl2s.h).dim() == 2);
}

TEST_CASE("identification of small algebras") {
  auto id = identify_simple(sl3());
  CHECK(id.label == "sl3_R");
  CHECK(id.dim == 8);
  CHECK(id.rank == 2);
  CHECK(id.signature == Inertia{5, 3, 0});
  CHECK(identify_simple(sl2()).label == "other");
}

TEST_CASE("jacobi_defect flags a broken bracket") {
  auto L = sl2();
  CHECK(is_lie_algebra(L));
  L.set("e", "f", {{"h", 2}, {"e", 1}});
  CHECK_FALSE(is_lie_algebra(L));
}

TEST_CASE("representation functors") {
  auto c = isotropy_case("sl3");
  CHECK(c.m.homomorphism_defect().empty());
  auto dd = dual(dual(c.m));
  for (std::size_t i = 0; i < c.h->dim(); ++i) CHECK(dd.scalar_action(i) == c.m.scalar_action(i));
  CHECK(exterior(c.m, 2).dim() == 15);
  CHECK(exterior(c.m, 3).dim() == 20);
  CHECK(sym2(c.m).dim() == 21);
  CHECK(tensor(c.m, dual(c.m)).dim() == 36);
  CHECK(exterior(c.m, 2).homomorphism_defect().empty());
}

TEST_CASE("invariant counts of the two main isotropy modules") {
  auto s = isotropy_case("sl3");
  auto ms = dual(s.m);
  CHECK(invariants(tensor(ms, exterior(ms, 2))).size() == 2);
  CHECK(invariants(exterior(ms, 3)).size() == 2);
  CHECK(equivariant_maps(exterior(s.m, 2), s.m).size() == 2);
  CHECK(equivariant_maps(exterior(s.m, 2), adjoint(s.h)).size() == 1);
  auto g = isotropy_case("gl2");
  auto gs = dual(g.m);
  CHECK(invariants(tensor(gs, exterior(gs, 2))).size() == 4);
  CHECK(invariants(exterior(gs, 3)).size() == 2);
  CHECK(equivariant_maps(exterior(g.m, 2), direct_sum(adjoint(g.h), g.m)).size() == 7);
}

TEST_CASE("invariant lines") {
  auto sl2s = isotropy_case("sl2-semidirect");
  auto r = invariant_lines(dual(sl2s.m));
  REQUIRE(r.status == "finite");
  REQUIRE(r.lines.size() == 1);
  Vector w(6);
  w[3] = 1;
  CHECK(r.lines[0] == w);
  auto all = invariant_lines(trivial(sl2s.h, 2));
  CHECK(all.status == "all");
  auto p12 = isotropy_case("p12");
  CHECK(invariant_lines(p12.m).lines.size() == 2);
}

TEST_CASE("cohomology of small modules") {
  auto a = share(LieAlgebra({"x"}));
  CHECK(ce_cohomology(trivial(a, 1)).dim == 1);
  auto s = share(sl2());
  CHECK(ce_cohomology(trivial(s, 1)).dim == 0);
  CHECK(ce_cohomology(adjoint(s)).dim == 0);
  CHECK_THROWS_AS(ce_cohomology(adjoint(s), 2), std::invalid_argument);
}

TEST_CASE("d o d = 0 on the catalog hom modules") {
  for (const auto& name : isotropy_case_names()) {
    auto c = isotropy_case(name, frac(3, 2));
    auto r = hom_module(c);
    auto d0 = ce_differential(r, 0), d1 = ce_differential(r, 1), d2 = ce_differential(r, 2);
    CHECK_MESSAGE(all_zero(d1 * d0), name);
    CHECK_MESSAGE(all_zero(d2 * d1), name);
  }
}

TEST_CASE("first cohomology table") {
  std::map<std::string, std::size_t> expected{
      {"sl3", 0},     {"p1", 0},        {"p2", 0},        {"p12", 0},      {"sl2-semidirect", 1},
      {"gl2", 0},     {"rzrt-neg", 0},  {"rzrt-null", 0}, {"rzrt-pos", 0}, {"rz-b2-r", 0},
  };
  for (const auto& [name, dim] : expected) CHECK_MESSAGE(ce_cohomology(hom_module(isotropy_case(name))).dim == dim, name);
  for (const auto& l : exceptional_l()) {
    auto h1 = ce_cohomology(hom_module(isotropy_case("s2-semidirect", l))).dim;
    CHECK_MESSAGE(h1 == (l == frac(3, 2) ? 6u : 1u), to_pretty(l));
  }
  for (const auto& l : generic_l(5, 4)) CHECK(ce_cohomology(hom_module(isotropy_case("s2-semidirect", l))).dim == 0);
}
