#include "parageom/catalog.hpp"

#include "parageom/errors.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace parageom {

namespace {

QMatrix E(std::size_t i, std::size_t j) { return elementary(3, i, j); }

QMatrix diag3(const Scalar& a, const Scalar& b, const Scalar& c) {
  QMatrix m(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

QMatrix on_m(const QMatrix& x) {
  QMatrix r(6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      r(i, j) = x(i, j);
      r(3 + i, 3 + j) = -x(j, i);
    }
  return r;
}

const std::vector<std::string> kVV = {"v1", "v2", "v3", "w1", "w2", "w3"};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

IsotropyCase build(std::string name, std::vector<std::string> names, std::vector<QMatrix> mats,
                   std::vector<std::string> m_names = kVV) {
  IsotropyCase c;
  c.name = std::move(name);
  c.h_names = names;
  c.h_matrices = mats;
  c.h = share(LieAlgebra::from_matrices(std::move(names), mats));
  std::vector<QMatrix> act;
  for (const auto& x : mats) act.push_back(on_m(x));
  c.m = Representation(c.h, act);
  c.m_names = std::move(m_names);
  return c;
}


}  // namespace

std::vector<std::string> isotropy_case_names() {
  return {"sl3",  "p1",   "p2",       "p12",      "sl2-semidirect", "sl2-semidirect-twisted",
          "gl2",  "rzrt-neg", "rzrt-null", "rzrt-pos", "rz-b2-r",        "s2-semidirect"};
}

std::vector<std::string> geometry_case_names() { return {"g2star", "sp4-gl2", "su2cubed", "su2", "borel-bound"}; }

std::vector<std::string> case_names() {
  auto a = isotropy_case_names();
  auto b = geometry_case_names();
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool is_case(const std::string& name) {
  auto all = case_names();
  return std::find(all.begin(), all.end(), name) != all.end();
}

IsotropyCase isotropy_case(const std::string& name, const Scalar& l) {
  const QMatrix H1 = diag3(1, -1, 0), H2 = diag3(0, 1, -1), S = diag3(1, 1, -2);
  if (name == "sl3")
    return build(name, {"E12", "E13", "E21", "E23", "E31", "E32", "H1", "H2"},
                 {E(1, 2), E(1, 3), E(2, 1), E(2, 3), E(3, 1), E(3, 2), H1, H2});
  if (name == "p1")
    return build(name, {"E12", "E13", "E21", "E23", "H1", "H2"}, {E(1, 2), E(1, 3), E(2, 1), E(2, 3), H1, H2});
  if (name == "p2") {
    std::vector<QMatrix> mats;
    for (const auto& x : {E(1, 2), E(1, 3), E(2, 1), E(2, 3), H1, H2}) mats.push_back(-x.transpose());
    return build(name, {"y1", "y2", "y3", "y4", "y5", "y6"}, mats);
  }
  if (name == "p12") return build(name, {"s", "h", "e", "x1", "x2"}, {S, H1, E(2, 1), E(1, 3), E(2, 3)});
  if (name == "sl2-semidirect")
    return build(name, {"e", "f", "h", "x1", "x2"}, {E(2, 3), E(3, 2), H2, E(1, 2), E(1, 3)});
  if (name == "sl2-semidirect-twisted")
    return build(name, {"e", "f", "h", "x1", "x2"}, {E(1, 2), E(2, 1), H1, E(1, 3), E(2, 3)});
  if (name == "gl2")
    return build(name, {"s", "h", "e", "f"}, {S, H1, E(1, 2), E(2, 1)}, {"v1", "v2", "r", "theta1", "theta2", "varsigma"});
  if (name == "rzrt-neg") return build(name, {"s", "t", "x1", "x2"}, {S, E(1, 2) - E(2, 1), E(1, 3), E(2, 3)});
  if (name == "rzrt-null") return build(name, {"s", "t", "x1", "x2"}, {S, E(2, 1), E(1, 3), E(2, 3)});
  if (name == "rzrt-pos") return build(name, {"s", "t", "x1", "x2"}, {S, H1, E(1, 3), E(2, 3)});
  if (name == "rz-b2-r") return build(name, {"s", "h", "e", "x"}, {S, H1, E(2, 1), E(2, 3)});
  if (name == "s2-semidirect") {
    // t = h + l z with [h, e] = e and z = diag(1, 1, -2) / 3.
    QMatrix t = diag3(l / 3 - frac(1, 2), l / 3 + frac(1, 2), -2 * l / 3);
    IsotropyCase c = build(name, {"t", "e", "x1", "x2"}, {t, E(2, 1), E(1, 3), E(2, 3)});
    c.l = l;
    return c;
  }
  throw std::invalid_argument("unknown isotropy case: " + name);
}

Representation hom_module(const IsotropyCase& c) { return hom(c.m, adjoint(c.h)); }

const std::vector<Scalar>& exceptional_l() {
  static const std::vector<Scalar> v = {frac(9, 2), 3, frac(3, 2), frac(9, 10), frac(3, 4),
                                        0,          frac(-3, 10), frac(-3, 4), frac(-3, 2)};
  return v;
}

std::vector<Scalar> generic_l(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 13);
  std::set<Scalar> seen(exceptional_l().begin(), exceptional_l().end());
  std::vector<Scalar> out;
  while (out.size() < count) {
    Scalar x = frac(num(rng), den(rng));
    if (seen.insert(x).second) out.push_back(x);
  }
  return out;
}

LieAlgebra from_bracket_list(const std::vector<std::string>& names, const std::string& text) {
  LieAlgebra g(names);
  std::set<std::string> basis(names.begin(), names.end());
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    auto open = item.find('['), comma = item.find(','), close = item.find(']'), eq = item.find('=');
    if (open != 0 || comma == std::string::npos || close == std::string::npos || eq == std::string::npos || close > eq)
      throw std::invalid_argument("malformed bracket: " + item);
    std::string a = trim(item.substr(1, comma - 1)), b = trim(item.substr(comma + 1, close - comma - 1));
    if (!basis.count(a) || !basis.count(b)) throw std::invalid_argument("unknown basis element in: " + item);
    Poly rhs = parse_poly(item.substr(eq + 1));
    std::map<std::string, Poly> value;
    for (const auto& t : rhs.terms()) {
      std::string hit;
      for (const auto& [var, e] : t.mono.factors())
        if (basis.count(var)) {
          if (!hit.empty() || e != 1) throw std::invalid_argument("bracket value is not linear in the basis: " + item);
          hit = var;
        }
      if (hit.empty()) throw std::invalid_argument("bracket value has a term without basis element: " + item);
      value[hit] += Poly::monomial(t.mono.without(hit), t.coef);
    }
    g.set(a, b, value);
  }
  return g;
}

LieAlgebra extension_from_text(const IsotropyCase& c, const std::string& theta_text, const Cocycle& phi) {
  std::vector<std::string> names = c.h_names;
  names.insert(names.end(), c.m_names.begin(), c.m_names.end());
  auto [tm, th] = split_brackets(from_bracket_list(names, theta_text), c.h->dim());
  return reconstruct(ExtensionDatum{c.m, c.m_names, phi, tm, th});
}

LieAlgebra extension_from_text(const IsotropyCase& c, const std::string& theta_text) {
  return extension_from_text(c, theta_text, zero_cocycle(c.m));
}

BracketFamily gl2_family() {
  return {"gl2", 0,
          "[v1,v2] = a1*varsigma; [v1,r] = -a3*theta2; [v2,r] = a3*theta1; [r,varsigma] = b1*s;"
          "[v1,theta1] = -b2*h + b3*s; [v1,theta2] = -2*b2*e; [v2,theta1] = -2*b2*f;"
          "[v2,theta2] = b2*h + b3*s; [theta1,theta2] = a2*r; [theta1,varsigma] = -a4*v2;"
          "[theta2,varsigma] = a4*v1",
          4, 3};
}

BracketFamily sl2_untwisted_family() {
  return {"sl2-semidirect", 0,
          "[v1,v2] = a1*w3; [v1,v3] = -a1*w2; [v2,v3] = a4*v1 + a1*w1; [v2,w2] = a6*v1;"
          "[w2,w3] = a2*v1; [v1,w1] = (a7+a6)*v1; [v2,w1] = b1*x2 + a3*w3 + a7*v2;"
          "[v3,w1] = -b1*x1 - a3*w2 + a7*v3; [v3,w3] = a6*v1; [w1,w2] = b2*x1 + a5*w2 + a2*v3;"
          "[w1,w3] = b2*x2 + a5*w3 - a2*v2",
          7, 2};
}

BracketFamily sl2_twisted_family() {
  return {"sl2-semidirect-twisted", 0,
          "[v1,v3] = a1*x1 + a2*v1; [v1,w1] = -2/3*v3 - a7*w3 + a7*h; [v1,w2] = 2*a7*e;"
          "[v1,w3] = 1/3*v1 + 2*a7*x1; [v2,v3] = a1*x2 + a2*v2; [v2,w1] = 2*a7*f;"
          "[v2,w2] = -2/3*v3 - a7*w3 - a7*h; [v2,w3] = 1/3*v2 + 2*a7*x2;"
          "[v3,w1] = -a3*x2 - a4*v2 + 3*a7*w1; [v3,w2] = a3*x1 + a4*v1 + 3*a7*w2;"
          "[v3,w3] = -2/3*v3 + 2*a7*w3; [w1,w2] = a5*v3 + a6*w3; [w1,w3] = -a5*v2 - a6*x2 - w1;"
          "[w2,w3] = a5*v1 + a6*x1 - w2",
          0, 0};
}

std::vector<Scalar> s2_family_levels() { return {0, frac(-3, 10), frac(-3, 4), frac(-3, 2), frac(-1, 2)}; }

BracketFamily s2_family(const Scalar& l) {
  if (l == 0)
    return {"s2-semidirect", l,
            "[v1,v2] = a1*w3; [v1,v3] = a8*x1 + a3*v1 - a1*w2; [v2,v3] = a8*x2 + a3*v2 + a1*w1;"
            "[v1,w1] = (a7-a9)*w3; [v2,w2] = (a7-a9)*w3; [v3,w3] = a7*w3; [v3,w1] = -a4*x2 - a5*v2 + a9*w1;"
            "[v3,w2] = a4*x1 + a5*v1 + a9*w2; [w1,w2] = a6*w3 + a2*v3; [w1,w3] = -a2*v2; [w2,w3] = a2*v1",
            7, 2};
  if (l == frac(-3, 10))
    return {"s2-semidirect", l,
            "[v1,v2] = a1*w3; [v1,v3] = -a1*w2; [v2,v3] = a1*w1; [v3,w2] = a3*w3;"
            "[w1,w2] = a4*x2 + a2*v3; [w1,w3] = -a2*v2; [w2,w3] = a2*v1",
            3, 1};
  if (l == frac(-3, 4))
    return {"s2-semidirect", l,
            "[v1,v2] = a1*w3; [v1,v3] = a3*x2 - a1*w2; [v2,v3] = a1*w1; [v3,w2] = a4*v2;"
            "[w1,w2] = a2*v3; [w1,w3] = -a2*v2; [w2,w3] = a2*v1",
            3, 1};
  if (l == frac(-3, 2))
    return {"s2-semidirect", l,
            "[v1,v2] = a1*w3; [v1,v3] = a6*v2 - a1*w2; [v1,w1] = a7*v2; [v1,w2] = -a9*x2 - a3*w3 + a8*v1;"
            "[v2,v3] = a1*w1; [v2,w2] = (a7+a8)*v2; [v3,w2] = a9*e + a3*w1 + a8*v3; [v3,w3] = a7*v2;"
            "[w1,w2] = -a4*e - a5*w1 + a2*v3; [w1,w3] = -a2*v2; [w2,w3] = a4*x2 + a5*w3 + a2*v1",
            7, 2};
  if (l == frac(-1, 2))
    return {"s2-semidirect", l,
            "[v1,v2] = a1*w3; [v1,v3] = a4*w3 - a1*w2; [v2,v3] = a1*w1; [v1,w1] = (a5-a7)*x2;"
            "[v1,w2] = a7*x1; [v2,w2] = a5*x2; [v3,w1] = a7*e; [v3,w2] = a6*x2 + a7*t;"
            "[v3,w3] = a5*x2; [w1,w2] = a3*v2 + a2*v3; [w1,w3] = -a2*v2; [w2,w3] = a2*v1",
            4, 3};
  throw std::invalid_argument("no stored bracket list for l = " + to_pretty(l));
}

std::map<std::string, Poly> gl2_nilpotent_a() {
  return {{"a2", 0}, {"a4", 0}, {"b1", 0}, {"b2", 0}, {"b3", 0}};
}

std::map<std::string, Poly> gl2_nilpotent_b() {
  return {{"a1", 0}, {"a3", 0}, {"b1", 0}, {"b2", 0}, {"b3", 0}};
}

std::map<std::string, Poly> gl2_main_family() {
  Poly a2 = Poly::var("a2"), a3 = Poly::var("a3"), a4 = Poly::var("a4");
  return {{"b1", a3 * a4}, {"b2", frac(1, 2) * a3 * a2}, {"b3", frac(-1, 2) * a3 * a2}};
}

std::pair<Poly, Poly> gl2_main_a1() { return {Poly::var("a3") * Poly::var("a2"), Poly::var("a4")}; }

Cocycle sl2_twisted_cocycle(const IsotropyCase& c) {
  Cocycle phi = zero_cocycle(c.m);
  const LieAlgebra& h = *c.h;
  auto idx = [&](const std::string& n) {
    auto it = std::find(c.m_names.begin(), c.m_names.end(), n);
    return static_cast<std::size_t>(it - c.m_names.begin());
  };
  auto put = [&](const std::string& x, const std::string& u, const std::string& target, const Scalar& v) {
    phi.phi[h.index(x)](h.index(target), idx(u)) = v;
  };
  put("x1", "w2", "e", frac(2, 3));
  put("x1", "w1", "h", frac(1, 3));
  put("x1", "w3", "x1", 1);
  put("x2", "w1", "f", frac(2, 3));
  put("x2", "w2", "h", frac(-1, 3));
  put("x2", "w3", "x2", 1);
  return phi;
}

std::vector<Poly> sl2_twisted_printed_basis() {
  std::vector<Poly> out;
  for (const char* s : {"-4*a7 + 3*a2", "a7^2 + 3*a1", "3*a5*a7 + 2*a4 + a6", "a1*a4 + 2*a1*a6 + a3*a7",
                        "a4*a7 + 2*a6*a7 - 3*a3", "6*a1*a5 - a4*a7 - a3", "9*a3*a5 + 2*a4^2 + 5*a4*a6 + 2*a6^2"})
    out.push_back(parse_poly(s));
  return out;
}

std::map<std::string, Poly> sl2_twisted_printed_solution() {
  return {{"a1", parse_poly("3*a7^2")},
          {"a2", parse_poly("4*a7")},
          {"a3", parse_poly("-3/10*a6*a7^2 + 3/4*a5*a7")},
          {"a4", parse_poly("-3/5*a7*a6 - 1/2*a5")}};
}

Cocycle l32_cocycle(const IsotropyCase& c) {
  Cocycle phi = zero_cocycle(c.m);
  auto cv = [](int k) { return Poly::var("c" + std::to_string(k)); };
  auto put = [&](std::size_t x, std::size_t row, std::size_t col, long coeff, int k) {
    phi.phi[x](row, col) = Poly(Scalar(coeff)) * cv(k);
  };
  const std::size_t e = 1, x1 = 2, x2 = 3;
  put(e, 0, 2, -3, 4);
  put(e, 0, 4, 11, 1);
  put(e, 1, 0, 14, 2);
  put(e, 1, 3, 29, 1);
  put(e, 2, 0, 4, 4);
  put(e, 2, 3, 1, 3);
  put(e, 3, 1, 5, 4);
  put(e, 3, 5, 17, 1);
  put(x1, 0, 2, 11, 2);
  put(x1, 0, 4, 3, 5);
  put(x1, 1, 0, 1, 6);
  put(x1, 1, 3, 4, 5);
  put(x1, 2, 0, -29, 2);
  put(x1, 2, 3, -14, 1);
  put(x1, 3, 1, -17, 2);
  put(x1, 3, 5, 5, 5);
  put(x2, 1, 2, 3, 2);
  put(x2, 1, 4, 1, 5);
  put(x2, 2, 2, 1, 4);
  put(x2, 2, 4, -3, 1);
  put(x2, 3, 0, 2, 2);
  put(x2, 3, 3, -2, 1);
  return phi;
}

LieAlgebra alpha_family(int c1, int c2) {
  const std::vector<std::string> names = {"t", "e", "x1", "x2", "v1", "v2", "v3", "w1", "w2", "w3"};
  const std::string h = "[t,e] = e; [t,x1] = x1; [t,x2] = 2*x2; [e,x1] = x2;";
  if (c1 == 0 && c2 == 1)
    return from_bracket_list(
        names, h +
                   "[v1,v2] = alpha*w3 - 51*e - 28*v2; [v1,v3] = -alpha*w2 - 29*v3; [v2,v3] = alpha*w1;"
                   "[v1,w1] = -20*w1; [v1,w2] = 11*w2; [v1,w3] = 9*w3; [v2,w2] = -17*w1; [v3,w3] = -20*w1;"
                   "[t,v2] = v2; [t,v3] = -v3; [t,w2] = -w2; [t,w3] = w3; [e,v1] = v2 + 14*e; [e,w2] = -w1;"
                   "[x1,v1] = -29*x1; [x1,v2] = -17*x2; [x1,v3] = v1 + 11*t; [x1,w1] = -w3;"
                   "[x2,v1] = 2*x2; [x2,v3] = v2 + 3*e; [x2,w2] = -w3");
  if (c1 == 1 && c2 == 0)
    return from_bracket_list(
        names, h +
                   "[v1,w1] = -20*v1; [v2,w1] = 9*v2; [v2,w2] = -20*v1; [v3,w1] = 11*v3; [v3,w3] = -17*v1;"
                   "[w1,w2] = alpha*v3 + 29*w2; [w1,w3] = -alpha*v2 + 51*x1 + 28*w3; [w2,w3] = alpha*v1;"
                   "[t,v2] = v2; [t,v3] = -v3; [t,w2] = -w2; [t,w3] = w3; [e,v1] = v2; [e,w2] = -w1 + 11*t;"
                   "[e,w1] = 29*e; [e,w3] = 17*x2; [x1,v3] = v1; [x1,w1] = -w3 - 14*x1; [x2,v3] = v2;"
                   "[x2,w1] = -2*x2; [x2,w2] = -w3 - 3*x1");
  throw std::invalid_argument("alpha family needs (c1, c2) = (0, 1) or (1, 0)");
}

LieAlgebra g2star_family() {
  IsotropyCase c = isotropy_case("sl3");
  // [w_i, v_j] = beta (E_ji - delta_ij / 3) in the sl3 basis.
  const std::string diag[3] = {"2/3*beta*H1 + 1/3*beta*H2", "-1/3*beta*H1 + 1/3*beta*H2",
                               "-1/3*beta*H1 - 2/3*beta*H2"};
  std::string text =
      "[v1,v2] = alpha1*w3; [v1,v3] = -alpha1*w2; [v2,v3] = alpha1*w1;"
      "[w1,w2] = alpha2*v3; [w1,w3] = -alpha2*v2; [w2,w3] = alpha2*v1;";
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      text += "[w" + std::to_string(i) + ",v" + std::to_string(j) + "] = ";
      text += i == j ? diag[i - 1] : "beta*E" + std::to_string(j) + std::to_string(i);
      text += ";";
    }
  return extension_from_text(c, text);
}

std::map<std::string, Scalar> g2star_normalization() { return {{"alpha1", 2}, {"alpha2", 2}, {"beta", 3}}; }

namespace {

QMatrix split_j() {
  QMatrix J = QMatrix::identity(6);
  for (std::size_t i = 3; i < 6; ++i) J(i, i) = -1;
  return J;
}

std::vector<std::size_t> range(std::size_t a, std::size_t b) {
  std::vector<std::size_t> v;
  for (std::size_t i = a; i < b; ++i) v.push_back(i);
  return v;
}

LieAlgebra to_numeric(const LieAlgebra& g, const std::map<std::string, Scalar>& values) {
  LieAlgebra r = g.substitute(values);
  if (!r.is_scalar()) throw ParametricError("unbound parameters in model algebra");
  return r;
}

}  // namespace

HomogeneousModel g2star_model() {
  return coordinate_model("g2star", to_numeric(g2star_family(), g2star_normalization()), range(0, 8), range(8, 14),
                          split_j());
}

HomogeneousModel sp4_gl2_model() {
  IsotropyCase c = isotropy_case("gl2");
  LieAlgebra g = extension_from_text(c, gl2_family().text);
  std::map<std::string, Scalar> point = {{"a1", 1}, {"a2", 1}, {"a3", 1}, {"a4", 1},
                                         {"b1", 1}, {"b2", frac(1, 2)}, {"b3", frac(-1, 2)}};
  return coordinate_model("sp4-gl2", to_numeric(g, point), range(0, 4), range(4, 10), split_j());
}

HomogeneousModel su2_model() { return coordinate_model("su2", su2(), {}, {0, 1, 2}, QMatrix()); }

HomogeneousModel geometry_model(const std::string& name, const std::map<std::string, Scalar>& params) {
  if (name == "g2star") return g2star_model();
  if (name == "sp4-gl2") return sp4_gl2_model();
  if (name == "su2") return su2_model();
  if (name == "su2cubed") {
    auto get = [&](const char* k, long d) {
      auto it = params.find(k);
      return it == params.end() ? Scalar(d) : it->second;
    };
    return su2_cubed_model(get("r", 0), get("t", 3));
  }
  throw std::invalid_argument("no geometry model for case: " + name);
}

BorelBound borel_bound_case() {
  const std::vector<std::string> a = {"a1", "a2", "a3", "a4", "a5"};
  auto v = [](const char* n) { return Poly::var(n); };
  PMatrix b(3, 3);
  b(0, 0) = v("a1");
  b(0, 1) = v("a2");
  b(0, 2) = v("a3");
  b(1, 1) = -v("a1") - v("a5");
  b(1, 2) = v("a4");
  b(2, 2) = v("a5");
  PMatrix m(6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      m(i, j) = b(i, j);
      m(3 + i, 3 + j) = -b(j, i);
    }
  // Linear conditions on (a1..a5) from rows forced to vanish.
  Echelon conditions(a.size());
  auto impose_row = [&](std::size_t row, std::size_t c0) {
    for (std::size_t j = c0; j < c0 + 3; ++j) {
      Vector coeffs(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) coeffs[k] = m(row, j).coeff(Monomial(a[k]));
      conditions.insert(coeffs);
    }
  };
  BorelBound out;
  out.dims.push_back(a.size() - conditions.rank());
  impose_row(2, 0);  // last row of the Delta+ block
  out.dims.push_back(a.size() - conditions.rank());
  impose_row(3, 3);  // first row of the Delta- block
  out.dims.push_back(a.size() - conditions.rank());
  out.bound_holds = out.dims.back() < 4;
  return out;
}

}  // namespace parageom
