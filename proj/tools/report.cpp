#include "report.hpp"

#include "parageom/catalog.hpp"
#include "parageom/errors.hpp"
#include "parageom/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace parageom::report {

namespace {

json q(const Scalar& x) { return to_pretty(x); }

json sig(const Inertia& s) { return json::array({s.positive, s.negative}); }

json polys(const std::vector<Poly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.str());
  return a;
}

json inputs_of(const Params& p) {
  json o = json::object();
  for (const auto& [k, v] : p) o[k] = q(v);
  return o;
}

Row row(const std::string& c, const std::string& op, const std::string& check, const Params& in, json out,
        json expected, std::string citation) {
  Row r{c, op, check, inputs_of(in), std::move(out), std::move(expected), std::move(citation)};
  r.match = r.expected.is_null() || r.expected == r.outputs;
  return r;
}

bool is_isotropy(const std::string& c) {
  auto n = isotropy_case_names();
  return std::find(n.begin(), n.end(), c) != n.end();
}

void require_known(const std::string& c) {
  if (!is_case(c)) throw UsageError("unknown case: " + c);
}

void allow_params(const Params& p, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : p)
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
      throw UsageError("unknown parameter: " + k);
}

std::vector<Poly> residuals(const LieAlgebra& g) {
  std::vector<Poly> out;
  for (const auto& r : jacobi_defect(g)) out.push_back(r.value);
  return out;
}

bool in_ideal(const Poly& p, const std::vector<Poly>& gens) { return reduce(p, buchberger(gens)).is_zero(); }

Poly var(const char* n) { return Poly::var(n); }

bool is_exceptional(const Scalar& l) {
  const auto& e = exceptional_l();
  return std::find(e.begin(), e.end(), l) != e.end();
}

// ---- cohomology

std::vector<Row> cohomology(const std::string& c, const Params& p, std::uint64_t seed) {
  if (!is_isotropy(c)) throw UsageError("cohomology needs an isotropy case");
  const std::string cite = "first cohomology of the isotropy algebra with values in Hom(m, h)";
  std::vector<Row> rows;
  if (c == "s2-semidirect") {
    allow_params(p, {"l"});
    std::vector<Scalar> levels;
    if (p.count("l")) {
      levels = {p.at("l")};
    } else {
      levels = exceptional_l();
      auto g = generic_l(seed, 20);
      levels.insert(levels.end(), g.begin(), g.end());
    }
    for (const auto& l : levels) {
      auto dim = ce_cohomology(hom_module(isotropy_case(c, l))).dim;
      std::size_t want = l == frac(3, 2) ? 6 : is_exceptional(l) ? 1 : 0;
      rows.push_back(row(c, "cohomology", "h1", {{"l", l}}, {{"dim", dim}}, {{"dim", want}},
                         is_exceptional(l) ? cite + ", exceptional level" : cite + ", generic level"));
    }
    return rows;
  }
  allow_params(p, {});
  static const std::map<std::string, std::size_t> table{
      {"sl3", 0},      {"p1", 0},       {"p2", 0},        {"p12", 0},       {"sl2-semidirect", 1},
      {"sl2-semidirect-twisted", 1},    {"gl2", 0},       {"rzrt-neg", 0},  {"rzrt-null", 0},
      {"rzrt-pos", 0}, {"rz-b2-r", 0},
  };
  auto dim = ce_cohomology(hom_module(isotropy_case(c))).dim;
  rows.push_back(row(c, "cohomology", "h1", p, {{"dim", dim}}, {{"dim", table.at(c)}}, cite));
  return rows;
}

// ---- brackets

std::vector<Row> brackets(const std::string& c, const Params& p, std::uint64_t) {
  if (!is_isotropy(c) || c == "sl2-semidirect-twisted")
    throw UsageError("brackets needs an untwisted isotropy case");
  std::vector<Scalar> levels{0};
  if (c == "s2-semidirect") {
    allow_params(p, {"l"});
    levels = p.count("l") ? std::vector<Scalar>{p.at("l")} : s2_family_levels();
  } else {
    allow_params(p, {});
  }
  static const std::map<std::string, std::pair<int, int>> table{{"sl3", {2, 1}}, {"gl2", {4, 3}}, {"sl2-semidirect", {7, 2}}};
  static const std::map<Scalar, std::pair<int, int>> s2{
      {Scalar(0), {7, 2}}, {frac(-3, 10), {3, 1}}, {frac(-3, 4), {3, 1}}, {frac(-3, 2), {7, 2}}, {frac(-1, 2), {4, 3}}};
  std::vector<Row> rows;
  for (const auto& l : levels) {
    auto ic = isotropy_case(c, l);
    auto bs = bracket_space(ic.m, direct_sum(adjoint(ic.h), ic.m));
    json out{{"horizontal", bs.horizontal}, {"vertical", bs.vertical}, {"total", bs.basis.size()}};
    json want;
    std::string cite = "equivariant maps from the second exterior power of m to h + m";
    std::pair<int, int> hv{-1, -1};
    if (c == "s2-semidirect") {
      if (s2.count(l)) hv = s2.at(l);
    } else if (table.count(c)) {
      hv = table.at(c);
    }
    if (hv.first >= 0) {
      want = {{"horizontal", hv.first}, {"vertical", hv.second}, {"total", hv.first + hv.second}};
      cite += ", printed bracket list";
    } else {
      cite += "; no printed count";
    }
    rows.push_back(row(c, "brackets", "dimensions", c == "s2-semidirect" ? Params{{"l", l}} : p, out, want, cite));
  }
  return rows;
}

// ---- extend

Row verdict_row(const std::string& c, const Params& in, const ExtensionVerdict& v, json expected, const std::string& cite,
                json extra = json::object()) {
  json out{{"step1", v.step1},
           {"satisfiable", v.satisfiable},
           {"linear_constraints", polys(v.linear_constraints)},
           {"residual_ideal", polys(v.residual_ideal)}};
  json shown = out;
  for (auto it = extra.begin(); it != extra.end(); ++it) shown[it.key()] = it.value();
  Row r = row(c, "extend", "constraints", in, shown, json(), cite);
  if (!expected.is_null()) {
    r.expected = expected;
    r.match = true;
    for (auto it = expected.begin(); it != expected.end(); ++it) r.match = r.match && shown.value(it.key(), json()) == it.value();
  }
  return r;
}

std::vector<Row> extend(const std::string& c, const Params& p, std::uint64_t) {
  if (!is_isotropy(c)) throw UsageError("extend needs an isotropy case");
  std::vector<Row> rows;
  if (c == "s2-semidirect") {
    allow_params(p, {"l"});
    Scalar l = p.count("l") ? p.at("l") : frac(3, 2);
    auto ic = isotropy_case(c, l);
    if (l == frac(3, 2)) {
      auto v = check_extension_constraints(ic.m, l32_cocycle(ic));
      bool forced = same_ideal(v.linear_constraints, {var("c3"), var("c4"), var("c5"), var("c6")});
      bool product = reduce(var("c1") * var("c2"), v.residual_ideal).is_zero();
      rows.push_back(verdict_row(c, {{"l", l}}, v,
                                 {{"step1", true}, {"forces_c3_to_c6", true}, {"c1c2_in_ideal", true}},
                                 "six-parameter cocycle at l = 3/2, coboundary and image conditions",
                                 {{"forces_c3_to_c6", forced}, {"c1c2_in_ideal", product}}));
      return rows;
    }
    auto h1 = ce_cohomology(hom_module(ic));
    std::vector<Cocycle> reps;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < h1.representatives.size(); ++k) {
      reps.push_back(cocycle_from_cochain(h1.representatives[k], ic.h->dim(), ic.m.dim()));
      names.push_back("c" + std::to_string(k + 1));
    }
    auto phi = reps.empty() ? zero_cocycle(ic.m) : combine(reps, names);
    rows.push_back(verdict_row(c, {{"l", l}}, check_extension_constraints(ic.m, phi), json(),
                               "cohomology representatives as cocycle family; no printed verdict"));
    return rows;
  }
  allow_params(p, {});
  auto ic = isotropy_case(c);
  if (c == "sl2-semidirect-twisted") {
    auto phi = sl2_twisted_cocycle(ic);
    auto v = check_extension_constraints(ic.m, phi);
    rows.push_back(verdict_row(c, p, v, {{"step1", true}, {"cocycle", true}},
                               "printed nontrivial cocycle of the sl2 semidirect case",
                               {{"cocycle", cocycle_defect(ic.m, phi).empty()}}));
    return rows;
  }
  auto h1 = ce_cohomology(hom_module(ic));
  std::vector<Cocycle> reps;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < h1.representatives.size(); ++k) {
    reps.push_back(cocycle_from_cochain(h1.representatives[k], ic.h->dim(), ic.m.dim()));
    names.push_back("c" + std::to_string(k + 1));
  }
  auto phi = reps.empty() ? zero_cocycle(ic.m) : combine(reps, names);
  rows.push_back(verdict_row(c, p, check_extension_constraints(ic.m, phi), json(),
                             reps.empty() ? "trivial cohomology, only the split extension"
                                          : "cohomology representatives as cocycle family; no printed verdict"));
  return rows;
}

// ---- jacobi

std::vector<Row> jacobi(const std::string& c, const Params& p, std::uint64_t) {
  std::vector<Row> rows;
  if (c == "g2star") {
    allow_params(p, {});
    auto r = residuals(g2star_family());
    bool principal = same_ideal(r, {var("alpha1") * var("alpha2") - frac(4, 3) * var("beta")});
    bool branches = true;
    for (const auto& b : {std::map<std::string, Poly>{{"beta", 0}, {"alpha1", 0}},
                          std::map<std::string, Poly>{{"beta", 0}, {"alpha2", 0}}})
      for (const auto& x : r) branches = branches && x.substitute(b).is_zero();
    bool point = residuals(g2star_family().substitute(g2star_normalization())).empty();
    rows.push_back(row(c, "jacobi", "residual-ideal", p,
                       {{"span", polys(linear_span_basis(r))},
                        {"generated_by_alpha1_alpha2_minus_4/3_beta", principal},
                        {"nilpotent_branches_solve", branches},
                        {"normalized_point_is_lie", point}},
                       {{"span", polys({var("alpha1") * var("alpha2") - frac(4, 3) * var("beta")})},
                        {"generated_by_alpha1_alpha2_minus_4/3_beta", true},
                        {"nilpotent_branches_solve", true},
                        {"normalized_point_is_lie", true}},
                       "Jacobi identities of the g2* family"));
    // the span is printed monic
    rows.back().expected["span"] = polys(linear_span_basis({var("alpha1") * var("alpha2") - frac(4, 3) * var("beta")}));
    rows.back().match = rows.back().expected == rows.back().outputs;
    return rows;
  }
  if (!is_isotropy(c)) throw UsageError("jacobi needs g2star or an isotropy case with a stored bracket list");
  if (c == "gl2") {
    allow_params(p, {});
    auto r = residuals(extension_from_text(isotropy_case(c), gl2_family().text));
    auto [num, den] = gl2_main_a1();
    bool a = true, b = true, m = true;
    for (const auto& x : r) {
      a = a && x.substitute(gl2_nilpotent_a()).is_zero();
      b = b && x.substitute(gl2_nilpotent_b()).is_zero();
      m = m && x.substitute(gl2_main_family()).substitute_fraction("a1", num, den).is_zero();
    }
    rows.push_back(row(c, "jacobi", "families", p, {{"nilpotent_a", a}, {"nilpotent_b", b}, {"main", m}},
                       {{"nilpotent_a", true}, {"nilpotent_b", true}, {"main", true}},
                       "three solution families of the gl2 bracket list"));
    return rows;
  }
  if (c == "sl2-semidirect") {
    allow_params(p, {});
    auto r = residuals(extension_from_text(isotropy_case(c), sl2_untwisted_family().text));
    rows.push_back(row(c, "jacobi", "a1a2", p, {{"a1a2_in_ideal", in_ideal(var("a1") * var("a2"), r)}},
                       {{"a1a2_in_ideal", true}}, "Jacobi identity forcing a1 a2 = 0, untwisted sl2 case"));
    return rows;
  }
  if (c == "sl2-semidirect-twisted") {
    allow_params(p, {});
    auto ic = isotropy_case(c);
    auto r = residuals(extension_from_text(ic, sl2_twisted_family().text, sl2_twisted_cocycle(ic)));
    std::size_t bad = 0;
    auto sol = sl2_twisted_printed_solution();
    for (const auto& x : r)
      if (!x.substitute(sol).is_zero()) ++bad;
    rows.push_back(row(c, "jacobi", "groebner", p,
                       {{"same_ideal_as_printed_basis", same_ideal(r, sl2_twisted_printed_basis())},
                        {"printed_solution_nonzero_residuals", bad},
                        {"groebner_basis", polys(buchberger(r))}},
                       json(), "printed Groebner basis and solution of the twisted sl2 case"));
    rows.back().expected = {{"same_ideal_as_printed_basis", true}, {"printed_solution_nonzero_residuals", 0}};
    rows.back().match = rows.back().outputs["same_ideal_as_printed_basis"] == true && bad == 0;
    return rows;
  }
  if (c == "s2-semidirect") {
    allow_params(p, {"l"});
    std::vector<Scalar> levels = s2_family_levels();
    levels.push_back(frac(3, 2));
    if (p.count("l")) levels = {p.at("l")};
    for (const auto& l : levels) {
      if (l == frac(3, 2)) {
        for (auto [c1, c2] : {std::pair{0, 1}, std::pair{1, 0}}) {
          auto g = alpha_family(c1, c2);
          std::size_t first = c1 == 0 ? 7 : 4;
          bool abelian = true;
          for (std::size_t i = first; i < first + 3; ++i)
            for (std::size_t j = first; j < first + 3; ++j)
              for (std::size_t k = 0; k < g.dim(); ++k) abelian = abelian && g.c(i, j, k).is_zero();
          rows.push_back(row(c, "jacobi", "alpha-family", {{"l", l}, {"c1", c1}, {"c2", c2}},
                             {{"residuals", jacobi_defect(g).size()}, {"abelian_eigendistribution", abelian}},
                             {{"residuals", 0}, {"abelian_eigendistribution", true}},
                             "normalized alpha-families at l = 3/2"));
        }
        continue;
      }
      auto r = residuals(extension_from_text(isotropy_case(c, l), s2_family(l).text));
      rows.push_back(row(c, "jacobi", "a1a2", {{"l", l}}, {{"a1a2_in_ideal", in_ideal(var("a1") * var("a2"), r)}},
                         {{"a1a2_in_ideal", true}}, "Jacobi identity forcing a1 a2 = 0, exceptional level"));
    }
    return rows;
  }
  throw UsageError("no stored bracket list for case: " + c);
}

// ---- identify

std::vector<Row> identify(const std::string& c, const Params& p, std::uint64_t seed) {
  LieAlgebra g;
  json want;
  std::string cite = "Killing form congruence and sampled rank";
  if (c == "g2star") {
    allow_params(p, {});
    g = g2star_model().g;
    want = {{"label", "g2_split"}, {"dim", 14}, {"signature", {8, 6}}, {"rank", 2}};
    cite = "the maximal model algebra is the split real form of g2";
  } else if (c == "sp4-gl2") {
    allow_params(p, {});
    g = sp4_gl2_model().g;
    want = {{"label", "sp4_R"}, {"dim", 10}, {"signature", {6, 4}}, {"rank", 2}};
    cite = "the main gl2 family is the split real form of sp4";
  } else if (c == "su2" || c == "su2cubed") {
    allow_params(p, c == "su2" ? std::initializer_list<const char*>{} : std::initializer_list<const char*>{"r", "t"});
    g = geometry_model(c, p).g;
  } else if (is_isotropy(c)) {
    allow_params(p, c == "s2-semidirect" ? std::initializer_list<const char*>{"l"} : std::initializer_list<const char*>{});
    g = *isotropy_case(c, p.count("l") ? p.at("l") : Scalar(0)).h;
    if (c == "sl3") want = {{"label", "sl3_R"}, {"dim", 8}, {"signature", {5, 3}}, {"rank", 2}};
  } else {
    throw UsageError("identify is not defined for case: " + c);
  }
  json out;
  try {
    auto id = identify_simple(g, seed);
    out = {{"label", id.label}, {"dim", id.dim}, {"signature", sig(id.signature)}, {"rank", id.rank}};
    if (!id.note.empty()) out["note"] = id.note;
  } catch (const ParametricError&) {
    throw UsageError("identify needs numeric structure constants");
  } catch (const PreconditionError&) {
    out = {{"label", "not-semisimple"}, {"dim", g.dim()}, {"radical", radical(g).dim()}};
  }
  json shown = out;
  Row r = row(c, "identify", "algebra", p, shown, want, cite);
  if (!want.is_null()) {
    json cmp = out;
    cmp.erase("note");
    r.match = cmp == want;
  }
  return {r};
}

// ---- symbol

std::vector<Row> symbol(const std::string& c, const Params& p, std::uint64_t) {
  if (c == "borel-bound") {
    allow_params(p, {});
    auto b = borel_bound_case();
    return {row(c, "symbol", "isotropy-bound", p, {{"dims", b.dims}, {"bound_holds", b.bound_holds}},
                {{"dims", {5, 4, 3}}, {"bound_holds", true}}, "isotropy dimension bound for non-transitive symmetry")};
  }
  if (c != "g2star" && c != "sp4-gl2" && c != "su2cubed") throw UsageError("symbol needs g2star, sp4-gl2, su2cubed or borel-bound");
  allow_params(p, c == "su2cubed" ? std::initializer_list<const char*>{"r", "t"} : std::initializer_list<const char*>{});
  auto model = geometry_model(c, p);
  auto xi = curvature_maps(model);
  json out{{"nondegenerate", is_nondegenerate(xi)}};
  json want;
  if (is_nondegenerate(xi)) {
    out["g1"] = symbol_g1(xi).size();
    out["g2"] = prolongation_g2(xi);
    auto vn = volume_normalize(xi);
    out["psi_class"] = classify_nijenhuis(vn.psi_plus);
    out["psi_normalized_exact"] = vn.exact;
    if (vn.exact) out["psi_bar_is_identity"] = vn.psi_bar == QMatrix::identity(3);
  }
  if (c != "su2cubed")
    want = {{"nondegenerate", true}, {"g1", 8}, {"g2", 0}, {"psi_class", "real-diagonalizable"},
            {"psi_normalized_exact", true}, {"psi_bar_is_identity", true}};
  return {row(c, "symbol", "curvature", p, out, want,
              c == "su2cubed" ? "symbol of the SU(2)^3 structure; no printed value"
                              : "symbol of a maximal-symmetry model is sl3 with trivial prolongation")};
}

// ---- geometry

std::vector<Row> geometry(const std::string& c, const Params& p, std::uint64_t) {
  std::vector<Row> rows;
  if (c == "su2") {
    allow_params(p, {});
    auto model = su2_model();
    QMatrix g = killing_form(model.g) * Scalar(-1);
    auto e = is_einstein(model, g);
    rows.push_back(row(c, "geometry", "einstein", p, {{"einstein", e.einstein}, {"lambda", q(e.lambda)}},
                       {{"einstein", true}, {"lambda", q(frac(1, 4))}}, "bi-invariant metric on SU(2)"));
    return rows;
  }
  if (c != "g2star" && c != "sp4-gl2" && c != "su2cubed") throw UsageError("geometry needs g2star, sp4-gl2, su2cubed or su2");
  allow_params(p, c == "su2cubed" ? std::initializer_list<const char*>{"r", "t"} : std::initializer_list<const char*>{});
  auto model = geometry_model(c, p);
  auto metrics = invariant_metrics(model);
  bool nondeg = is_nondegenerate(model);
  const bool main = c != "su2cubed";
  rows.push_back(row(c, "geometry", "metric-dimension", p, {{"dim", metrics.size()}}, {{"dim", 1}},
                     main ? "invariant metric unique up to scale on the symmetric models"
                          : "unique invariant compatible metric on the SU(2)^3 family"));
  if (main) {
    QMatrix g = canonical_metric(model);
    auto e = is_einstein(model, g);
    rows.push_back(row(c, "geometry", "canonical-metric", p,
                       {{"signature", sig(signature(g))},
                        {"nk", nearly_para_kahler(model, g)},
                        {"p_identity", check_p_identity(model, g)},
                        {"einstein", e.einstein}},
                       {{"signature", {3, 3}}, {"nk", "strict"}, {"p_identity", true}, {"einstein", true}},
                       "strictly nearly para-Kaehler structure on the symmetric models"));
    rows.back().outputs["lambda"] = q(e.lambda);
    auto ms = dual(isotropy_case(c == "g2star" ? "sl3" : "gl2").m);
    rows.push_back(row(c, "geometry", "trivial-summands", p,
                       {{"m*L2m*", invariants(tensor(ms, exterior(ms, 2))).size()},
                        {"L3m*", invariants(exterior(ms, 3)).size()}},
                       c == "g2star" ? json{{"m*L2m*", 2}, {"L3m*", 2}} : json{{"m*L2m*", 4}, {"L3m*", 2}},
                       "trivial summands of the tensor modules"));
    return rows;
  }
  std::string verdict = nijenhuis_verdict(model);
  json out{{"nijenhuis", verdict}, {"nondegenerate", nondeg}};
  json want;
  if (!metrics.empty()) {
    const QMatrix& g = metrics.front();
    out["nk"] = nearly_para_kahler(model, g);
    out["einstein"] = is_einstein(model, g).einstein;
    out["p_identity"] = check_p_identity(model, g);
    if (nondeg) want = {{"nijenhuis", "nondegenerate"}, {"nondegenerate", true}, {"nk", "no"}, {"einstein", false}, {"p_identity", true}};
  }
  rows.push_back(row(c, "geometry", "structure", p, out, want, "the SU(2)^3 triple is neither nearly para-Kaehler nor Einstein"));
  return rows;
}

}  // namespace

json Row::to_json() const {
  return {{"case", case_name}, {"operation", operation}, {"check", check}, {"inputs", inputs},
          {"outputs", outputs}, {"expected", expected}, {"citation", citation}, {"match", match}};
}

Params parse_params(const std::string& text) {
  Params out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("parameter must be k=v: " + item);
    try {
      out[item.substr(0, eq)] = parse_scalar(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("not a rational value: " + item);
    }
  }
  return out;
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> s{"cohomology", "brackets", "extend", "jacobi", "identify", "symbol", "geometry", "report-all"};
  return s;
}

std::vector<Row> run(const std::string& sub, const std::string& c, const Params& p, std::uint64_t seed) {
  require_known(c);
  if (sub == "cohomology") return cohomology(c, p, seed);
  if (sub == "brackets") return brackets(c, p, seed);
  if (sub == "extend") return extend(c, p, seed);
  if (sub == "jacobi") return jacobi(c, p, seed);
  if (sub == "identify") return identify(c, p, seed);
  if (sub == "symbol") return symbol(c, p, seed);
  if (sub == "geometry") return geometry(c, p, seed);
  throw UsageError("unknown subcommand: " + sub);
}

std::vector<Row> report_all(std::uint64_t seed) {
  std::vector<Row> rows;
  auto add = [&](const std::string& sub, const std::string& c, const Params& p = {}) {
    auto r = run(sub, c, p, seed);
    rows.insert(rows.end(), r.begin(), r.end());
  };
  for (const auto& c : isotropy_case_names()) {
    add("cohomology", c);
    add("identify", c);
  }
  for (const char* c : {"sl3", "gl2", "sl2-semidirect", "s2-semidirect"}) add("brackets", c);
  add("extend", "s2-semidirect");
  add("extend", "sl2-semidirect-twisted");
  for (const char* c : {"g2star", "gl2", "sl2-semidirect", "sl2-semidirect-twisted", "s2-semidirect"}) add("jacobi", c);
  for (const char* c : {"g2star", "sp4-gl2"}) {
    add("identify", c);
    add("symbol", c);
    add("geometry", c);
  }
  add("symbol", "borel-bound");
  add("geometry", "su2");
  add("geometry", "su2cubed");
  add("geometry", "su2cubed", {{"r", 1}, {"t", 2}});
  sort_rows(rows);
  return rows;
}

void sort_rows(std::vector<Row>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.case_name, a.operation) < std::tie(b.case_name, b.operation);
  });
}

std::string pretty_table(const std::vector<Row>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << (r.match ? "ok   " : "FAIL ") << r.case_name << "  " << r.operation << "/" << r.check;
    if (!r.inputs.empty()) os << "  " << r.inputs.dump();
    os << "\n      got " << r.outputs.dump() << "\n";
    if (!r.expected.is_null()) os << "      want " << r.expected.dump() << "\n";
  }
  return os.str();
}

}  // namespace parageom::report
