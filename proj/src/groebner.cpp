#include "parageom/groebner.hpp"

#include "parageom/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace parageom {

MonomialOrder MonomialOrder::elimination(std::vector<std::string> first, const std::vector<std::string>& rest) {
  MonomialOrder o;
  o.kind = Kind::block;
  o.block = first.size();
  o.vars = std::move(first);
  o.vars.insert(o.vars.end(), rest.begin(), rest.end());
  return o;
}

GroebnerLimits default_limits() {
  GroebnerLimits l;
  if (const char* env = std::getenv("PARAGEOM_CAP_MB")) {
    char* end = nullptr;
    long mb = std::strtol(env, &end, 10);
    // Rough footprint of one stored term (exponents + two limbs + bookkeeping).
    if (end != env && mb > 0) l.max_terms = static_cast<std::size_t>(mb) * 1000000 / 256;
  }
  return l;
}

namespace {

using Exps = std::vector<int>;

struct DTerm {
  Exps e;
  Scalar c;
};
using DPoly = std::vector<DTerm>;  // sorted by decreasing monomial

class Ctx {
 public:
  Ctx(const MonomialOrder& order, const std::vector<const Poly*>& polys) : kind_(order.kind), block_(order.block) {
    vars_ = order.vars;
    std::set<std::string> seen(vars_.begin(), vars_.end());
    std::set<std::string> extra;
    for (const Poly* p : polys)
      for (const auto& v : p->variables())
        if (!seen.count(v)) extra.insert(v);
    vars_.insert(vars_.end(), extra.begin(), extra.end());
    for (std::size_t i = 0; i < vars_.size(); ++i) index_[vars_[i]] = static_cast<int>(i);
    if (kind_ == MonomialOrder::Kind::block && block_ > vars_.size()) block_ = vars_.size();
  }

  std::size_t nvars() const { return vars_.size(); }

  int cmp(const Exps& a, const Exps& b) const {
    switch (kind_) {
      case MonomialOrder::Kind::lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case MonomialOrder::Kind::grevlex:
        return grevlex(a, b, 0, a.size());
      case MonomialOrder::Kind::block: {
        int c = grevlex(a, b, 0, block_);
        return c != 0 ? c : grevlex(a, b, block_, a.size());
      }
    }
    return 0;
  }

  DPoly to_d(const Poly& p) const {
    DPoly d;
    for (const auto& t : p.terms()) {
      Exps e(vars_.size(), 0);
      for (const auto& [v, k] : t.mono.factors()) e[static_cast<std::size_t>(index_.at(v))] = static_cast<int>(k);
      d.push_back({std::move(e), t.coef});
    }
    std::sort(d.begin(), d.end(), [this](const DTerm& x, const DTerm& y) { return cmp(x.e, y.e) > 0; });
    return d;
  }

  Poly from_d(const DPoly& d) const {
    Poly p;
    for (const auto& t : d) {
      Monomial m;
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (t.e[i] > 0) m = m * Monomial(vars_[i], static_cast<unsigned>(t.e[i]));
      p += Poly::monomial(m, t.c);
    }
    return p;
  }

  // p - c * x^shift * g
  DPoly sub_mul(const DPoly& p, const Scalar& c, const Exps& shift, const DPoly& g) const {
    DPoly r;
    r.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    Exps tmp(shift.size());
    while (i < p.size() || j < g.size()) {
      if (j < g.size())
        for (std::size_t k = 0; k < shift.size(); ++k) tmp[k] = g[j].e[k] + shift[k];
      int c_ = (i == p.size()) ? -1 : (j == g.size() ? 1 : cmp(p[i].e, tmp));
      if (c_ > 0) {
        r.push_back(p[i++]);
      } else if (c_ < 0) {
        r.push_back({tmp, -c * g[j].c});
        ++j;
      } else {
        Scalar v = p[i].c - c * g[j].c;
        if (sgn(v) != 0) r.push_back({p[i].e, v});
        ++i;
        ++j;
      }
    }
    return r;
  }

 private:
  static int grevlex(const Exps& a, const Exps& b, std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  MonomialOrder::Kind kind_;
  std::size_t block_;
  std::vector<std::string> vars_;
  std::map<std::string, int> index_;
};

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exps lcm(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exps minus(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

int total(const Exps& a) {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

DPoly normal_form(const Ctx& ctx, DPoly p, const std::vector<DPoly>& basis) {
  DPoly rem;
  while (!p.empty()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.empty() || !divides(g[0].e, p[0].e)) continue;
      Scalar c = p[0].c / g[0].c;
      p = ctx.sub_mul(p, c, minus(p[0].e, g[0].e), g);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(std::move(p[0]));
      p.erase(p.begin());
    }
  }
  return rem;
}

void make_monic(DPoly& p) {
  if (p.empty()) return;
  Scalar inv = 1 / p[0].c;
  for (auto& t : p) t.c *= inv;
}

DPoly spoly(const Ctx& ctx, const DPoly& f, const DPoly& g) {
  Exps l = lcm(f[0].e, g[0].e);
  DPoly zero;
  DPoly a = ctx.sub_mul(zero, Scalar(-1) / f[0].c, minus(l, f[0].e), f);
  return ctx.sub_mul(a, 1 / g[0].c, minus(l, g[0].e), g);
}

std::vector<DPoly> groebner_d(const Ctx& ctx, std::vector<DPoly> input, const GroebnerLimits& lim) {
  std::vector<DPoly> G;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t term_count = 0;

  auto add = [&](DPoly h) {
    make_monic(h);
    if (G.size() + 1 > lim.max_basis) throw ResourceError("max_basis", "basis grew beyond " + std::to_string(lim.max_basis));
    int deg = 0;
    for (const auto& t : h) deg = std::max(deg, total(t.e));
    if (static_cast<unsigned>(deg) > lim.max_degree)
      throw ResourceError("max_degree", "basis element of degree " + std::to_string(deg));
    term_count += h.size();
    if (term_count > lim.max_terms) throw ResourceError("max_terms", "more than " + std::to_string(lim.max_terms) + " terms");
    std::size_t n = G.size();
    G.push_back(std::move(h));
    for (std::size_t i = 0; i < n; ++i)
      if (!G[i].empty()) pairs.insert({i, n});
  };

  for (auto& f : input) {
    DPoly h = normal_form(ctx, std::move(f), G);
    if (!h.empty()) add(std::move(h));
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    auto best = pairs.begin();
    Exps best_l = lcm(G[best->first][0].e, G[best->second][0].e);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Exps l = lcm(G[it->first][0].e, G[it->second][0].e);
      if (ctx.cmp(l, best_l) < 0) {
        best = it;
        best_l = std::move(l);
      }
    }
    auto [i, j] = *best;
    pairs.erase(best);
    if (++processed > lim.max_pairs) throw ResourceError("max_pairs", "more than " + std::to_string(lim.max_pairs) + " S-pairs");

    // Product criterion: coprime leading monomials.
    bool coprime = true;
    for (std::size_t k = 0; k < best_l.size(); ++k)
      if (G[i][0].e[k] > 0 && G[j][0].e[k] > 0) coprime = false;
    if (coprime) continue;
    // Chain criterion.
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j || G[k].empty()) continue;
      if (!divides(G[k][0].e, best_l)) continue;
      auto key = [](std::size_t a, std::size_t b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
      if (!pairs.count(key(i, k)) && !pairs.count(key(j, k))) chain = true;
    }
    if (chain) continue;

    DPoly h = normal_form(ctx, spoly(ctx, G[i], G[j]), G);
    if (!h.empty()) add(std::move(h));
  }

  // Minimize.
  std::vector<DPoly> min;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i || !divides(G[k][0].e, G[i][0].e)) continue;
      if (G[k][0].e != G[i][0].e || k < i) redundant = true;
    }
    if (!redundant) min.push_back(G[i]);
  }
  // Interreduce.
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<DPoly> others;
    for (std::size_t k = 0; k < min.size(); ++k)
      if (k != i) others.push_back(min[k]);
    DPoly lead{min[i][0]};
    DPoly tail(min[i].begin() + 1, min[i].end());
    DPoly r = normal_form(ctx, tail, others);
    lead.insert(lead.end(), r.begin(), r.end());
    min[i] = std::move(lead);
    make_monic(min[i]);
  }
  std::sort(min.begin(), min.end(), [&](const DPoly& a, const DPoly& b) { return ctx.cmp(a[0].e, b[0].e) > 0; });
  return min;
}

std::vector<const Poly*> ptrs(const std::vector<Poly>& v) {
  std::vector<const Poly*> r;
  for (const auto& p : v) r.push_back(&p);
  return r;
}

}  // namespace

std::vector<Poly> buchberger(const std::vector<Poly>& generators, const MonomialOrder& order, const GroebnerLimits& limits) {
  Ctx ctx(order, ptrs(generators));
  std::vector<DPoly> in;
  for (const auto& g : generators)
    if (!g.is_zero()) in.push_back(ctx.to_d(g));
  std::vector<Poly> out;
  for (const auto& d : groebner_d(ctx, std::move(in), limits)) out.push_back(ctx.from_d(d));
  return out;
}

Poly reduce(const Poly& p, const std::vector<Poly>& basis, const MonomialOrder& order) {
  auto all = ptrs(basis);
  all.push_back(&p);
  Ctx ctx(order, all);
  std::vector<DPoly> b;
  for (const auto& g : basis)
    if (!g.is_zero()) b.push_back(ctx.to_d(g));
  return ctx.from_d(normal_form(ctx, ctx.to_d(p), b));
}

Monomial leading_monomial(const Poly& p, const MonomialOrder& order) {
  Ctx ctx(order, {&p});
  DPoly d = ctx.to_d(p);
  if (d.empty()) throw std::invalid_argument("leading_monomial of zero polynomial");
  return ctx.from_d({DTerm{d[0].e, 1}}).terms().at(0).mono;
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
  Ctx ctx(order, {&f, &g});
  return ctx.from_d(spoly(ctx, ctx.to_d(f), ctx.to_d(g)));
}

bool same_ideal(const std::vector<Poly>& a, const std::vector<Poly>& b, const MonomialOrder& order,
                const GroebnerLimits& limits) {
  auto ga = buchberger(a, order, limits);
  auto gb = buchberger(b, order, limits);
  for (const auto& p : a)
    if (!reduce(p, gb, order).is_zero()) return false;
  for (const auto& p : b)
    if (!reduce(p, ga, order).is_zero()) return false;
  return true;
}

bool is_unit_ideal(const std::vector<Poly>& basis) {
  for (const auto& p : basis)
    if (!p.is_zero() && p.is_constant()) return true;
  return false;
}

std::vector<Poly> eliminate(const std::vector<Poly>& gens, const std::vector<std::string>& eliminate_vars,
                            const GroebnerLimits& limits) {
  std::set<std::string> elim(eliminate_vars.begin(), eliminate_vars.end());
  std::set<std::string> rest;
  for (const auto& g : gens)
    for (const auto& v : g.variables())
      if (!elim.count(v)) rest.insert(v);
  auto order = MonomialOrder::elimination(eliminate_vars, {rest.begin(), rest.end()});
  std::vector<Poly> out;
  for (auto& p : buchberger(gens, order, limits)) {
    bool free = true;
    for (const auto& v : p.variables())
      if (elim.count(v)) free = false;
    if (free) out.push_back(std::move(p));
  }
  return buchberger(out, MonomialOrder::grevlex(), limits);
}

std::vector<Poly> saturate(const std::vector<Poly>& gens, const Poly& f, const GroebnerLimits& limits) {
  const std::string aux = "_sat";
  std::vector<Poly> ext = gens;
  ext.push_back(Poly(1) - Poly::var(aux) * f);
  return eliminate(ext, {aux}, limits);
}

}  // namespace parageom
