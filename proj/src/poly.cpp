#include "parageom/poly.hpp"

#include "parageom/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parageom {

Monomial::Monomial(const std::string& var, unsigned exponent) {
  if (exponent > 0) f_.emplace_back(var, exponent);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : f_) d += e;
  return d;
}

unsigned Monomial::degree_in(const std::string& var) const {
  for (const auto& [v, e] : f_)
    if (v == var) return e;
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.f_.begin();
  for (const auto& [v, e] : f_) {
    while (it != other.f_.end() && it->first < v) ++it;
    if (it == other.f_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end() || b != o.f_.end()) {
    if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
      r.f_.push_back(*a++);
    } else if (a == f_.end() || b->first < a->first) {
      r.f_.push_back(*b++);
    } else {
      r.f_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  auto b = o.f_.begin();
  for (const auto& [v, e] : f_) {
    unsigned sub = 0;
    if (b != o.f_.end() && b->first == v) sub = (b++)->second;
    if (e > sub) r.f_.emplace_back(v, e - sub);
  }
  return r;
}

Monomial Monomial::without(const std::string& var) const {
  Monomial r;
  for (const auto& p : f_)
    if (p.first != var) r.f_.push_back(p);
  return r;
}

std::string Monomial::str() const {
  std::string s;
  for (const auto& [v, e] : f_) {
    if (!s.empty()) s += '*';
    s += v;
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

Poly::Poly(const Scalar& c) {
  if (!parageom::is_zero(c)) t_.push_back({Monomial(), c});
}

Poly Poly::var(const std::string& name) { return monomial(Monomial(name), 1); }

Poly Poly::monomial(const Monomial& m, const Scalar& c) {
  Poly p;
  if (!parageom::is_zero(c)) p.t_.push_back({m, c});
  return p;
}

bool Poly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one()); }

Scalar Poly::constant_value() const {
  if (!is_constant()) throw ParametricError("entry '" + str() + "' is not constant");
  return t_.empty() ? Scalar(0) : t_[0].coef;
}

Scalar Poly::constant_term() const { return coeff(Monomial()); }

Scalar Poly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const Term& t, const Monomial& k) { return t.mono < k; });
  if (it != t_.end() && it->mono == m) return it->coef;
  return 0;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

unsigned Poly::degree_in(const std::string& var) const {
  unsigned d = 0;
  for (const auto& t : t_) d = std::max(d, t.mono.degree_in(var));
  return d;
}

std::vector<std::string> Poly::variables() const {
  std::set<std::string> s;
  for (const auto& t : t_)
    for (const auto& f : t.mono.factors()) s.insert(f.first);
  return {s.begin(), s.end()};
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.t_.empty()) return *this;
  std::vector<Term> r;
  r.reserve(t_.size() + o.t_.size());
  auto a = t_.begin();
  auto b = o.t_.begin();
  while (a != t_.end() || b != o.t_.end()) {
    if (b == o.t_.end() || (a != t_.end() && a->mono < b->mono)) {
      r.push_back(std::move(*a++));
    } else if (a == t_.end() || b->mono < a->mono) {
      r.push_back(*b++);
    } else {
      Scalar c = a->coef + b->coef;
      if (!parageom::is_zero(c)) r.push_back({std::move(a->mono), c});
      ++a;
      ++b;
    }
  }
  t_ = std::move(r);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.coef = -t.coef;
  return r;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (parageom::is_zero(c)) {
    t_.clear();
    return *this;
  }
  for (auto& t : t_) t.coef *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.t_[0].coef;
  if (a.is_constant()) return b * a.t_[0].coef;
  std::map<Monomial, Scalar> acc;
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) acc[x.mono * y.mono] += x.coef * y.coef;
  Poly r;
  for (auto& [m, c] : acc)
    if (!parageom::is_zero(c)) r.t_.push_back({m, c});
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (!(a.t_[i].mono == b.t_[i].mono) || a.t_[i].coef != b.t_[i].coef) return false;
  return true;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Poly Poly::substitute(const std::map<std::string, Poly>& values) const {
  Poly r;
  for (const auto& t : t_) {
    Poly term(t.coef);
    Monomial rest;
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = values.find(v);
      if (it == values.end())
        rest = rest * Monomial(v, e);
      else
        term *= it->second.pow(e);
    }
    r += term * Poly::monomial(rest, 1);
  }
  return r;
}

Poly Poly::substitute(const std::map<std::string, Scalar>& values) const {
  Poly r;
  for (const auto& t : t_) {
    Scalar c = t.coef;
    Monomial rest;
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = values.find(v);
      if (it == values.end())
        rest = rest * Monomial(v, e);
      else
        c *= parageom::pow(it->second, e);
    }
    r += Poly::monomial(rest, c);
  }
  return r;
}

Poly Poly::substitute_fraction(const std::string& var, const Poly& num, const Poly& den) const {
  unsigned k = degree_in(var);
  std::vector<Poly> num_pow{Poly(1)}, den_pow{Poly(1)};
  for (unsigned i = 1; i <= k; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  Poly r;
  for (const auto& t : t_) {
    unsigned e = t.mono.degree_in(var);
    r += Poly::monomial(t.mono.without(var), t.coef) * num_pow[e] * den_pow[k - e];
  }
  return r;
}

Scalar Poly::evaluate(const std::map<std::string, Scalar>& values) const {
  Poly r = substitute(values);
  if (!r.is_constant()) throw std::invalid_argument("unbound variables in '" + r.str() + "'");
  return r.constant_value();
}

Poly Poly::primitive() const {
  if (t_.empty()) return {};
  Integer g = 0, l = 1;
  for (const auto& t : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den().get_mpz_t());
  }
  Scalar s(l, g);
  s.canonicalize();
  if (sgn(t_.back().coef) < 0) s = -s;
  return *this * s;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : t_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(),
                   [](const Term* a, const Term* b) { return a->mono.degree() > b->mono.degree(); });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    Scalar c = t->coef;
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    } else if (sgn(c) < 0 && !t->mono.is_one()) {
      os << '-';
      c = -c;
    }
    first = false;
    if (t->mono.is_one()) {
      os << to_pretty(c);
    } else {
      if (c != 1) os << to_pretty(c) << '*';
      os << t->mono.str();
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " in '" + std::string(s_) + "'");
  }
  Poly expr() {
    skip();
    Poly acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    Poly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }
  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }
  unsigned exponent() {
    if (!eat('^')) return 1;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("missing exponent");
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }
  Poly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("missing ')'");
      return p.pow(exponent());
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Scalar x(std::string(s_.substr(start, pos_ - start)));
      skip();
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        std::size_t d0 = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        x /= Scalar(std::string(s_.substr(d0, pos_ - d0)));
      }
      return Poly(x);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return Poly::var(std::string(s_.substr(start, pos_ - start))).pow(exponent());
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace parageom
