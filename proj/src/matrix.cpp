#include "parageom/matrix.hpp"

#include <sstream>

namespace parageom {

QMatrix to_scalar(const PMatrix& m) {
  QMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).constant_value();
  return r;
}

PMatrix to_poly(const QMatrix& m) {
  PMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Poly(m(i, j));
  return r;
}

PMatrix substitute(const PMatrix& m, const std::map<std::string, Scalar>& values) {
  PMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).substitute(values);
  return r;
}

PMatrix substitute(const PMatrix& m, const std::map<std::string, Poly>& values) {
  PMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).substitute(values);
  return r;
}

Scalar dot(const Vector& a, const Vector& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_pretty(m(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace parageom
