#include "cmreg/rational_polynomial.hpp"

#include <sstream>

namespace cmreg {

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (auto& c : coefficients_) c.canonicalize();
  trim();
}

RationalPolynomial RationalPolynomial::constant(const mpq_class& c) {
  return RationalPolynomial(std::vector<mpq_class>{c});
}

RationalPolynomial RationalPolynomial::identity() {
  return RationalPolynomial(std::vector<mpq_class>{0, 1});
}

mpq_class RationalPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[k];
}

mpq_class RationalPolynomial::leading_coefficient() const {
  return is_zero() ? mpq_class(0) : coefficients_.back();
}

mpq_class RationalPolynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

RationalPolynomial RationalPolynomial::compose_affine(
    const mpq_class& scale, const mpq_class& shift) const {
  RationalPolynomial inner(std::vector<mpq_class>{shift, scale});
  RationalPolynomial acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * inner + constant(*it);
  }
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(o.coefficients_.size(), 0);
  }
  for (size_t k = 0; k < o.coefficients_.size(); ++k) {
    coefficients_[k] += o.coefficients_[k];
  }
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(o.coefficients_.size(), 0);
  }
  for (size_t k = 0; k < o.coefficients_.size(); ++k) {
    coefficients_[k] -= o.coefficients_[k];
  }
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const mpq_class& c) {
  for (auto& a : coefficients_) a *= c;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a,
                             const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.coefficients_.size() + b.coefficients_.size() - 1,
                             0);
  for (size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    mpq_class c = coefficients_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    mpq_class a = abs(c);
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

void RationalPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

}  // namespace cmreg
