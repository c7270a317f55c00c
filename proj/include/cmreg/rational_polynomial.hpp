#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cmreg {

// Univariate polynomial with exact rational coefficients, used for Hilbert
// polynomials and their cohomological relatives. Coefficients are stored from
// the constant term upward with no trailing zeros.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<mpq_class> coefficients);

  static RationalPolynomial constant(const mpq_class& c);
  // The polynomial x.
  static RationalPolynomial identity();

  bool is_zero() const { return coefficients_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<mpq_class>& coefficients() const { return coefficients_; }
  mpq_class coefficient(int k) const;
  mpq_class leading_coefficient() const;

  mpq_class operator()(const mpq_class& x) const;
  mpq_class operator()(const mpz_class& x) const { return (*this)(mpq_class(x)); }
  mpq_class operator()(long x) const { return (*this)(mpq_class(x)); }

  // p(scale * x + shift).
  RationalPolynomial compose_affine(const mpq_class& scale,
                                    const mpq_class& shift) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const mpq_class& c);

  friend RationalPolynomial operator+(RationalPolynomial a,
                                      const RationalPolynomial& b) {
    return a += b;
  }
  friend RationalPolynomial operator-(RationalPolynomial a,
                                      const RationalPolynomial& b) {
    return a -= b;
  }
  friend RationalPolynomial operator*(RationalPolynomial a, const mpq_class& c) {
    return a *= c;
  }
  friend RationalPolynomial operator*(const RationalPolynomial& a,
                                      const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial& a,
                         const RationalPolynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

  // e.g. "1/2*x^2 + 3/2*x + 1"; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<mpq_class> coefficients_;
};

}  // namespace cmreg
