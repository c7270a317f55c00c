#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cmreg {

using Scalar = mpq_class;

// Coefficient field: exact rationals or a prime field GF(p), p < 2^31.
// Elements of GF(p) are carried as integers in [0, p) inside a Scalar, so the
// same polynomial code serves both fields.
class Field {
 public:
  static Field rationals() { return Field(0); }
  // Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  bool is_prime_field() const { return prime_ != 0; }
  // 0 for the rationals.
  std::uint32_t characteristic() const { return prime_; }

  Scalar normalize(const Scalar& v) const;
  Scalar from_integer(long v) const { return normalize(Scalar(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  // Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  // "Q" or "GF(p)".
  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.prime_ == b.prime_;
  }

 private:
  explicit Field(std::uint32_t p) : prime_(p) {}

  std::uint32_t prime_ = 0;
};

}  // namespace cmreg
