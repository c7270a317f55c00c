#include "cmreg/field.hpp"

#include <stdexcept>

namespace cmreg {

Field Field::prime(std::uint32_t p) {
  if (p < 2 || p >= (1U << 31)) {
    throw std::invalid_argument("prime field order must lie in [2, 2^31)");
  }
  if (mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Scalar Field::normalize(const Scalar& v) const {
  if (prime_ == 0) {
    Scalar out = v;
    out.canonicalize();
    return out;
  }
  mpz_class p(prime_);
  mpz_class num = v.get_num() % p;
  mpz_class den = v.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw std::domain_error("denominator divisible by characteristic");
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * den_inv) % p;
  if (r < 0) r += p;
  return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (prime_ == 0) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  if (r >= prime_) r -= prime_;
  return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (prime_ == 0) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  if (r < 0) r += prime_;
  return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (prime_ == 0) return a * b;
  mpz_class r = (a.get_num() * b.get_num()) % prime_;
  return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
  if (prime_ == 0) return -a;
  if (sgn(a) == 0) return a;
  return Scalar(mpz_class(prime_ - a.get_num()));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  if (prime_ == 0) return 1 / a;
  mpz_class r;
  mpz_class p(prime_);
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

std::string Field::to_string() const {
  if (prime_ == 0) return "Q";
  return "GF(" + std::to_string(prime_) + ")";
}

}  // namespace cmreg
