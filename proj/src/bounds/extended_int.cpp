#include "cmreg/extended_int.hpp"

#include <limits>
#include <stdexcept>

namespace cmreg {

const mpz_class& ExtendedInt::value() const {
  if (!is_finite()) {
    throw std::domain_error("value() of infinite ExtendedInt " + to_string());
  }
  return value_;
}

std::int64_t ExtendedInt::to_int64() const {
  const mpz_class& v = value();
  if (!v.fits_slong_p()) {
    throw std::overflow_error("ExtendedInt does not fit in 64 bits");
  }
  return v.get_si();
}

std::string ExtendedInt::to_string() const {
  switch (kind_) {
    case Kind::kNegInf:
      return "-inf";
    case Kind::kPosInf:
      return "+inf";
    case Kind::kFinite:
      break;
  }
  return value_.get_str();
}

std::strong_ordering operator<=>(const ExtendedInt& a, const ExtendedInt& b) {
  auto rank = [](ExtendedInt::Kind k) {
    switch (k) {
      case ExtendedInt::Kind::kNegInf:
        return 0;
      case ExtendedInt::Kind::kFinite:
        return 1;
      case ExtendedInt::Kind::kPosInf:
        return 2;
    }
    return 1;
  };
  if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
  if (!a.is_finite()) return std::strong_ordering::equal;
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtendedInt operator+(const ExtendedInt& a, const ExtendedInt& b) {
  if ((a.is_neg_inf() && b.is_pos_inf()) || (a.is_pos_inf() && b.is_neg_inf())) {
    throw std::domain_error("-inf + +inf is undefined");
  }
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtendedInt::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtendedInt::pos_inf();
  return ExtendedInt(mpz_class(a.value_ + b.value_));
}

ExtendedInt operator-(const ExtendedInt& a) {
  if (a.is_neg_inf()) return ExtendedInt::pos_inf();
  if (a.is_pos_inf()) return ExtendedInt::neg_inf();
  return ExtendedInt(mpz_class(-a.value_));
}

std::ostream& operator<<(std::ostream& os, const ExtendedInt& v) {
  return os << v.to_string();
}

}  // namespace cmreg
