#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace cmreg {

// An arbitrary-precision integer extended by -inf and +inf.
//
// Regularity-type invariants are suprema over sets that may be empty (a_i of
// vanishing cohomology, reg of the zero module), and postulation numbers are
// infima that may be infinite. Both are represented explicitly here, never by
// large sentinel integers.
class ExtendedInt {
 public:
  enum class Kind { kNegInf, kFinite, kPosInf };

  ExtendedInt() = default;
  ExtendedInt(int v) : value_(v) {}
  ExtendedInt(long v) : value_(v) {}
  ExtendedInt(long long v) : value_(static_cast<long>(v)) {}
  ExtendedInt(mpz_class v) : value_(std::move(v)) {}

  static ExtendedInt neg_inf() { return ExtendedInt(Kind::kNegInf); }
  static ExtendedInt pos_inf() { return ExtendedInt(Kind::kPosInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  bool is_pos_inf() const { return kind_ == Kind::kPosInf; }

  // Throws std::domain_error when infinite.
  const mpz_class& value() const;
  std::int64_t to_int64() const;

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const ExtendedInt& a,
                                          const ExtendedInt& b);
  friend bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  // -inf + +inf is undefined and throws std::domain_error.
  friend ExtendedInt operator+(const ExtendedInt& a, const ExtendedInt& b);
  friend ExtendedInt operator-(const ExtendedInt& a);
  friend ExtendedInt operator-(const ExtendedInt& a, const ExtendedInt& b) {
    return a + (-b);
  }

 private:
  explicit ExtendedInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::kFinite;
  mpz_class value_ = 0;
};

inline ExtendedInt max(const ExtendedInt& a, const ExtendedInt& b) {
  return a < b ? b : a;
}
inline ExtendedInt min(const ExtendedInt& a, const ExtendedInt& b) {
  return b < a ? b : a;
}

std::ostream& operator<<(std::ostream& os, const ExtendedInt& v);

}  // namespace cmreg
