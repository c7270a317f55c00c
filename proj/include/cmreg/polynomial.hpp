#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmreg/field.hpp"

namespace cmreg {

inline constexpr int kMaxVariables = 12;

// Exponent vector over at most kMaxVariables variables, with cached total
// degree. Unused trailing variables carry exponent zero.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(int index, int exponent = 1);

  int degree() const { return degree_; }
  int operator[](int k) const { return exps_[k]; }
  void set(int k, int e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

 private:
  std::array<std::int32_t, kMaxVariables> exps_{};
  int degree_ = 0;
};

// Graded reverse lexicographic comparison: -1, 0, or 1.
int compare_degrevlex(const Monomial& a, const Monomial& b);

// Standard graded polynomial ring k[x_1, ..., x_n].
class PolyRing {
 public:
  // Throws std::invalid_argument for an empty, oversized, or duplicated
  // variable list.
  PolyRing(Field field, std::vector<std::string> variables);

  const Field& field() const { return field_; }
  int num_variables() const { return static_cast<int>(variables_.size()); }
  const std::vector<std::string>& variables() const { return variables_; }
  std::optional<int> index_of(const std::string& name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.variables_ == b.variables_;
  }

 private:
  Field field_;
  std::vector<std::string> variables_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

// Polynomial as a list of terms sorted by decreasing degrevlex order, with
// nonzero normalized coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial from_terms(const PolyRing& ring, std::vector<Term> terms);
  static Polynomial constant(const PolyRing& ring, const Scalar& c);
  static Polynomial monomial(const PolyRing& ring, const Monomial& m,
                             const Scalar& c = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_homogeneous() const;
  // Degree of a nonzero homogeneous polynomial; nullopt for zero. Throws
  // std::invalid_argument when not homogeneous.
  std::optional<int> homogeneous_degree() const;
  // Nonzero constant.
  bool is_unit() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Term> terms_;
};

Polynomial add(const PolyRing& ring, const Polynomial& a, const Polynomial& b);
Polynomial subtract(const PolyRing& ring, const Polynomial& a,
                    const Polynomial& b);
Polynomial multiply(const PolyRing& ring, const Polynomial& a,
                    const Polynomial& b);
Polynomial scale(const PolyRing& ring, const Polynomial& a, const Scalar& c);

// Canonical text: terms in decreasing order, "*" between factors, "^" for
// powers, rational coefficients as "p/q"; "0" for zero.
std::string to_string(const PolyRing& ring, const Polynomial& p);

}  // namespace cmreg
