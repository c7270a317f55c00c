#include "cmreg/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cmreg {

Monomial Monomial::variable(int index, int exponent) {
  Monomial m;
  m.set(index, exponent);
  return m;
}

void Monomial::set(int k, int e) {
  if (k < 0 || k >= kMaxVariables) throw std::out_of_range("variable index");
  if (e < 0) throw std::invalid_argument("negative exponent");
  degree_ += e - exps_[k];
  exps_[k] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (int k = 0; k < kMaxVariables; ++k) {
    if (exps_[k] > other.exps_[k]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int k = 0; k < kMaxVariables; ++k) {
    if (exps_[k] != 0 && other.exps_[k] != 0) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  for (int k = 0; k < kMaxVariables; ++k) {
    out.exps_[k] = std::max(exps_[k], other.exps_[k]);
    out.degree_ += out.exps_[k];
  }
  return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  for (int k = 0; k < kMaxVariables; ++k) {
    out.exps_[k] = exps_[k] - divisor.exps_[k];
  }
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (int k = 0; k < kMaxVariables; ++k) out.exps_[k] = a.exps_[k] + b.exps_[k];
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

int compare_degrevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (int k = kMaxVariables - 1; k >= 0; --k) {
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

PolyRing::PolyRing(Field field, std::vector<std::string> variables)
    : field_(field), variables_(std::move(variables)) {
  if (variables_.empty()) throw std::invalid_argument("ring needs a variable");
  if (static_cast<int>(variables_.size()) > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) +
                                " variables supported");
  }
  std::set<std::string> seen(variables_.begin(), variables_.end());
  if (seen.size() != variables_.size()) {
    throw std::invalid_argument("duplicate variable name");
  }
}

std::optional<int> PolyRing::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<int>(it - variables_.begin());
}

Polynomial Polynomial::from_terms(const PolyRing& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_degrevlex(a.monomial, b.monomial) > 0;
  });
  Polynomial out;
  const Field& k = ring.field();
  for (auto& t : terms) {
    Scalar c = k.normalize(t.coefficient);
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coefficient = k.add(out.terms_.back().coefficient, c);
      if (Field::is_zero(out.terms_.back().coefficient)) out.terms_.pop_back();
    } else if (!Field::is_zero(c)) {
      out.terms_.push_back(Term{t.monomial, c});
    }
  }
  return out;
}

Polynomial Polynomial::constant(const PolyRing& ring, const Scalar& c) {
  return from_terms(ring, {Term{Monomial(), c}});
}

Polynomial Polynomial::monomial(const PolyRing& ring, const Monomial& m,
                                const Scalar& c) {
  return from_terms(ring, {Term{m, c}});
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  if (!is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
  return terms_.front().monomial.degree();
}

bool Polynomial::is_unit() const {
  return terms_.size() == 1 && terms_.front().monomial.degree() == 0;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t k = 0; k < a.terms_.size(); ++k) {
    if (!(a.terms_[k].monomial == b.terms_[k].monomial) ||
        a.terms_[k].coefficient != b.terms_[k].coefficient) {
      return false;
    }
  }
  return true;
}

Polynomial add(const PolyRing& ring, const Polynomial& a, const Polynomial& b) {
  std::vector<Term> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial subtract(const PolyRing& ring, const Polynomial& a,
                    const Polynomial& b) {
  return add(ring, a, scale(ring, b, ring.field().from_integer(-1)));
}

Polynomial multiply(const PolyRing& ring, const Polynomial& a,
                    const Polynomial& b) {
  std::vector<Term> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  const Field& k = ring.field();
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      terms.push_back(Term{s.monomial * t.monomial, k.mul(s.coefficient, t.coefficient)});
    }
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial scale(const PolyRing& ring, const Polynomial& a, const Scalar& c) {
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) t.coefficient = ring.field().mul(t.coefficient, c);
  return Polynomial::from_terms(ring, std::move(terms));
}

std::string to_string(const PolyRing& ring, const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Scalar c = t.coefficient;
    bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    Scalar a = abs(c);
    bool wrote = false;
    if (a != 1 || t.monomial.degree() == 0) {
      os << a.get_str();
      wrote = true;
    }
    for (int k = 0; k < ring.num_variables(); ++k) {
      int e = t.monomial[k];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << ring.variables()[k];
      if (e > 1) os << "^" << e;
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace cmreg
