#include "cmreg/bounds.hpp"

#include <stdexcept>
#include <string>

namespace cmreg {

namespace {

mpz_class max_z(const mpz_class& a, const mpz_class& b) { return a < b ? b : a; }

unsigned long to_exponent(long e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  return static_cast<unsigned long>(e);
}

mpz_class power(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

void require_index(int i, int d) {
  if (d < 0) throw std::invalid_argument("dimension must be nonnegative");
  if (i < 0 || i > d) {
    throw std::invalid_argument("bound index i=" + std::to_string(i) +
                                " outside 0.." + std::to_string(d));
  }
}

// Sum_{j=0}^{i} binom(top - j - 1, i - j) * [sum_l binom(i-j, l) caps[i-l]].
mpz_class diagonal_sum(int i, const mpz_class& top,
                       const std::vector<mpz_class>& caps) {
  if (static_cast<int>(caps.size()) != i + 1) {
    throw std::invalid_argument("expected " + std::to_string(i + 1) + " caps");
  }
  for (const auto& c : caps) {
    if (c < 0) throw std::invalid_argument("caps must be nonnegative");
  }
  mpz_class total = 0;
  for (int j = 0; j <= i; ++j) {
    mpz_class inner = 0;
    for (int l = 0; l <= i - j; ++l) {
      inner += truncated_binomial(i - j, l) * caps[i - l];
    }
    total += truncated_binomial(mpz_class(top - j - 1), mpz_class(i - j)) * inner;
  }
  return total;
}

}  // namespace

mpz_class truncated_binomial(const mpz_class& a, const mpz_class& b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a < b) return 0;
  mpz_class k = b;
  if (a - b < k) k = a - b;
  if (!k.fits_ulong_p()) {
    throw std::overflow_error("binomial lower index too large");
  }
  mpz_class out;
  mpz_bin_ui(out.get_mpz_t(), a.get_mpz_t(), k.get_ui());
  return out;
}

mpz_class truncated_binomial(long a, long b) {
  return truncated_binomial(mpz_class(a), mpz_class(b));
}

RationalPolynomial binomial_polynomial(long top_shift, long b) {
  if (b < 0) throw std::invalid_argument("binomial_polynomial: b < 0");
  RationalPolynomial acc = RationalPolynomial::constant(1);
  mpz_class factorial = 1;
  for (long k = 0; k < b; ++k) {
    acc = acc * RationalPolynomial(std::vector<mpq_class>{top_shift - k, 1});
    factorial *= (k + 1);
  }
  return acc * mpq_class(1, factorial);
}

void DiagonalVector::validate() const {
  for (const auto& c : caps) {
    if (c < 0) throw std::invalid_argument("diagonal caps must be nonnegative");
  }
}

mpz_class HilbertCoefficients::at(long i) const {
  if (i < 0 || i >= static_cast<long>(values.size())) return 0;
  return values[i];
}

mpz_class BoundEvaluator::evaluate(int i, const DiagonalVector& diag) {
  diag.validate();
  require_index(i, diag.dimension());
  return compute(i, diag.caps, diag.base_degree);
}

mpz_class BoundEvaluator::evaluate_traced(int i, const DiagonalVector& diag,
                                          RecursionTrace& trace) {
  BoundEvaluator fresh;
  fresh.trace_ = &trace;
  return fresh.evaluate(i, diag);
}

const mpz_class& BoundEvaluator::compute(int i,
                                         const std::vector<mpz_class>& caps,
                                         const mpz_class& y) {
  Key key{i, caps, y};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const int d = static_cast<int>(caps.size());
  mpz_class result;
  if (i == 0) {
    result = -y;
  } else if (i == 1) {
    if (d == 1) {
      result = 1 - y;
    } else {
      result = max_z(0, mpz_class(1 - y));
      for (int k = 0; k <= d - 2; ++k) {
        result += truncated_binomial(d - 1, k) * caps[d - k - 2];
      }
    }
  } else if (i == 2 && d == 2) {
    result = compute(1, caps, y) + 2;
  } else {
    std::vector<mpz_class> contracted(d - 1);
    for (int k = 0; k + 1 < d; ++k) contracted[k] = caps[k] + caps[k + 1];

    mpz_class m = max_z(compute(i - 1, contracted, y),
                        mpz_class(compute(i - 1, caps, y) + 1)) +
                  1;
    if (i == d) {
      result = m;
    } else {
      mpz_class n = compute(i, contracted, y);
      mpz_class t = max_z(m, n);
      RecursionStep step;
      step.i = i;
      step.d = d;
      step.caps = caps;
      step.base_degree = y;
      step.m = m;
      step.n = n;
      step.t = t;
      result = t;
      for (int j = 0; j < i; ++j) {
        mpz_class delta = 0;
        for (int l = 0; l <= i - j - 1; ++l) {
          delta += truncated_binomial(i - j - 1, l) * caps[i - l - 1];
        }
        step.deltas.push_back(delta);
        result += truncated_binomial(mpz_class(t - j - 1), mpz_class(i - j - 1)) *
                  delta;
      }
      if (trace_ != nullptr) trace_->push_back(std::move(step));
    }
  }
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

mpz_class diagonal_regularity_bound(int i, const DiagonalVector& diag) {
  BoundEvaluator evaluator;
  return evaluator.evaluate(i, diag);
}

mpz_class reg2_regularity_bound(int i, int d, const mpz_class& u,
                                const mpz_class& v, const mpz_class& w) {
  if (d < 1) throw std::invalid_argument("reg2 bound requires d >= 1");
  require_index(i, d);
  if (u < 0) throw std::invalid_argument("reg2 bound requires u >= 0");
  DiagonalVector diag;
  diag.caps.assign(d, 0);
  diag.caps[0] = u;
  diag.base_degree = v - w;
  return diagonal_regularity_bound(i, diag) - w;
}

mpz_class postulation_lower_bound(int i, const std::vector<mpz_class>& caps) {
  const int d = static_cast<int>(caps.size());
  if (d < 1) throw std::invalid_argument("postulation bound requires d >= 1");
  if (i < 0 || i > d - 1) {
    throw std::invalid_argument("postulation bound index outside 0..d-1");
  }
  return -diagonal_regularity_bound(i + 1, DiagonalVector{caps, 0});
}

RationalPolynomial hilbert_polynomial_from_coefficients(
    const HilbertCoefficients& e) {
  const long d = e.dimension();
  RationalPolynomial p;
  for (long i = 0; i < d; ++i) {
    if (e.values[i] == 0) continue;
    mpq_class sign_e = (i % 2 == 0) ? mpq_class(e.values[i]) : mpq_class(-e.values[i]);
    p += binomial_polynomial(d - i - 1, d - i - 1) * sign_e;
  }
  return p;
}

mpz_class hilbert_coefficient_bound(const mpz_class& m, const mpz_class& lambda,
                                    const HilbertCoefficients& e) {
  const int d = e.dimension();
  if (d < 2) throw std::invalid_argument("Hilbert-coefficient bound needs d >= 2");
  if (d == 2) {
    mpq_class v = hilbert_polynomial_from_coefficients(e)(mpq_class(-1));
    return mpz_class(1 - v.get_num());  // p_e has integer values
  }
  HilbertCoefficients prefix{std::vector<mpz_class>(e.values.begin(),
                                                    e.values.end() - 1)};
  mpz_class f = hilbert_coefficient_bound(m, lambda, prefix);
  mpq_class p_at = hilbert_polynomial_from_coefficients(e)(mpq_class(f - 2));
  if (p_at.get_den() != 1) {
    throw std::logic_error("integer-valued polynomial gave a non-integer");
  }
  return lambda * m * truncated_binomial(mpz_class(f + d - 3), mpz_class(d - 1)) -
         p_at.get_num() + f;
}

mpz_class deficiency_length_bound(int i, const mpz_class& n,
                                  const std::vector<mpz_class>& caps) {
  if (i < 0) throw std::invalid_argument("index must be nonnegative");
  if (n < i) throw std::invalid_argument("deficiency length bound needs n >= i");
  return diagonal_sum(i, n, caps);
}

mpz_class diagonal_cohomology_bound(int i, const mpz_class& n,
                                    const std::vector<mpz_class>& caps) {
  if (i < 0) throw std::invalid_argument("index must be nonnegative");
  if (n > -i) throw std::invalid_argument("diagonal cohomology bound needs n <= -i");
  return diagonal_sum(i, mpz_class(-n), caps);
}

mpz_class ideal_deficiency_bound(int i, int d, const mpz_class& m,
                                 const mpz_class& r, const mpz_class& lambda) {
  if (d < 1 || m < 1 || r < 1 || lambda < 1) {
    throw std::invalid_argument("ideal bound requires d, m, r, lambda >= 1");
  }
  mpz_class u = truncated_binomial(mpz_class(m + r - 1), mpz_class(r - 1)) * lambda;
  return reg2_regularity_bound(i, d, u, 0, r);
}

GendegBound submodule_gendeg_bound(int i, int d, const mpz_class& m,
                                   const mpz_class& lambda, const mpz_class& b,
                                   const mpz_class& r) {
  if (d < 1 || m < 1) throw std::invalid_argument("requires d, m >= 1");
  if (r <= b) throw std::invalid_argument("requires r > b");
  require_index(i, d);
  GendegBound out;
  const unsigned long e = (1UL << to_exponent(d)) - 1;
  out.rho = power(mpz_class(r + (m + 1) * lambda - b), e);
  out.pi = m * truncated_binomial(mpz_class(d + out.rho - 1),
                                  mpz_class(out.rho - 1)) *
           lambda;
  out.delta = reg2_regularity_bound(i, d, out.pi, b, mpz_class(out.rho + b));
  return out;
}

mpz_class presentation_bound(int i, int d, const mpz_class& m,
                             const mpz_class& lambda, const mpz_class& beg_free,
                             const mpz_class& gendeg_free,
                             const mpz_class& gendeg_kernel) {
  mpz_class r = max_z(mpz_class(gendeg_free + 1), gendeg_kernel);
  return submodule_gendeg_bound(i, d, m, lambda, beg_free, r).delta;
}

IdealGendegBound ideal_gendeg_bound(int i, int d, const mpz_class& g,
                                    const mpz_class& lambda) {
  if (d <= 1 || i <= 1) throw std::invalid_argument("requires d > 1 and i > 1");
  if (g < 1) throw std::invalid_argument("generating degree must be positive");
  require_index(i, d);
  IdealGendegBound out;
  const unsigned long e = (1UL << to_exponent(d)) - 2;
  out.r = power(mpz_class(g * (1 + lambda)), e);
  mpz_class u =
      truncated_binomial(mpz_class(d + out.r - 1), mpz_class(out.r - 1)) * lambda;
  out.gamma = reg2_regularity_bound(i, d, u, 0, out.r);
  return out;
}

namespace {

MumfordParameter mumford_with_sign(const mpz_class& m, int d, const mpz_class& lambda,
                                   int h, const HilbertCoefficients& shifted_quotient,
                                   int tail_sign) {
  if (d < 2) throw std::invalid_argument("requires d >= 2");
  if (h < 0 || h > d) throw std::invalid_argument("requires 0 <= h <= d");
  const int sign = (h % 2 == 0) ? 1 : -1;
  MumfordParameter out;
  out.arguments.resize(d);
  out.arguments[0] = m * lambda - sign * shifted_quotient.at(-h);
  for (int k = 1; k < d; ++k) {
    out.arguments[k] = tail_sign * sign * shifted_quotient.at(k - h);
  }
  out.t = hilbert_coefficient_bound(m, lambda, HilbertCoefficients{out.arguments});
  out.reg1_offset = max_z(0, mpz_class(out.t - 1));
  out.reg2_offset = max_z(1, out.t);
  return out;
}

}  // namespace

MumfordParameter mumford_parameter(const mpz_class& m, int d, const mpz_class& lambda,
                                   int h, const HilbertCoefficients& shifted_quotient) {
  return mumford_with_sign(m, d, lambda, h, shifted_quotient, 1);
}

MumfordParameter kernel_mumford_parameter(const mpz_class& m, int d, const mpz_class& lambda,
                                          int h, const HilbertCoefficients& shifted_quotient) {
  return mumford_with_sign(m, d, lambda, h, shifted_quotient, -1);
}

mpz_class mumford_submodule_bound(int i, int d, const mpz_class& p,
                                  const mpz_class& b, const mpz_class& t,
                                  const mpz_class& r) {
  return reg2_regularity_bound(i, d, p, b, mpz_class(max_z(1, t) + r));
}

mpz_class mumford_ideal_bound(int i, int d, const mpz_class& t) {
  return reg2_regularity_bound(i, d, 1, 0, max_z(1, t));
}

}  // namespace cmreg
