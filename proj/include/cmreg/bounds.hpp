#pragma once

// Closed-form and recursive bounding functions for the regularity of
// deficiency modules, their reg^2 and Hilbert-coefficient variants, and the
// lower bounds for cohomological postulation numbers. All values are exact
// arbitrary-precision integers.

#include <gmpxx.h>

#include <map>
#include <tuple>
#include <vector>

#include "cmreg/rational_polynomial.hpp"

namespace cmreg {

// Binomial coefficient with the truncation convention used by every bound
// formula: 0 if b < 0; 1 if b == 0 (for every a, negative a included);
// 0 if b >= 1 and a < b; the ordinary binomial otherwise.
mpz_class truncated_binomial(const mpz_class& a, const mpz_class& b);
mpz_class truncated_binomial(long a, long b);

// The degree-b polynomial (x+s)(x+s-1)...(x+s-b+1)/b!, i.e. binom(x+s, b)
// viewed as a polynomial in x. Throws std::invalid_argument if b < 0.
RationalPolynomial binomial_polynomial(long top_shift, long b);

// Caps (x_0, ..., x_{d-1}) on the cohomology diagonal d^j_M(-j), together with
// a lower bound y for beg(M). The dimension d is caps.size() and may be 0.
struct DiagonalVector {
  std::vector<mpz_class> caps;
  mpz_class base_degree = 0;

  int dimension() const { return static_cast<int>(caps.size()); }
  // Throws std::invalid_argument when some cap is negative.
  void validate() const;
};

// Hilbert coefficients e_0, ..., e_{d-1}; e_i reads as 0 outside that range.
struct HilbertCoefficients {
  std::vector<mpz_class> values;

  int dimension() const { return static_cast<int>(values.size()); }
  mpz_class at(long i) const;
};

// One evaluation of the generic recursive case (2 <= i <= d-1, d >= 3).
struct RecursionStep {
  int i = 0;
  int d = 0;
  std::vector<mpz_class> caps;
  mpz_class base_degree;
  mpz_class m;
  mpz_class n;
  mpz_class t;
  // deltas[j] is the Delta_{ij} summand for j = 0, ..., i-1.
  std::vector<mpz_class> deltas;
};

using RecursionTrace = std::vector<RecursionStep>;

// Memoizing evaluator for the diagonal regularity bound F^i_d. The memo table
// belongs to the evaluator instance; independent instances share nothing.
class BoundEvaluator {
 public:
  // Throws std::invalid_argument unless 0 <= i <= diag.dimension().
  mpz_class evaluate(int i, const DiagonalVector& diag);

  // Evaluates with a fresh table and records every generic recursive step in
  // the order it was first computed.
  static mpz_class evaluate_traced(int i, const DiagonalVector& diag,
                                   RecursionTrace& trace);

  size_t memo_size() const { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  using Key = std::tuple<int, std::vector<mpz_class>, mpz_class>;

  const mpz_class& compute(int i, const std::vector<mpz_class>& caps,
                           const mpz_class& y);

  std::map<Key, mpz_class> memo_;
  RecursionTrace* trace_ = nullptr;
};

// F^i_d(x_0, ..., x_{d-1}, y): upper bound for reg(K^i(M)) when dim(M) <= d,
// d^j_M(-j) <= x_j and beg(M) >= y.
mpz_class diagonal_regularity_bound(int i, const DiagonalVector& diag);

// G^i_d(u, v, w) = F^i_d(u, 0, ..., 0, v - w) - w.
mpz_class reg2_regularity_bound(int i, int d, const mpz_class& u,
                                const mpz_class& v, const mpz_class& w);

// E^i_d(x) = -F^{i+1}_d(x, 0); requires 0 <= i <= d-1.
mpz_class postulation_lower_bound(int i, const std::vector<mpz_class>& caps);

// p_e(x) = sum_i (-1)^i e_i binom(x+d-i-1, d-i-1).
RationalPolynomial hilbert_polynomial_from_coefficients(
    const HilbertCoefficients& e);

// H^m_d(e) with length(R_0) = lambda. Requires d = e.dimension() >= 2.
mpz_class hilbert_coefficient_bound(const mpz_class& m,
                                    const mpz_class& lambda,
                                    const HilbertCoefficients& e);

// Upper bound for length(K^{i+1}(M)_n), n >= i, where caps[k] bounds
// d^k_M(-k) for k = 0..i.
mpz_class deficiency_length_bound(int i, const mpz_class& n,
                                  const std::vector<mpz_class>& caps);

// Upper bound for d^i_M(n), n <= -i, with the same caps.
mpz_class diagonal_cohomology_bound(int i, const mpz_class& n,
                                    const std::vector<mpz_class>& caps);

// G^i_d(binom(m+r-1, r-1) * lambda, 0, r): uniform bound over graded ideals
// with reg^2 <= r in a ring with at most m linear generators.
mpz_class ideal_deficiency_bound(int i, int d, const mpz_class& m,
                                 const mpz_class& r, const mpz_class& lambda);

struct GendegBound {
  mpz_class rho;
  mpz_class pi;
  mpz_class delta;
};

// Bound for submodules with bounded generating degree of an m-generated
// module U over a d-variate polynomial ring, beg(U) = b, reg(U) < r.
// Throws std::invalid_argument if r <= b.
GendegBound submodule_gendeg_bound(int i, int d, const mpz_class& m,
                                   const mpz_class& lambda, const mpz_class& b,
                                   const mpz_class& r);

// The same bound driven by a free presentation F -> N with rank(F) = m:
// b = beg(F), r = max{gendeg(F) + 1, gendeg(ker)}.
mpz_class presentation_bound(int i, int d, const mpz_class& m,
                             const mpz_class& lambda, const mpz_class& beg_free,
                             const mpz_class& gendeg_free,
                             const mpz_class& gendeg_kernel);

// r = (g(1+lambda))^(2^d - 2) and gamma = G^i_d(binom(d+r-1, r-1) lambda, 0, r)
// for a graded ideal generated in degrees <= g. Requires d > 1 and i > 1.
struct IdealGendegBound {
  mpz_class r;
  mpz_class gamma;
};
IdealGendegBound ideal_gendeg_bound(int i, int d, const mpz_class& g,
                                    const mpz_class& lambda);

struct MumfordParameter {
  std::vector<mpz_class> arguments;  // the vector fed to H^m_d
  mpz_class t;
  mpz_class reg1_offset;  // max{0, t-1}
  mpz_class reg2_offset;  // max{1, t}
};

// t = H^m_d(m lambda - (-1)^h e_{-h}, (-1)^h e_{1-h}, ..., (-1)^h e_{d-1-h})
// where e are the Hilbert coefficients of L(r). Requires d >= 2, 0 <= h <= d.
MumfordParameter mumford_parameter(const mpz_class& m, int d,
                                   const mpz_class& lambda, int h,
                                   const HilbertCoefficients& shifted_quotient);

// Same, but fed with the Hilbert coefficients of the kernel N of
// R^m -> L(r)_{>=0}: e_0(N) = m lambda - (-1)^h e_{-h} and
// e_k(N) = -(-1)^h e_{k-h} for k >= 1, as p_N = m p_R - p_{L(r)} forces.
// The variant above keeps +(-1)^h for k >= 1, which undercuts reg^2 on
// R/(xy, xz) in three variables.
MumfordParameter kernel_mumford_parameter(const mpz_class& m, int d,
                                          const mpz_class& lambda, int h,
                                          const HilbertCoefficients& shifted_quotient);

// G^i_d(p, b, max{1, t} + r).
mpz_class mumford_submodule_bound(int i, int d, const mpz_class& p,
                                  const mpz_class& b, const mpz_class& t,
                                  const mpz_class& r);

// G^i_d(1, 0, max{1, t}).
mpz_class mumford_ideal_bound(int i, int d, const mpz_class& t);

}  // namespace cmreg
