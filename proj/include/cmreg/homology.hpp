#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cmreg/bounds.hpp"
#include "cmreg/extended_int.hpp"
#include "cmreg/rational_polynomial.hpp"
#include "cmreg/syzygy.hpp"

namespace cmreg {

// beta_{i,j}: number of degree-j generators of the i-th free module.
struct BettiTable {
  std::map<std::pair<int, int>, long> entries;

  long at(int i, int j) const;
  // max{j - i : beta_{i,j} != 0}, -inf when empty.
  ExtendedInt regularity() const;
  int max_index() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

// Minimal graded free resolution 0 <- F_0 <- F_1 <- ... ; differentials[k]
// maps F_{k+1} to F_k, and F_0 = differentials[0].target() (or `base` when
// the module is free and there are no differentials).
struct MinimalResolution {
  FreeModule base;
  std::vector<GradedMatrix> differentials;

  // Projective dimension (number of nonzero maps); -1 for the zero module.
  int length() const;
  const FreeModule& module(int k) const;
  BettiTable betti() const;
};

MinimalResolution free_resolution(const GradedPresentation& p);

// Length of (S(-a))_n summed with signs over a resolution, i.e. the Hilbert
// function, and the matching Hilbert polynomial.
mpz_class hilbert_function(const MinimalResolution& res, int n);
RationalPolynomial hilbert_polynomial(const MinimalResolution& res);

// e_0..e_{d-1} with p = p_{(e_0..e_{d-1})}, d = deg p + 1 (empty for p = 0).
HilbertCoefficients hilbert_coefficients(const RationalPolynomial& p);

// A finitely generated graded module coker(p) together with its minimal
// resolution and the Hilbert data derived from it.
class AnalyzedModule {
 public:
  explicit AnalyzedModule(const GradedPresentation& p);

  const GradedPresentation& presentation() const { return presentation_; }
  const MinimalResolution& resolution() const { return resolution_; }
  const PolyRing& ring() const { return presentation_.ring(); }
  int num_variables() const { return ring().num_variables(); }

  bool is_zero() const { return presentation_.rows() == 0; }
  BettiTable betti() const { return resolution_.betti(); }
  // Regularity read off the Betti table; -inf for the zero module.
  ExtendedInt regularity() const { return betti().regularity(); }
  // Lowest generator degree (+inf for zero) and end of generation (-inf).
  ExtendedInt beg() const;
  ExtendedInt gendeg() const;
  // Largest nonzero degree when of finite length, otherwise +inf; -inf for 0.
  ExtendedInt end() const;
  // Krull dimension; -inf for the zero module.
  ExtendedInt dim() const;
  // Auslander-Buchsbaum; +inf for the zero module.
  ExtendedInt depth() const;

  mpz_class hilbert_function(int n) const { return cmreg::hilbert_function(resolution_, n); }
  const RationalPolynomial& hilbert_polynomial() const { return hilbert_polynomial_; }
  HilbertCoefficients hilbert_coefficients() const {
    return cmreg::hilbert_coefficients(hilbert_polynomial_);
  }
  // sup{n : HF(n) != p(n)}; -inf for the zero module.
  ExtendedInt postulation() const { return postulation_; }

 private:
  GradedPresentation presentation_;
  MinimalResolution resolution_;
  RationalPolynomial hilbert_polynomial_;
  ExtendedInt postulation_;
};

// K^i(M) = Ext^{d'-i}_S(M, S(-d')) from the dualized minimal resolution.
// Throws std::out_of_range unless 0 <= i <= d'.
GradedPresentation deficiency(const MinimalResolution& res, int i);

// Local-cohomology and ideal-transform data of a module, all obtained from
// the deficiency modules by graded local duality.
class CohomologyProfile {
 public:
  explicit CohomologyProfile(const GradedPresentation& p);

  const AnalyzedModule& module() const { return module_; }
  int num_variables() const { return module_.num_variables(); }
  // K^i(M) for 0 <= i <= d'.
  const AnalyzedModule& deficiency(int i) const;

  ExtendedInt dim() const { return module_.dim(); }
  ExtendedInt depth() const { return module_.depth(); }
  ExtendedInt beg() const { return module_.beg(); }
  ExtendedInt gendeg() const { return module_.gendeg(); }

  // a_i(M) = end(H^i) = -beg(K^i); -inf when H^i vanishes.
  ExtendedInt a(int i) const;
  // sup{a_i + i : i >= k}.
  ExtendedInt reg(int k = 0) const;

  // h^i_M(n) = length K^i_{-n}; zero for i outside [0, d'].
  mpz_class h(int i, int n) const;
  // d^i_M(n): length K^{i+1}_{-n} for i > 0; HF - h^0 + h^1 for i = 0.
  mpz_class d(int i, int n) const;
  // (d^0(0), d^1(-1), ..., d^{dim-1}(1-dim)); empty when dim <= 0.
  std::vector<mpz_class> diagonal() const;

  // q^i_M(x) = p_{K^{i+1}}(-x).
  RationalPolynomial q(int i) const;
  // nu^i by definition: inf{n : d^i(n) != q^i(n)}, +inf when none.
  ExtendedInt nu(int i) const;
  // -p(K^{i+1}).
  ExtendedInt nu_from_duality(int i) const;

  // Default window [beg - dim - 2, reg + 2]; [-2, 2] for the zero module.
  std::pair<int, int> default_window() const;

 private:
  AnalyzedModule module_;
  std::vector<AnalyzedModule> deficiency_;
};

}  // namespace cmreg
