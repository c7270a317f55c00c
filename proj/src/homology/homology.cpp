#include "cmreg/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmreg {

namespace {

// Monomials of degree m in k variables.
mpz_class monomial_count(int k, long m) {
  if (m < 0) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m + k - 1),
               static_cast<unsigned long>(k - 1));
  return out;
}

// Hom(-, S(-d')) on a free module: S(-a) becomes S(a - d').
FreeModule dual(const FreeModule& f, int dprime) {
  FreeModule out{f.ring, {}};
  for (int a : f.twists) out.twists.push_back(dprime - a);
  return out;
}

GradedMatrix dual(const GradedMatrix& m, int dprime) {
  const int rows = m.cols();
  const int cols = m.rows();
  std::vector<Polynomial> entries(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) entries[r * cols + c] = m.entry(c, r);
  }
  return GradedMatrix(dual(m.source(), dprime), dual(m.target(), dprime),
                      std::move(entries));
}

GradedPresentation zero_module(const RingPtr& ring) {
  return GradedMatrix::zero(FreeModule{ring, {}}, FreeModule{ring, {}});
}

}  // namespace

long BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

ExtendedInt BettiTable::regularity() const {
  ExtendedInt out = ExtendedInt::neg_inf();
  for (const auto& [key, count] : entries) {
    if (count != 0) out = max(out, ExtendedInt(key.second - key.first));
  }
  return out;
}

int BettiTable::max_index() const {
  int out = -1;
  for (const auto& [key, count] : entries) {
    if (count != 0) out = std::max(out, key.first);
  }
  return out;
}

int MinimalResolution::length() const {
  if (base.rank() == 0) return -1;
  return static_cast<int>(differentials.size());
}

const FreeModule& MinimalResolution::module(int k) const {
  if (k == 0) return base;
  return differentials.at(k - 1).source();
}

BettiTable MinimalResolution::betti() const {
  BettiTable out;
  for (int k = 0; k <= length(); ++k) {
    for (int a : module(k).twists) ++out.entries[{k, a}];
  }
  return out;
}

MinimalResolution free_resolution(const GradedPresentation& p) {
  MinimalResolution res;
  GradedMatrix d = minimize_presentation(p);
  res.base = d.target();
  while (d.cols() > 0) {
    res.differentials.push_back(d);
    d = syzygy_kernel(d);
  }
  return res;
}

mpz_class hilbert_function(const MinimalResolution& res, int n) {
  const int k = res.base.ring->num_variables();
  mpz_class out = 0;
  for (int i = 0; i <= res.length(); ++i) {
    for (int a : res.module(i).twists) {
      mpz_class c = monomial_count(k, static_cast<long>(n) - a);
      if (i % 2 == 0) out += c; else out -= c;
    }
  }
  return out;
}

RationalPolynomial hilbert_polynomial(const MinimalResolution& res) {
  const int k = res.base.ring->num_variables();
  RationalPolynomial out;
  for (int i = 0; i <= res.length(); ++i) {
    for (int a : res.module(i).twists) {
      RationalPolynomial b = binomial_polynomial(k - 1 - a, k - 1);
      if (i % 2 == 0) out += b; else out -= b;
    }
  }
  return out;
}

HilbertCoefficients hilbert_coefficients(const RationalPolynomial& p) {
  HilbertCoefficients out;
  if (p.is_zero()) return out;
  const int d = p.degree() + 1;
  RationalPolynomial rest = p;
  for (int i = 0; i < d; ++i) {
    const int k = d - 1 - i;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    mpq_class e = rest.coefficient(k) * mpq_class(fact);
    if (i % 2 == 1) e = -e;
    if (e.get_den() != 1) throw std::logic_error("Hilbert polynomial has non-integer coefficient");
    out.values.push_back(e.get_num());
    RationalPolynomial term = binomial_polynomial(k, k) * e;
    if (i % 2 == 0) rest -= term; else rest += term;
  }
  if (!rest.is_zero()) throw std::logic_error("Hilbert coefficient extraction left a remainder");
  return out;
}

AnalyzedModule::AnalyzedModule(const GradedPresentation& p)
    : resolution_(free_resolution(p)) {
  presentation_ = resolution_.differentials.empty()
                      ? GradedMatrix::zero(resolution_.base, FreeModule{p.ring_ptr(), {}})
                      : resolution_.differentials.front();
  hilbert_polynomial_ = cmreg::hilbert_polynomial(resolution_);
  if (is_zero()) {
    postulation_ = ExtendedInt::neg_inf();
    return;
  }
  // HF and p agree above reg; below beg the HF vanishes while a nonzero p
  // has at most d' - 1 roots, so a disagreement lies in [beg - d' - 1, reg].
  const long top = regularity().to_int64();
  const long bottom = beg().to_int64() - num_variables() - 1;
  postulation_ = ExtendedInt::neg_inf();
  for (long n = top; n >= bottom; --n) {
    if (mpq_class(cmreg::hilbert_function(resolution_, static_cast<int>(n))) !=
        hilbert_polynomial_(n)) {
      postulation_ = ExtendedInt(n);
      break;
    }
  }
}

ExtendedInt AnalyzedModule::beg() const {
  if (is_zero()) return ExtendedInt::pos_inf();
  const auto& t = resolution_.base.twists;
  return ExtendedInt(*std::min_element(t.begin(), t.end()));
}

ExtendedInt AnalyzedModule::gendeg() const {
  if (is_zero()) return ExtendedInt::neg_inf();
  const auto& t = resolution_.base.twists;
  return ExtendedInt(*std::max_element(t.begin(), t.end()));
}

ExtendedInt AnalyzedModule::end() const {
  if (is_zero()) return ExtendedInt::neg_inf();
  if (!hilbert_polynomial_.is_zero()) return ExtendedInt::pos_inf();
  return postulation_;
}

ExtendedInt AnalyzedModule::dim() const {
  if (is_zero()) return ExtendedInt::neg_inf();
  return ExtendedInt(hilbert_polynomial_.degree() + 1);
}

ExtendedInt AnalyzedModule::depth() const {
  if (is_zero()) return ExtendedInt::pos_inf();
  return ExtendedInt(num_variables() - resolution_.length());
}

GradedPresentation deficiency(const MinimalResolution& res, int i) {
  const RingPtr& ring = res.base.ring;
  const int dprime = ring->num_variables();
  if (i < 0 || i > dprime) throw std::out_of_range("deficiency index out of range");
  const int k = dprime - i;
  const int len = res.length();
  if (k > len) return zero_module(ring);

  const FreeModule fk = dual(res.module(k), dprime);
  GradedMatrix cycles = k + 1 > len
                            ? GradedMatrix::identity(fk)
                            : syzygy_kernel(dual(res.differentials[k], dprime));
  GradedMatrix boundaries = k == 0
                                ? GradedMatrix::zero(fk, FreeModule{ring, {}})
                                : dual(res.differentials[k - 1], dprime);
  return subquotient_presentation(cycles, boundaries);
}

CohomologyProfile::CohomologyProfile(const GradedPresentation& p) : module_(p) {
  for (int i = 0; i <= num_variables(); ++i) {
    deficiency_.emplace_back(cmreg::deficiency(module_.resolution(), i));
  }
}

const AnalyzedModule& CohomologyProfile::deficiency(int i) const {
  return deficiency_.at(i);
}

ExtendedInt CohomologyProfile::a(int i) const {
  if (i < 0 || i > num_variables()) return ExtendedInt::neg_inf();
  const AnalyzedModule& k = deficiency_[i];
  if (k.is_zero()) return ExtendedInt::neg_inf();
  return -k.beg();
}

ExtendedInt CohomologyProfile::reg(int k) const {
  ExtendedInt out = ExtendedInt::neg_inf();
  for (int i = std::max(k, 0); i <= num_variables(); ++i) {
    out = max(out, a(i) + ExtendedInt(i));
  }
  return out;
}

mpz_class CohomologyProfile::h(int i, int n) const {
  if (i < 0 || i > num_variables()) return 0;
  return deficiency_[i].hilbert_function(-n);
}

mpz_class CohomologyProfile::d(int i, int n) const {
  if (i < 0) throw std::out_of_range("negative ideal-transform index");
  if (i > 0) return h(i + 1, n);
  return module_.hilbert_function(n) - h(0, n) + h(1, n);
}

std::vector<mpz_class> CohomologyProfile::diagonal() const {
  std::vector<mpz_class> out;
  const ExtendedInt dm = dim();
  if (!dm.is_finite()) return out;
  for (long i = 0; i < dm.to_int64(); ++i) out.push_back(d(static_cast<int>(i), static_cast<int>(-i)));
  return out;
}

RationalPolynomial CohomologyProfile::q(int i) const {
  if (i < 0) throw std::out_of_range("negative index");
  if (i + 1 > num_variables()) return {};
  return deficiency_[i + 1].hilbert_polynomial().compose_affine(-1, 0);
}

ExtendedInt CohomologyProfile::nu_from_duality(int i) const {
  if (i < 0) throw std::out_of_range("negative index");
  if (i + 1 > num_variables()) return ExtendedInt::pos_inf();
  return -deficiency_[i + 1].postulation();
}

ExtendedInt CohomologyProfile::nu(int i) const {
  if (i > 0) return nu_from_duality(i);
  if (i < 0) throw std::out_of_range("negative index");
  if (module_.is_zero()) return ExtendedInt::pos_inf();
  // Below lo the functions agree (HF and h^0 vanish and h^1 is polynomial);
  // above hi both are polynomials, p_M and q^0.
  const ExtendedInt lo_e = min(beg(), nu_from_duality(0)) - ExtendedInt(1);
  const ExtendedInt hi_e =
      max(max(module_.postulation(), a(0)), a(1)) + ExtendedInt(1);
  const long lo = lo_e.to_int64();
  const long hi = std::max(hi_e.is_finite() ? hi_e.to_int64() : lo, lo);
  const RationalPolynomial q0 = q(0);
  for (long n = lo; n <= hi; ++n) {
    if (mpq_class(d(0, static_cast<int>(n))) != q0(n)) return ExtendedInt(n);
  }
  const RationalPolynomial& p = module_.hilbert_polynomial();
  if (p == q0) return ExtendedInt::pos_inf();
  for (long n = hi + 1;; ++n) {
    if (p(n) != q0(n)) return ExtendedInt(n);
  }
}

std::pair<int, int> CohomologyProfile::default_window() const {
  if (module_.is_zero()) return {-2, 2};
  const long lo = beg().to_int64() - dim().to_int64() - 2;
  const long hi = reg().to_int64() + 2;
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

}  // namespace cmreg
