#include <doctest.h>

#include "cmreg/homology.hpp"
#include "support/algebra.hpp"

using namespace cmreg;
using testing_support::poly;
using testing_support::quotient;
using testing_support::standard_monomial_count;

namespace {

ExtendedInt X(long v) { return ExtendedInt(v); }
const ExtendedInt kNegInf = ExtendedInt::neg_inf();
const ExtendedInt kPosInf = ExtendedInt::pos_inf();

GradedPresentation fixture_a() {
  return quotient(testing_support::ring({"x", "y"}), {"x^2", "x*y"});
}

GradedPresentation fixture_b() {
  return quotient(testing_support::ring({"x", "y", "z"}), {"x*y", "x*z"});
}

}  // namespace

TEST_CASE("resolutions and Betti tables") {
  MinimalResolution a = free_resolution(fixture_a());
  BettiTable ba = a.betti();
  CHECK(ba.entries == std::map<std::pair<int, int>, long>{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}});
  CHECK(ba.regularity() == X(1));
  CHECK(a.length() == 2);
  for (size_t k = 0; k + 1 < a.differentials.size(); ++k) {
    CHECK(compose(a.differentials[k], a.differentials[k + 1]).is_zero());
  }
  // Minimality: no unit entries.
  for (const auto& d : a.differentials) {
    for (int r = 0; r < d.rows(); ++r) {
      for (int c = 0; c < d.cols(); ++c) CHECK_FALSE(d.entry(r, c).is_unit());
    }
  }

  auto r2 = testing_support::ring({"x", "y"});
  MinimalResolution free = free_resolution(quotient(r2, {}));
  CHECK(free.length() == 0);
  CHECK(free.betti().regularity() == X(0));

  BettiTable koszul = free_resolution(quotient(r2, {"x", "y"})).betti();
  CHECK(koszul.entries == std::map<std::pair<int, int>, long>{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});
  CHECK(koszul.regularity() == X(0));

  // A non-minimal presentation is minimized first: (x, x, y^2 - y^2 + x*y).
  MinimalResolution redundant = free_resolution(quotient(r2, {"x", "x", "x*y"}));
  CHECK(redundant.betti() == free_resolution(quotient(r2, {"x"})).betti());

  // Zero module.
  MinimalResolution zero = free_resolution(quotient(r2, {"1"}));
  CHECK(zero.length() == -1);
  CHECK(zero.betti().regularity() == kNegInf);
}

TEST_CASE("Hilbert data") {
  auto r2 = testing_support::ring({"x", "y"});
  AnalyzedModule free(quotient(r2, {}));
  CHECK(free.hilbert_polynomial().to_string() == "x + 1");
  CHECK(free.postulation() == X(-2));
  CHECK(free.hilbert_coefficients().values == std::vector<mpz_class>{1, 0});

  AnalyzedModule a(fixture_a());
  CHECK(a.hilbert_polynomial().to_string() == "1");
  // HF(1) = 2 differs from p_M(1) = 1, so the last disagreement is at 1.
  CHECK(a.postulation() == X(1));
  CHECK(a.hilbert_coefficients().values == std::vector<mpz_class>{1});
  CHECK(a.dim() == X(1));
  CHECK(a.depth() == X(0));
  CHECK(a.beg() == X(0));
  CHECK(a.gendeg() == X(0));

  AnalyzedModule b(fixture_b());
  // Line plus the point (1:0:0): HF(n) = n + 2 for n >= 1.
  CHECK(b.hilbert_polynomial().to_string() == "x + 2");
  CHECK(b.hilbert_coefficients().values == std::vector<mpz_class>{1, -1});
  CHECK(b.postulation() == X(0));

  // Hilbert function against standard-monomial counting.
  for (const auto& p : {fixture_a(), fixture_b(),
                        quotient(r2, {"x^3", "x*y^2 - y^3"}),
                        quotient(testing_support::ring({"x", "y", "z", "w"}),
                                 {"x*z - y^2", "y*w - z^2", "x*w - y*z"})}) {
    AnalyzedModule m(p);
    for (int n = -2; n <= 7; ++n) {
      CHECK(m.hilbert_function(n) == standard_monomial_count(p, n));
    }
  }

  // Finite length: postulation is the end.
  AnalyzedModule art(quotient(r2, {"x^2", "y^3"}));
  CHECK(art.dim() == X(0));
  CHECK(art.end() == X(3));
  CHECK(art.postulation() == X(3));

  // Hilbert coefficients round-trip through p_e.
  HilbertCoefficients e{{2, -1, 3}};
  CHECK(hilbert_coefficients(hilbert_polynomial_from_coefficients(e)).values == e.values);
}

TEST_CASE("fixture A cohomology") {
  CohomologyProfile p(fixture_a());
  CHECK(p.dim() == X(1));
  CHECK(p.depth() == X(0));
  CHECK(p.a(0) == X(1));
  CHECK(p.a(1) == X(-1));
  CHECK(p.a(2) == kNegInf);
  CHECK(p.reg() == X(1));
  CHECK(p.reg(1) == X(0));
  CHECK(p.reg(2) == kNegInf);
  CHECK(p.reg() == p.module().regularity());
  CHECK(p.diagonal() == std::vector<mpz_class>{1});

  AnalyzedModule k1 = p.deficiency(1);
  CHECK(k1.regularity() == X(1));
  CHECK(k1.beg() == X(1));
  CHECK(k1.gendeg() == X(1));
  for (int n = -3; n <= 5; ++n) CHECK(k1.hilbert_function(n) == (n >= 1 ? 1 : 0));
  AnalyzedModule k0 = p.deficiency(0);
  CHECK(k0.regularity() == X(-1));
  for (int n = -3; n <= 3; ++n) CHECK(k0.hilbert_function(n) == (n == -1 ? 1 : 0));

  for (int n = -4; n <= 4; ++n) {
    CHECK(p.h(0, n) == (n == 1 ? 1 : 0));
    CHECK(p.h(1, n) == (n <= -1 ? 1 : 0));
    CHECK(p.d(0, n) == 1);
  }
  CHECK(p.q(0).to_string() == "1");
  CHECK(p.nu(0) == kPosInf);
  CHECK(p.nu_from_duality(0) == X(0));
  CHECK(p.default_window() == std::pair<int, int>{-3, 3});
}

TEST_CASE("fixture B cohomology") {
  CohomologyProfile p(fixture_b());
  CHECK(p.dim() == X(2));
  CHECK(p.depth() == X(1));
  CHECK(p.a(0) == kNegInf);
  CHECK(p.a(1) == X(0));
  CHECK(p.a(2) == X(-2));
  CHECK(p.reg() == X(1));
  CHECK(p.reg(2) == X(0));
  CHECK(p.diagonal() == std::vector<mpz_class>{2, 0});
  CHECK(p.d(0, 0) == 2);
  AnalyzedModule k2 = p.deficiency(2);
  CHECK(k2.regularity() == X(2));
  for (int n = -2; n <= 6; ++n) CHECK(k2.hilbert_function(n) == (n >= 2 ? n - 1 : 0));
  for (int n = -5; n <= 3; ++n) CHECK(p.h(2, n) == (n <= -2 ? -n - 1 : 0));
  CHECK(p.q(1).to_string() == "-x - 1");
  CHECK(p.nu(1) == X(0));
  CHECK(p.nu(2) == kPosInf);
}

TEST_CASE("free module cohomology") {
  for (int k = 1; k <= 3; ++k) {
    std::vector<std::string> vars;
    for (int v = 0; v < k; ++v) vars.push_back("x" + std::to_string(v));
    CohomologyProfile p(quotient(testing_support::ring(vars), {}));
    CHECK(p.dim() == X(k));
    CHECK(p.depth() == X(k));
    for (int i = 0; i < k; ++i) CHECK(p.a(i) == kNegInf);
    CHECK(p.a(k) == X(-k));
    CHECK(p.reg() == X(0));
  }
}

TEST_CASE("structural identities on a small corpus") {
  auto r3 = testing_support::ring({"x", "y", "z"});
  std::vector<GradedPresentation> corpus = {
      fixture_a(), fixture_b(), quotient(r3, {"x^2", "y^2", "z^2"}),
      quotient(r3, {"x*z - y^2", "x^3 - y*z^2"}), quotient(r3, {"x^2*y", "x*y^2", "z^3"}),
      quotient(r3, {"x*y", "y*z", "z*x"})};
  for (const auto& pres : corpus) {
    CohomologyProfile p(pres);
    CHECK(p.reg() == p.module().regularity());
    CHECK(p.module().gendeg() <= p.reg());
    GradedPresentation gamma = torsion_submodule(pres);
    auto [lo, hi] = p.default_window();
    for (int n = lo; n <= hi; ++n) {
      // Serre: HF - sum (-1)^j h^j = p_M and sum (-1)^i d^i = p_M.
      mpz_class alt = p.module().hilbert_function(n);
      mpz_class alt_d = 0;
      for (int j = 0; j <= p.num_variables(); ++j) {
        if (j % 2 == 0) alt -= p.h(j, n); else alt += p.h(j, n);
        if (j < p.num_variables()) {
          if (j % 2 == 0) alt_d += p.d(j, n); else alt_d -= p.d(j, n);
        }
      }
      CHECK(mpq_class(alt) == p.module().hilbert_polynomial()(n));
      CHECK(mpq_class(alt_d) == p.module().hilbert_polynomial()(n));
      CHECK(p.h(0, n) == standard_monomial_count(gamma, n));
    }
    for (int i = 0; i + 1 < p.num_variables(); ++i) {
      CHECK(p.q(i).degree() <= i);
    }
  }
}

TEST_CASE("deficiency rejects bad indices") {
  MinimalResolution a = free_resolution(fixture_a());
  CHECK_THROWS_AS(deficiency(a, -1), std::out_of_range);
  CHECK_THROWS_AS(deficiency(a, 3), std::out_of_range);
}
