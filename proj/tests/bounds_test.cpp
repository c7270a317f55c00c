#include <doctest.h>

#include <functional>

#include "cmreg/bounds.hpp"
#include "support/naive_bounds.hpp"

using cmreg::DiagonalVector;
using cmreg::HilbertCoefficients;

namespace {

DiagonalVector diag(std::vector<long> x, long y) {
  DiagonalVector out;
  for (long v : x) out.caps.emplace_back(v);
  out.base_degree = y;
  return out;
}

std::vector<mpz_class> caps(std::vector<long> x) {
  return std::vector<mpz_class>(x.begin(), x.end());
}

HilbertCoefficients coeffs(std::vector<long> e) {
  return HilbertCoefficients{std::vector<mpz_class>(e.begin(), e.end())};
}

mpz_class F(int i, std::vector<long> x, long y) {
  return cmreg::diagonal_regularity_bound(i, diag(std::move(x), y));
}

// Calls fn(x, y) for every x in {0..3}^d and y in {-3..3}.
void for_grid(int d, const std::function<void(const std::vector<long>&, long)>& fn) {
  std::vector<long> x(d, 0);
  while (true) {
    for (long y = -3; y <= 3; ++y) fn(x, y);
    int k = 0;
    while (k < d && x[k] == 3) x[k++] = 0;
    if (k == d) return;
    ++x[k];
  }
}

}  // namespace

TEST_CASE("truncated binomial convention") {
  CHECK(cmreg::truncated_binomial(5, 2) == 10);
  CHECK(cmreg::truncated_binomial(1, 2) == 0);
  CHECK(cmreg::truncated_binomial(-1, 0) == 1);
  CHECK(cmreg::truncated_binomial(-7, 0) == 1);
  CHECK(cmreg::truncated_binomial(4, -1) == 0);
  CHECK(cmreg::truncated_binomial(-3, 2) == 0);
  // large top with small complement
  mpz_class big("1000000000000000000000");
  CHECK(cmreg::truncated_binomial(big + 1, big) == big + 1);
}

TEST_CASE("binomial polynomial") {
  auto p = cmreg::binomial_polynomial(1, 1);
  CHECK(p.to_string() == "x + 1");
  CHECK(p(-1) == 0);
  auto q = cmreg::binomial_polynomial(2, 2);
  CHECK(q(-3) == 1);
  CHECK(q(0) == 1);
  CHECK(q(3) == 10);
  auto one = cmreg::binomial_polynomial(0, 0);
  CHECK(one == cmreg::RationalPolynomial::constant(1));
  CHECK_THROWS_AS(cmreg::binomial_polynomial(0, -1), std::invalid_argument);
}

TEST_CASE("diagonal regularity bound: hand-evaluated values") {
  CHECK(F(0, {1, 2, 3}, 5) == -5);
  CHECK(F(1, {1}, 0) == 1);
  CHECK(F(1, {3, 5}, 0) == 4);
  CHECK(F(2, {1, 0}, 0) == 4);
  CHECK(F(2, {2, 0}, 0) == 5);
  CHECK(F(2, {0, 0, 0}, 0) == 3);
  CHECK(F(3, {0, 0, 0}, 0) == 5);
  CHECK(F(0, {}, 4) == -4);
}

TEST_CASE("diagonal regularity bound rejects out-of-range index") {
  CHECK_THROWS_AS(F(-1, {1, 2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(F(3, {1, 2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(F(1, {-1, 2}, 0), std::invalid_argument);
}

TEST_CASE("memoized evaluation agrees with the naive oracle (d <= 4)") {
  cmreg::BoundEvaluator evaluator;
  for (int d = 1; d <= 4; ++d) {
    for_grid(d, [&](const std::vector<long>& x, long y) {
      std::vector<naive::i64> nx(x.begin(), x.end());
      for (int i = 0; i <= d; ++i) {
        REQUIRE(evaluator.evaluate(i, diag(x, y)) == naive::F(i, nx, y));
      }
    });
  }
  CHECK(evaluator.memo_size() > 0);
}

TEST_CASE("recursion trace satisfies min{m, t} >= i") {
  for (int d = 3; d <= 4; ++d) {
    for_grid(d, [&](const std::vector<long>& x, long y) {
      for (int i = 2; i < d; ++i) {
        cmreg::RecursionTrace trace;
        auto v = cmreg::BoundEvaluator::evaluate_traced(i, diag(x, y), trace);
        REQUIRE(v == F(i, x, y));
        REQUIRE(!trace.empty());
        for (const auto& step : trace) {
          REQUIRE(step.m >= step.i);
          REQUIRE(step.t >= step.i);
          REQUIRE(step.t == (step.m < step.n ? step.n : step.m));
          REQUIRE(static_cast<int>(step.deltas.size()) == step.i);
        }
      }
    });
  }
  cmreg::RecursionTrace none;
  cmreg::BoundEvaluator::evaluate_traced(1, diag({1, 2, 3}, 0), none);
  CHECK(none.empty());
}

TEST_CASE("reg2 bound") {
  CHECK(cmreg::reg2_regularity_bound(0, 3, 7, 4, 9) == -4);
  CHECK(cmreg::reg2_regularity_bound(1, 1, 5, 0, 3) == 1);
  CHECK(cmreg::reg2_regularity_bound(1, 2, 1, 0, 1) == 2);
  CHECK_THROWS_AS(cmreg::reg2_regularity_bound(3, 2, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("postulation lower bound") {
  CHECK(cmreg::postulation_lower_bound(0, caps({4})) == -1);
  CHECK(cmreg::postulation_lower_bound(1, caps({2, 0})) == -5);
  CHECK(cmreg::postulation_lower_bound(1, caps({0, 0, 0})) == -3);
  CHECK_THROWS_AS(cmreg::postulation_lower_bound(2, caps({0, 0})),
                  std::invalid_argument);
}

TEST_CASE("Hilbert polynomial from coefficients") {
  for (long e0 = -3; e0 <= 3; ++e0) {
    for (long e1 = -3; e1 <= 3; ++e1) {
      auto p = cmreg::hilbert_polynomial_from_coefficients(coeffs({e0, e1}));
      auto expected = cmreg::RationalPolynomial(std::vector<mpq_class>{e0 - e1, e0});
      CHECK(p == expected);
    }
  }
  auto p = cmreg::hilbert_polynomial_from_coefficients(coeffs({1, 0}));
  CHECK(p.to_string() == "x + 1");
  auto q = cmreg::hilbert_polynomial_from_coefficients(coeffs({0, 2, 0}));
  CHECK(q.to_string() == "-2*x - 2");
  CHECK(q.degree() == 1);
  CHECK(cmreg::hilbert_polynomial_from_coefficients(coeffs({0, 0, 0})).is_zero());
}

TEST_CASE("Hilbert polynomial degree law") {
  for (int d = 1; d <= 4; ++d) {
    std::vector<long> e(d, -3);
    while (true) {
      int first = -1;
      for (int k = 0; k < d; ++k) {
        if (e[k] != 0) {
          first = k;
          break;
        }
      }
      if (first >= 0) {
        auto p = cmreg::hilbert_polynomial_from_coefficients(coeffs(e));
        REQUIRE(p.degree() == d - 1 - first);
      }
      int k = 0;
      while (k < d && e[k] == 3) e[k++] = -3;
      if (k == d) break;
      ++e[k];
    }
  }
}

TEST_CASE("Hilbert-coefficient bound") {
  for (long e0 = -3; e0 <= 3; ++e0) {
    for (long e1 = -3; e1 <= 3; ++e1) {
      for (long m = 1; m <= 3; ++m) {
        CHECK(cmreg::hilbert_coefficient_bound(m, 1, coeffs({e0, e1})) == 1 + e1);
      }
    }
  }
  CHECK(cmreg::hilbert_coefficient_bound(1, 1, coeffs({1, -1})) == 0);
  CHECK(cmreg::hilbert_coefficient_bound(2, 2, coeffs({2, 1, 0})) == 5);
  CHECK_THROWS_AS(cmreg::hilbert_coefficient_bound(1, 1, coeffs({1})),
                  std::invalid_argument);
}

TEST_CASE("deficiency length bound") {
  for (long a = 0; a <= 3; ++a) {
    for (long b = 0; b <= 3; ++b) {
      CHECK(cmreg::deficiency_length_bound(1, 1, caps({a, b})) == b);
      CHECK(cmreg::deficiency_length_bound(1, 2, caps({a, b})) == a + 2 * b);
    }
  }
  CHECK(cmreg::deficiency_length_bound(1, 2, caps({2, 0})) == 2);
  // n = i uses binom(-1, 0) = 1 on the j = i term
  CHECK(cmreg::deficiency_length_bound(0, 0, caps({7})) == 7);
  CHECK_THROWS_AS(cmreg::deficiency_length_bound(2, 1, caps({0, 0, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(cmreg::deficiency_length_bound(1, 2, caps({0})),
                  std::invalid_argument);
}

TEST_CASE("diagonal cohomology bound") {
  for (long a = 0; a <= 3; ++a) {
    for (long b = 0; b <= 3; ++b) {
      CHECK(cmreg::diagonal_cohomology_bound(1, -1, caps({a, b})) == b);
    }
    CHECK(cmreg::diagonal_cohomology_bound(0, -2, caps({a})) == a);
  }
  CHECK(cmreg::diagonal_cohomology_bound(0, 0, caps({5})) == 5);
  CHECK_THROWS_AS(cmreg::diagonal_cohomology_bound(1, 0, caps({0, 0})),
                  std::invalid_argument);
}

TEST_CASE("length bounds are monotone in each cap and nonnegative") {
  for (int i = 0; i <= 3; ++i) {
    std::vector<long> x(i + 1, 0);
    while (true) {
      for (long n = i; n <= i + 4; ++n) {
        auto base = cmreg::deficiency_length_bound(i, n, caps(x));
        auto diag_base = cmreg::diagonal_cohomology_bound(i, -n, caps(x));
        REQUIRE(base >= 0);
        REQUIRE(diag_base >= 0);
        for (int k = 0; k <= i; ++k) {
          auto y = x;
          ++y[k];
          REQUIRE(cmreg::deficiency_length_bound(i, n, caps(y)) >= base);
          REQUIRE(cmreg::diagonal_cohomology_bound(i, -n, caps(y)) >= diag_base);
        }
      }
      int k = 0;
      while (k <= i && x[k] == 2) x[k++] = 0;
      if (k > i) break;
      ++x[k];
    }
  }
}

TEST_CASE("ideal deficiency bound") {
  CHECK(cmreg::ideal_deficiency_bound(1, 2, 2, 1, 1) == 2);
  CHECK(cmreg::ideal_deficiency_bound(0, 2, 3, 2, 1) == 0);
  CHECK(cmreg::ideal_deficiency_bound(1, 2, 2, 1, 2) == 3);
}

TEST_CASE("submodule generating-degree bound") {
  auto a = cmreg::submodule_gendeg_bound(1, 2, 1, 1, 0, 1);
  CHECK(a.rho == 27);
  CHECK(a.pi == 378);
  CHECK(a.delta == 379);
  // (1 + 2*1 - 0)^(2^1 - 1) = 3, binom(3, 2) = 3, G^0 = -b
  auto b = cmreg::submodule_gendeg_bound(0, 1, 1, 1, 0, 1);
  CHECK(b.rho == 3);
  CHECK(b.pi == 3);
  CHECK(b.delta == 0);
  auto c = cmreg::submodule_gendeg_bound(1, 2, 1, 1, 1, 2);
  CHECK(c.rho == 27);
  CHECK(c.pi == 378);
  CHECK(c.delta == cmreg::reg2_regularity_bound(1, 2, 378, 1, 28));
  CHECK(c.delta == 378);
  CHECK_THROWS_AS(cmreg::submodule_gendeg_bound(1, 2, 1, 1, 2, 2),
                  std::invalid_argument);
  // doubly exponential growth stays exact
  auto big = cmreg::submodule_gendeg_bound(2, 4, 3, 1, 0, 5);
  CHECK(big.rho == mpz_class("205891132094649"));
}

TEST_CASE("presentation bound resolves r by the max rule") {
  CHECK(cmreg::presentation_bound(1, 2, 1, 1, 0, 0, 0) == 379);
  CHECK(cmreg::presentation_bound(1, 2, 1, 1, 0, 0, 2) ==
        cmreg::submodule_gendeg_bound(1, 2, 1, 1, 0, 2).delta);
  CHECK(cmreg::presentation_bound(1, 2, 1, 1, 0, 3, 0) ==
        cmreg::submodule_gendeg_bound(1, 2, 1, 1, 0, 4).delta);
}

TEST_CASE("ideal generating-degree bound") {
  auto a = cmreg::ideal_gendeg_bound(2, 2, 2, 1);
  CHECK(a.r == 16);
  CHECK(a.gamma == 139);
  auto b = cmreg::ideal_gendeg_bound(2, 2, 1, 1);
  CHECK(b.r == 4);
  CHECK(b.gamma == 13);
  auto c = cmreg::ideal_gendeg_bound(2, 2, 1, 2);
  CHECK(c.r == 9);
  CHECK(c.gamma == cmreg::reg2_regularity_bound(2, 2, 90, 0, 9));
  CHECK(c.gamma == 93);
  CHECK_THROWS_AS(cmreg::ideal_gendeg_bound(1, 2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(cmreg::ideal_gendeg_bound(2, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("Mumford-type parameter") {
  auto a = cmreg::mumford_parameter(1, 2, 1, 1, coeffs({1}));
  CHECK(a.arguments == caps({1, -1}));
  CHECK(a.t == 0);
  CHECK(a.reg1_offset == 0);
  CHECK(a.reg2_offset == 1);
  auto b = cmreg::mumford_parameter(3, 2, 1, 0, coeffs({2, 5}));
  CHECK(b.arguments == caps({1, 5}));
  auto c = cmreg::mumford_parameter(1, 2, 1, 2, coeffs({}));
  CHECK(c.arguments == caps({1, 0}));
  CHECK(c.t == 1);
  CHECK_THROWS_AS(cmreg::mumford_parameter(1, 2, 1, 3, coeffs({})),
                  std::invalid_argument);
}

TEST_CASE("Mumford-type deficiency bounds") {
  CHECK(cmreg::mumford_ideal_bound(1, 2, 0) == 2);
  CHECK(cmreg::mumford_submodule_bound(1, 2, 1, 0, 0, 0) == 2);
  CHECK(cmreg::mumford_ideal_bound(0, 2, 5) == 0);
}
