#include "vir/exact_linalg.hpp"
#include "vir/verma.hpp"

#include <doctest.h>

using namespace vir;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

RationalPBW monomial(std::vector<int> parts) { return RationalPBW::monomial(Partition(std::move(parts))); }

// Number of partitions of n by the standard dynamic program.
long partition_count(int n) {
  std::vector<long> ways(static_cast<std::size_t>(n + 1), 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int total = part; total <= n; ++total) ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
  return ways[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_SUITE("verma") {
  TEST_CASE("PBW basis") {
    REQUIRE(pbw_basis(0).size() == 1);
    CHECK(pbw_basis(0)[0].empty());
    CHECK(pbw_basis(2) == std::vector<Partition>{Partition({2}), Partition({1, 1})});
    for (int n = 0; n <= 10; ++n) CHECK(static_cast<long>(pbw_basis(n).size()) == partition_count(n));
  }

  TEST_CASE("raising operators") {
    const VermaParams<Rational> params{r(3, 7), r(2, 5)};
    const auto& [c, h] = params;
    CHECK(apply_raising(params, 1, monomial({1})) == (2 * h) * monomial({}));
    CHECK(apply_raising(params, 2, monomial({2})) == (4 * h + c / 2) * monomial({}));
    CHECK(apply_raising(params, 3, monomial({1})).is_zero());
  }

  TEST_CASE("Gram matrices") {
    const VermaParams<Rational> params{r(3, 7), r(2, 5)};
    const auto& [c, h] = params;
    CHECK(gram_matrix(params, 0) == RationalMatrix::Constant(1, 1, Rational(1)));
    CHECK(gram_matrix(params, 1) == RationalMatrix::Constant(1, 1, 2 * h));
    RationalMatrix level2(2, 2);
    level2 << 4 * h + c / 2, 6 * h, 6 * h, 8 * h * h + 4 * h;
    CHECK(gram_matrix(params, 2) == level2);
    const RationalMatrix g4 = gram_matrix(params, 4);
    CHECK(g4 == g4.transpose());

    const VermaParams<double> numeric{3.0 / 7, 2.0 / 5};
    const Eigen::MatrixXd gd = gram_matrix(numeric, 3);
    const RationalMatrix ge = gram_matrix(params, 3);
    for (Eigen::Index i = 0; i < gd.rows(); ++i)
      for (Eigen::Index k = 0; k < gd.cols(); ++k) CHECK(gd(i, k) == doctest::Approx(to_double(ge(i, k))));
  }

  TEST_CASE("Kac determinant") {
    CHECK(kac_determinant({r(1, 2), r(1, 2)}, 2) == 0);
    CHECK(gram_matrix(VermaParams<Rational>{r(1, 2), r(1, 2)}, 2) ==
          (RationalMatrix(2, 2) << r(9, 4), 3, 3, 4).finished());
    for (int level = 0; level <= 4; ++level) CHECK(kac_determinant({r(1, 2), r(1, 3)}, level) != 0);
    CHECK(kac_determinant({r(5, 3), r(-2, 9)}, 0) == 1);
    // Level-2 determinant factorizes as 2h (16h^2 + 2h(c - 5) + c).
    const Rational c = r(3, 7), h = r(2, 5);
    CHECK(kac_determinant({c, h}, 2) == 2 * h * (16 * h * h + 2 * h * (c - 5) + c));
    CHECK_THROWS_AS(kac_determinant({c, h}, -1), Error);
  }

  TEST_CASE("singular vectors") {
    const MinimalModel ising(3, 4);
    const auto eps = singular_vectors(ising, {2, 1}, 4);
    // (2,1) ~ (1,3) is degenerate at levels 2 and 3.
    REQUIRE(eps.size() == 2);
    CHECK(eps[0].level == 2);
    CHECK(eps[1].level == 3);
    CHECK(verify_singular(verma_params(ising, {2, 1}), eps[1].vector));
    CHECK(eps[0].vector == monomial({2}) + r(-3, 4) * monomial({1, 1}));
    CHECK(to_string(eps[0].vector) == "L(-2) - 3/4 L(-1)^2");

    const auto vac = singular_vectors(ising, {1, 1}, 1);
    REQUIRE(vac.size() == 1);
    CHECK(vac[0].vector == monomial({1}));

    const auto yl = singular_vectors(MinimalModel(2, 5), {1, 2}, 4);
    REQUIRE(!yl.empty());
    CHECK(yl[0].level == 2);
    CHECK(verify_singular(verma_params(MinimalModel(2, 5), {1, 2}), yl[0].vector));
    CHECK(null_vector(ising, {2, 2}).vector == monomial({2}) + r(-4, 3) * monomial({1, 1}));
  }

  TEST_CASE("verify_singular") {
    const VermaParams<Rational> params{r(1, 2), r(1, 2)};
    CHECK(verify_singular(params, monomial({2}) + r(-3, 4) * monomial({1, 1})));
    CHECK_FALSE(verify_singular(params, monomial({2})));
    CHECK(verify_singular({r(7, 3), 0}, monomial({1})));
  }

  TEST_CASE("exact linear algebra") {
    RationalMatrix a(3, 3);
    a << 2, 1, 1, 4, 3, 3, 8, 7, 9;
    CHECK(determinant(a) == 4);
    RationalMatrix singular(2, 3);
    singular << 1, 2, 3, 2, 4, 6;
    CHECK(rank(singular) == 1);
    const RationalMatrix kernel = nullspace(singular);
    CHECK(kernel.cols() == 2);
    CHECK(RationalMatrix(singular * kernel) == RationalMatrix::Zero(2, 2));
  }
}
