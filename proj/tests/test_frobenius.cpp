#include "vir/frobenius.hpp"

#include <doctest.h>

#include <cmath>

using namespace vir;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

const MinimalModel kIsing(3, 4);
const KacLabel kSigma{1, 2}, kEps{1, 3}, kVac{1, 1};

CorrelatorSpec sigma4() { return {kIsing, kSigma, kSigma, kSigma, kSigma}; }

// Closed-form solutions of the four-spin equation in the a0 = 1 normalization.
double ising_identity(double z) { return std::pow(z * (1 - z), -0.125) * std::sqrt((1 + std::sqrt(1 - z)) / 2); }
double ising_energy(double z) { return 2 * std::pow(z * (1 - z), -0.125) * std::sqrt((1 - std::sqrt(1 - z)) / 2); }

// x g' - rho g = 0
ODESpec euler_first_order(const Rational& rho) {
  return ODESpec({RationalPolynomial(-rho), RationalPolynomial::monomial(1)});
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("frobenius") {
  TEST_CASE("monomial solution") {
    const auto s = frobenius_expand(euler_first_order(r(2, 3)), SingularPoint::Zero, r(2, 3), 10);
    CHECK(s.order() == 10);
    CHECK(s.coefficients[0] == 1);
    for (int k = 1; k <= 10; ++k) CHECK(s.coefficients[static_cast<std::size_t>(k)] == 0);
    const auto at_base = evaluate_series(s, 0.0);
    CHECK(at_base.value == Complex(0));

    const auto constant = frobenius_expand(euler_first_order(0), SingularPoint::Zero, 0, 10);
    CHECK(evaluate_series(constant, 0.0).value == Complex(1));
    const auto half = evaluate_series(constant, 0.5);
    CHECK(half.value == Complex(1));
    CHECK(half.tail_bound == 0);

    const auto negative = frobenius_expand(euler_first_order(r(-1, 2)), SingularPoint::Zero, r(-1, 2), 4);
    CHECK_THROWS_AS(evaluate_series(negative, 0.0), Error);
  }

  TEST_CASE("errors") {
    const auto ode = product_ode(sigma4());
    auto kind_of = [](auto&& f) {
      try {
        f();
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::Internal;
    };
    CHECK(kind_of([&] { frobenius_expand(ode, SingularPoint::Zero, r(1, 3), 5); }) == ErrorKind::Domain);
    CHECK(kind_of([&] { frobenius_expand(ode, SingularPoint::Infinity, 0, 5); }) == ErrorKind::Domain);
    const auto s = frobenius_expand(ode, SingularPoint::Zero, 0, 20);
    CHECK(kind_of([&] { evaluate_series(s, 1.5); }) == ErrorKind::Domain);

    // Bessel equation of order 1: the smaller root needs a logarithm.
    const ODESpec bessel({RationalPolynomial(std::vector<Rational>{-1, 0, 1}), RationalPolynomial::monomial(1),
                          RationalPolynomial::monomial(2)});
    CHECK(kind_of([&] { frobenius_expand(bessel, SingularPoint::Zero, -1, 10); }) == ErrorKind::Logarithmic);
    CHECK_NOTHROW(frobenius_expand(bessel, SingularPoint::Zero, 1, 10));
    const ODESpec double_root({RationalPolynomial(), RationalPolynomial::monomial(1), RationalPolynomial::monomial(2)});
    CHECK(kind_of([&] { local_basis(double_root, SingularPoint::Zero, 5); }) == ErrorKind::Logarithmic);
  }

  TEST_CASE("exact coefficients") {
    const auto ode = product_ode(sigma4());
    const auto s = frobenius_expand(ode, SingularPoint::Zero, 0, 6);
    // z^(1/8) F_identity = (1 - z)^(-1/8) sqrt((1 + sqrt(1 - z)) / 2) = 1 + z^2/64 + ...
    CHECK(s.coefficients[1] == 0);
    CHECK(s.coefficients[2] == r(1, 64));
    for (std::size_t k = 0; k < s.coefficients.size(); ++k) CHECK(s.numeric[k] == to_double(s.coefficients[k]));
  }

  TEST_CASE("residual support") {
    const auto ode = product_ode(sigma4());
    for (const auto& rho : indicial_exponents(ode, SingularPoint::Zero)) {
      const auto s = frobenius_expand(ode, SingularPoint::Zero, rho, 50);
      const auto residual = series_residual(ode, s);
      REQUIRE(!residual.empty());
      CHECK(residual.begin()->first > 48);
    }
    const auto at_one = frobenius_expand(ode, SingularPoint::One, r(-1, 8), 30);
    const auto residual = series_residual(ode, at_one);
    CHECK(residual.begin()->first > 28);
  }

  TEST_CASE("Ising blocks against closed forms") {
    for (double z : {0.1, 0.3, 0.5}) {
      CAPTURE(z);
      CHECK(rel(block(sigma4(), kVac, z).value, ising_identity(z)) < 1e-10);
      CHECK(rel(block(sigma4(), kEps, z).value, ising_energy(z)) < 1e-10);
      CHECK(rel(block(sigma4(), {2, 1}, z).value, ising_energy(z)) < 1e-10);
    }
    CHECK(rel(block(sigma4(), kVac, 0.3, 40).value, block(sigma4(), kVac, 0.3, 60).value) < 1e-12);
    const double tiny = 1e-6;
    CHECK(std::abs(block(sigma4(), kVac, tiny).value * std::pow(tiny, 0.125) - 1.0) < 1e-6);
    CHECK(std::abs(block(sigma4(), kEps, tiny).value * std::pow(tiny, -0.375) - 1.0) < 1e-6);
  }

  TEST_CASE("local basis at one and derivatives") {
    const auto ode = product_ode(sigma4());
    const auto basis = local_basis(ode, SingularPoint::One, 60);
    REQUIRE(basis.solutions.size() == 2);
    CHECK(basis.solutions[0].exponent == r(-1, 8));
    CHECK(basis.solutions[1].exponent == r(3, 8));
    // On the anchored function g = z^(1/8) F, the solution at 1 with exponent
    // -1/8 is z^(1/8) F_identity(1 - z).
    for (double z : {0.4, 0.6, 0.8}) {
      const double expected = std::pow(z, 0.125) * ising_identity(1 - z);
      CHECK(rel(evaluate_series(basis.solutions[0], z).value, expected) < 1e-10);
    }
    const auto s = basis.solutions[1];
    const double z = 0.6, h = 1e-5;
    const auto jet = evaluate_jet(s, z, 2);
    const Complex fd = (evaluate_series(s, z + h).value - evaluate_series(s, z - h).value) / (2 * h);
    CHECK(std::abs(jet[1] - fd) < 1e-6);
    CHECK(std::abs(wronskian(basis, z)) > 0);
  }

  TEST_CASE("complex powers") {
    CHECK(std::abs(complex_power(-1.0, r(1, 2)) - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(complex_power(4.0, r(3, 2)) - 8.0) < 1e-14);
  }
}
