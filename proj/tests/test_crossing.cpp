#include "vir/crossing.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>

using namespace vir;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

const MinimalModel kIsing(3, 4);
const KacLabel kSigma{1, 2}, kEps{1, 3}, kVac{1, 1};

CorrelatorSpec sigma4() { return {kIsing, kSigma, kSigma, kSigma, kSigma}; }
CorrelatorSpec eps4() { return {kIsing, kEps, kEps, kEps, kEps}; }

double ising_identity(double z) { return std::pow(z * (1 - z), -0.125) * std::sqrt((1 + std::sqrt(1 - z)) / 2); }
double ising_energy(double z) { return 2 * std::pow(z * (1 - z), -0.125) * std::sqrt((1 - std::sqrt(1 - z)) / 2); }

// Connection matrix of the closed forms: F_i(z) = sum_j M(i, j) F_j(1 - z).
Eigen::Matrix2d closed_form_fusing() {
  const double za = 0.4, zb = 0.7;
  Eigen::Matrix2d at_one;
  at_one << ising_identity(1 - za), ising_energy(1 - za), ising_identity(1 - zb), ising_energy(1 - zb);
  Eigen::Matrix2d at_zero;
  at_zero << ising_identity(za), ising_energy(za), ising_identity(zb), ising_energy(zb);
  return at_one.partialPivLu().solve(at_zero).transpose();
}

// z (1 - z) g' - (a (1 - z) - b z) g = 0, solved by z^a (1 - z)^b.
ODESpec first_order(const Rational& a, const Rational& b) {
  return ODESpec({RationalPolynomial(std::vector<Rational>{-a, a + b}), RationalPolynomial(std::vector<Rational>{0, 1, -1})});
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_SUITE("crossing") {
  TEST_CASE("Chebyshev points") {
    const auto pts = chebyshev_points(4);
    REQUIRE(pts.size() == 4);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(pts.front() > 0.35);
    CHECK(pts.back() < 0.65);
    CHECK(pts[0] + pts[3] == doctest::Approx(1.0));
  }

  TEST_CASE("Ising fusing matrix against the closed-form connection") {
    const auto ode = product_ode(sigma4());
    const auto f = fusing_matrix(ode, 50, {0.4, 0.5, 0.6});
    const auto expected = closed_form_fusing();
    REQUIRE(f.entries.rows() == 2);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) CHECK(std::abs(f.entries(i, k) - expected(i, k)) < 1e-8);
    CHECK(f.residual < 1e-8);
    // Up to the a0 = 1 normalization this is the Hadamard matrix over sqrt(2).
    const double s = std::sqrt(0.5);
    CHECK(std::abs(f.entries(0, 0) - s) < 1e-8);
    CHECK(std::abs(f.entries(1, 1) + s) < 1e-8);
    CHECK(std::abs(2.0 * f.entries(0, 1) - s) < 1e-8);
    CHECK(std::abs(f.entries(1, 0) / 2.0 - s) < 1e-8);

    const auto back = fusing_matrix(ode, 50, {}, Direction::OneToZero);
    const Eigen::MatrixXcd product = back.entries * f.entries;
    CHECK((product - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-7);
  }

  TEST_CASE("first-order equation") {
    const auto ode = first_order(r(1, 3), r(1, 4));
    const auto f = fusing_matrix(ode, 60);
    REQUIRE(f.entries.rows() == 1);
    CHECK(std::abs(f.entries(0, 0) - 1.0) < 1e-12);
    CHECK(f.residual < 1e-12);
    CHECK(kind_of([&] { fusing_matrix(product_ode(sigma4()), 50, {0.5}); }) == ErrorKind::Domain);
    CHECK(kind_of([&] { fusing_matrix(ode, 50, {0.5, 1.2}); }) == ErrorKind::Domain);
  }

  TEST_CASE("associativity") {
    CHECK(associativity_residual(sigma4(), 1.0, 0.8) < 1e-8);
    CHECK(associativity_residual(eps4(), 1.0, 0.8) < 1e-8);
    CHECK(kind_of([] { associativity_residual(sigma4(), 1.0, 0.4); }) == ErrorKind::Domain);
    const auto sweep = associativity_sweep(sigma4(), {0.9, 1.1}, {0.6, 0.75});
    CHECK(sweep.max_residual < 1e-8);
  }

  TEST_CASE("braiding phases") {
    const auto trivial = braiding_phase(kIsing, kVac, kSigma, kSigma);
    CHECK(trivial.exponent == 0);
    CHECK(std::abs(trivial.phase - 1.0) < 1e-15);
    const auto id = braiding_phase(kIsing, kSigma, kSigma, kVac);
    CHECK(id.exponent == r(-1, 8));
    CHECK(std::abs(id.phase - std::polar(1.0, -M_PI / 8)) < 1e-15);
    const auto eps = braiding_phase(kIsing, kSigma, kSigma, kEps);
    CHECK(eps.exponent == r(3, 8));
    CHECK(std::abs(eps.phase - std::polar(1.0, 3 * M_PI / 8)) < 1e-15);
    CHECK(kind_of([] { braiding_phase(kIsing, kSigma, kSigma, kSigma); }) == ErrorKind::Fusion);
  }

  TEST_CASE("monodromy") {
    const auto constant = ODESpec({RationalPolynomial(), RationalPolynomial(1)});
    CHECK(monodromy_check(constant, local_basis(constant, SingularPoint::Zero, 10)) < 1e-14);
    const auto single = first_order(r(1, 3), r(1, 4));
    CHECK(monodromy_check(single, local_basis(single, SingularPoint::Zero, 60)) < 1e-10);

    const auto ode = product_ode(sigma4());
    const auto basis = local_basis(ode, SingularPoint::Zero, 60);
    CHECK(monodromy_check(ode, basis) < 1e-8);
    CHECK(monodromy_check(ode, perturb_exponents(basis, r(1, 100))) > 1e-3);
  }

  TEST_CASE("commutativity") {
    const auto report = commutativity_check(sigma4());
    CHECK(report.residual < 1e-6);
    CHECK(report.reverse_residual > 1e-3);
    CHECK(report.exponents == std::vector<Rational>{r(-1, 8), r(3, 8)});
    CHECK(kind_of([] { commutativity_check(sigma4(), 0.3); }) == ErrorKind::Domain);
  }

  TEST_CASE("tensor blocks") {
    const TensorModel square({kIsing, kIsing});
    const double z = 0.3;
    const auto single = block(sigma4(), kVac, z).value;
    const auto t = tensor_block(square, {sigma4(), sigma4()}, TensorLabel{{kVac, kVac}}, z);
    CHECK(std::abs(t.value - single * single) <= 1e-12 * std::abs(single * single));
    CHECK(t.tail_bound >= 0);

    const CorrelatorSpec vacuum(kIsing, kVac, kVac, kVac, kVac);
    const auto with_vac = tensor_block(square, {vacuum, sigma4()}, TensorLabel{{kVac, kEps}}, z);
    CHECK(std::abs(with_vac.value - block(sigma4(), kEps, z).value) < 1e-12);

    const MinimalModel yang_lee(2, 5);
    const CorrelatorSpec yl(yang_lee, {1, 2}, {1, 2}, {1, 2}, {1, 2});
    const auto a = tensor_block(TensorModel({kIsing, yang_lee}), {sigma4(), yl}, TensorLabel{{kEps, {1, 2}}}, z);
    const auto b = tensor_block(TensorModel({yang_lee, kIsing}), {yl, sigma4()}, TensorLabel{{{1, 2}, kEps}}, z);
    const auto expected = block(sigma4(), kEps, z).value * block(yl, {1, 2}, z).value;
    CHECK(std::abs(a.value - expected) <= 1e-12 * std::abs(expected));
    CHECK(std::abs(a.value - b.value) <= 1e-12 * std::abs(expected));

    CHECK(kind_of([&] { tensor_block(square, {sigma4()}, TensorLabel{{kVac, kVac}}, z); }) == ErrorKind::Shape);
    CHECK(kind_of([&] { tensor_block(square, {sigma4(), yl}, TensorLabel{{kVac, kVac}}, z); }) == ErrorKind::Shape);
  }
}
