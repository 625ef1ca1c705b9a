#pragma once

#include "vir/polynomial.hpp"

#include <string>
#include <vector>

namespace vir {

enum class SingularPoint { Zero, One, Infinity };

const char* to_string(SingularPoint point);

/// Linear ODE  sum_i c_i(x) d^i g / dx^i = 0  with exact polynomial coefficients.
class ODESpec {
 public:
  /// coefficients[i] multiplies the i-th derivative. Throws ErrorKind::Shape
  /// if the list is empty or the leading coefficient is zero.
  explicit ODESpec(std::vector<RationalPolynomial> coefficients, std::string variable = "z");

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<RationalPolynomial>& coefficients() const { return c_; }
  const RationalPolynomial& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const RationalPolynomial& leading() const { return c_.back(); }
  const std::string& variable() const { return variable_; }

  /// Common polynomial factor removed, leading coefficient made monic.
  ODESpec normalized() const;
  /// The same equation in the local variable w = 1 - x.
  ODESpec reflected() const;

  friend bool operator==(const ODESpec& a, const ODESpec& b) {
    return a.c_ == b.c_ && a.variable_ == b.variable_;
  }

 private:
  std::vector<RationalPolynomial> c_;
  std::string variable_;
};

/// Equal after normalization.
bool proportional(const ODESpec& a, const ODESpec& b);

/// Substituting x^rho sum_n a_n x^n at x = 0 gives, at x^(rho + s + m),
/// sum_{j >= 0} q[j](rho + m - j) a_(m-j) = 0.
struct LocalRecursion {
  int shift = 0;
  std::vector<RationalPolynomial> q;
};

bool is_regular_singular(const ODESpec& ode, SingularPoint point);

/// Throws ErrorKind::Structure when x = 0 is not regular singular.
LocalRecursion local_recursion(const ODESpec& ode);

/// For Zero and One the variable is x and 1 - x respectively; at Infinity
/// the exponent rho means g ~ x^(-rho).
RationalPolynomial indicial_polynomial(const ODESpec& ode, SingularPoint point);

/// Indicial roots with multiplicity, ascending. Throws ErrorKind::Structure for
/// an irregular point or when a root is not rational.
std::vector<Rational> indicial_exponents(const ODESpec& ode, SingularPoint point);

struct SingularStructure {
  std::vector<Rational> finite_points;  // distinct rational roots of the leading coefficient
  bool irrational_points = false;       // leading coefficient has non-rational roots
  bool regular_at_zero = false;
  bool regular_at_one = false;
  bool regular_at_infinity = false;

  /// All singular points in {0, 1, infinity}, each regular singular.
  bool fuchsian_01() const;
};

SingularStructure singular_structure(const ODESpec& ode);

/// Falling factorial x (x - 1) ... (x - i + 1).
RationalPolynomial falling_factorial(int i);

std::string to_string(const ODESpec& ode);

}  // namespace vir
