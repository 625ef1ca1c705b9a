#pragma once

#include "vir/bpz.hpp"
#include "vir/ode.hpp"

#include <complex>
#include <map>
#include <vector>

namespace vir {

using Complex = std::complex<double>;

/// Local solution (x - point)^rho * sum_n a_n x^n, with x = z at the point 0
/// and x = 1 - z at the point 1.
struct FrobeniusSeries {
  SingularPoint point = SingularPoint::Zero;
  Rational exponent;
  std::vector<Rational> coefficients;  // a_0 = 1
  std::vector<double> numeric;         // the same coefficients as doubles

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// Solves the exact recursion up to order N. Throws ErrorKind::Domain if rho
/// is not an indicial root or the point is infinity, ErrorKind::Logarithmic if
/// a resonance cannot be passed with a zero free coefficient.
FrobeniusSeries frobenius_expand(const ODESpec& ode, SingularPoint point, const Rational& exponent,
                                 int order);

struct EvaluationResult {
  Complex value;
  double tail_bound = 0;
  int order_used = 0;
};

/// Principal-branch evaluation. Throws ErrorKind::Domain outside the unit
/// disk around the base point, or at the base point itself when rho < 0.
EvaluationResult evaluate_series(const FrobeniusSeries& series, Complex z);

/// Value and the first count - 1 derivatives with respect to z.
std::vector<Complex> evaluate_jet(const FrobeniusSeries& series, Complex z, int count);

/// Coefficients r_e of ode(truncated series) = x^rho * sum_e r_e x^e, in the
/// local variable of the series.
std::map<int, Rational> series_residual(const ODESpec& ode, const FrobeniusSeries& series);

/// One Frobenius solution per indicial root at the point, ascending exponents.
struct ChannelBasis {
  ODESpec ode;
  SingularPoint point = SingularPoint::Zero;
  std::vector<FrobeniusSeries> solutions;
};

/// Throws ErrorKind::Logarithmic for repeated indicial roots.
ChannelBasis local_basis(const ODESpec& ode, SingularPoint point, int order = 50);

Complex wronskian(const ChannelBasis& basis, Complex z);

/// F(1, z) = z^t2 * sum a_n z^n for the channel: the product-chart block with
/// a_0 = 1, using the channel's own exponents.
EvaluationResult block(const CorrelatorSpec& spec, const KacLabel& channel, Complex z, int order = 50);

/// Principal-branch complex power of a rational exponent.
Complex complex_power(Complex x, const Rational& exponent);

}  // namespace vir
