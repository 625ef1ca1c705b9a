#include "vir/ode.hpp"

#include "vir/errors.hpp"

#include <algorithm>
#include <climits>

namespace vir {

const char* to_string(SingularPoint point) {
  switch (point) {
    case SingularPoint::Zero: return "0";
    case SingularPoint::One: return "1";
    case SingularPoint::Infinity: return "inf";
  }
  return "?";
}

ODESpec::ODESpec(std::vector<RationalPolynomial> coefficients, std::string variable)
    : c_(std::move(coefficients)), variable_(std::move(variable)) {
  if (c_.empty()) fail(ErrorKind::Shape, "ODE needs at least one coefficient");
  if (c_.back().is_zero()) fail(ErrorKind::Shape, "leading ODE coefficient is identically zero");
}

ODESpec ODESpec::normalized() const {
  RationalPolynomial g;
  for (const auto& c : c_) g = gcd(g, c);
  std::vector<RationalPolynomial> out;
  for (const auto& c : c_) out.push_back(c.divmod(g).first);
  const Rational lead = out.back().leading();
  for (auto& c : out) c = (Rational(1) / lead) * c;
  return ODESpec(std::move(out), variable_);
}

ODESpec ODESpec::reflected() const {
  std::vector<RationalPolynomial> out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    auto c = c_[i].compose_linear(1, -1);
    out.push_back(i % 2 ? Rational(-1) * c : c);
  }
  return ODESpec(std::move(out), variable_);
}

bool proportional(const ODESpec& a, const ODESpec& b) {
  if (a.order() != b.order()) return false;
  const auto na = a.normalized(), nb = b.normalized();
  return na.coefficients() == nb.coefficients();
}

RationalPolynomial falling_factorial(int i) {
  RationalPolynomial out(Rational(1));
  for (int k = 0; k < i; ++k) out = out * RationalPolynomial(std::vector<Rational>{Rational(-k), 1});
  return out;
}

namespace {

int min_shift(const ODESpec& ode) {
  int s = INT_MAX;
  for (int i = 0; i <= ode.order(); ++i)
    if (!ode[i].is_zero()) s = std::min(s, ode[i].valuation() - i);
  return s;
}

int max_shift(const ODESpec& ode) {
  int s = INT_MIN;
  for (int i = 0; i <= ode.order(); ++i)
    if (!ode[i].is_zero()) s = std::max(s, ode[i].degree() - i);
  return s;
}

bool regular_at_zero(const ODESpec& ode) {
  return ode.leading().valuation() - ode.order() == min_shift(ode);
}

bool regular_at_infinity(const ODESpec& ode) {
  return ode.leading().degree() - ode.order() == max_shift(ode);
}

}  // namespace

bool is_regular_singular(const ODESpec& ode, SingularPoint point) {
  switch (point) {
    case SingularPoint::Zero: return regular_at_zero(ode);
    case SingularPoint::One: return regular_at_zero(ode.reflected());
    case SingularPoint::Infinity: return regular_at_infinity(ode);
  }
  return false;
}

LocalRecursion local_recursion(const ODESpec& ode) {
  if (!regular_at_zero(ode)) fail(ErrorKind::Structure, "irregular singular point at 0");
  LocalRecursion rec;
  rec.shift = min_shift(ode);
  const int span = max_shift(ode) - rec.shift;
  for (int j = 0; j <= span; ++j) {
    RationalPolynomial q;
    for (int i = 0; i <= ode.order(); ++i) {
      const Rational a = ode[i][i + rec.shift + j];
      if (a != 0) q += a * falling_factorial(i);
    }
    rec.q.push_back(std::move(q));
  }
  return rec;
}

RationalPolynomial indicial_polynomial(const ODESpec& ode, SingularPoint point) {
  switch (point) {
    case SingularPoint::Zero: return local_recursion(ode).q.front();
    case SingularPoint::One: return local_recursion(ode.reflected()).q.front();
    case SingularPoint::Infinity: {
      if (!regular_at_infinity(ode)) fail(ErrorKind::Structure, "irregular singular point at infinity");
      const int s = max_shift(ode);
      RationalPolynomial out;
      for (int i = 0; i <= ode.order(); ++i)
        if (!ode[i].is_zero() && ode[i].degree() - i == s)
          out += ode[i].leading() * falling_factorial(i).compose_linear(0, -1);
      return out;
    }
  }
  return {};
}

std::vector<Rational> indicial_exponents(const ODESpec& ode, SingularPoint point) {
  const auto poly = indicial_polynomial(ode, point);
  auto roots = rational_roots(poly);
  if (roots.remainder.degree() > 0)
    fail(ErrorKind::Structure, std::string("model violation: indicial polynomial at ") + to_string(point) +
                                   " has non-rational roots, cofactor " + to_string(roots.remainder, "r"));
  return roots.roots;
}

bool SingularStructure::fuchsian_01() const {
  if (irrational_points || !regular_at_zero || !regular_at_one || !regular_at_infinity) return false;
  return std::all_of(finite_points.begin(), finite_points.end(),
                     [](const Rational& x) { return x == 0 || x == 1; });
}

SingularStructure singular_structure(const ODESpec& ode) {
  const auto n = ode.normalized();
  SingularStructure s;
  auto roots = rational_roots(n.leading());
  s.irrational_points = roots.remainder.degree() > 0;
  for (const auto& r : roots.roots)
    if (s.finite_points.empty() || s.finite_points.back() != r) s.finite_points.push_back(r);
  s.regular_at_zero = is_regular_singular(n, SingularPoint::Zero);
  s.regular_at_one = is_regular_singular(n, SingularPoint::One);
  s.regular_at_infinity = is_regular_singular(n, SingularPoint::Infinity);
  return s;
}

std::string to_string(const ODESpec& ode) {
  std::string out;
  for (int i = ode.order(); i >= 0; --i) {
    if (ode[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(ode[i], ode.variable()) + ")";
    if (i == 1) out += " g'";
    else if (i > 1) out += " g^(" + std::to_string(i) + ")";
    else out += " g";
  }
  return out + " = 0";
}

}  // namespace vir
