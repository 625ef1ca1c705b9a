#include "vir/frobenius.hpp"

#include "vir/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <mutex>
#include <tuple>

namespace vir {

namespace {

ODESpec local_ode(const ODESpec& ode, SingularPoint point) {
  if (point == SingularPoint::Infinity) fail(ErrorKind::Domain, "series expansion at infinity is not supported");
  return point == SingularPoint::One ? ode.reflected() : ode;
}

Rational falling(const Rational& x, int i) {
  Rational out(1);
  for (int k = 0; k < i; ++k) out *= x - k;
  return out;
}

Complex local_variable(SingularPoint point, Complex z) { return point == SingularPoint::One ? 1.0 - z : z; }

}  // namespace

Complex complex_power(Complex x, const Rational& exponent) {
  if (exponent == 0) return 1.0;
  if (is_integer(exponent)) return std::pow(x, numerator(exponent).convert_to<int>());
  return std::pow(x, Complex(to_double(exponent), 0.0));
}

FrobeniusSeries frobenius_expand(const ODESpec& ode, SingularPoint point, const Rational& exponent, int order) {
  if (order < 0) fail(ErrorKind::Range, "series order must be nonnegative");
  const auto rec = local_recursion(local_ode(ode, point));
  const auto& q = rec.q;
  if (q.front()(exponent) != 0)
    fail(ErrorKind::Domain, to_display_string(exponent) + " is not an indicial root at " + to_string(point));

  FrobeniusSeries s;
  s.point = point;
  s.exponent = exponent;
  s.coefficients.reserve(static_cast<std::size_t>(order) + 1);
  s.coefficients.emplace_back(1);
  for (int m = 1; m <= order; ++m) {
    Rational rhs(0);
    for (int j = 1; j < static_cast<int>(q.size()) && j <= m; ++j) {
      const Rational& prev = s.coefficients[static_cast<std::size_t>(m - j)];
      if (prev != 0) rhs -= q[static_cast<std::size_t>(j)](exponent + m - j) * prev;
    }
    const Rational denom = q.front()(exponent + m);
    if (denom == 0) {
      if (rhs != 0)
        fail(ErrorKind::Logarithmic, "resonance at exponent " + to_display_string(exponent) + " + " +
                                         std::to_string(m) + " needs a logarithmic term");
      s.coefficients.emplace_back(0);
    } else {
      s.coefficients.push_back(rhs / denom);
    }
  }
  for (const auto& a : s.coefficients) s.numeric.push_back(to_double(a));
  return s;
}

EvaluationResult evaluate_series(const FrobeniusSeries& series, Complex z) {
  const Complex x = local_variable(series.point, z);
  const double r = std::abs(x);
  if (!(r < 1)) fail(ErrorKind::Domain, "evaluation point outside the convergence disk");
  const int n_max = series.order();
  EvaluationResult out;
  out.order_used = n_max;
  if (r == 0) {
    if (series.exponent < 0) fail(ErrorKind::Domain, "series diverges at its base point");
    out.value = series.exponent == 0 ? Complex(series.numeric.front()) : Complex(0);
    return out;
  }

  Complex sum = 0;
  for (int n = n_max; n >= 0; --n) sum = sum * x + series.numeric[static_cast<std::size_t>(n)];
  const Complex prefactor = complex_power(x, series.exponent);
  out.value = prefactor * sum;

  // Tail: geometric continuation of the largest of the last few terms.
  double ratio = r, last = 0, magnitude = 0;
  const int window = std::min(n_max, 8);
  for (int n = n_max - window + 1; n <= n_max && n >= 1; ++n) {
    const double a = std::abs(series.numeric[static_cast<std::size_t>(n)]);
    const double b = std::abs(series.numeric[static_cast<std::size_t>(n - 1)]);
    if (a != 0 && b != 0) ratio = std::max(ratio, r * a / b);
  }
  for (int n = std::max(1, n_max - window + 1); n <= n_max; ++n)
    last = std::max(last, std::abs(series.numeric[static_cast<std::size_t>(n)]) * std::pow(r, n));
  for (int n = 1; n <= n_max; ++n) magnitude += std::abs(series.numeric[static_cast<std::size_t>(n)]) * std::pow(r, n);
  const double scale = std::abs(prefactor);
  const double truncation =
      ratio < 1 ? last * ratio / (1 - ratio) : std::numeric_limits<double>::infinity();
  const double rounding = 4 * std::numeric_limits<double>::epsilon() * (magnitude + (magnitude > 0 ? 1 : 0));
  out.tail_bound = scale * (truncation + rounding);
  return out;
}

std::vector<Complex> evaluate_jet(const FrobeniusSeries& series, Complex z, int count) {
  const Complex x = local_variable(series.point, z);
  if (!(std::abs(x) < 1) || std::abs(x) == 0)
    fail(ErrorKind::Domain, "derivatives need 0 < |x| < 1 in the local variable");
  const double rho = to_double(series.exponent);
  const double sign = series.point == SingularPoint::One ? -1.0 : 1.0;
  std::vector<Complex> out;
  const Complex prefactor = complex_power(x, series.exponent);
  for (int j = 0; j < count; ++j) {
    Complex sum = 0;
    for (int n = series.order(); n >= 0; --n) {
      double f = series.numeric[static_cast<std::size_t>(n)];
      for (int k = 0; k < j; ++k) f *= rho + n - k;
      sum = sum * x + f;
    }
    out.push_back(prefactor * sum * std::pow(x, -j) * std::pow(sign, j));
  }
  return out;
}

std::map<int, Rational> series_residual(const ODESpec& ode, const FrobeniusSeries& series) {
  const ODESpec local = local_ode(ode, series.point);
  std::map<int, Rational> out;
  for (int i = 0; i <= local.order(); ++i) {
    const auto& c = local[i].coefficients();
    for (int n = 0; n <= series.order(); ++n) {
      const Rational& a = series.coefficients[static_cast<std::size_t>(n)];
      if (a == 0) continue;
      const Rational f = a * falling(series.exponent + n, i);
      if (f == 0) continue;
      for (std::size_t p = 0; p < c.size(); ++p) {
        if (c[p] == 0) continue;
        Rational& slot = out[n - i + static_cast<int>(p)];
        slot += c[p] * f;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

ChannelBasis local_basis(const ODESpec& ode, SingularPoint point, int order) {
  const auto roots = indicial_exponents(point == SingularPoint::One ? ode.reflected() : ode, SingularPoint::Zero);
  ChannelBasis basis{ode, point, {}};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i > 0 && roots[i] == roots[i - 1])
      fail(ErrorKind::Logarithmic, "repeated indicial root " + to_display_string(roots[i]));
    basis.solutions.push_back(frobenius_expand(ode, point, roots[i], order));
  }
  if (static_cast<int>(basis.solutions.size()) != ode.order())
    fail(ErrorKind::Structure, "indicial polynomial degree differs from the ODE order");
  return basis;
}

Complex wronskian(const ChannelBasis& basis, Complex z) {
  const int k = static_cast<int>(basis.solutions.size());
  Eigen::MatrixXcd w(k, k);
  for (int i = 0; i < k; ++i) {
    const auto jet = evaluate_jet(basis.solutions[static_cast<std::size_t>(i)], z, k);
    for (int j = 0; j < k; ++j) w(j, i) = jet[static_cast<std::size_t>(j)];
  }
  return w.determinant();
}

namespace {

// The channel series with its exponent replaced by t2, so that evaluation
// yields F(1, z) directly.
const FrobeniusSeries& block_series(const CorrelatorSpec& spec, const KacLabel& channel, int order) {
  using Key = std::tuple<CorrelatorSpec, KacLabel, int>;
  static std::mutex mutex;
  static std::map<Key, FrobeniusSeries> memo;
  const KacLabel c = canonicalize(spec.model(), channel);
  const Key key{spec, c, order};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const auto exps = channel_exponents(spec, c);
  const auto ref = reference_anchor(spec);
  const auto ode = product_ode(spec, ref);
  auto series = frobenius_expand(ode, SingularPoint::Zero, exps.t2 - ref.t2, order);
  series.exponent = exps.t2;
  std::lock_guard lock(mutex);
  return memo.emplace(key, std::move(series)).first->second;
}

}  // namespace

EvaluationResult block(const CorrelatorSpec& spec, const KacLabel& channel, Complex z, int order) {
  if (!(std::abs(z) > 0 && std::abs(z) < 1)) fail(ErrorKind::Domain, "block needs 0 < |z| < 1");
  return evaluate_series(block_series(spec, channel, order), z);
}

}  // namespace vir
