#include "vir/crossing.hpp"

#include "vir/errors.hpp"
#include "vir/fusion.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>

namespace vir {

std::vector<double> chebyshev_points(int count, double lo, double hi) {
  std::vector<double> out;
  for (int i = count - 1; i >= 0; --i)
    out.push_back(0.5 * (lo + hi) + 0.5 * (hi - lo) * std::cos((2 * i + 1) * std::numbers::pi / (2 * count)));
  return out;
}

namespace {

// Rows: derivatives 0..k-1 at every sample; columns: basis solutions.
Eigen::MatrixXcd jet_matrix(const ChannelBasis& basis, const std::vector<double>& samples) {
  const int k = static_cast<int>(basis.solutions.size());
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(samples.size()) * k, k);
  for (std::size_t s = 0; s < samples.size(); ++s)
    for (int j = 0; j < k; ++j) {
      const auto jet = evaluate_jet(basis.solutions[static_cast<std::size_t>(j)], samples[s], k);
      for (int d = 0; d < k; ++d) m(static_cast<Eigen::Index>(s) * k + d, j) = jet[static_cast<std::size_t>(d)];
    }
  return m;
}

Eigen::VectorXcd values(const ChannelBasis& basis, Complex z) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(basis.solutions.size()));
  for (std::size_t j = 0; j < basis.solutions.size(); ++j)
    v(static_cast<Eigen::Index>(j)) = evaluate_series(basis.solutions[j], z).value;
  return v;
}

std::vector<Rational> exponents(const ChannelBasis& basis) {
  std::vector<Rational> out;
  for (const auto& s : basis.solutions) out.push_back(s.exponent);
  return out;
}

}  // namespace

FusingMatrix fusing_matrix(const ChannelBasis& from, const ChannelBasis& to, const std::vector<double>& samples_in) {
  const int k = static_cast<int>(from.solutions.size());
  if (static_cast<int>(to.solutions.size()) != k) fail(ErrorKind::Shape, "bases of different sizes");
  FusingMatrix out;
  out.samples = samples_in.empty() ? chebyshev_points(k + 2) : samples_in;
  if (static_cast<int>(out.samples.size()) < k)
    fail(ErrorKind::Domain, "need at least " + std::to_string(k) + " sample points");
  for (double z : out.samples)
    if (!(z > 0 && z < 1)) fail(ErrorKind::Domain, "sample points must lie in (0, 1)");
  for (double z : chebyshev_points(k + 3))
    if (std::none_of(out.samples.begin(), out.samples.end(), [&](double s) { return std::abs(s - z) < 1e-9; }))
      out.held_out.push_back(z);

  const Eigen::MatrixXcd a = jet_matrix(to, out.samples);
  const Eigen::MatrixXcd b = jet_matrix(from, out.samples);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  out.condition = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
  if (!(out.condition <= 1e8))
    fail(ErrorKind::Conditioning, "fusing-matrix solve is ill-conditioned (condition number " +
                                      std::to_string(out.condition) + "); try other samples or a higher order");
  out.entries = svd.solve(b).transpose();

  for (double z : out.held_out) {
    const Eigen::VectorXcd lhs = values(from, z);
    const Eigen::VectorXcd rhs = out.entries * values(to, z);
    for (Eigen::Index i = 0; i < lhs.size(); ++i)
      out.residual = std::max(out.residual, std::abs(lhs(i) - rhs(i)) / std::max(std::abs(lhs(i)), 1e-300));
  }
  return out;
}

FusingMatrix fusing_matrix(const ODESpec& ode, int order, const std::vector<double>& samples, Direction direction) {
  const auto b0 = local_basis(ode, SingularPoint::Zero, order);
  const auto b1 = local_basis(ode, SingularPoint::One, order);
  return direction == Direction::ZeroToOne ? fusing_matrix(b0, b1, samples) : fusing_matrix(b1, b0, samples);
}

std::vector<Complex> product_side(const CorrelatorSpec& spec, const ChannelBasis& basis0, Complex z1, Complex z2) {
  const auto anchor = reference_anchor(spec);
  const Complex prefactor = complex_power(z1, anchor.t1) * complex_power(z2, anchor.t2);
  std::vector<Complex> out;
  for (const auto& s : basis0.solutions) out.push_back(prefactor * evaluate_series(s, z2 / z1).value);
  return out;
}

namespace {

// Everything the crossing checks need for one correlator at one order.
struct CrossingData {
  ODESpec ode;
  ChannelBasis basis0;
  ChannelBasis basis1;
  FusingMatrix fusing;
  std::vector<std::size_t> physical;  // indices into basis0 of the allowed channels
};

CrossingData build_crossing(const CorrelatorSpec& spec, int order) {
  const auto anchor = reference_anchor(spec);
  ODESpec ode = product_ode(spec, anchor);
  auto b0 = local_basis(ode, SingularPoint::Zero, order);
  auto b1 = local_basis(ode, SingularPoint::One, order);
  auto f = fusing_matrix(b0, b1);
  std::vector<std::size_t> physical;
  for (const auto& c : spec.channels()) {
    const Rational rho = channel_exponents(spec, c).t2 - anchor.t2;
    const auto it = std::find_if(b0.solutions.begin(), b0.solutions.end(),
                                 [&](const FrobeniusSeries& s) { return s.exponent == rho; });
    if (it == b0.solutions.end())
      fail(ErrorKind::Structure, "channel " + to_string(c) + " exponent is not an indicial root");
    physical.push_back(static_cast<std::size_t>(it - b0.solutions.begin()));
  }
  return {std::move(ode), std::move(b0), std::move(b1), std::move(f), std::move(physical)};
}

const CrossingData& crossing_data(const CorrelatorSpec& spec, int order) {
  static std::mutex mutex;
  static std::map<std::pair<CorrelatorSpec, int>, CrossingData> memo;
  const std::pair key{spec, order};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  auto data = build_crossing(spec, order);
  std::lock_guard lock(mutex);
  return memo.emplace(key, std::move(data)).first->second;
}

const ChannelBasis& iterate_basis(const CorrelatorSpec& spec, int order) {
  static std::mutex mutex;
  static std::map<std::pair<CorrelatorSpec, int>, ChannelBasis> memo;
  const std::pair key{spec, order};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  auto basis = local_basis(iterate_ode(spec), SingularPoint::Zero, order);
  std::lock_guard lock(mutex);
  return memo.emplace(key, std::move(basis)).first->second;
}

}  // namespace

double associativity_residual(const CorrelatorSpec& spec, double z1, double z2, int order) {
  const double d = std::abs(z1 - z2);
  if (!(std::abs(z1) > std::abs(z2) && std::abs(z2) > d && d > 0))
    fail(ErrorKind::Domain, "associativity needs |z1| > |z2| > |z1 - z2| > 0");
  const auto& data = crossing_data(spec, order);
  const auto& iter = iterate_basis(spec, order);
  if (exponents(iter) != exponents(data.basis1))
    fail(ErrorKind::Structure, "iterate-side exponents differ from the exponents at 1");

  const auto product = product_side(spec, data.basis0, z1, z2);
  const Complex u = (z1 - z2) / z2;
  const Complex prefactor = complex_power(Complex(z2), spec.scaling_degree());
  const Eigen::VectorXcd iterate = prefactor * values(iter, u);
  const Eigen::VectorXcd transported = data.fusing.entries * iterate;

  double residual = 0;
  for (std::size_t c : data.physical) {
    const Complex p = product[c];
    residual = std::max(residual, std::abs(p - transported(static_cast<Eigen::Index>(c))) / std::abs(p));
  }
  return residual;
}

AssociativityReport associativity_sweep(const CorrelatorSpec& spec, const std::vector<double>& z1_grid,
                                        const std::vector<double>& ratio_grid, int order) {
  AssociativityReport report{0, z1_grid, ratio_grid, order};
  for (double z1 : z1_grid)
    for (double r : ratio_grid)
      report.max_residual = std::max(report.max_residual, associativity_residual(spec, z1, r * z1, order));
  return report;
}

BraidingPhase braiding_phase(const MinimalModel& model, const KacLabel& a, const KacLabel& b, const KacLabel& c) {
  if (fusion_rule(model, a, b, c) != 1)
    fail(ErrorKind::Fusion, to_string(c) + " does not occur in " + to_string(a) + " x " + to_string(b));
  BraidingPhase out;
  out.exponent = conformal_weight(model, c) - conformal_weight(model, a) - conformal_weight(model, b);
  // Reduce modulo 2 before converting so the angle stays small.
  const Rational two(2);
  Rational reduced = out.exponent - two * Rational(Integer(numerator(out.exponent / two) / denominator(out.exponent / two)));
  out.phase = std::polar(1.0, std::numbers::pi * to_double(reduced));
  return out;
}

namespace {

using State = std::vector<Complex>;

// Integrates the ODE along z(t), t in [t0, t1], for the jet (g, g', ..., g^(k-1)).
State continue_jet(const ODESpec& ode, State jet, const std::function<Complex(double)>& z,
                   const std::function<Complex(double)>& dz, double t0, double t1) {
  namespace odeint = boost::numeric::odeint;
  const int k = ode.order();
  std::vector<Polynomial<Complex>> c;
  for (const auto& p : ode.coefficients())
    c.push_back(p.cast<Complex>([](const Rational& r) { return Complex(to_double(r)); }));
  auto system = [&](const State& y, State& dydt, double t) {
    const Complex x = z(t), v = dz(t);
    Complex top = 0;
    for (int i = 0; i < k; ++i) top -= c[static_cast<std::size_t>(i)](x) * y[static_cast<std::size_t>(i)];
    top /= c[static_cast<std::size_t>(k)](x);
    for (int i = 0; i + 1 < k; ++i) dydt[static_cast<std::size_t>(i)] = v * y[static_cast<std::size_t>(i) + 1];
    dydt[static_cast<std::size_t>(k) - 1] = v * top;
  };
  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(1e-14, 1e-14);
  odeint::integrate_adaptive(stepper, system, jet, t0, t1, (t1 - t0) / 1000);
  return jet;
}

double max_norm(const State& s) {
  double m = 0;
  for (const auto& x : s) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

double monodromy_check(const ODESpec& ode, const ChannelBasis& basis, double radius) {
  if (basis.point != SingularPoint::Zero) fail(ErrorKind::Domain, "monodromy check needs a basis at 0");
  const int k = ode.order();
  double residual = 0;
  for (const auto& s : basis.solutions) {
    const State start = evaluate_jet(s, radius, k);
    const State end = continue_jet(
        ode, start, [&](double t) { return std::polar(radius, t); },
        [&](double t) { return Complex(0, 1) * std::polar(radius, t); }, 0.0, 2 * std::numbers::pi);
    const Complex phase = std::polar(1.0, 2 * std::numbers::pi * to_double(s.exponent));
    State diff(start.size());
    for (std::size_t i = 0; i < start.size(); ++i) diff[i] = end[i] - phase * start[i];
    residual = std::max(residual, max_norm(diff) / max_norm(start));
  }
  return residual;
}

ChannelBasis perturb_exponents(const ChannelBasis& basis, const Rational& shift) {
  ChannelBasis out = basis;
  for (auto& s : out.solutions) s.exponent += shift;
  return out;
}

CommutativityReport commutativity_check(const CorrelatorSpec& spec, double x, int order) {
  if (!(x > 0.5 && x < 1)) fail(ErrorKind::Domain, "commutativity path needs 1/2 < x < 1");
  const auto& data = crossing_data(spec, order);
  const CorrelatorSpec swapped = spec.swapped();
  const auto& sdata = crossing_data(swapped, order);

  CommutativityReport report;
  report.x = x;
  report.exponents = exponents(data.basis1);
  if (report.exponents != exponents(sdata.basis1))
    fail(ErrorKind::Structure, "exponents at 1 differ between the correlator and its swap");

  const Eigen::Index k = static_cast<Eigen::Index>(report.exponents.size());
  Eigen::VectorXcd lambda(k);
  for (Eigen::Index j = 0; j < k; ++j)
    lambda(j) = std::polar(1.0, std::numbers::pi * to_double(report.exponents[static_cast<std::size_t>(j)]));
  const Eigen::MatrixXcd braid =
      data.fusing.entries * lambda.asDiagonal() * sdata.fusing.entries.inverse();

  const double z1_end = 2 * x - 1;
  const auto swapped_side = product_side(swapped, sdata.basis0, Complex(x), Complex(z1_end));
  Eigen::VectorXcd swapped_values(k);
  for (Eigen::Index j = 0; j < k; ++j) swapped_values(j) = swapped_side[static_cast<std::size_t>(j)];
  const Eigen::VectorXcd predicted = braid * swapped_values;

  const auto anchor = reference_anchor(spec);
  auto run = [&](double sign) {
    // z = z2 / z1 along z1(alpha) = x + (1 - x) e^{i sign alpha}.
    auto z1 = [=](double a) { return x + (1 - x) * std::polar(1.0, sign * a); };
    auto z = [=](double a) { return x / z1(a); };
    auto dz = [=](double a) {
      const Complex dz1 = Complex(0, sign) * (1 - x) * std::polar(1.0, sign * a);
      return -x * dz1 / (z1(a) * z1(a));
    };
    const Complex prefactor = complex_power(Complex(z1_end), anchor.t1) * complex_power(Complex(x), anchor.t2);
    double residual = 0;
    for (std::size_t c : data.physical) {
      const auto& s = data.basis0.solutions[c];
      const State end = continue_jet(data.ode, evaluate_jet(s, x, data.ode.order()), z, dz, 0.0, std::numbers::pi);
      const Complex continued = prefactor * end.front();
      const Complex expected = predicted(static_cast<Eigen::Index>(c));
      residual = std::max(residual, std::abs(continued - expected) / std::abs(expected));
    }
    return residual;
  };
  report.residual = run(1.0);
  report.reverse_residual = run(-1.0);
  return report;
}

EvaluationResult tensor_block(const TensorModel& model, const std::vector<CorrelatorSpec>& specs,
                              const TensorLabel& channel, Complex z, int order) {
  if (specs.size() != model.size() || channel.labels.size() != model.size())
    fail(ErrorKind::Shape, "tensor block needs one correlator and one channel per factor");
  EvaluationResult out{1.0, 0.0, order};
  double magnitude = 1, with_bounds = 1;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].model() != model[i]) fail(ErrorKind::Shape, "factor " + std::to_string(i) + " model mismatch");
    const auto r = block(specs[i], channel.labels[i], z, order);
    out.value *= r.value;
    magnitude *= std::abs(r.value);
    with_bounds *= std::abs(r.value) + r.tail_bound;
    out.order_used = std::min(out.order_used, r.order_used);
  }
  out.tail_bound = with_bounds - magnitude;
  return out;
}

}  // namespace vir
