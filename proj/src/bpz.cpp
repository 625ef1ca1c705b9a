#include "vir/bpz.hpp"

#include "vir/errors.hpp"
#include "vir/fusion.hpp"

#include <algorithm>
#include <climits>
#include <optional>

namespace vir {

CorrelatorSpec::CorrelatorSpec(const MinimalModel& model, const KacLabel& w4, const KacLabel& w1,
                               const KacLabel& w2, const KacLabel& w3)
    : model_(model),
      w4_(canonicalize(model, w4)),
      w1_(canonicalize(model, w1)),
      w2_(canonicalize(model, w2)),
      w3_(canonicalize(model, w3)) {}

bool CorrelatorSpec::allows(const KacLabel& channel) const {
  return fusion_rule(model_, w2_, w3_, channel) == 1 && fusion_rule(model_, w1_, channel, w4_) == 1;
}

std::vector<KacLabel> CorrelatorSpec::channels() const {
  std::vector<KacLabel> out;
  for (const auto& c : canonical_labels(model_))
    if (allows(c)) out.push_back(c);
  return out;
}

std::string to_string(const CorrelatorSpec& spec) {
  return "<" + to_string(spec.w4()) + "| " + to_string(spec.w1()) + "(z1) " + to_string(spec.w2()) +
         "(z2) |" + to_string(spec.w3()) + "> in " + to_string(spec.model());
}

TwoVarOperator insertion_operator_slot3(int m, const Rational& h1, const Rational& h2) {
  if (m < 1) fail(ErrorKind::Range, "insertion rule needs m >= 1");
  const Rational one_minus_m(1 - m);
  TwoVarOperator op;
  op.add({one_minus_m, 0, 0}, {1, 0}, -1);
  op.add({-Rational(m), 0, 0}, {}, -h1 * one_minus_m);
  op.add({0, one_minus_m, 0}, {0, 1}, -1);
  op.add({0, -Rational(m), 0}, {}, -h2 * one_minus_m);
  return op;
}

TwoVarOperator insertion_operator_slot2(int m, const Rational& h1, const Rational& h3) {
  if (m < 1) fail(ErrorKind::Range, "insertion rule needs m >= 1");
  // y1 = z1 - z2, y2 = e^{i pi} z2; d/dy1 = d1, d/dy2 = -d1 - d2; y2^k = (-1)^k z2^k.
  const Rational one_minus_m(1 - m);
  const Rational sign_1m = (m % 2 == 0) ? Rational(-1) : Rational(1);  // (-1)^(1-m)
  const Rational sign_m = -sign_1m;                                   // (-1)^(-m)
  TwoVarOperator op;
  op.add({0, 0, one_minus_m}, {1, 0}, -1);
  op.add({0, 0, -Rational(m)}, {}, -h1 * one_minus_m);
  op.add({0, one_minus_m, 0}, {1, 0}, sign_1m);
  op.add({0, one_minus_m, 0}, {0, 1}, sign_1m);
  op.add({0, -Rational(m), 0}, {}, -h3 * one_minus_m * sign_m);
  return op;
}

namespace {

template <typename Insertion>
TwoVarOperator compose_word_sum(const RationalPBW& v, Insertion insertion) {
  if (v.is_zero() || v.level() <= 0) fail(ErrorKind::Shape, "null vector must be nonzero of positive level");
  std::map<int, TwoVarOperator> generators;
  auto gen = [&](int m) -> const TwoVarOperator& {
    auto it = generators.find(m);
    if (it == generators.end()) it = generators.emplace(m, insertion(m)).first;
    return it->second;
  };
  TwoVarOperator out;
  for (const auto& [word, a] : v.terms()) {
    if (word.level() != v.level()) fail(ErrorKind::Shape, "inhomogeneous null vector");
    TwoVarOperator w = TwoVarOperator::identity();
    for (int part : word.parts()) w = w * gen(part);
    out += a * w;
  }
  return out;
}

}  // namespace

TwoVarOperator derive_pde_slot3(const CorrelatorSpec& spec, const RationalPBW& p) {
  const Rational h1 = spec.h1(), h2 = spec.h2();
  return compose_word_sum(p, [&](int m) { return insertion_operator_slot3(m, h1, h2); });
}

TwoVarOperator derive_pde_slot2(const CorrelatorSpec& spec, const RationalPBW& q) {
  const Rational h1 = spec.h1(), h3 = spec.h3();
  return compose_word_sum(q, [&](int m) { return insertion_operator_slot2(m, h1, h3); });
}

ExponentPair channel_exponents(const CorrelatorSpec& spec, const KacLabel& channel) {
  if (!spec.allows(channel))
    fail(ErrorKind::Fusion, "channel " + to_string(channel) + " not allowed in " + to_string(spec));
  const Rational hc = conformal_weight(spec.model(), channel);
  return {spec.h4() - spec.h1() - hc, hc - spec.h2() - spec.h3()};
}

ExponentPair reference_anchor(const CorrelatorSpec& spec) {
  const auto chans = spec.channels();
  if (chans.empty()) fail(ErrorKind::Fusion, "no allowed channel in " + to_string(spec));
  return channel_exponents(spec, chans.front());
}

namespace {

// Terms a * monomial * g^(j)(chart variable).
using Expr = std::map<std::pair<Monomial, int>, Rational>;

void add_expr(Expr& e, const Monomial& m, int j, const Rational& a) {
  if (a == 0) return;
  auto [it, inserted] = e.try_emplace({m, j}, a);
  if (!inserted) {
    it->second += a;
    if (it->second == 0) e.erase(it);
  }
}

struct ChartDerivative {
  Monomial monomial;
  Rational coefficient;
};

// d(chart variable)/dz_variable as a signed monomial.
ChartDerivative chart_derivative(Chart::Kind kind, int variable) {
  if (kind == Chart::Kind::Product)
    return variable == 1 ? ChartDerivative{{-2, 1, 0}, -1} : ChartDerivative{{-1, 0, 0}, 1};
  return variable == 1 ? ChartDerivative{{0, -1, 0}, 1} : ChartDerivative{{1, -2, 0}, -1};
}

Expr differentiate(const Expr& e, Chart::Kind kind, int variable) {
  const auto dphi = chart_derivative(kind, variable);
  Expr out;
  for (const auto& [key, a] : e) {
    const auto& [m, j] = key;
    for (const auto& [dm, b] : differentiate(m, variable)) add_expr(out, dm, j, a * b);
    add_expr(out, m * dphi.monomial, j + 1, a * dphi.coefficient);
  }
  return out;
}

std::optional<int> as_int(const Rational& r) {
  if (!is_integer(r)) return std::nullopt;
  return numerator(r).convert_to<int>();
}

}  // namespace

ODESpec reduce_to_ode(const TwoVarOperator& op, const Chart& chart) {
  if (op.is_zero()) fail(ErrorKind::Reduction, "cannot reduce the zero operator");
  const bool product = chart.kind == Chart::Kind::Product;
  const Monomial prefactor = product ? Monomial{chart.a, chart.b, 0} : Monomial{0, chart.a, chart.b};

  std::map<DerivativeOrder, Expr> derived;
  auto derivative_of_ansatz = [&](DerivativeOrder d) -> const Expr& {
    if (auto it = derived.find(d); it != derived.end()) return it->second;
    Expr e{{{prefactor, 0}, Rational(1)}};
    for (int i = 0; i < d.d1; ++i) e = differentiate(e, chart.kind, 1);
    for (int i = 0; i < d.d2; ++i) e = differentiate(e, chart.kind, 2);
    return derived.emplace(d, std::move(e)).first->second;
  };

  Expr total;
  for (const auto& [key, a] : op.terms())
    for (const auto& [ekey, b] : derivative_of_ansatz(key.second))
      add_expr(total, key.first * ekey.first, ekey.second, a * b);
  if (total.empty()) fail(ErrorKind::Reduction, "operator annihilates the ansatz identically");

  // Rewrite each monomial as (overall power) * x^n * (1 -/+ x)^k.
  struct Piece {
    int j, n, k;
    Rational a;
  };
  std::vector<Piece> pieces;
  std::optional<Rational> degree;
  int nmin = INT_MAX, kmin = INT_MAX, order = 0;
  for (const auto& [key, a] : total) {
    const auto& [m, j] = key;
    const Rational d = m.total_degree();
    if (!degree) degree = d;
    if (*degree != d)
      fail(ErrorKind::Reduction, "operator is not homogeneous: residual z1 dependence after substitution");
    std::optional<int> n, k;
    if (product) {
      n = as_int(m.z2 - chart.b);
      k = as_int(m.diff);
    } else {
      n = as_int(m.diff - chart.b);
      k = as_int(m.z1);
    }
    if (!n || !k) fail(ErrorKind::Reduction, "non-integral power of the chart variable after substitution");
    pieces.push_back({j, *n, *k, a});
    nmin = std::min(nmin, *n);
    kmin = std::min(kmin, *k);
    order = std::max(order, j);
  }

  const Rational shift_sign = product ? Rational(-1) : Rational(1);
  std::vector<RationalPolynomial> coeffs(static_cast<std::size_t>(order) + 1);
  for (const auto& piece : pieces) {
    auto term = RationalPolynomial::linear_power(1, shift_sign, piece.k - kmin) *
                RationalPolynomial::monomial(piece.n - nmin, piece.a);
    coeffs[static_cast<std::size_t>(piece.j)] += term;
  }
  if (coeffs.back().is_zero()) fail(ErrorKind::Reduction, "leading coefficient cancels after substitution");
  return ODESpec(std::move(coeffs), product ? "z" : "u").normalized();
}

ODESpec product_ode(const CorrelatorSpec& spec, const ExponentPair& anchor) {
  const auto null = null_vector(spec.model(), spec.w3());
  return reduce_to_ode(derive_pde_slot3(spec, null.vector), Chart::product(anchor));
}

ODESpec iterate_ode(const CorrelatorSpec& spec) {
  const auto null = null_vector(spec.model(), spec.w2());
  return reduce_to_ode(derive_pde_slot2(spec, null.vector), Chart::iterate(spec.scaling_degree()));
}

bool equations_independent(const CorrelatorSpec& spec) {
  const auto anchor = reference_anchor(spec);
  const auto slot3 = product_ode(spec, anchor);
  const auto null2 = null_vector(spec.model(), spec.w2());
  const auto slot2 = reduce_to_ode(derive_pde_slot2(spec, null2.vector), Chart::product(anchor));
  return !proportional(slot3, slot2);
}

std::vector<CorrelatorSpec> correlators_with_null_level(const MinimalModel& model, int level) {
  const auto labels = canonical_labels(model);
  std::vector<CorrelatorSpec> out;
  for (const auto& w4 : labels)
    for (const auto& w1 : labels)
      for (const auto& w2 : labels)
        for (const auto& w3 : labels) {
          if (null_level(model, w3) != level) continue;
          CorrelatorSpec spec(model, w4, w1, w2, w3);
          if (!spec.channels().empty()) out.push_back(std::move(spec));
        }
  return out;
}

}  // namespace vir
