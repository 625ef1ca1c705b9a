#pragma once

#include "vir/model.hpp"
#include "vir/ode.hpp"
#include "vir/operator.hpp"
#include "vir/verma.hpp"

#include <vector>

namespace vir {

/// Four-point function <w4', Y1(w1, z1) Y2(w2, z2) w3> of lowest weight
/// vectors in one minimal model. Labels are stored canonicalized.
class CorrelatorSpec {
 public:
  CorrelatorSpec(const MinimalModel& model, const KacLabel& w4, const KacLabel& w1, const KacLabel& w2,
                 const KacLabel& w3);

  const MinimalModel& model() const { return model_; }
  const KacLabel& w4() const { return w4_; }
  const KacLabel& w1() const { return w1_; }
  const KacLabel& w2() const { return w2_; }
  const KacLabel& w3() const { return w3_; }

  Rational h4() const { return conformal_weight(model_, w4_); }
  Rational h1() const { return conformal_weight(model_, w1_); }
  Rational h2() const { return conformal_weight(model_, w2_); }
  Rational h3() const { return conformal_weight(model_, w3_); }

  /// h4 - h1 - h2 - h3, the total scaling degree.
  Rational scaling_degree() const { return h4() - h1() - h2() - h3(); }

  /// The same correlator with w1 and w2 exchanged.
  CorrelatorSpec swapped() const { return {model_, w4_, w2_, w1_, w3_}; }

  /// Intermediate labels c with N_{w2 w3}^{c} = N_{w1 c}^{w4} = 1, canonical order.
  std::vector<KacLabel> channels() const;
  bool allows(const KacLabel& channel) const;

  auto operator<=>(const CorrelatorSpec&) const = default;

 private:
  MinimalModel model_;
  KacLabel w4_, w1_, w2_, w3_;
};

std::string to_string(const CorrelatorSpec& spec);

struct ExponentPair {
  Rational t1;
  Rational t2;
  bool operator==(const ExponentPair&) const = default;
};

/// The operator by which L(-m) acting on the vector at 0 is represented:
/// -(z1^(1-m) d1 + h1 (1-m) z1^(-m) + z2^(1-m) d2 + h2 (1-m) z2^(-m)).
TwoVarOperator insertion_operator_slot3(int m, const Rational& h1, const Rational& h2);

/// L(-m) acting on the vector at z2, transported through the skew-symmetry
/// isomorphism: the slot-3 rule in the variables (z1 - z2, e^{i pi} z2) with
/// the vector at 0 now inserted at e^{i pi} z2, written back in (z1, z2).
TwoVarOperator insertion_operator_slot2(int m, const Rational& h1, const Rational& h3);

/// Throws ErrorKind::Shape for a zero or level-0 vector.
TwoVarOperator derive_pde_slot3(const CorrelatorSpec& spec, const RationalPBW& p);
TwoVarOperator derive_pde_slot2(const CorrelatorSpec& spec, const RationalPBW& q);

/// t2 = h_c - h2 - h3, t1 = h4 - h1 - h_c. Throws ErrorKind::Fusion if the
/// channel is not allowed.
ExponentPair channel_exponents(const CorrelatorSpec& spec, const KacLabel& channel);

/// Ansatz used to turn a homogeneous two-variable operator into an ODE.
struct Chart {
  enum class Kind {
    Product,  // F = z1^a z2^b g(z),  z = z2 / z1
    Iterate,  // F = z2^a (z1 - z2)^b g(u),  u = (z1 - z2) / z2
  };
  Kind kind = Kind::Product;
  Rational a = 0;
  Rational b = 0;

  static Chart product(const ExponentPair& anchor) { return {Kind::Product, anchor.t1, anchor.t2}; }
  static Chart iterate(const Rational& z2_power, const Rational& diff_power = 0) {
    return {Kind::Iterate, z2_power, diff_power};
  }
};

/// Substitutes the chart ansatz, divides out the common monomial and returns
/// the normalized ODE for g. Throws ErrorKind::Reduction if the operator is
/// not homogeneous or leaves non-integral powers of the chart variables.
ODESpec reduce_to_ode(const TwoVarOperator& op, const Chart& chart);
inline ODESpec reduce_to_ode(const TwoVarOperator& op, const ExponentPair& anchor) {
  return reduce_to_ode(op, Chart::product(anchor));
}

/// The reference anchor: exponents of the first allowed channel. Throws
/// ErrorKind::Fusion if no channel is allowed.
ExponentPair reference_anchor(const CorrelatorSpec& spec);

/// Slot-3 equation from the lowest null vector of w3, in the product chart.
ODESpec product_ode(const CorrelatorSpec& spec, const ExponentPair& anchor);
inline ODESpec product_ode(const CorrelatorSpec& spec) { return product_ode(spec, reference_anchor(spec)); }

/// Slot-2 equation from the lowest null vector of w2, in the iterate chart
/// F = z2^(h4 - h1 - h2 - h3) g(u).
ODESpec iterate_ode(const CorrelatorSpec& spec);

/// False when the slot-2 equation, reduced in the product chart, is
/// proportional to the slot-3 equation, so that the pair carries no extra
/// information.
bool equations_independent(const CorrelatorSpec& spec);

/// Every correlator of canonical labels whose w3 has a null vector at exactly
/// `level` and which admits at least one channel, in lexicographic order of
/// (w4, w1, w2, w3).
std::vector<CorrelatorSpec> correlators_with_null_level(const MinimalModel& model, int level);

}  // namespace vir
