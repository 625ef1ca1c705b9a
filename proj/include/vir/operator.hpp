#pragma once

#include "vir/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <tuple>

namespace vir {

/// z1^a z2^b (z1 - z2)^e with rational exponents.
struct Monomial {
  Rational z1 = 0;
  Rational z2 = 0;
  Rational diff = 0;

  bool operator==(const Monomial&) const = default;
  friend bool operator<(const Monomial& x, const Monomial& y) {
    return std::tie(x.z1, x.z2, x.diff) < std::tie(y.z1, y.z2, y.diff);
  }
  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    return {x.z1 + y.z1, x.z2 + y.z2, x.diff + y.diff};
  }
  Rational total_degree() const { return z1 + z2 + diff; }
};

using MonomialSum = std::map<Monomial, Rational>;

void add_term(MonomialSum& sum, const Monomial& m, const Rational& a);

/// d/dz1 (variable == 1) or d/dz2 (variable == 2) of a monomial.
MonomialSum differentiate(const Monomial& m, int variable);
MonomialSum differentiate(const MonomialSum& f, int variable);

struct DerivativeOrder {
  int d1 = 0;
  int d2 = 0;
  auto operator<=>(const DerivativeOrder&) const = default;
};

/// Linear differential operator in two variables:
/// sum of a * monomial(z1, z2) * d^r/dz1^r d^s/dz2^s.
class TwoVarOperator {
 public:
  using Key = std::pair<Monomial, DerivativeOrder>;
  using Terms = std::map<Key, Rational>;

  TwoVarOperator() = default;

  static TwoVarOperator identity() { return term(1, {}, {}); }
  static TwoVarOperator term(const Rational& a, const Monomial& m, DerivativeOrder d);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Highest total derivative order; -1 for the zero operator.
  int order() const;

  void add(const Monomial& m, DerivativeOrder d, const Rational& a);

  TwoVarOperator& operator+=(const TwoVarOperator& o);
  friend TwoVarOperator operator+(TwoVarOperator a, const TwoVarOperator& b) { return a += b; }
  friend TwoVarOperator operator*(const Rational& s, TwoVarOperator op);
  /// Composition: (a * b) f = a(b(f)).
  friend TwoVarOperator operator*(const TwoVarOperator& a, const TwoVarOperator& b);
  friend bool operator==(const TwoVarOperator& a, const TwoVarOperator& b) { return a.terms_ == b.terms_; }

  /// Action on an explicit sum of monomials.
  MonomialSum apply(const MonomialSum& f) const;

  struct Loci {
    bool z1_zero = false;
    bool z2_zero = false;
    bool diagonal = false;  // z1 = z2
    auto operator<=>(const Loci&) const = default;
  };
  /// Loci where some coefficient monomial has a negative exponent.
  Loci singular_loci() const;

 private:
  Terms terms_;
};

std::string to_string(const Monomial& m);
std::string to_string(const TwoVarOperator& op);

}  // namespace vir
