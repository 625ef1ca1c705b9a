#pragma once

#include "vir/rational.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace vir {

/// Dense univariate polynomial, coefficients in ascending powers. The zero
/// polynomial has no coefficients.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(Scalar constant) : c_{std::move(constant)} { trim(); }  // NOLINT(implicit)

  static Polynomial monomial(int power, Scalar a = Scalar(1)) {
    std::vector<Scalar> c(static_cast<std::size_t>(power) + 1, Scalar(0));
    c.back() = std::move(a);
    return Polynomial(std::move(c));
  }
  /// (a + b x)^n
  static Polynomial linear_power(const Scalar& a, const Scalar& b, int n) {
    Polynomial out(Scalar(1));
    const Polynomial f(std::vector<Scalar>{a, b});
    for (int i = 0; i < n; ++i) out = out * f;
    return out;
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest power with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != Scalar(0)) return static_cast<int>(i);
    return -1;
  }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar operator[](int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Scalar(0);
  }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  template <typename T, typename Convert>
  Polynomial<T> cast(Convert convert) const {
    std::vector<T> out;
    for (const auto& x : c_) out.push_back(convert(x));
    return Polynomial<T>(std::move(out));
  }

  Polynomial derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  /// p(a + b x)
  Polynomial compose_linear(const Scalar& a, const Scalar& b) const {
    Polynomial acc;
    const Polynomial f(std::vector<Scalar>{a, b});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * f + Polynomial(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += Scalar(-1) * o; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Scalar& s, Polynomial p) {
    for (auto& x : p.c_) x *= s;
    p.trim();
    return p;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division; requires a field scalar.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    Polynomial q, r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
      const Scalar f = r.leading() / d.leading();
      const auto t = monomial(r.degree() - d.degree(), f);
      q += t;
      r -= t * d;
    }
    return {q, r};
  }

  Polynomial monic() const { return is_zero() ? *this : (Scalar(1) / leading()) * *this; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using RationalPolynomial = Polynomial<Rational>;

/// Monic gcd over the rationals; gcd(0, 0) = 0.
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// "1/2 - 3*z + z^2" style rendering.
std::string to_string(const RationalPolynomial& p, const std::string& var = "z");

struct RationalRoots {
  std::vector<Rational> roots;   // with multiplicity, ascending
  RationalPolynomial remainder;  // cofactor with no rational roots
};

/// Exact rational roots with multiplicity. Candidates come from numeric
/// eigenvalues of the companion matrix and are confirmed by exact evaluation.
RationalRoots rational_roots(const RationalPolynomial& p);

}  // namespace vir
