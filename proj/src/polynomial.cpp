#include "vir/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>

namespace vir {

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string to_string(const RationalPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    Rational a = p[i];
    if (a == 0) continue;
    if (first) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    a = abs(a);
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty())
      out += to_display_string(a);
    else if (a == 1)
      out += mono;
    else
      out += to_display_string(a) + "*" + mono;
    first = false;
  }
  return out;
}

namespace {

// Continued-fraction convergents of x with denominators up to max_den.
std::vector<Rational> convergents(double x, long max_den) {
  std::vector<Rational> out;
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int iter = 0; iter < 40; ++iter) {
    const double fl = std::floor(r);
    if (std::abs(fl) > 1e15) break;
    const Integer a(static_cast<long long>(fl));
    const Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    out.emplace_back(Rational(h2) / Rational(k2));
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    const double frac = r - fl;
    if (frac < 1e-14) break;
    r = 1.0 / frac;
  }
  return out;
}

}  // namespace

RationalRoots rational_roots(const RationalPolynomial& p) {
  RationalRoots result;
  RationalPolynomial rest = p;
  while (rest.degree() >= 1) {
    // Exact root at 0 first; it is common and the companion matrix handles it poorly in bulk.
    if (rest[0] == 0) {
      result.roots.emplace_back(0);
      rest = rest.divmod(RationalPolynomial(std::vector<Rational>{0, 1})).first;
      continue;
    }
    const int n = rest.degree();
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    const double lead = to_double(rest.leading());
    for (int i = 0; i < n; ++i) companion(0, i) = -to_double(rest[n - 1 - i]) / lead;
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    const Eigen::VectorXcd eig = Eigen::EigenSolver<Eigen::MatrixXd>(companion, false).eigenvalues();

    bool found = false;
    for (Eigen::Index i = 0; i < eig.size() && !found; ++i) {
      const auto z = eig(i);
      if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
      for (const auto& cand : convergents(z.real(), 1000000)) {
        if (std::abs(to_double(cand) - z.real()) > 1e-6 * std::max(1.0, std::abs(z.real()))) continue;
        if (rest(cand) == 0) {
          result.roots.push_back(cand);
          rest = rest.divmod(RationalPolynomial(std::vector<Rational>{-cand, 1})).first;
          found = true;
          break;
        }
      }
    }
    if (!found) break;
  }
  std::sort(result.roots.begin(), result.roots.end());
  result.remainder = rest;
  return result;
}

}  // namespace vir
