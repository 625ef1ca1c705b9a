#pragma once

#include "vir/errors.hpp"
#include "vir/model.hpp"
#include "vir/rational.hpp"

#include <compare>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace vir {

/// A PBW monomial L(-m_1) ... L(-m_k) with m_1 >= ... >= m_k >= 1.
class Partition {
 public:
  Partition() = default;
  /// Throws ErrorKind::Shape unless the parts are positive and nonincreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int level() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  int front() const { return parts_.front(); }

  /// Drops the first (largest) part.
  Partition tail() const;
  /// L(-k) times this monomial, assuming k >= front().
  Partition prepend(int k) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

/// All partitions of `level`, reverse-lexicographic: (level) first, (1,...,1) last.
std::vector<Partition> pbw_basis(int level);

template <typename Scalar>
struct VermaParams {
  Scalar c;
  Scalar h;
  friend bool operator==(const VermaParams&, const VermaParams&) = default;
};

/// Homogeneous element of U(L_-) at a fixed level, keyed by PBW monomial.
template <typename Scalar>
class PBWVector {
 public:
  using Terms = std::map<Partition, Scalar>;

  explicit PBWVector(int level = 0) : level_(level) {}
  PBWVector(int level, const Terms& terms) : level_(level) {
    for (const auto& [p, a] : terms) add(p, a);
  }

  static PBWVector monomial(const Partition& p) {
    PBWVector v(p.level());
    v.add(p, Scalar(1));
    return v;
  }

  int level() const { return level_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Throws ErrorKind::Shape when p.level() differs from level().
  void add(const Partition& p, const Scalar& a) {
    if (p.level() != level_)
      fail(ErrorKind::Shape, "monomial " + to_string(p) + " does not have level " + std::to_string(level_));
    if (a == Scalar(0)) return;
    auto [it, inserted] = terms_.try_emplace(p, a);
    if (!inserted) {
      it->second += a;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  PBWVector& operator+=(const PBWVector& o) {
    if (o.level_ != level_ && !o.is_zero()) fail(ErrorKind::Shape, "adding vectors of different level");
    for (const auto& [p, a] : o.terms_) add(p, a);
    return *this;
  }
  PBWVector& operator*=(const Scalar& s) {
    if (s == Scalar(0)) terms_.clear();
    for (auto& [p, a] : terms_) a *= s;
    return *this;
  }
  friend PBWVector operator+(PBWVector a, const PBWVector& b) { return a += b; }
  friend PBWVector operator*(const Scalar& s, PBWVector v) { return v *= s; }
  friend bool operator==(const PBWVector& a, const PBWVector& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
  }

  /// Coordinates in pbw_basis(level()).
  Vector<Scalar> coordinates() const {
    const auto basis = pbw_basis(level_);
    Vector<Scalar> x(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) x(static_cast<Eigen::Index>(i)) = coefficient(basis[i]);
    return x;
  }
  static PBWVector from_coordinates(int level, const Vector<Scalar>& x) {
    const auto basis = pbw_basis(level);
    PBWVector v(level);
    for (std::size_t i = 0; i < basis.size(); ++i) v.add(basis[i], x(static_cast<Eigen::Index>(i)));
    return v;
  }

 private:
  int level_;
  Terms terms_;
};

/// The Verma module M(c, h) realized on PBW monomials applied to its lowest
/// weight vector. Normal ordering uses the Virasoro bracket
/// [L(m), L(n)] = (m - n) L(m + n) + (m^3 - m)/12 delta_{m+n,0} c.
/// Results are memoized per instance; an instance is not thread-safe.
template <typename Scalar>
class VermaModule {
 public:
  using Terms = typename PBWVector<Scalar>::Terms;

  explicit VermaModule(VermaParams<Scalar> params) : params_(std::move(params)) {}

  const VermaParams<Scalar>& params() const { return params_; }

  /// L(-k) v, normal ordered, k >= 1.
  PBWVector<Scalar> lower(int k, const PBWVector<Scalar>& v) {
    PBWVector<Scalar> out(v.level() + k);
    for (const auto& [p, a] : v.terms()) accumulate(out, lower_monomial(k, p), a);
    return out;
  }

  /// L(m) v for m >= 1; the zero vector of level v.level() - m when that is negative.
  PBWVector<Scalar> raise(int m, const PBWVector<Scalar>& v) {
    PBWVector<Scalar> out(v.level() - m);
    if (v.level() < m) return out;
    for (const auto& [p, a] : v.terms()) accumulate(out, raise_monomial(m, p), a);
    return out;
  }

  /// Matrix of L(m): columns indexed by pbw_basis(level), rows by pbw_basis(level - m).
  Matrix<Scalar> raising_matrix(int m, int level) {
    const auto from = pbw_basis(level);
    const auto to = pbw_basis(level - m);
    Matrix<Scalar> r = Matrix<Scalar>::Zero(static_cast<Eigen::Index>(to.size()),
                                            static_cast<Eigen::Index>(from.size()));
    for (std::size_t j = 0; j < from.size(); ++j) {
      const auto image = raise(m, PBWVector<Scalar>::monomial(from[j]));
      for (std::size_t i = 0; i < to.size(); ++i)
        r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = image.coefficient(to[i]);
    }
    return r;
  }

  /// Shapovalov form at `level`: entry (i, j) is the vacuum coefficient of
  /// L(m_k) ... L(m_1) applied to basis vector j, where basis vector i is
  /// L(-m_1) ... L(-m_k).
  Matrix<Scalar> gram(int level) {
    const auto basis = pbw_basis(level);
    const auto n = static_cast<Eigen::Index>(basis.size());
    Matrix<Scalar> g(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i) {
        auto w = PBWVector<Scalar>::monomial(basis[static_cast<std::size_t>(j)]);
        for (int part : basis[static_cast<std::size_t>(i)].parts()) w = raise(part, w);
        g(i, j) = w.coefficient(Partition{});
      }
    return g;
  }

 private:
  static void accumulate(PBWVector<Scalar>& out, const Terms& terms, const Scalar& scale) {
    for (const auto& [p, b] : terms) out.add(p, scale * b);
  }

  const Terms& lower_monomial(int k, const Partition& p) {
    const auto key = std::make_pair(k, p);
    if (auto it = lower_cache_.find(key); it != lower_cache_.end()) return it->second;
    PBWVector<Scalar> out(p.level() + k);
    if (p.empty() || k >= p.front()) {
      out.add(p.prepend(k), Scalar(1));
    } else {
      // L(-k) L(-a) X = L(-a) L(-k) X + (a - k) L(-k-a) X with k < a.
      const int a = p.front();
      const Partition rest = p.tail();
      for (const auto& [q, b] : lower_monomial(k, rest)) accumulate(out, lower_monomial(a, q), b);
      accumulate(out, lower_monomial(k + a, rest), Scalar(a - k));
    }
    return lower_cache_.emplace(key, out.terms()).first->second;
  }

  const Terms& raise_monomial(int m, const Partition& p) {
    const auto key = std::make_pair(m, p);
    if (auto it = raise_cache_.find(key); it != raise_cache_.end()) return it->second;
    PBWVector<Scalar> out(p.level() - m);
    if (!p.empty() && p.level() >= m) {
      // L(m) L(-a) X = L(-a) L(m) X + (m + a) L(m - a) X + delta_{m,a} (m^3 - m)/12 c X.
      const int a = p.front();
      const Partition rest = p.tail();
      if (rest.level() >= m)
        for (const auto& [q, b] : raise_monomial(m, rest)) accumulate(out, lower_monomial(a, q), b);
      const Scalar factor(m + a);
      if (m > a) {
        accumulate(out, raise_monomial(m - a, rest), factor);
      } else if (m == a) {
        const Scalar weight = params_.h + Scalar(rest.level());
        const Scalar central = params_.c * Scalar(m * m * m - m) / Scalar(12);
        out.add(rest, factor * weight + central);
      } else {
        accumulate(out, lower_monomial(a - m, rest), factor);
      }
    }
    return raise_cache_.emplace(key, out.terms()).first->second;
  }

  VermaParams<Scalar> params_;
  std::map<std::pair<int, Partition>, Terms> lower_cache_;
  std::map<std::pair<int, Partition>, Terms> raise_cache_;
};

using RationalVerma = VermaModule<Rational>;
using RationalPBW = PBWVector<Rational>;

inline VermaParams<Rational> verma_params(const MinimalModel& model, const KacLabel& label) {
  return {central_charge(model), conformal_weight(model, label)};
}

template <typename Scalar>
PBWVector<Scalar> apply_raising(const VermaParams<Scalar>& params, int m, const PBWVector<Scalar>& v) {
  VermaModule<Scalar> module(params);
  return module.raise(m, v);
}

template <typename Scalar>
Matrix<Scalar> gram_matrix(const VermaParams<Scalar>& params, int level) {
  VermaModule<Scalar> module(params);
  return module.gram(level);
}

/// Exact Gram matrix at one level together with the parameters it belongs to;
/// rows and columns follow pbw_basis(level).
struct GramMatrix {
  VermaParams<Rational> params;
  int level = 0;
  RationalMatrix entries;
};

bool operator==(const GramMatrix& a, const GramMatrix& b);

/// Supplies Gram matrices, for instance from an on-disk cache.
class GramProvider {
 public:
  virtual ~GramProvider() = default;
  virtual RationalMatrix gram(const VermaParams<Rational>& params, int level) = 0;
};

GramMatrix gram_record(const VermaParams<Rational>& params, int level, GramProvider* provider = nullptr);

Rational kac_determinant(const VermaParams<Rational>& params, int level, GramProvider* provider = nullptr);

struct SingularVector {
  int level;
  RationalPBW vector;
};

/// Primitive singular vectors through `max_level`: singular vectors of the
/// Verma module not contained in the submodule generated by the Gram kernel at
/// lower levels. Each is normalized so its first nonzero coefficient in
/// pbw_basis order is 1.
std::vector<SingularVector> singular_vectors(const VermaParams<Rational>& params, int max_level,
                                             GramProvider* provider = nullptr);
std::vector<SingularVector> singular_vectors(const MinimalModel& model, const KacLabel& label,
                                             int max_level, GramProvider* provider = nullptr);

/// The primitive singular vector of lowest level for a Kac label.
SingularVector null_vector(const MinimalModel& model, const KacLabel& label);

/// True iff L(1) and L(2) both annihilate P exactly.
bool verify_singular(const VermaParams<Rational>& params, const RationalPBW& p);

/// "L(-2) - 3/4 L(-1)^2" style rendering, terms in pbw_basis order.
std::string to_string(const RationalPBW& v);

}  // namespace vir
