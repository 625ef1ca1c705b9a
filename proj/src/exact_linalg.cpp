#include "vir/exact_linalg.hpp"

#include <utility>

namespace vir {

namespace {

Integer lcm_of(const Integer& a, const Integer& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

void divide_row_by_content(Matrix<Integer>& m, Eigen::Index row) {
  Integer g = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    if (m(row, j) != 0) g = boost::multiprecision::gcd(g, m(row, j));
  if (g > 1)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) /= g;
}

// Row echelon form by fraction-free elimination with content removal.
// Returns pivot columns in row order.
std::vector<Eigen::Index> echelon(Matrix<Integer>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Integer f = m(r, col);
      const Integer piv = m(row, col);
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(r, j) = piv * m(r, j) - f * m(row, j);
      divide_row_by_content(m, r);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix<Integer> clear_denominators(const RationalMatrix& a) {
  Matrix<Integer> out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < a.cols(); ++j) l = lcm_of(l, denominator(a(i, j)));
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = numerator(a(i, j)) * (l / denominator(a(i, j)));
  }
  return out;
}

Rational determinant(const RationalMatrix& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) return 0;
  if (n == 0) return 1;
  Rational scale = 1;
  Matrix<Integer> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < n; ++j) l = lcm_of(l, denominator(a(i, j)));
    scale /= Rational(l);
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = numerator(a(i, j)) * (l / denominator(a(i, j)));
  }
  // Bareiss: every intermediate division is exact.
  int sign = 1;
  Integer prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.row(r).swap(m.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return Rational(m(n - 1, n - 1)) * scale * sign;
}

Eigen::Index rank(const RationalMatrix& a) {
  auto m = clear_denominators(a);
  return static_cast<Eigen::Index>(echelon(m).size());
}

RationalMatrix nullspace(const RationalMatrix& a) {
  auto m = clear_denominators(a);
  const auto pivots = echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);

  RationalMatrix basis = RationalMatrix::Zero(a.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Eigen::Index f = free[k];
    basis(f, static_cast<Eigen::Index>(k)) = 1;
    // After full reduction each pivot row reads piv * x_pc + sum_free m(r, f) x_f = 0.
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const auto row = static_cast<Eigen::Index>(r);
      basis(pivots[r], static_cast<Eigen::Index>(k)) = -Rational(m(row, f)) / Rational(m(row, pivots[r]));
    }
  }
  return basis;
}

}  // namespace vir
