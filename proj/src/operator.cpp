#include "vir/operator.hpp"

#include <algorithm>

namespace vir {

void add_term(MonomialSum& sum, const Monomial& m, const Rational& a) {
  if (a == 0) return;
  auto [it, inserted] = sum.try_emplace(m, a);
  if (!inserted) {
    it->second += a;
    if (it->second == 0) sum.erase(it);
  }
}

MonomialSum differentiate(const Monomial& m, int variable) {
  MonomialSum out;
  if (variable == 1) {
    add_term(out, {m.z1 - 1, m.z2, m.diff}, m.z1);
    add_term(out, {m.z1, m.z2, m.diff - 1}, m.diff);
  } else {
    add_term(out, {m.z1, m.z2 - 1, m.diff}, m.z2);
    add_term(out, {m.z1, m.z2, m.diff - 1}, -m.diff);
  }
  return out;
}

MonomialSum differentiate(const MonomialSum& f, int variable) {
  MonomialSum out;
  for (const auto& [m, a] : f)
    for (const auto& [dm, b] : differentiate(m, variable)) add_term(out, dm, a * b);
  return out;
}

TwoVarOperator TwoVarOperator::term(const Rational& a, const Monomial& m, DerivativeOrder d) {
  TwoVarOperator op;
  op.add(m, d, a);
  return op;
}

int TwoVarOperator::order() const {
  int k = -1;
  for (const auto& [key, a] : terms_) k = std::max(k, key.second.d1 + key.second.d2);
  return k;
}

void TwoVarOperator::add(const Monomial& m, DerivativeOrder d, const Rational& a) {
  if (a == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{m, d}, a);
  if (!inserted) {
    it->second += a;
    if (it->second == 0) terms_.erase(it);
  }
}

TwoVarOperator& TwoVarOperator::operator+=(const TwoVarOperator& o) {
  for (const auto& [key, a] : o.terms_) add(key.first, key.second, a);
  return *this;
}

TwoVarOperator operator*(const Rational& s, TwoVarOperator op) {
  if (s == 0) return {};
  for (auto& [key, a] : op.terms_) a *= s;
  return op;
}

namespace {

long binomial(int n, int k) {
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

TwoVarOperator operator*(const TwoVarOperator& a, const TwoVarOperator& b) {
  TwoVarOperator out;
  for (const auto& [ka, ca] : a.terms_) {
    const auto& [ma, da] = ka;
    for (const auto& [kb, cb] : b.terms_) {
      const auto& [mb, db] = kb;
      // d1^r d2^s (m f) = sum_{i,j} C(r,i) C(s,j) (d1^i d2^j m) d1^(r-i) d2^(s-j) f
      MonomialSum row{{mb, Rational(1)}};
      for (int i = 0; i <= da.d1; ++i) {
        MonomialSum cell = row;
        for (int j = 0; j <= da.d2; ++j) {
          const Rational weight = ca * cb * Rational(binomial(da.d1, i) * binomial(da.d2, j));
          const DerivativeOrder d{da.d1 - i + db.d1, da.d2 - j + db.d2};
          for (const auto& [m, c] : cell) out.add(ma * m, d, weight * c);
          cell = differentiate(cell, 2);
        }
        row = differentiate(row, 1);
      }
    }
  }
  return out;
}

MonomialSum TwoVarOperator::apply(const MonomialSum& f) const {
  MonomialSum out;
  for (const auto& [key, a] : terms_) {
    MonomialSum g = f;
    for (int i = 0; i < key.second.d1; ++i) g = differentiate(g, 1);
    for (int j = 0; j < key.second.d2; ++j) g = differentiate(g, 2);
    for (const auto& [m, c] : g) add_term(out, key.first * m, a * c);
  }
  return out;
}

TwoVarOperator::Loci TwoVarOperator::singular_loci() const {
  Loci loci;
  for (const auto& [key, a] : terms_) {
    loci.z1_zero = loci.z1_zero || key.first.z1 < 0;
    loci.z2_zero = loci.z2_zero || key.first.z2 < 0;
    loci.diagonal = loci.diagonal || key.first.diff < 0;
  }
  return loci;
}

std::string to_string(const Monomial& m) {
  std::string out;
  auto factor = [&](const char* name, const Rational& e) {
    if (e == 0) return;
    if (!out.empty()) out += " ";
    out += name;
    if (e != 1) out += "^" + (e < 0 || !is_integer(e) ? "(" + to_display_string(e) + ")" : to_display_string(e));
  };
  factor("z1", m.z1);
  factor("z2", m.z2);
  factor("(z1-z2)", m.diff);
  return out.empty() ? "1" : out;
}

std::string to_string(const TwoVarOperator& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (const auto& [key, a] : op.terms()) {
    if (!out.empty()) out += a < 0 ? " - " : " + ";
    else if (a < 0) out += "-";
    out += to_display_string(abs(a));
    out += " " + to_string(key.first);
    for (int i = 0; i < key.second.d1; ++i) out += " d1";
    for (int j = 0; j < key.second.d2; ++j) out += " d2";
  }
  return out;
}

}  // namespace vir
