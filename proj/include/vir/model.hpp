#pragma once

#include "vir/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace vir {

/// Minimal model data for a coprime pair (p, q) with p, q > 1.
class MinimalModel {
 public:
  /// Throws ErrorKind::Range unless p, q > 1, p != q and gcd(p, q) = 1.
  MinimalModel(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }

  auto operator<=>(const MinimalModel&) const = default;

 private:
  int p_;
  int q_;
};

struct KacLabel {
  int m = 1;
  int n = 1;

  auto operator<=>(const KacLabel&) const = default;
};

std::string to_string(const KacLabel& label);
std::string to_string(const MinimalModel& model);

bool is_valid(const MinimalModel& model, const KacLabel& label);
void require_valid(const MinimalModel& model, const KacLabel& label);

/// The other representative (p - m, q - n) of the same weight.
KacLabel reflect(const MinimalModel& model, const KacLabel& label);

Rational central_charge(const MinimalModel& model);
Rational conformal_weight(const MinimalModel& model, const KacLabel& label);

/// Lexicographic minimum of {(m, n), (p - m, q - n)}.
KacLabel canonicalize(const MinimalModel& model, const KacLabel& label);

/// Lowest level of a null vector in the Verma module of this label:
/// min(m n, (p - m)(q - n)).
int null_level(const MinimalModel& model, const KacLabel& label);

struct KacEntry {
  KacLabel label;
  Rational weight;
};

/// One entry per reflection class, canonical labels in lexicographic order.
std::vector<KacEntry> kac_table(const MinimalModel& model);

/// Canonical labels only, same order as kac_table.
std::vector<KacLabel> canonical_labels(const MinimalModel& model);

// Tensor products of minimal models.

class TensorModel {
 public:
  /// Throws ErrorKind::Shape when `factors` is empty.
  explicit TensorModel(std::vector<MinimalModel> factors);

  const std::vector<MinimalModel>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  const MinimalModel& operator[](std::size_t i) const { return factors_[i]; }

  auto operator<=>(const TensorModel&) const = default;

 private:
  std::vector<MinimalModel> factors_;
};

struct TensorLabel {
  std::vector<KacLabel> labels;

  auto operator<=>(const TensorLabel&) const = default;
};

std::string to_string(const TensorLabel& label);

void require_valid(const TensorModel& model, const TensorLabel& label);
TensorLabel canonicalize(const TensorModel& model, const TensorLabel& label);
TensorLabel vacuum_label(const TensorModel& model);

/// Every canonical tensor label, factorwise lexicographic.
std::vector<TensorLabel> canonical_labels(const TensorModel& model);

Rational tensor_central_charge(const TensorModel& model);
Rational tensor_weight(const TensorModel& model, const TensorLabel& label);

}  // namespace vir
