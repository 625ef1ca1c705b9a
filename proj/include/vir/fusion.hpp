#pragma once

#include "vir/model.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace vir {

/// Fusion multiplicity N_{a b}^{c} for a single minimal model (0 or 1).
///
/// The eight strict inequalities and the two parity conditions are tested for
/// every choice of representative, (m, n) or (p - m, q - n), in each slot; the
/// rule is 1 if any choice passes. This makes it a function of reflection
/// classes.
int fusion_rule(const MinimalModel& model, const KacLabel& a, const KacLabel& b, const KacLabel& c);

/// The raw condition set on one fixed choice of representatives.
bool fusion_conditions_hold(const MinimalModel& model, const KacLabel& a, const KacLabel& b,
                            const KacLabel& c);

/// Canonical labels c with N_{a b}^{c} = 1, lexicographic order.
std::vector<KacLabel> fuse(const MinimalModel& model, const KacLabel& a, const KacLabel& b);

/// Product of the per-factor fusion rules.
long tensor_fusion_rule(const TensorModel& model, const TensorLabel& a, const TensorLabel& b,
                        const TensorLabel& c);

/// Factorwise fusion of two tensor labels; multiplicity per canonical result.
std::map<TensorLabel, long> tensor_fuse(const TensorModel& model, const TensorLabel& a,
                                        const TensorLabel& b);

/// Dense multiplicity table over the canonical labels of a model.
class FusionTable {
 public:
  explicit FusionTable(const MinimalModel& model);

  const MinimalModel& model() const { return model_; }
  const std::vector<KacLabel>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

  /// Index of the canonical class of `label`.
  std::size_t index(const KacLabel& label) const;

  long operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return entries_[(a * size() + b) * size() + c];
  }
  long operator()(const KacLabel& a, const KacLabel& b, const KacLabel& c) const {
    return (*this)(index(a), index(b), index(c));
  }

 private:
  MinimalModel model_;
  std::vector<KacLabel> labels_;
  std::vector<long> entries_;
};

/// Memoized table; safe to call concurrently.
std::shared_ptr<const FusionTable> fusion_table(const MinimalModel& model);

struct RingReport {
  bool passed = true;
  std::string failed_axiom;                 // empty when passed
  std::vector<KacLabel> counterexample;     // label tuple that violated it
  long checked_tuples = 0;
};

/// Commutativity, unit law, slot-permutation symmetry and associativity, exhaustively.
RingReport verify_ring_axioms(const MinimalModel& model);

}  // namespace vir
