#include "vir/fusion.hpp"

#include "vir/errors.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace vir {

bool fusion_conditions_hold(const MinimalModel& model, const KacLabel& a, const KacLabel& b,
                            const KacLabel& c) {
  auto ok = [](int x, int y, int z, int bound) {
    const int sum = x + y + z;
    return sum < 2 * bound && sum % 2 == 1 && x < y + z && y < z + x && z < x + y;
  };
  return ok(a.m, b.m, c.m, model.p()) && ok(a.n, b.n, c.n, model.q());
}

int fusion_rule(const MinimalModel& model, const KacLabel& a, const KacLabel& b, const KacLabel& c) {
  require_valid(model, a);
  require_valid(model, b);
  require_valid(model, c);
  const std::array<KacLabel, 2> as{a, reflect(model, a)};
  const std::array<KacLabel, 2> bs{b, reflect(model, b)};
  const std::array<KacLabel, 2> cs{c, reflect(model, c)};
  for (const auto& x : as)
    for (const auto& y : bs)
      for (const auto& z : cs)
        if (fusion_conditions_hold(model, x, y, z)) return 1;
  return 0;
}

std::vector<KacLabel> fuse(const MinimalModel& model, const KacLabel& a, const KacLabel& b) {
  std::vector<KacLabel> out;
  for (const auto& c : canonical_labels(model))
    if (fusion_rule(model, a, b, c)) out.push_back(c);
  return out;
}

long tensor_fusion_rule(const TensorModel& model, const TensorLabel& a, const TensorLabel& b,
                        const TensorLabel& c) {
  require_valid(model, a);
  require_valid(model, b);
  require_valid(model, c);
  long n = 1;
  for (std::size_t i = 0; i < model.size() && n != 0; ++i)
    n *= fusion_rule(model[i], a.labels[i], b.labels[i], c.labels[i]);
  return n;
}

std::map<TensorLabel, long> tensor_fuse(const TensorModel& model, const TensorLabel& a,
                                        const TensorLabel& b) {
  require_valid(model, a);
  require_valid(model, b);
  std::map<TensorLabel, long> out{{TensorLabel{}, 1}};
  for (std::size_t i = 0; i < model.size(); ++i) {
    std::map<TensorLabel, long> next;
    for (const auto& [prefix, mult] : out)
      for (const auto& c : fuse(model[i], a.labels[i], b.labels[i])) {
        auto t = prefix;
        t.labels.push_back(c);
        next[t] += mult;
      }
    out = std::move(next);
  }
  return out;
}

FusionTable::FusionTable(const MinimalModel& model) : model_(model), labels_(canonical_labels(model)) {
  const std::size_t k = labels_.size();
  entries_.resize(k * k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        entries_[(a * k + b) * k + c] = fusion_rule(model_, labels_[a], labels_[b], labels_[c]);
}

std::size_t FusionTable::index(const KacLabel& label) const {
  const auto canon = canonicalize(model_, label);
  auto it = std::lower_bound(labels_.begin(), labels_.end(), canon);
  return static_cast<std::size_t>(it - labels_.begin());
}

std::shared_ptr<const FusionTable> fusion_table(const MinimalModel& model) {
  static std::mutex mutex;
  static std::map<MinimalModel, std::shared_ptr<const FusionTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(model); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const FusionTable>(model);
  std::lock_guard lock(mutex);
  return cache.try_emplace(model, std::move(table)).first->second;
}

RingReport verify_ring_axioms(const MinimalModel& model) {
  const auto table = fusion_table(model);
  const auto& N = *table;
  const auto& labels = N.labels();
  const std::size_t k = N.size();
  const std::size_t vac = N.index(KacLabel{1, 1});
  RingReport report;

  auto fail_with = [&](const char* axiom, std::vector<std::size_t> idx) {
    report.passed = false;
    report.failed_axiom = axiom;
    for (auto i : idx) report.counterexample.push_back(labels[i]);
  };

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const long unit = N(vac, a, b);
      if (unit != (a == b ? 1 : 0)) {
        fail_with("unit", {vac, a, b});
        return report;
      }
      for (std::size_t c = 0; c < k; ++c) {
        ++report.checked_tuples;
        if (N(a, b, c) != N(b, a, c)) {
          fail_with("commutativity", {a, b, c});
          return report;
        }
        if (N(a, b, c) != N(a, c, b)) {
          fail_with("slot symmetry", {a, b, c});
          return report;
        }
      }
    }

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = 0; d < k; ++d) {
          ++report.checked_tuples;
          long left = 0, right = 0;
          for (std::size_t e = 0; e < k; ++e) {
            left += N(a, b, e) * N(e, c, d);
            right += N(b, c, e) * N(a, e, d);
          }
          if (left != right) {
            fail_with("associativity", {a, b, c, d});
            return report;
          }
        }
  return report;
}

}  // namespace vir
