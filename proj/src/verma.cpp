#include "vir/verma.hpp"

#include "vir/exact_linalg.hpp"

#include <algorithm>
#include <functional>

namespace vir {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) fail(ErrorKind::Shape, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) fail(ErrorKind::Shape, "partition parts must be nonincreasing");
  }
}

Partition Partition::tail() const {
  Partition out;
  out.parts_.assign(parts_.begin() + 1, parts_.end());
  return out;
}

Partition Partition::prepend(int k) const {
  Partition out;
  out.parts_.reserve(parts_.size() + 1);
  out.parts_.push_back(k);
  out.parts_.insert(out.parts_.end(), parts_.begin(), parts_.end());
  return out;
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

std::vector<Partition> pbw_basis(int level) {
  std::vector<Partition> out;
  if (level < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(level, level);
  return out;
}

bool operator==(const GramMatrix& a, const GramMatrix& b) {
  return a.params == b.params && a.level == b.level && a.entries.rows() == b.entries.rows() &&
         a.entries.cols() == b.entries.cols() && a.entries == b.entries;
}

GramMatrix gram_record(const VermaParams<Rational>& params, int level, GramProvider* provider) {
  if (level < 0) fail(ErrorKind::Range, "level must be nonnegative");
  return {params, level, provider ? provider->gram(params, level) : gram_matrix(params, level)};
}

Rational kac_determinant(const VermaParams<Rational>& params, int level, GramProvider* provider) {
  return determinant(gram_record(params, level, provider).entries);
}

namespace {

RationalMatrix columns_of(const std::vector<RationalVector>& vs, Eigen::Index rows) {
  RationalMatrix m(rows, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vs[j];
  return m;
}

RationalPBW normalized(RationalPBW v) {
  for (const auto& p : pbw_basis(v.level())) {
    const Rational a = v.coefficient(p);
    if (a != 0) {
      v *= Rational(1) / a;
      break;
    }
  }
  return v;
}

}  // namespace

std::vector<SingularVector> singular_vectors(const VermaParams<Rational>& params, int max_level,
                                             GramProvider* provider) {
  RationalVerma module(params);
  std::vector<SingularVector> out;
  // Gram kernel (the maximal proper submodule) level by level.
  std::vector<std::vector<RationalPBW>> radical(static_cast<std::size_t>(std::max(max_level, 0)) + 1);

  for (int level = 1; level <= max_level; ++level) {
    const auto dim = static_cast<Eigen::Index>(pbw_basis(level).size());
    const RationalMatrix gram = provider ? provider->gram(params, level) : module.gram(level);
    const RationalMatrix kernel = nullspace(gram);
    for (Eigen::Index k = 0; k < kernel.cols(); ++k)
      radical[static_cast<std::size_t>(level)].push_back(RationalPBW::from_coordinates(level, kernel.col(k)));
    if (kernel.cols() == 0) continue;

    std::vector<RationalVector> descendants;
    for (int k = 1; k < level; ++k)
      for (const auto& v : radical[static_cast<std::size_t>(level - k)])
        descendants.push_back(module.lower(k, v).coordinates());

    RationalMatrix raising(0, dim);
    for (int m : {1, 2}) {
      if (m > level) continue;
      const RationalMatrix r = module.raising_matrix(m, level);
      RationalMatrix stacked(raising.rows() + r.rows(), dim);
      stacked << raising, r;
      raising = stacked;
    }
    const RationalMatrix singular = nullspace(raising);

    Eigen::Index base_rank = descendants.empty() ? 0 : rank(columns_of(descendants, dim));
    for (Eigen::Index k = 0; k < singular.cols(); ++k) {
      descendants.push_back(singular.col(k));
      const Eigen::Index r = rank(columns_of(descendants, dim));
      if (r == base_rank) {
        descendants.pop_back();
        continue;
      }
      base_rank = r;
      auto v = normalized(RationalPBW::from_coordinates(level, singular.col(k)));
      const RationalVector gv = gram * v.coordinates();
      if (!gv.isZero()) fail(ErrorKind::Internal, "singular vector outside the Gram kernel");
      out.push_back({level, std::move(v)});
    }
  }
  return out;
}

std::vector<SingularVector> singular_vectors(const MinimalModel& model, const KacLabel& label,
                                             int max_level, GramProvider* provider) {
  return singular_vectors(verma_params(model, label), max_level, provider);
}

SingularVector null_vector(const MinimalModel& model, const KacLabel& label) {
  auto found = singular_vectors(model, label, null_level(model, label));
  if (found.empty())
    fail(ErrorKind::Internal, "no singular vector found for " + to_string(label) + " in " + to_string(model));
  return found.front();
}

bool verify_singular(const VermaParams<Rational>& params, const RationalPBW& p) {
  RationalVerma module(params);
  return module.raise(1, p).is_zero() && module.raise(2, p).is_zero();
}

std::string to_string(const RationalPBW& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& p : pbw_basis(v.level())) {
    Rational a = v.coefficient(p);
    if (a == 0) continue;
    if (first) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    a = abs(a);
    std::string word;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      word += "L(-" + std::to_string(parts[i]) + ")";
      if (j - i > 1) word += "^" + std::to_string(j - i);
      i = j;
    }
    if (word.empty()) {
      out += to_display_string(a);
    } else {
      if (a != 1) out += to_display_string(a) + " ";
      out += word;
    }
    first = false;
  }
  return out;
}

}  // namespace vir
