#include "vir/model.hpp"

#include "vir/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace vir {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Range: return "range";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Fusion: return "fusion";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Conditioning: return "conditioning";
    case ErrorKind::Reduction: return "reduction";
    case ErrorKind::Structure: return "structure";
    case ErrorKind::Logarithmic: return "logarithmic";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_display_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return to_fraction_string(r);
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    fail(ErrorKind::Parse, "not a rational literal: '" + std::string(text) + "'");
  Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
  Integer d{std::string(den)};
  if (d == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(n) / Rational(d);
}

MinimalModel::MinimalModel(int p, int q) : p_(p), q_(q) {
  if (p <= 1 || q <= 1) fail(ErrorKind::Range, "minimal model needs p, q > 1");
  if (std::gcd(p, q) != 1)
    fail(ErrorKind::Range, "minimal model needs gcd(p, q) = 1, got (" + std::to_string(p) + "," +
                               std::to_string(q) + ")");
}

std::string to_string(const KacLabel& label) {
  return "(" + std::to_string(label.m) + "," + std::to_string(label.n) + ")";
}

std::string to_string(const MinimalModel& model) {
  return "M(" + std::to_string(model.p()) + "," + std::to_string(model.q()) + ")";
}

bool is_valid(const MinimalModel& model, const KacLabel& label) {
  return label.m > 0 && label.m < model.p() && label.n > 0 && label.n < model.q();
}

void require_valid(const MinimalModel& model, const KacLabel& label) {
  if (!is_valid(model, label))
    fail(ErrorKind::Range, "Kac label " + to_string(label) + " outside the table of " + to_string(model));
}

KacLabel reflect(const MinimalModel& model, const KacLabel& label) {
  return {model.p() - label.m, model.q() - label.n};
}

Rational central_charge(const MinimalModel& model) {
  const long p = model.p(), q = model.q();
  return Rational(1) - make_rational(6 * (p - q) * (p - q), p * q);
}

Rational conformal_weight(const MinimalModel& model, const KacLabel& label) {
  require_valid(model, label);
  const long p = model.p(), q = model.q(), m = label.m, n = label.n;
  const long a = n * p - m * q;
  return make_rational(a * a - (p - q) * (p - q), 4 * p * q);
}

KacLabel canonicalize(const MinimalModel& model, const KacLabel& label) {
  require_valid(model, label);
  return std::min(label, reflect(model, label));
}

int null_level(const MinimalModel& model, const KacLabel& label) {
  require_valid(model, label);
  auto r = reflect(model, label);
  return std::min(label.m * label.n, r.m * r.n);
}

std::vector<KacLabel> canonical_labels(const MinimalModel& model) {
  std::vector<KacLabel> out;
  for (int m = 1; m < model.p(); ++m)
    for (int n = 1; n < model.q(); ++n) {
      KacLabel l{m, n};
      if (canonicalize(model, l) == l) out.push_back(l);
    }
  return out;
}

std::vector<KacEntry> kac_table(const MinimalModel& model) {
  std::vector<KacEntry> out;
  for (const auto& l : canonical_labels(model)) out.push_back({l, conformal_weight(model, l)});
  return out;
}

TensorModel::TensorModel(std::vector<MinimalModel> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) fail(ErrorKind::Shape, "tensor model needs at least one factor");
}

std::string to_string(const TensorLabel& label) {
  std::string out = "(";
  for (std::size_t i = 0; i < label.labels.size(); ++i) {
    if (i) out += ",";
    out += to_string(label.labels[i]);
  }
  return out + ")";
}

void require_valid(const TensorModel& model, const TensorLabel& label) {
  if (label.labels.size() != model.size())
    fail(ErrorKind::Shape, "tensor label has " + std::to_string(label.labels.size()) +
                               " factors, model has " + std::to_string(model.size()));
  for (std::size_t i = 0; i < model.size(); ++i) require_valid(model[i], label.labels[i]);
}

TensorLabel canonicalize(const TensorModel& model, const TensorLabel& label) {
  require_valid(model, label);
  TensorLabel out;
  for (std::size_t i = 0; i < model.size(); ++i) out.labels.push_back(canonicalize(model[i], label.labels[i]));
  return out;
}

TensorLabel vacuum_label(const TensorModel& model) {
  return TensorLabel{std::vector<KacLabel>(model.size(), KacLabel{1, 1})};
}

std::vector<TensorLabel> canonical_labels(const TensorModel& model) {
  std::vector<TensorLabel> out{TensorLabel{}};
  for (const auto& factor : model.factors()) {
    std::vector<TensorLabel> next;
    for (const auto& prefix : out)
      for (const auto& l : canonical_labels(factor)) {
        auto t = prefix;
        t.labels.push_back(l);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

Rational tensor_central_charge(const TensorModel& model) {
  Rational c = 0;
  for (const auto& f : model.factors()) c += central_charge(f);
  return c;
}

Rational tensor_weight(const TensorModel& model, const TensorLabel& label) {
  require_valid(model, label);
  Rational h = 0;
  for (std::size_t i = 0; i < model.size(); ++i) h += conformal_weight(model[i], label.labels[i]);
  return h;
}

}  // namespace vir
