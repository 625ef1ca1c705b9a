#pragma once

#include "vir/crossing.hpp"
#include "vir/fusion.hpp"
#include "vir/verma.hpp"

#include <json.hpp>

#include <string>

namespace vir {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Exact values are always written as "numerator/denominator" strings.
// Every from_json throws ErrorKind::Parse on malformed input.

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const MinimalModel& model);
MinimalModel model_from_json(const Json& j);

Json to_json(const KacLabel& label);
KacLabel label_from_json(const Json& j);

Json to_json(const TensorLabel& label);
TensorLabel tensor_label_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const RationalPBW& v);
RationalPBW pbw_from_json(const Json& j);

Json to_json(const GramMatrix& g);
GramMatrix gram_from_json(const Json& j);

Json to_json(const RationalPolynomial& p);
RationalPolynomial polynomial_from_json(const Json& j);

Json to_json(const ODESpec& ode);
ODESpec ode_from_json(const Json& j);

Json to_json(const FrobeniusSeries& s);
FrobeniusSeries series_from_json(const Json& j);

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const EvaluationResult& r);
EvaluationResult evaluation_from_json(const Json& j);

Json to_json(const FusingMatrix& f);
FusingMatrix fusing_from_json(const Json& j);

/// Structured record for numerical certification runs.
struct ResidualReport {
  std::string claim;
  std::string region;
  Json grid;
  double max_residual = 0;
  int order = 0;
  std::vector<double> samples;

  friend bool operator==(const ResidualReport&, const ResidualReport&) = default;
};

Json to_json(const ResidualReport& r);
ResidualReport residual_report_from_json(const Json& j);

/// {"schema_version": 1, "kind": kind, "data": data}
Json document(const std::string& kind, Json data);
/// Checks the schema version and kind, returns the payload.
const Json& document_payload(const Json& doc, const std::string& kind);

bool operator==(const FrobeniusSeries& a, const FrobeniusSeries& b);
bool operator==(const FusingMatrix& a, const FusingMatrix& b);

}  // namespace vir
