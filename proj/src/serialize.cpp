#include "vir/serialize.hpp"

#include "vir/errors.hpp"

namespace vir {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed ") + what + ": " + e.what());
  }
}

void require_keys(const Json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) fail(ErrorKind::Parse, std::string(what) + " must be an object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) fail(ErrorKind::Parse, std::string("unknown key '") + k + "' in " + what);
  }
  for (const char* key : keys)
    if (!j.contains(key)) fail(ErrorKind::Parse, std::string("missing key '") + key + "' in " + what);
}

SingularPoint point_from_string(const std::string& s) {
  if (s == "0") return SingularPoint::Zero;
  if (s == "1") return SingularPoint::One;
  if (s == "inf") return SingularPoint::Infinity;
  fail(ErrorKind::Parse, "unknown singular point '" + s + "'");
}

}  // namespace

Json to_json(const Rational& r) { return to_fraction_string(r); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) fail(ErrorKind::Parse, "rational must be a \"n/d\" string");
  return parse_rational(j.get<std::string>());
}

Json to_json(const MinimalModel& model) { return Json{{"p", model.p()}, {"q", model.q()}}; }

MinimalModel model_from_json(const Json& j) {
  require_keys(j, {"p", "q"}, "model");
  return guarded("model", [&] { return MinimalModel(j.at("p").get<int>(), j.at("q").get<int>()); });
}

Json to_json(const KacLabel& label) { return Json::array({label.m, label.n}); }

KacLabel label_from_json(const Json& j) {
  return guarded("label", [&] {
    if (!j.is_array() || j.size() != 2) fail(ErrorKind::Parse, "label must be [m, n]");
    return KacLabel{j[0].get<int>(), j[1].get<int>()};
  });
}

Json to_json(const TensorLabel& label) {
  Json out = Json::array();
  for (const auto& l : label.labels) out.push_back(to_json(l));
  return out;
}

TensorLabel tensor_label_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "tensor label must be an array of labels");
  TensorLabel out;
  for (const auto& l : j) out.labels.push_back(label_from_json(l));
  return out;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  return guarded("partition", [&] { return Partition(j.get<std::vector<int>>()); });
}

Json to_json(const RationalPBW& v) {
  Json terms = Json::array();
  for (const auto& p : pbw_basis(v.level())) {
    const Rational a = v.coefficient(p);
    if (a != 0) terms.push_back(Json{{"partition", to_json(p)}, {"coefficient", to_json(a)}});
  }
  return Json{{"level", v.level()}, {"terms", terms}};
}

RationalPBW pbw_from_json(const Json& j) {
  require_keys(j, {"level", "terms"}, "PBW vector");
  return guarded("PBW vector", [&] {
    RationalPBW v(j.at("level").get<int>());
    for (const auto& t : j.at("terms")) {
      require_keys(t, {"partition", "coefficient"}, "PBW term");
      v.add(partition_from_json(t.at("partition")), rational_from_json(t.at("coefficient")));
    }
    return v;
  });
}

Json to_json(const GramMatrix& g) {
  Json basis = Json::array();
  for (const auto& p : pbw_basis(g.level)) basis.push_back(to_json(p));
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < g.entries.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < g.entries.cols(); ++k) row.push_back(to_json(g.entries(i, k)));
    rows.push_back(row);
  }
  return Json{{"c", to_json(g.params.c)},
              {"h", to_json(g.params.h)},
              {"level", g.level},
              {"basis", basis},
              {"entries", rows}};
}

GramMatrix gram_from_json(const Json& j) {
  require_keys(j, {"c", "h", "level", "basis", "entries"}, "Gram matrix");
  return guarded("Gram matrix", [&] {
    GramMatrix g;
    g.params = {rational_from_json(j.at("c")), rational_from_json(j.at("h"))};
    g.level = j.at("level").get<int>();
    const auto basis = pbw_basis(g.level);
    const auto& jb = j.at("basis");
    if (jb.size() != basis.size()) fail(ErrorKind::Parse, "Gram basis size mismatch");
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (partition_from_json(jb[i]) != basis[i]) fail(ErrorKind::Parse, "Gram basis order mismatch");
    const auto n = static_cast<Eigen::Index>(basis.size());
    const auto& rows = j.at("entries");
    if (static_cast<Eigen::Index>(rows.size()) != n) fail(ErrorKind::Parse, "Gram matrix row count mismatch");
    g.entries = RationalMatrix(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (static_cast<Eigen::Index>(row.size()) != n) fail(ErrorKind::Parse, "Gram matrix is not square");
      for (Eigen::Index k = 0; k < n; ++k) g.entries(i, k) = rational_from_json(row[static_cast<std::size_t>(k)]);
    }
    return g;
  });
}

Json to_json(const RationalPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

RationalPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "polynomial must be an array of coefficients");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return RationalPolynomial(std::move(c));
}

Json to_json(const ODESpec& ode) {
  Json coeffs = Json::array();
  for (const auto& c : ode.coefficients()) coeffs.push_back(to_json(c));
  return Json{{"variable", ode.variable()}, {"coefficients", coeffs}};
}

ODESpec ode_from_json(const Json& j) {
  require_keys(j, {"variable", "coefficients"}, "ODE");
  return guarded("ODE", [&] {
    std::vector<RationalPolynomial> c;
    for (const auto& x : j.at("coefficients")) c.push_back(polynomial_from_json(x));
    return ODESpec(std::move(c), j.at("variable").get<std::string>());
  });
}

Json to_json(const FrobeniusSeries& s) {
  Json coeffs = Json::array();
  for (const auto& a : s.coefficients) coeffs.push_back(to_json(a));
  return Json{{"point", to_string(s.point)}, {"exponent", to_json(s.exponent)}, {"coefficients", coeffs}};
}

FrobeniusSeries series_from_json(const Json& j) {
  require_keys(j, {"point", "exponent", "coefficients"}, "series");
  return guarded("series", [&] {
    FrobeniusSeries s;
    s.point = point_from_string(j.at("point").get<std::string>());
    s.exponent = rational_from_json(j.at("exponent"));
    for (const auto& a : j.at("coefficients")) {
      s.coefficients.push_back(rational_from_json(a));
      s.numeric.push_back(to_double(s.coefficients.back()));
    }
    if (s.coefficients.empty()) fail(ErrorKind::Parse, "series needs at least one coefficient");
    return s;
  });
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  return guarded("complex number", [&] {
    if (!j.is_array() || j.size() != 2) fail(ErrorKind::Parse, "complex must be [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
  });
}

Json to_json(const EvaluationResult& r) {
  return Json{{"value", to_json(r.value)}, {"tail_bound", r.tail_bound}, {"order_used", r.order_used}};
}

EvaluationResult evaluation_from_json(const Json& j) {
  require_keys(j, {"value", "tail_bound", "order_used"}, "evaluation");
  return guarded("evaluation", [&] {
    return EvaluationResult{complex_from_json(j.at("value")), j.at("tail_bound").get<double>(),
                            j.at("order_used").get<int>()};
  });
}

Json to_json(const FusingMatrix& f) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < f.entries.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < f.entries.cols(); ++k) row.push_back(to_json(f.entries(i, k)));
    rows.push_back(row);
  }
  return Json{{"entries", rows},
              {"residual", f.residual},
              {"condition", f.condition},
              {"samples", f.samples},
              {"held_out", f.held_out}};
}

FusingMatrix fusing_from_json(const Json& j) {
  require_keys(j, {"entries", "residual", "condition", "samples", "held_out"}, "fusing matrix");
  return guarded("fusing matrix", [&] {
    FusingMatrix f;
    const auto& rows = j.at("entries");
    const auto n = static_cast<Eigen::Index>(rows.size());
    f.entries = Eigen::MatrixXcd(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (static_cast<Eigen::Index>(row.size()) != n) fail(ErrorKind::Parse, "fusing matrix is not square");
      for (Eigen::Index k = 0; k < n; ++k) f.entries(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
    }
    f.residual = j.at("residual").get<double>();
    f.condition = j.at("condition").get<double>();
    f.samples = j.at("samples").get<std::vector<double>>();
    f.held_out = j.at("held_out").get<std::vector<double>>();
    return f;
  });
}

Json to_json(const ResidualReport& r) {
  return Json{{"claim", r.claim},           {"region", r.region}, {"grid", r.grid},
              {"max_residual", r.max_residual}, {"order", r.order},   {"samples", r.samples}};
}

ResidualReport residual_report_from_json(const Json& j) {
  require_keys(j, {"claim", "region", "grid", "max_residual", "order", "samples"}, "residual report");
  return guarded("residual report", [&] {
    return ResidualReport{j.at("claim").get<std::string>(), j.at("region").get<std::string>(), j.at("grid"),
                          j.at("max_residual").get<double>(), j.at("order").get<int>(),
                          j.at("samples").get<std::vector<double>>()};
  });
}

Json document(const std::string& kind, Json data) {
  return Json{{"schema_version", kSchemaVersion}, {"kind", kind}, {"data", std::move(data)}};
}

const Json& document_payload(const Json& doc, const std::string& kind) {
  require_keys(doc, {"schema_version", "kind", "data"}, "document");
  if (doc.at("schema_version") != kSchemaVersion)
    fail(ErrorKind::Parse, "unsupported schema_version " + doc.at("schema_version").dump());
  if (doc.at("kind") != kind) fail(ErrorKind::Parse, "expected a '" + kind + "' document");
  return doc.at("data");
}

bool operator==(const FrobeniusSeries& a, const FrobeniusSeries& b) {
  return a.point == b.point && a.exponent == b.exponent && a.coefficients == b.coefficients;
}

bool operator==(const FusingMatrix& a, const FusingMatrix& b) {
  return a.entries.rows() == b.entries.rows() && a.entries.cols() == b.entries.cols() && a.entries == b.entries &&
         a.residual == b.residual && a.condition == b.condition && a.samples == b.samples &&
         a.held_out == b.held_out;
}

}  // namespace vir
