#include "vir/job.hpp"

#include "vir/cache.hpp"
#include "vir/crossing.hpp"
#include "vir/exact_linalg.hpp"
#include "vir/fusion.hpp"
#include "vir/verify.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <sstream>

namespace vir {

namespace {

struct CommandShape {
  const char* name;
  int labels;
  bool needs_model;
};

const std::vector<CommandShape>& shapes() {
  static const std::vector<CommandShape> s{
      {"kac-table", 0, true}, {"fuse", 2, true},     {"fusion-table", 0, true}, {"singular", 1, true},
      {"gram", 1, true},      {"bpz", 4, true},      {"block", 4, true},        {"crossing", 4, true},
      {"verify", 0, false},
  };
  return s;
}

const CommandShape& shape_of(const std::string& command) {
  for (const auto& s : shapes())
    if (command == s.name) return s;
  fail(ErrorKind::Parse, "unknown command '" + command + "'");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string exponent_list(const std::vector<Rational>& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) parts.push_back(to_fraction_string(x));
  return "{" + join(parts, ", ") + "}";
}

Json exponent_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

std::string format_double(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

std::string format_complex(Complex z) {
  std::ostringstream s;
  s.precision(17);
  s << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return s.str();
}

CorrelatorSpec spec_of(const JobConfig& job, const MinimalModel& model) {
  return {model, parse_label(job.labels[0]), parse_label(job.labels[1]), parse_label(job.labels[2]),
          parse_label(job.labels[3])};
}

Json exponents_to_json(const ExponentPair& e) { return Json{{"t1", to_json(e.t1)}, {"t2", to_json(e.t2)}}; }

JobOutput cmd_kac_table(const MinimalModel& model) {
  JobOutput out;
  Json entries = Json::array();
  std::string text = "central charge " + to_fraction_string(central_charge(model)) + "\n";
  for (const auto& e : kac_table(model)) {
    entries.push_back(Json{{"label", to_json(e.label)}, {"weight", to_json(e.weight)}});
    text += to_string(e.label) + "  " + to_fraction_string(e.weight) + "\n";
  }
  out.data = Json{{"model", to_json(model)}, {"central_charge", to_json(central_charge(model))}, {"entries", entries}};
  out.text = text;
  return out;
}

JobOutput cmd_fuse(const MinimalModel& model, const KacLabel& a, const KacLabel& b) {
  JobOutput out;
  Json result = Json::array();
  std::vector<std::string> parts;
  for (const auto& c : fuse(model, a, b)) {
    result.push_back(to_json(c));
    parts.push_back(to_string(c));
  }
  out.data = Json{{"model", to_json(model)}, {"a", to_json(a)}, {"b", to_json(b)}, {"result", result}};
  out.text = join(parts, " ") + "\n";
  return out;
}

JobOutput cmd_fusion_table(const MinimalModel& model) {
  JobOutput out;
  const auto labels = canonical_labels(model);
  Json rows = Json::array();
  std::string text;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t k = i; k < labels.size(); ++k) {
      Json products = Json::array();
      std::vector<std::string> parts;
      for (const auto& c : fuse(model, labels[i], labels[k])) {
        products.push_back(to_json(c));
        parts.push_back(to_string(c));
      }
      rows.push_back(Json{{"a", to_json(labels[i])}, {"b", to_json(labels[k])}, {"result", products}});
      text += to_string(labels[i]) + " x " + to_string(labels[k]) + " = " + join(parts, " + ") + "\n";
    }
  out.data = Json{{"model", to_json(model)}, {"products", rows}};
  out.text = text;
  return out;
}

JobOutput cmd_singular(const MinimalModel& model, const KacLabel& label, int max_level, GramProvider* gram) {
  JobOutput out;
  Json vectors = Json::array();
  std::string text;
  for (const auto& s : singular_vectors(model, label, max_level, gram)) {
    vectors.push_back(Json{{"level", s.level}, {"vector", to_json(s.vector)}});
    text += "level " + std::to_string(s.level) + ": " + to_string(s.vector) + "\n";
  }
  if (vectors.empty()) text = "no singular vector through level " + std::to_string(max_level) + "\n";
  out.data = Json{{"model", to_json(model)}, {"label", to_json(label)}, {"max_level", max_level}, {"vectors", vectors}};
  out.text = text;
  return out;
}

JobOutput cmd_gram(const MinimalModel& model, const KacLabel& label, int level, GramProvider* gram) {
  JobOutput out;
  const auto g = gram_record(verma_params(model, label), level, gram);
  const Rational det = determinant(g.entries);
  out.data = Json{{"model", to_json(model)}, {"label", to_json(label)}, {"gram", to_json(g)}, {"determinant", to_json(det)}};
  std::string text = "basis:";
  for (const auto& p : pbw_basis(level)) text += " " + to_string(p);
  text += "\n";
  for (Eigen::Index i = 0; i < g.entries.rows(); ++i) {
    std::vector<std::string> row;
    for (Eigen::Index k = 0; k < g.entries.cols(); ++k) row.push_back(to_fraction_string(g.entries(i, k)));
    text += join(row, "  ") + "\n";
  }
  out.text = text + "determinant " + to_fraction_string(det) + "\n";
  return out;
}

JobOutput cmd_bpz(const CorrelatorSpec& spec) {
  JobOutput out;
  const auto null = null_vector(spec.model(), spec.w3());
  const auto anchor = reference_anchor(spec);
  const auto ode = product_ode(spec, anchor);
  Json channels = Json::array();
  std::vector<std::string> channel_text;
  for (const auto& c : spec.channels()) {
    const auto e = channel_exponents(spec, c);
    channels.push_back(Json{{"label", to_json(c)}, {"exponents", exponents_to_json(e)}});
    channel_text.push_back(to_string(c) + " t1=" + to_fraction_string(e.t1) + " t2=" + to_fraction_string(e.t2));
  }
  Json indicial = Json::object();
  std::string indicial_text;
  for (auto point : {SingularPoint::Zero, SingularPoint::One, SingularPoint::Infinity}) {
    const auto roots = indicial_exponents(ode, point);
    indicial[to_string(point)] = exponent_json(roots);
    indicial_text += std::string(indicial_text.empty() ? "" : "; ") + to_string(point) + ": " + exponent_list(roots);
  }
  const bool independent = equations_independent(spec);
  out.data = Json{{"model", to_json(spec.model())},
                  {"labels", Json::array({to_json(spec.w4()), to_json(spec.w1()), to_json(spec.w2()), to_json(spec.w3())})},
                  {"null_vector", Json{{"level", null.level}, {"vector", to_json(null.vector)}}},
                  {"channels", channels},
                  {"anchor", exponents_to_json(anchor)},
                  {"ode", to_json(ode)},
                  {"indicial_exponents", indicial},
                  {"slot2_independent", independent}};
  out.text = "correlator " + to_string(spec) + "\n" + "null vector (level " + std::to_string(null.level) +
             "): " + to_string(null.vector) + "\n" + "channels: " + join(channel_text, ", ") + "\n" +
             "anchor: t1=" + to_fraction_string(anchor.t1) + " t2=" + to_fraction_string(anchor.t2) + "\n" +
             "ODE: " + to_string(ode) + "\n" + "indicial exponents " + indicial_text + "\n" +
             "slot-2 equation independent: " + (independent ? "yes" : "no") + "\n";
  return out;
}

JobOutput cmd_block(const CorrelatorSpec& spec, const KacLabel& channel, const std::vector<double>& zs, int order) {
  JobOutput out;
  const auto e = channel_exponents(spec, channel);
  Json values = Json::array();
  std::string text = "block " + to_string(canonicalize(spec.model(), channel)) + " of " + to_string(spec) +
                     ", t1=" + to_fraction_string(e.t1) + " t2=" + to_fraction_string(e.t2) + "\n";
  for (double z : zs) {
    const auto r = block(spec, channel, z, order);
    values.push_back(Json{{"z", z}, {"result", to_json(r)}});
    text += "z=" + format_double(z) + "  " + format_complex(r.value) + "  tail<=" + format_double(r.tail_bound) + "\n";
  }
  out.data = Json{{"model", to_json(spec.model())},
                  {"channel", to_json(canonicalize(spec.model(), channel))},
                  {"exponents", exponents_to_json(e)},
                  {"order", order},
                  {"values", values}};
  out.text = text;
  return out;
}

JobOutput cmd_crossing(const CorrelatorSpec& spec, int order, std::vector<double> z1_grid, std::vector<double> ratio_grid) {
  JobOutput out;
  if (z1_grid.empty()) z1_grid = {0.8, 0.9, 1.0, 1.1, 1.2};
  if (ratio_grid.empty()) ratio_grid = {0.6, 0.65, 0.7, 0.75, 0.8};
  const auto ode = product_ode(spec);
  const auto fusing = fusing_matrix(ode, order);
  const auto assoc = associativity_sweep(spec, z1_grid, ratio_grid, order);
  ResidualReport assoc_report{"associativity", "|z1| > |z2| > |z1 - z2| > 0",
                              Json{{"z1", z1_grid}, {"z2_over_z1", ratio_grid}}, assoc.max_residual, order,
                              fusing.samples};
  const auto comm = commutativity_check(spec, 0.6, order);
  ResidualReport comm_report{"commutativity", "z2 = 0.6, z1 = 0.6 + 0.4 exp(i alpha), alpha in [0, pi]",
                             Json{{"x", comm.x}}, comm.residual, order, fusing.samples};
  const auto basis = local_basis(ode, SingularPoint::Zero, std::min(order, 60));
  ResidualReport mono_report{"monodromy", "|z| = 0.5", Json{{"radius", 0.5}}, monodromy_check(ode, basis),
                             std::min(order, 60), {}};
  out.data = Json{{"model", to_json(spec.model())},
                  {"ode", to_json(ode)},
                  {"fusing_matrix", to_json(fusing)},
                  {"reports", Json::array({to_json(assoc_report), to_json(comm_report), to_json(mono_report)})},
                  {"commutativity_clockwise_control", comm.reverse_residual}};
  std::ostringstream text;
  text.precision(6);
  text << "correlator " << to_string(spec) << "\nfusing matrix (basis at 0 in terms of basis at 1):\n";
  for (Eigen::Index i = 0; i < fusing.entries.rows(); ++i) {
    for (Eigen::Index k = 0; k < fusing.entries.cols(); ++k)
      text << (k ? "  " : "  ") << format_complex(fusing.entries(i, k));
    text << "\n";
  }
  text << "fit residual " << fusing.residual << ", condition " << fusing.condition << "\n";
  text << "associativity max residual " << assoc.max_residual << " over " << z1_grid.size() << "x" << ratio_grid.size()
       << " grid\n";
  text << "commutativity residual " << comm.residual << " (clockwise control " << comm.reverse_residual << ")\n";
  text << "monodromy residual " << mono_report.max_residual << "\n";
  out.text = text.str();
  return out;
}

JobOutput cmd_verify(const std::string& suite, GramProvider* gram) {
  JobOutput out;
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else names = {suite};
  Json results = Json::array();
  std::string text;
  for (const auto& name : names) {
    const auto r = run_suite(name, {gram});
    out.verification_failed = out.verification_failed || !r.passed();
    Json entry{{"suite", r.name},
               {"criterion", r.criterion},
               {"passed", r.passed()},
               {"limit_seconds", r.limit_seconds},
               {"summary", r.summary},
               {"failures", r.failures}};
    if (r.max_residual >= 0) entry["max_residual"] = r.max_residual;
    results.push_back(entry);
    text += format_result(r) + "\n";
  }
  out.data = Json{{"suites", results}, {"passed", !out.verification_failed}};
  out.text = text;
  return out;
}

}  // namespace

const std::vector<std::string>& job_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : shapes()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

KacLabel parse_label(const std::string& text) {
  const auto comma = text.find(',');
  KacLabel l;
  auto parse_int = [&](std::string_view s, int& v) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
  };
  const std::string_view sv(text);
  if (comma == std::string::npos || !parse_int(sv.substr(0, comma), l.m) || !parse_int(sv.substr(comma + 1), l.n))
    fail(ErrorKind::Parse, "label must look like m,n: '" + text + "'");
  return l;
}

void validate(const JobConfig& job) {
  const auto& shape = shape_of(job.command);
  if (static_cast<int>(job.labels.size()) != shape.labels)
    fail(ErrorKind::Parse, job.command + " takes " + std::to_string(shape.labels) + " label(s), got " +
                               std::to_string(job.labels.size()));
  for (const auto& l : job.labels) parse_label(l);
  if (shape.needs_model && (job.p == 0 || job.q == 0)) fail(ErrorKind::Parse, job.command + " needs p and q");
  if (job.command == "singular" && job.max_level < 1) fail(ErrorKind::Parse, "--max-level must be >= 1");
  if (job.command == "gram" && job.level < 0) fail(ErrorKind::Parse, "--level must be >= 0");
  if (job.order < 0) fail(ErrorKind::Parse, "--order must be >= 0");
  if (job.command == "block") {
    if (!job.channel) fail(ErrorKind::Parse, "block needs --channel m,n");
    parse_label(*job.channel);
    if (job.z.empty()) fail(ErrorKind::Parse, "block needs at least one --z value");
  } else if (job.channel) {
    fail(ErrorKind::Parse, "--channel only applies to block");
  }
  if (job.command != "block" && !job.z.empty()) fail(ErrorKind::Parse, "--z only applies to block");
  if (job.command != "crossing" && (!job.z1_grid.empty() || !job.ratio_grid.empty()))
    fail(ErrorKind::Parse, "grids only apply to crossing");
  if (job.command == "verify") {
    const auto& names = suite_names();
    if (job.suite != "all" && std::find(names.begin(), names.end(), job.suite) == names.end())
      fail(ErrorKind::Parse, "unknown suite '" + job.suite + "'; choose all or one of: " + join(names, ", "));
  } else if (!job.suite.empty()) {
    fail(ErrorKind::Parse, "a suite name only applies to verify");
  }
}

JobConfig job_from_json(const Json& j) {
  static const std::vector<std::string> keys{"command", "p",      "q",       "labels",     "channel",   "max_level",
                                             "level",   "order",  "z",       "z1_grid",    "ratio_grid", "suite",
                                             "cache_dir", "format"};
  if (!j.is_object()) fail(ErrorKind::Parse, "job must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) fail(ErrorKind::Parse, "unknown job key '" + k + "'");
  if (!j.contains("command")) fail(ErrorKind::Parse, "job needs a command");
  JobConfig job;
  try {
    job.command = j.at("command").get<std::string>();
    job.p = j.value("p", 0);
    job.q = j.value("q", 0);
    job.labels = j.value("labels", std::vector<std::string>{});
    if (j.contains("channel")) job.channel = j.at("channel").get<std::string>();
    job.max_level = j.value("max_level", 4);
    job.level = j.value("level", 2);
    job.order = j.value("order", 0);
    job.z = j.value("z", std::vector<double>{});
    job.z1_grid = j.value("z1_grid", std::vector<double>{});
    job.ratio_grid = j.value("ratio_grid", std::vector<double>{});
    job.suite = j.value("suite", std::string{});
    if (j.contains("cache_dir")) job.cache_dir = j.at("cache_dir").get<std::string>();
    const auto format = j.value("format", std::string("text"));
    if (format != "text" && format != "json") fail(ErrorKind::Parse, "format must be text or json");
    job.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed job: ") + e.what());
  }
  return job;
}

Json to_json(const JobConfig& job) {
  Json j{{"command", job.command}, {"p", job.p},         {"q", job.q},         {"labels", job.labels},
         {"max_level", job.max_level}, {"level", job.level}, {"order", job.order}, {"z", job.z},
         {"z1_grid", job.z1_grid},  {"ratio_grid", job.ratio_grid}, {"suite", job.suite},
         {"format", job.format == OutputFormat::Json ? "json" : "text"}};
  if (job.channel) j["channel"] = *job.channel;
  if (job.cache_dir) j["cache_dir"] = *job.cache_dir;
  return j;
}

JobOutput run_job(const JobConfig& job) {
  validate(job);
  std::unique_ptr<GramCache> cache;
  if (const auto dir = resolve_cache_dir(job.cache_dir)) cache = std::make_unique<GramCache>(*dir);
  GramProvider* gram = cache.get();

  if (job.command == "verify") return cmd_verify(job.suite, gram);
  const MinimalModel model(job.p, job.q);
  if (job.command == "kac-table") return cmd_kac_table(model);
  if (job.command == "fusion-table") return cmd_fusion_table(model);
  if (job.command == "fuse") return cmd_fuse(model, parse_label(job.labels[0]), parse_label(job.labels[1]));
  if (job.command == "singular") return cmd_singular(model, parse_label(job.labels[0]), job.max_level, gram);
  if (job.command == "gram") return cmd_gram(model, parse_label(job.labels[0]), job.level, gram);
  const auto spec = spec_of(job, model);
  if (job.command == "bpz") return cmd_bpz(spec);
  if (job.command == "block") return cmd_block(spec, parse_label(*job.channel), job.z, job.order ? job.order : 50);
  if (job.command == "crossing") return cmd_crossing(spec, job.order ? job.order : 200, job.z1_grid, job.ratio_grid);
  fail(ErrorKind::Internal, "unhandled command " + job.command);
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Range:
    case ErrorKind::Shape: return 2;
    case ErrorKind::Domain:
    case ErrorKind::Fusion:
    case ErrorKind::Reduction:
    case ErrorKind::Structure:
    case ErrorKind::Logarithmic: return 3;
    case ErrorKind::Conditioning: return 4;
    case ErrorKind::Internal: return 5;
  }
  return 5;
}

}  // namespace vir
