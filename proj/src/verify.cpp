#include "vir/verify.hpp"

#include "vir/crossing.hpp"
#include "vir/errors.hpp"
#include "vir/fusion.hpp"

#include <boost/integer/common_factor.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace vir {

namespace {

class Checks {
 public:
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++count_;
    if (ok) return;
    ++failed_;
    if (failures_.size() < 8) failures_.push_back(describe());
  }
  void residual(double r) { max_residual_ = std::max(max_residual_, r); }

  long count() const { return count_; }
  long failed() const { return failed_; }
  double max_residual() const { return max_residual_; }
  std::vector<std::string> failures() const { return failures_; }

 private:
  long count_ = 0;
  long failed_ = 0;
  double max_residual_ = 0;
  std::vector<std::string> failures_;
};

std::vector<MinimalModel> models_up_to(int bound) {
  std::vector<MinimalModel> out;
  for (int p = 2; p <= bound; ++p)
    for (int q = 2; q <= bound; ++q)
      if (p != q && boost::integer::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

std::vector<CorrelatorSpec> level2_correlators(int bound) {
  std::vector<CorrelatorSpec> out;
  for (const auto& m : models_up_to(bound)) {
    auto specs = correlators_with_null_level(m, 2);
    out.insert(out.end(), specs.begin(), specs.end());
  }
  return out;
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(3) << x;
  return s.str();
}

const MinimalModel kIsing(3, 4);
const KacLabel kSigma{1, 2};
const KacLabel kEpsilon{1, 3};

CorrelatorSpec ising_sigma4() { return {kIsing, kSigma, kSigma, kSigma, kSigma}; }
CorrelatorSpec ising_epsilon4() { return {kIsing, kEpsilon, kEpsilon, kEpsilon, kEpsilon}; }

// Closed-form sigma four-point blocks F(1, z) with a_0 = 1.
double ising_identity_block(double z) {
  return std::pow(z * (1 - z), -0.125) * std::sqrt((1 + std::sqrt(1 - z)) / 2);
}
double ising_energy_block(double z) {
  return 2 * std::pow(z * (1 - z), -0.125) * std::sqrt((1 - std::sqrt(1 - z)) / 2);
}

void suite_kac_data(Checks& c, std::string& summary, const VerifyOptions&) {
  int models = 0;
  for (int p = 2; p <= 13; ++p)
    for (int q = 2; q <= 13; ++q) {
      if (p == q || boost::integer::gcd(p, q) != 1) continue;
      const MinimalModel model(p, q);
      ++models;
      const auto table = kac_table(model);
      c.expect(static_cast<int>(table.size()) == (p - 1) * (q - 1) / 2,
               [&] { return "table size for " + to_string(model); });
      for (int m = 1; m < p; ++m)
        for (int n = 1; n < q; ++n) {
          const KacLabel l{m, n};
          c.expect(conformal_weight(model, l) == conformal_weight(model, reflect(model, l)),
                   [&] { return "reflection weight " + to_string(l) + " in " + to_string(model); });
        }
    }
  c.expect(central_charge(kIsing) == Rational(1, 2), [] { return std::string("c(3,4)"); });
  c.expect(conformal_weight(kIsing, {2, 2}) == Rational(1, 16), [] { return std::string("h(2,2)"); });
  c.expect(conformal_weight(kIsing, {2, 1}) == Rational(1, 2), [] { return std::string("h(2,1)"); });
  summary = std::to_string(models) + " models, table sizes (p-1)(q-1)/2, c(3,4)=1/2, h(2,2)=1/16, h(2,1)=1/2";
}

void suite_fusion_ring(Checks& c, std::string& summary, const VerifyOptions&) {
  long tuples = 0;
  const auto models = models_up_to(9);
  for (const auto& m : models) {
    const auto report = verify_ring_axioms(m);
    tuples += report.checked_tuples;
    c.expect(report.passed, [&] { return report.failed_axiom + " fails in " + to_string(m); });
  }
  summary = std::to_string(models.size()) + " models with p,q <= 9, " + std::to_string(tuples) + " tuples";
}

void suite_kac_determinant(Checks& c, std::string& summary, const VerifyOptions& options) {
  int zeros = 0, nonzeros = 0;
  for (const auto& model : {MinimalModel(3, 4), MinimalModel(2, 5), MinimalModel(4, 5)}) {
    for (int m = 1; m < model.p(); ++m)
      for (int n = 1; n < model.q(); ++n) {
        if (m * n > 8) continue;
        const KacLabel l{m, n};
        const auto params = verma_params(model, l);
        c.expect(kac_determinant(params, m * n, options.gram) == 0,
                 [&] { return "det nonzero at level m*n for " + to_string(l) + " in " + to_string(model); });
        ++zeros;
        for (int level = 1; level < null_level(model, l); ++level) {
          c.expect(kac_determinant(params, level, options.gram) != 0, [&] {
            return "det zero at level " + std::to_string(level) + " for " + to_string(l) + " in " + to_string(model);
          });
          ++nonzeros;
        }
      }
  }
  summary = std::to_string(zeros) + " vanishing determinants at level m*n, " + std::to_string(nonzeros) +
            " nonvanishing below the first null level";
}

void suite_singular_vectors(Checks& c, std::string& summary, const VerifyOptions& options) {
  int vectors = 0;
  for (const auto& model : {MinimalModel(3, 4), MinimalModel(2, 5), MinimalModel(3, 5), MinimalModel(4, 5)}) {
    for (const auto& l : canonical_labels(model)) {
      const auto params = verma_params(model, l);
      const auto found = singular_vectors(params, 6, options.gram);
      c.expect(!found.empty() && found.front().level == std::min(6, null_level(model, l)),
               [&] { return "first singular level for " + to_string(l) + " in " + to_string(model); });
      for (const auto& s : found) {
        ++vectors;
        c.expect(verify_singular(params, s.vector),
                 [&] { return "verify_singular fails for " + to_string(s.vector); });
      }
    }
  }
  const auto ising = singular_vectors(kIsing, {2, 1}, 4, options.gram);
  RationalPBW expected(2);
  expected.add(Partition({2}), 1);
  expected.add(Partition({1, 1}), Rational(-3, 4));
  c.expect(!ising.empty() && ising.front().level == 2 && ising.front().vector == expected,
           [] { return std::string("(3,4),(2,1) level-2 vector"); });
  summary = std::to_string(vectors) + " singular vectors verified; (3,4),(2,1): " +
            (ising.empty() ? std::string("none") : to_string(ising.front().vector));
}

void suite_bpz_structure(Checks& c, std::string& summary, const VerifyOptions&) {
  const auto specs = level2_correlators(5);
  for (const auto& spec : specs) {
    const auto anchor = reference_anchor(spec);
    const auto ode = product_ode(spec, anchor);
    c.expect(ode.order() == 2, [&] { return "order of " + to_string(spec); });
    const auto structure = singular_structure(ode);
    c.expect(structure.fuchsian_01(), [&] { return "singular points of " + to_string(spec); });
    std::vector<Rational> roots;
    for (const auto& r : indicial_exponents(ode, SingularPoint::Zero)) roots.push_back(r + anchor.t2);
    for (const auto& ch : spec.channels()) {
      const auto t2 = channel_exponents(spec, ch).t2;
      c.expect(std::find(roots.begin(), roots.end(), t2) != roots.end(),
               [&] { return "channel " + to_string(ch) + " exponent missing for " + to_string(spec); });
    }
  }
  summary = std::to_string(specs.size()) + " level-2 correlators in models with p,q <= 5";
}

void suite_ising_blocks(Checks& c, std::string& summary, const VerifyOptions&) {
  const auto spec = ising_sigma4();
  for (double z : {0.1, 0.3, 0.5}) {
    const double e1 = std::abs(block(spec, {1, 1}, z, 50).value - ising_identity_block(z)) / ising_identity_block(z);
    const double e2 = std::abs(block(spec, {1, 3}, z, 50).value - ising_energy_block(z)) / ising_energy_block(z);
    c.residual(std::max(e1, e2));
    c.expect(e1 <= 1e-10 && e2 <= 1e-10, [&] { return "closed form mismatch at z = " + fmt(z); });
  }
  const auto anchor = reference_anchor(spec);
  const auto ode = product_ode(spec, anchor);
  int lowest = 1 << 30;
  for (const auto& ch : spec.channels()) {
    const auto series =
        frobenius_expand(ode, SingularPoint::Zero, channel_exponents(spec, ch).t2 - anchor.t2, 50);
    const auto residual = series_residual(ode, series);
    c.expect(!residual.empty() && residual.begin()->first > 50 - 2,
             [&] { return "residual support below N-1 for channel " + to_string(ch); });
    if (!residual.empty()) lowest = std::min(lowest, residual.begin()->first);
  }
  summary = "max relative error vs closed forms " + fmt(c.max_residual()) +
            "; exact residual starts at offset " + std::to_string(lowest) + " (N = 50)";
}

const std::vector<double> kZ1Grid{0.8, 0.9, 1.0, 1.1, 1.2};
const std::vector<double> kRatioGrid{0.6, 0.65, 0.7, 0.75, 0.8};

void suite_ising_crossing(Checks& c, std::string& summary, const VerifyOptions&) {
  for (const auto& spec : {ising_sigma4(), ising_epsilon4()}) {
    const auto report = associativity_sweep(spec, kZ1Grid, kRatioGrid, 200);
    c.residual(report.max_residual);
    c.expect(report.max_residual < 1e-8, [&] { return "associativity residual for " + to_string(spec); });
  }
  summary = "5x5 grid, sigma^4 and epsilon^4, max residual " + fmt(c.max_residual());
}

void suite_commutativity(Checks& c, std::string& summary, const VerifyOptions&) {
  const auto spec = ising_sigma4();
  const auto report = commutativity_check(spec, 0.6, 200);
  c.residual(report.residual);
  c.expect(report.residual < 1e-6, [&] { return "commutativity residual " + fmt(report.residual); });
  c.expect(report.reverse_residual > 1e-3,
           [&] { return "clockwise path unexpectedly passes: " + fmt(report.reverse_residual); });

  std::vector<Rational> phases;
  for (const auto& ch : fuse(kIsing, kSigma, kSigma)) {
    const auto b = braiding_phase(kIsing, kSigma, kSigma, ch);
    phases.push_back(b.exponent);
    c.expect(b.exponent == conformal_weight(kIsing, ch) - 2 * conformal_weight(kIsing, kSigma),
             [&] { return "braiding exponent for " + to_string(ch); });
    const Complex full = std::polar(1.0, 2 * std::numbers::pi * to_double(b.exponent));
    c.expect(std::abs(b.phase * b.phase - full) < 1e-14, [&] { return "phase squared for " + to_string(ch); });
    c.expect(std::abs(std::abs(b.phase) - 1) < 1e-15, [&] { return "phase modulus for " + to_string(ch); });
  }
  std::sort(phases.begin(), phases.end());
  c.expect(phases == report.exponents, [] { return std::string("exponents at 1 differ from braiding exponents"); });
  summary = "residual " + fmt(report.residual) + ", clockwise control " + fmt(report.reverse_residual) +
            ", phases exp(i pi {-1/8, 3/8})";
}

void suite_monodromy(Checks& c, std::string& summary, const VerifyOptions&) {
  const auto specs = level2_correlators(5);
  std::vector<ODESpec> odes;
  for (const auto& spec : specs) {
    auto ode = product_ode(spec);
    if (std::find(odes.begin(), odes.end(), ode) == odes.end()) odes.push_back(std::move(ode));
  }
  double weakest_control = std::numeric_limits<double>::infinity();
  for (const auto& ode : odes) {
    try {
      const auto basis = local_basis(ode, SingularPoint::Zero, 60);
      const double r = monodromy_check(ode, basis);
      c.residual(r);
      c.expect(r < 1e-8, [&] { return "monodromy residual " + fmt(r) + " for " + to_string(ode); });
      const double neg = monodromy_check(ode, perturb_exponents(basis, Rational(1, 100)));
      weakest_control = std::min(weakest_control, neg);
      c.expect(neg > 1e-3, [&] { return "negative control passes for " + to_string(ode); });
    } catch (const Error& e) {
      c.expect(false, [&] { return std::string(to_string(e.kind())) + ": " + e.what(); });
    }
  }
  summary = std::to_string(odes.size()) + " distinct ODEs from " + std::to_string(specs.size()) +
            " correlators, max residual " + fmt(c.max_residual()) + ", weakest negative control " +
            fmt(weakest_control);
}

void suite_tensor(Checks& c, std::string& summary, const VerifyOptions&) {
  const TensorModel ising2({kIsing, kIsing});
  const auto specs = correlators_with_null_level(kIsing, 2);
  long blocks = 0;
  for (const auto& a : specs)
    for (const auto& b : specs)
      for (const auto& ca : a.channels())
        for (const auto& cb : b.channels())
          for (double z : {0.1, 0.3, 0.5}) {
            const auto t = tensor_block(ising2, {a, b}, TensorLabel{{ca, cb}}, z);
            const Complex expected = block(a, ca, z).value * block(b, cb, z).value;
            const double err = std::abs(t.value - expected) / std::max(std::abs(expected), 1.0);
            c.residual(err);
            c.expect(err <= 1e-12, [&] { return "tensor block mismatch for " + to_string(a) + " x " + to_string(b); });
            ++blocks;
          }
  long triples = 0;
  const auto models = [] {
    std::vector<MinimalModel> out;
    for (const auto& m : models_up_to(5))
      if (m.p() < m.q()) out.push_back(m);
    return out;
  }();
  for (const auto& m1 : models)
    for (const auto& m2 : models) {
      const TensorModel t({m1, m2});
      const auto labels = canonical_labels(t);
      for (const auto& a : labels)
        for (const auto& b : labels)
          for (const auto& cc : labels) {
            const long expect = static_cast<long>(fusion_rule(m1, a.labels[0], b.labels[0], cc.labels[0])) *
                                fusion_rule(m2, a.labels[1], b.labels[1], cc.labels[1]);
            c.expect(tensor_fusion_rule(t, a, b, cc) == expect,
                     [&] { return "tensor fusion " + to_string(a) + " " + to_string(b) + " " + to_string(cc); });
            ++triples;
          }
    }
  summary = std::to_string(blocks) + " tensor blocks (max error " + fmt(c.max_residual()) + "), " +
            std::to_string(triples) + " tensor fusion triples";
}

struct SuiteDef {
  const char* name;
  int criterion;
  double limit;
  bool numeric;
  void (*run)(Checks&, std::string&, const VerifyOptions&);
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs{
      {"kac-data", 1, 1, false, suite_kac_data},
      {"fusion-ring", 2, 30, false, suite_fusion_ring},
      {"kac-determinant", 3, 60, false, suite_kac_determinant},
      {"singular-vectors", 4, 5, false, suite_singular_vectors},
      {"bpz-structure", 5, 10, false, suite_bpz_structure},
      {"ising-blocks", 6, 5, true, suite_ising_blocks},
      {"ising-crossing", 7, 30, true, suite_ising_crossing},
      {"commutativity", 8, 30, true, suite_commutativity},
      {"monodromy", 9, 30, true, suite_monodromy},
      {"tensor", 10, 10, true, suite_tensor},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  const auto& defs = suites();
  const auto it = std::find_if(defs.begin(), defs.end(), [&](const SuiteDef& d) { return name == d.name; });
  if (it == defs.end()) fail(ErrorKind::Range, "unknown verification suite '" + name + "'");

  SuiteResult r;
  r.name = it->name;
  r.criterion = it->criterion;
  r.limit_seconds = it->limit;
  Checks checks;
  const auto start = std::chrono::steady_clock::now();
  try {
    it->run(checks, r.summary, options);
  } catch (const Error& e) {
    checks.expect(false, [&] { return std::string("error (") + to_string(e.kind()) + "): " + e.what(); });
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.checks_passed = checks.failed() == 0 && checks.count() > 0;
  if (it->numeric) r.max_residual = checks.max_residual();
  r.failures = checks.failures();
  if (checks.failed() > 0)
    r.summary += (r.summary.empty() ? "" : "; ") + std::to_string(checks.failed()) + " of " +
                 std::to_string(checks.count()) + " checks failed";
  return r;
}

std::string format_result(const SuiteResult& r) {
  std::ostringstream out;
  out << (r.passed() ? "[PASS]" : "[FAIL]") << " criterion " << r.criterion << " " << r.name << ": " << r.summary
      << " (" << std::fixed << std::setprecision(2) << r.seconds << " s, limit " << std::setprecision(0)
      << r.limit_seconds << " s)";
  if (r.checks_passed && !r.passed()) out << " runtime limit exceeded";
  for (const auto& f : r.failures) out << "\n    " << f;
  return out.str();
}

}  // namespace vir
