#include "vir/errors.hpp"
#include "vir/fusion.hpp"
#include "vir/model.hpp"

#include <doctest.h>

#include <numeric>

using namespace vir;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

// su(2) fusion at level k with labels written as dimensions 1..k+1.
bool su2_allowed(int a, int b, int c, int k) {
  return (a + b + c) % 2 == 1 && c >= std::abs(a - b) + 1 && c <= a + b - 1 && a + b + c <= 2 * k + 3;
}

// Brute force over the representatives of the third label.
int fusion_oracle(const MinimalModel& model, const KacLabel& a, const KacLabel& b, const KacLabel& c) {
  const int p = model.p(), q = model.q();
  for (KacLabel rep : {c, KacLabel{p - c.m, q - c.n}})
    if (su2_allowed(a.m, b.m, rep.m, p - 2) && su2_allowed(a.n, b.n, rep.n, q - 2)) return 1;
  return 0;
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("central charges") {
    CHECK(central_charge(MinimalModel(3, 4)) == r(1, 2));
    CHECK(central_charge(MinimalModel(2, 3)) == 0);
    CHECK(central_charge(MinimalModel(2, 5)) == r(-22, 5));
    CHECK(central_charge(MinimalModel(4, 5)) == r(7, 10));
  }

  TEST_CASE("invalid models and labels") {
    CHECK_THROWS_AS(MinimalModel(4, 6), Error);
    CHECK_THROWS_AS(MinimalModel(1, 3), Error);
    CHECK_THROWS_AS(MinimalModel(3, 3), Error);
    const MinimalModel ising(3, 4);
    CHECK_FALSE(is_valid(ising, {3, 1}));
    CHECK_FALSE(is_valid(ising, {1, 0}));
    try {
      require_valid(ising, {0, 1});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Range);
    }
  }

  TEST_CASE("conformal weights") {
    const MinimalModel ising(3, 4);
    CHECK(conformal_weight(ising, {1, 1}) == 0);
    CHECK(conformal_weight(ising, {2, 2}) == r(1, 16));
    CHECK(conformal_weight(ising, {2, 1}) == r(1, 2));
    CHECK(conformal_weight(MinimalModel(2, 5), {1, 2}) == r(-1, 5));
    for (const auto& m : {MinimalModel(3, 4), MinimalModel(5, 7), MinimalModel(4, 9)})
      for (int a = 1; a < m.p(); ++a)
        for (int b = 1; b < m.q(); ++b)
          CHECK(conformal_weight(m, {a, b}) == conformal_weight(m, reflect(m, {a, b})));
  }

  TEST_CASE("canonical labels") {
    const MinimalModel ising(3, 4);
    CHECK(canonicalize(ising, {2, 3}) == KacLabel{1, 1});
    CHECK(canonicalize(ising, {1, 2}) == KacLabel{1, 2});
    CHECK(canonicalize(MinimalModel(2, 5), {1, 4}) == KacLabel{1, 1});
    CHECK(null_level(ising, {2, 1}) == 2);
    CHECK(null_level(ising, {2, 2}) == 2);
    CHECK(null_level(ising, {1, 1}) == 1);
    CHECK(null_level(MinimalModel(4, 5), {2, 2}) == 4);
  }

  TEST_CASE("kac tables") {
    const auto ising = kac_table(MinimalModel(3, 4));
    REQUIRE(ising.size() == 3);
    std::vector<Rational> weights;
    for (const auto& e : ising) weights.push_back(e.weight);
    std::sort(weights.begin(), weights.end());
    CHECK(weights == std::vector<Rational>{0, r(1, 16), r(1, 2)});
    const auto trivial = kac_table(MinimalModel(2, 3));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].weight == 0);
    const auto yang_lee = kac_table(MinimalModel(2, 5));
    REQUIRE(yang_lee.size() == 2);
    CHECK(yang_lee[1].weight == r(-1, 5));
    for (int p = 2; p <= 13; ++p)
      for (int q = 2; q <= 13; ++q)
        if (p != q && std::gcd(p, q) == 1)
          CHECK(kac_table(MinimalModel(p, q)).size() == static_cast<std::size_t>((p - 1) * (q - 1) / 2));
  }

  TEST_CASE("tensor data") {
    const MinimalModel ising(3, 4), yang_lee(2, 5);
    const TensorModel square({ising, ising});
    CHECK(tensor_weight(square, TensorLabel{{{2, 2}, {2, 2}}}) == r(1, 8));
    CHECK(tensor_weight(square, vacuum_label(square)) == 0);
    CHECK(tensor_central_charge(TensorModel({ising, yang_lee})) == r(-39, 10));
    CHECK(canonical_labels(square).size() == 9);
    CHECK_THROWS_AS(TensorModel({}), Error);
  }
}

TEST_SUITE("fusion") {
  TEST_CASE("documented rules") {
    const MinimalModel ising(3, 4);
    CHECK(fusion_rule(ising, {1, 1}, {2, 2}, {2, 2}) == 1);
    CHECK(fusion_rule(ising, {2, 2}, {2, 2}, {2, 1}) == 1);
    CHECK(fusion_rule(ising, {2, 1}, {2, 1}, {2, 1}) == 0);
    CHECK(fuse(ising, {2, 2}, {2, 2}) == std::vector<KacLabel>{{1, 1}, {1, 3}});
    CHECK(fuse(MinimalModel(2, 5), {1, 2}, {1, 2}) == std::vector<KacLabel>{{1, 1}, {1, 2}});
    for (const auto& x : canonical_labels(ising)) CHECK(fuse(ising, {1, 1}, x) == std::vector<KacLabel>{x});
  }

  TEST_CASE("agrees with the su(2) product oracle") {
    for (const auto& m : {MinimalModel(3, 4), MinimalModel(2, 5), MinimalModel(4, 5), MinimalModel(3, 7),
                          MinimalModel(5, 6), MinimalModel(7, 4)}) {
      CAPTURE(to_string(m));
      for (int a1 = 1; a1 < m.p(); ++a1)
        for (int a2 = 1; a2 < m.q(); ++a2)
          for (int b1 = 1; b1 < m.p(); ++b1)
            for (int b2 = 1; b2 < m.q(); ++b2)
              for (const auto& c : canonical_labels(m))
                REQUIRE(fusion_rule(m, {a1, a2}, {b1, b2}, c) == fusion_oracle(m, {a1, a2}, {b1, b2}, c));
    }
  }

  TEST_CASE("ring axioms") {
    for (const auto& m : {MinimalModel(3, 4), MinimalModel(2, 3), MinimalModel(4, 5)}) {
      const auto report = verify_ring_axioms(m);
      CHECK(report.passed);
      CHECK(report.failed_axiom.empty());
    }
    CHECK(verify_ring_axioms(MinimalModel(3, 4)).checked_tuples > 0);
  }

  TEST_CASE("tensor fusion") {
    const MinimalModel ising(3, 4), yang_lee(2, 5);
    const TensorModel square({ising, ising});
    CHECK(tensor_fusion_rule(square, TensorLabel{{{2, 2}, {2, 2}}}, TensorLabel{{{2, 2}, {2, 2}}},
                             TensorLabel{{{1, 1}, {2, 1}}}) == 1);
    const TensorModel mixed({ising, yang_lee});
    CHECK(tensor_fusion_rule(mixed, TensorLabel{{{2, 2}, {1, 2}}}, TensorLabel{{{2, 2}, {1, 2}}},
                             TensorLabel{{{2, 1}, {1, 1}}}) == 1);
    const auto vac = vacuum_label(mixed);
    for (const auto& b : canonical_labels(mixed))
      for (const auto& c : canonical_labels(mixed)) CHECK(tensor_fusion_rule(mixed, vac, b, c) == (b == c ? 1 : 0));
    const auto products = tensor_fuse(square, TensorLabel{{{2, 2}, {1, 2}}}, TensorLabel{{{2, 2}, {1, 2}}});
    CHECK(products.size() == 4);
  }
}
