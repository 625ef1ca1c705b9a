#include "vir/bpz.hpp"

#include <doctest.h>

using namespace vir;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

TwoVarOperator term(const Rational& a, Monomial m, int d1, int d2) { return TwoVarOperator::term(a, m, {d1, d2}); }

RationalPBW monomial(std::vector<int> parts) { return RationalPBW::monomial(Partition(std::move(parts))); }

const MinimalModel kIsing(3, 4);
const KacLabel kSigma{1, 2}, kEps{1, 3}, kVac{1, 1};

CorrelatorSpec sigma4() { return {kIsing, kSigma, kSigma, kSigma, kSigma}; }

}  // namespace

TEST_SUITE("bpz") {
  TEST_CASE("insertion operators") {
    CHECK(insertion_operator_slot3(1, r(1, 16), r(1, 16)) == term(-1, {}, 1, 0) + term(-1, {}, 0, 1));
    const Rational h = r(1, 16);
    const auto expected = term(-1, {-1, 0, 0}, 1, 0) + term(h, {-2, 0, 0}, 0, 0) + term(-1, {0, -1, 0}, 0, 1) +
                          term(h, {0, -2, 0}, 0, 0);
    CHECK(insertion_operator_slot3(2, h, h) == expected);
    const auto d1 = term(1, {}, 1, 0) + term(1, {}, 0, 1);
    CHECK(d1 * d1 == term(1, {}, 2, 0) + term(2, {}, 1, 1) + term(1, {}, 0, 2));
  }

  TEST_CASE("L(-1) acts as a derivative") {
    const CorrelatorSpec vac(kIsing, kVac, kVac, kVac, kVac);
    CHECK(derive_pde_slot3(vac, monomial({1})) == term(-1, {}, 1, 0) + term(-1, {}, 0, 1));
    CHECK(derive_pde_slot2(sigma4(), monomial({1})) == term(1, {}, 0, 1));
  }

  TEST_CASE("derived operators") {
    const auto p = null_vector(kIsing, kSigma).vector;
    const auto op3 = derive_pde_slot3(sigma4(), p);
    CHECK(op3.order() == 2);
    CHECK(op3.singular_loci() == TwoVarOperator::Loci{true, true, false});
    CHECK(derive_pde_slot3(sigma4(), Rational(5) * p) == Rational(5) * op3);

    const auto op2 = derive_pde_slot2(sigma4(), p);
    CHECK(op2.order() == 2);
    CHECK(op2.singular_loci().diagonal);
    CHECK(op2.singular_loci().z2_zero);
    CHECK(derive_pde_slot2(sigma4(), Rational(5) * p) == Rational(5) * op2);

    CHECK_THROWS_AS(derive_pde_slot3(sigma4(), RationalPBW(2)), Error);
  }

  TEST_CASE("channel exponents") {
    const auto id = channel_exponents(sigma4(), kVac);
    CHECK(id == ExponentPair{0, r(-1, 8)});
    const auto eps = channel_exponents(sigma4(), {2, 1});
    CHECK(eps == ExponentPair{r(-1, 2), r(3, 8)});
    const CorrelatorSpec vac(kIsing, kVac, kVac, kVac, kVac);
    CHECK(channel_exponents(vac, kVac) == ExponentPair{0, 0});
    CHECK(sigma4().channels() == std::vector<KacLabel>{kVac, kEps});
    try {
      channel_exponents(vac, kSigma);
      FAIL("expected a fusion error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Fusion);
    }
    const auto anchor = reference_anchor(sigma4());
    CHECK(anchor.t1 + anchor.t2 == sigma4().scaling_degree());
  }

  TEST_CASE("reduction to an ODE") {
    const auto ode = product_ode(sigma4());
    CHECK(ode.order() == 2);
    CHECK(singular_structure(ode).fuchsian_01());
    CHECK(indicial_exponents(ode, SingularPoint::Zero) == std::vector<Rational>{0, r(1, 2)});
    CHECK(indicial_exponents(ode, SingularPoint::One) == std::vector<Rational>{r(-1, 8), r(3, 8)});

    // First-order translation operator: (1 - z) g' = 0, so constants solve it.
    // Normalization strips the common factor (1 - z).
    const auto translation = reduce_to_ode(term(-1, {}, 1, 0) + term(-1, {}, 0, 1), ExponentPair{0, 0});
    CHECK(translation.order() == 1);
    CHECK(translation[0].is_zero());
    CHECK(translation[1] == RationalPolynomial(1));

    // Moving the anchor by (+1, -1) regauges g -> z g.
    const auto anchor = reference_anchor(sigma4());
    const auto shifted = product_ode(sigma4(), {anchor.t1 + 1, anchor.t2 - 1});
    CHECK(indicial_exponents(shifted, SingularPoint::Zero) == std::vector<Rational>{1, r(3, 2)});

    try {
      reduce_to_ode(term(1, {}, 1, 0) + TwoVarOperator::identity(), ExponentPair{0, 0});
      FAIL("expected a reduction error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Reduction);
    }
  }

  TEST_CASE("iterate chart") {
    const auto ode = iterate_ode(sigma4());
    CHECK(ode.variable() == "u");
    CHECK(indicial_exponents(ode, SingularPoint::Zero) == std::vector<Rational>{r(-1, 8), r(3, 8)});
    CHECK_FALSE(equations_independent(sigma4()));
  }

  TEST_CASE("level-2 correlators") {
    const auto specs = correlators_with_null_level(kIsing, 2);
    CHECK(!specs.empty());
    for (const auto& spec : specs) {
      CAPTURE(to_string(spec));
      const auto ode = product_ode(spec);
      CHECK(ode.order() == 2);
      CHECK(singular_structure(ode).fuchsian_01());
      const auto roots = indicial_exponents(ode, SingularPoint::Zero);
      const auto anchor = reference_anchor(spec);
      for (const auto& c : spec.channels()) {
        const auto rel = channel_exponents(spec, c).t2 - anchor.t2;
        CHECK(std::find(roots.begin(), roots.end(), rel) != roots.end());
      }
    }
  }
}
