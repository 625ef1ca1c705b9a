#include "vir/cache.hpp"
#include "vir/serialize.hpp"

#include <doctest.h>

#include <fstream>
#include <functional>
#include <random>

using namespace vir;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

// parse(print(x)) through the textual form.
Json reparse(const Json& j) { return Json::parse(j.dump()); }

template <typename T, typename From>
void round_trip(const T& value, From from) {
  CHECK(from(reparse(to_json(value))) == value);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

std::filesystem::path fresh_dir(const std::string& tag) {
  std::random_device rd;
  auto dir = std::filesystem::temp_directory_path() / ("vir-test-" + tag + "-" + std::to_string(rd()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("exact values") {
    CHECK(to_json(r(-3, 4)) == Json("-3/4"));
    CHECK(to_json(Rational(0)) == Json("0/1"));
    round_trip(r(123456789, 1000000007), rational_from_json);
    round_trip(MinimalModel(3, 4), model_from_json);
    round_trip(KacLabel{2, 3}, label_from_json);
    round_trip(TensorLabel{{{1, 2}, {2, 1}}}, tensor_label_from_json);
    round_trip(Partition({3, 1, 1}), partition_from_json);
    const auto v = null_vector(MinimalModel(4, 5), {2, 2}).vector;
    round_trip(v, pbw_from_json);
    round_trip(RationalPolynomial(std::vector<Rational>{r(1, 2), 0, r(-7, 3)}), polynomial_from_json);
    round_trip(gram_record(verma_params(MinimalModel(3, 4), {1, 2}), 3), gram_from_json);
  }

  TEST_CASE("equations and series") {
    const CorrelatorSpec spec(MinimalModel(3, 4), {1, 2}, {1, 2}, {1, 2}, {1, 2});
    const auto ode = product_ode(spec);
    round_trip(ode, ode_from_json);
    round_trip(iterate_ode(spec), ode_from_json);
    const auto s = frobenius_expand(ode, SingularPoint::One, r(3, 8), 12);
    round_trip(s, series_from_json);
    CHECK(series_from_json(reparse(to_json(s))).numeric == s.numeric);
  }

  TEST_CASE("numeric records") {
    round_trip(Complex(0.1, -2.5e-300), complex_from_json);
    const auto e = block(CorrelatorSpec(MinimalModel(3, 4), {1, 2}, {1, 2}, {1, 2}, {1, 2}), {1, 1}, 0.3);
    const auto back = evaluation_from_json(reparse(to_json(e)));
    CHECK(back.value == e.value);
    CHECK(back.tail_bound == e.tail_bound);
    CHECK(back.order_used == e.order_used);
    const auto f = fusing_matrix(product_ode(CorrelatorSpec(MinimalModel(3, 4), {1, 2}, {1, 2}, {1, 2}, {1, 2})), 40);
    round_trip(f, fusing_from_json);
    const ResidualReport report{"associativity", "|z1| > |z2| > |z1 - z2| > 0", Json{{"z1", {0.9, 1.1}}}, 3.5e-16, 200,
                                {0.4, 0.6}};
    round_trip(report, residual_report_from_json);
  }

  TEST_CASE("malformed input") {
    CHECK(kind_of([] { rational_from_json(Json("1/0")); }) == ErrorKind::Parse);
    CHECK(kind_of([] { rational_from_json(Json(0.5)); }) == ErrorKind::Parse);
    CHECK(kind_of([] { model_from_json(Json{{"p", 3}, {"q", 4}, {"extra", 1}}); }) == ErrorKind::Parse);
    CHECK(kind_of([] { model_from_json(Json{{"p", 3}}); }) == ErrorKind::Parse);
    CHECK(kind_of([] { label_from_json(Json::array({1})); }) == ErrorKind::Parse);
    CHECK(kind_of([] { ode_from_json(Json{{"variable", "z"}, {"coefficients", "x"}}); }) == ErrorKind::Parse);
    CHECK(kind_of([] { series_from_json(Json{{"point", "2"}, {"exponent", "0/1"}, {"coefficients", {"1/1"}}}); }) ==
          ErrorKind::Parse);
  }

  TEST_CASE("documents") {
    const auto doc = document("vir.test", Json{{"x", 1}});
    CHECK(doc.at("schema_version") == kSchemaVersion);
    CHECK(document_payload(reparse(doc), "vir.test") == Json{{"x", 1}});
    CHECK(kind_of([&] { document_payload(doc, "vir.other"); }) == ErrorKind::Parse);
    Json future = doc;
    future["schema_version"] = kSchemaVersion + 1;
    CHECK(kind_of([&] { document_payload(future, "vir.test"); }) == ErrorKind::Parse);
  }
}

TEST_SUITE("cache") {
  TEST_CASE("digest") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  }

  TEST_CASE("Gram cache round trip") {
    const auto dir = fresh_dir("gram");
    const auto params = verma_params(MinimalModel(4, 5), {2, 2});
    const RationalMatrix direct = gram_matrix(params, 5);
    {
      GramCache cache(dir);
      CHECK(cache.gram(params, 5) == direct);
      CHECK(cache.misses() == 1);
      CHECK(std::filesystem::exists(cache.path_for(params, 5)));
    }
    GramCache warm(dir);
    CHECK(warm.gram(params, 5) == direct);
    CHECK(warm.hits() == 1);
    const auto cached = singular_vectors(params, 5, &warm);
    const auto computed = singular_vectors(params, 5);
    REQUIRE(cached.size() == computed.size());
    for (std::size_t i = 0; i < cached.size(); ++i) CHECK(cached[i].vector == computed[i].vector);

    std::ofstream(warm.path_for(params, 5), std::ios::trunc) << "{ not json";
    CHECK(warm.gram(params, 5) == direct);
    CHECK(warm.misses() >= 1);
    std::size_t leftovers = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      leftovers += entry.path().string().find(".tmp.") != std::string::npos;
    CHECK(leftovers == 0);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("directory resolution") {
    CHECK(resolve_cache_dir(std::string("/tmp/explicit")) == std::filesystem::path("/tmp/explicit"));
  }
}
