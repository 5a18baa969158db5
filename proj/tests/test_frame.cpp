#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "corpus.hpp"
#include "oracle.hpp"

using namespace framescale;
using Catch::Approx;

namespace {

const double kRoot3Half = std::sqrt(3.0) / 2.0;

FloatFrame mercedes() { return FloatFrame::from_vectors({{1, 0}, {-0.5, kRoot3Half}, {-0.5, -kRoot3Half}}); }

ExactFrame mercedes_exact() {
  const Rational h(-1, 2);
  return ExactFrame::from_gram(Matrix<Rational>{{1, h, h}, {h, 1, h}, {h, h, 1}}, 2);
}

std::vector<double> random_unit(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<double> v(n);
  double s = 0;
  for (auto& x : v) {
    x = g(rng);
    s += x * x;
  }
  for (auto& x : v) x /= std::sqrt(s);
  return v;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("loading frames", "[frame][load]") {
  const auto f = load_frame(json::parse(R"({"dimension": 2, "mode": "float", "vectors": [[1, 0], [0, 1]]})"));
  REQUIRE(std::holds_alternative<FloatFrame>(f));
  CHECK(std::get<FloatFrame>(f).size() == 2);

  CHECK(code_of([] { load_frame(json::parse(R"({"dimension": 2, "mode": "float", "vectors": [[0.9, 0]]})")); }) ==
        ErrorCode::NotUnitNorm);

  const auto g = load_frame(json::parse(R"({"dimension": 2, "mode": "rational", "gram": [["1", "1/2"], ["1/2", "1"]]})"));
  REQUIRE(std::holds_alternative<ExactFrame>(g));
  CHECK(std::get<ExactFrame>(g).gram()(0, 1) == Rational(1, 2));

  CHECK(code_of([] { load_frame(json::parse(R"({"dimension": 2, "mode": "rational", "gram": [["1", "2"], ["2", "1"]]})")); }) ==
        ErrorCode::NotPSD);
  CHECK(code_of([] { load_frame(json::parse(R"({"dimension": 2, "mode": "rational", "gram": [["2", "0"], ["0", "1"]]})")); }) ==
        ErrorCode::BadDiagonal);
  CHECK(code_of([] { load_frame(json::parse(R"({"dimension": 1, "mode": "float", "vectors": [[1]]})")); }) ==
        ErrorCode::DimensionTooSmall);
  CHECK(code_of([] { load_frame(json::parse(R"({"dimension": 3, "mode": "float", "vectors": [[1, 0, 0], [0, 1, 0]]})")); }) ==
        ErrorCode::TooFewVectors);
  CHECK(code_of([] { load_frame(json::parse(R"({"dimension": 2, "mode": "float", "vectors": [[1, 0, 0], [0, 1]]})")); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(code_of([] { load_frame(json::parse(R"({"dimension": 2, "mode": "float"})")); }) == ErrorCode::Schema);
  CHECK(code_of([] { load_frame(json::parse(R"({"dimension": 2, "mode": 7, "vectors": [[1, 0], [0, 1]]})")); }) ==
        ErrorCode::Schema);
  CHECK(code_of([] {
          load_frame(json::parse(R"({"dimension": 2, "mode": "rational", "gram": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]})"));
        }) == ErrorCode::NotPSD);
}

TEST_CASE("mode overrides", "[frame][load]") {
  const auto doc = json::parse(R"({"dimension": 2, "mode": "float", "vectors": [[0.6, 0.8], [-0.8, 0.6], [1, 0]]})");
  LoadOptions exact;
  exact.mode_override = ScalarMode::Kind::ExactRational;
  const auto e = std::get<ExactFrame>(load_frame(doc, exact));
  CHECK(e.gram()(0, 1) == 0);
  CHECK(e.gram()(0, 2) == Rational(3, 5));

  const auto inexact = json::parse(R"({"dimension": 2, "mode": "float", "vectors": [[0.7071067811865476, 0.7071067811865476], [1, 0]]})");
  CHECK(code_of([&] { load_frame(inexact, exact); }) == ErrorCode::NotUnitNorm);

  LoadOptions fl;
  fl.mode_override = ScalarMode::Kind::Float;
  const auto m = std::get<FloatFrame>(load_frame(json::parse(R"({"dimension": 2, "mode": "rational",
      "gram": [["1", "-1/2", "-1/2"], ["-1/2", "1", "-1/2"], ["-1/2", "-1/2", "1"]]})"),
                                                 fl));
  CHECK(m.gram()(0, 1) == Approx(-0.5));
  CHECK(is_tight(m, IndexSet::range(3)).tight);
}

TEST_CASE("rational parsing", "[frame][io]") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5E2") == Rational(250));
  CHECK(parse_rational("007/010") == Rational(7, 10));
  CHECK(parse_rational("0.08") == Rational(2, 25));
  CHECK_THROWS_AS(parse_rational("1e99999"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("."), Error);
}

TEST_CASE("diagram vectors", "[frame][diagram]") {
  const std::vector<double> e1{1, 0};
  auto d = diagram_vector(e1, 2);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == Approx(1.0));
  CHECK(d[1] == Approx(0.0).margin(1e-15));

  const double r = 1.0 / std::sqrt(2.0);
  d = diagram_vector(std::vector<double>{r, r}, 2);
  CHECK(d[0] == Approx(0.0).margin(1e-15));
  CHECK(d[1] == Approx(1.0));

  d = diagram_vector(std::vector<double>{0, 1, 0}, 3);
  REQUIRE(d.size() == 6);
  CHECK(d[0] == Approx(-r));
  CHECK(d[1] == Approx(0.0).margin(1e-15));
  CHECK(d[2] == Approx(r));
  for (std::size_t i = 3; i < 6; ++i) CHECK(d[i] == Approx(0.0).margin(1e-15));

  CHECK_THROWS_AS(diagram_vector(std::vector<double>{1, 0}, 3), Error);
}

TEST_CASE("diagram gramian examples", "[frame][diagram]") {
  const auto onb = FloatFrame::from_vectors({{1, 0}, {0, 1}});
  const auto g = diagram_gramian(onb);
  CHECK(g(0, 0) == Approx(1.0));
  CHECK(g(0, 1) == Approx(-1.0));
  CHECK(g(1, 1) == Approx(1.0));

  const auto cross = FloatFrame::from_vectors({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  const auto gc = diagram_gramian(cross);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(gc(i, j) == Approx(i % 2 == j % 2 ? 1.0 : -1.0));

  const auto ge = diagram_gramian(mercedes_exact());
  for (std::size_t i = 0; i < 3; ++i) CHECK(ge(i, i) == 1);
  CHECK(ge(0, 1) == Rational(-1, 2));
}

TEST_CASE("closed-form diagram gramian matches diagram vectors", "[frame][diagram][property]") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(2, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = dim(rng);
    const std::size_t k = n + std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    std::vector<std::vector<double>> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back(random_unit(rng, n));
    const auto frame = FloatFrame::from_vectors(vs);
    const auto closed = diagram_gramian_from_gram(frame.gram(), n);
    const auto explicit_g = diagram_gramian(frame);
    std::vector<std::vector<double>> dv;
    for (const auto& v : vs) dv.push_back(oracle::diagram_vector(v));
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(oracle::dot(dv[i], dv[i]) == Approx(1.0).margin(1e-12));
      for (std::size_t j = 0; j < k; ++j) {
        CHECK(std::fabs(closed(i, j) - oracle::dot(dv[i], dv[j])) <= 1e-10);
        CHECK(std::fabs(explicit_g(i, j) - oracle::dot(dv[i], dv[j])) <= 1e-10);
      }
    }
    CHECK(is_positive_semidefinite(explicit_g, 1e-9));
  }
}

TEST_CASE("tightness agrees with the frame operator on the corpus", "[frame][tight][property]") {
  for (const auto& cf : corpus::make_corpus(30, 99)) {
    INFO(cf.name);
    const auto exact = cf.exact();
    const auto fl = cf.floating();
    CHECK(is_positive_semidefinite(diagram_gramian(exact)));
    const oracle::Vec ones(cf.size(), Rational(1));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cf.size()); ++mask) {
      const bool expected = oracle::is_tight(cf, ones, mask);
      CHECK(is_tight(exact, IndexSet(mask)).tight == expected);
      CHECK(is_tight(fl, IndexSet(mask)).tight == expected);
    }
  }
}

TEST_CASE("tightness examples", "[frame][tight]") {
  const auto onb = FloatFrame::from_vectors({{1, 0}, {0, 1}});
  auto t = is_tight(onb, IndexSet::range(2));
  CHECK(t.tight);
  CHECK(t.constant == Approx(1.0));

  t = is_tight(mercedes(), IndexSet::range(3));
  CHECK(t.tight);
  CHECK(t.constant == Approx(2.0 / 3.0));
  const auto te = is_tight(mercedes_exact(), IndexSet::range(3));
  CHECK(te.tight);
  CHECK(te.constant == Rational(2, 3));

  const auto ee = FloatFrame::from_vectors({{1, 0}, {0, 1}, {1, 0}});
  CHECK_FALSE(is_tight(ee, IndexSet::range(3)).tight);
  CHECK_FALSE(is_tight(ee, IndexSet::from_elements({0, 2})).tight);
  CHECK_THROWS_AS(is_tight(ee, IndexSet{}), Error);
}

TEST_CASE("parseval checks", "[frame][parseval]") {
  const auto onb = FloatFrame::from_vectors({{1, 0}, {0, 1}});
  CHECK(is_parseval<double>(onb, std::vector<double>{1, 1}));
  CHECK_FALSE(is_parseval<double>(onb, std::vector<double>{2, 2}));
  CHECK(is_parseval<double>(mercedes(), std::vector<double>{2.0 / 3, 2.0 / 3, 2.0 / 3}));
  const Rational t(2, 3);
  CHECK(is_parseval<Rational>(mercedes_exact(), std::vector<Rational>{t, t, t}));
  CHECK_FALSE(is_parseval<Rational>(mercedes_exact(), std::vector<Rational>{1, 1, 0}));
  CHECK_THROWS_AS(is_parseval<double>(onb, std::vector<double>{1}), Error);
}

TEST_CASE("exact parseval check agrees with the coordinate oracle", "[frame][parseval][property]") {
  std::mt19937_64 rng(5);
  for (const auto& cf : corpus::make_corpus(20, 123)) {
    INFO(cf.name);
    const auto exact = cf.exact();
    for (const auto& v : oracle::minimal_scalings(cf)) {
      CHECK(is_parseval<Rational>(exact, v));
      auto w = v;
      w[0] += Rational(1, 7);
      CHECK(is_parseval<Rational>(exact, w) == oracle::is_parseval(cf, w));
    }
  }
}

TEST_CASE("frame bounds", "[frame][bounds]") {
  auto b = frame_bounds(FloatFrame::from_vectors({{1, 0}, {0, 1}}));
  CHECK(b.lower == Approx(1.0));
  CHECK(b.upper == Approx(1.0));
  b = frame_bounds(FloatFrame::from_vectors({{1, 0}, {1, 0}, {0, 1}}));
  CHECK(b.lower == Approx(1.0));
  CHECK(b.upper == Approx(2.0));
  b = frame_bounds(mercedes());
  CHECK(b.lower == Approx(1.5));
  CHECK(b.upper == Approx(1.5));
  b = frame_bounds(mercedes_exact());
  CHECK(b.lower == Approx(1.5));
  CHECK(b.upper == Approx(1.5));
  CHECK(b.approximate);
  CHECK_THROWS_AS(frame_bounds(FloatFrame::from_vectors({{1, 0}, {-1, 0}})), Error);
}

TEST_CASE("spanning and selection", "[frame]") {
  const auto f = FloatFrame::from_vectors({{1, 0}, {-1, 0}, {0, 1}});
  CHECK(spans(f, IndexSet::from_elements({0, 2})));
  CHECK_FALSE(spans(f, IndexSet::from_elements({0, 1})));
  const auto g = f.select({0, 2, 2});
  CHECK(g.size() == 3);
  CHECK(g.gram()(1, 2) == Approx(1.0));
}

TEST_CASE("float gram input is factored into vectors", "[frame][load]") {
  const auto f = FloatFrame::from_gram(Matrix<double>{{1, 0.5}, {0.5, 1}}, 2);
  CHECK(f.gram()(0, 1) == Approx(0.5));
  CHECK(oracle::dot(std::vector<double>(f.vector(0).begin(), f.vector(0).end()),
                    std::vector<double>(f.vector(0).begin(), f.vector(0).end())) == Approx(1.0));
}
