#include "fewnomial/error.hpp"
#include "fewnomial/instance.hpp"
#include "fewnomial/report.hpp"
#include "fewnomial/verify.hpp"

#include <doctest.h>

#include <string>

using namespace fewnomial;

namespace {

std::string data(const std::string& name) { return std::string(FEWNOMIAL_DATA_DIR) + "/instances/" + name + ".json"; }

int code_of(const std::string& text) {
  try {
    parse_instance_text(text);
  } catch (const InputError& e) {
    return static_cast<int>(e.code());
  }
  return 0;
}

}  // namespace

TEST_CASE("instance parsing") {
  const auto ellipse = parse_instance(data("ellipse"));
  CHECK(ellipse.raw.size() == 5);
  CHECK(ellipse.label == "ellipse");
  CHECK(ellipse.coordinates == Coordinates::x);
  REQUIRE(ellipse.known_betti.has_value());
  CHECK(*ellipse.known_betti == std::vector<int>{1, 1});

  const auto tri = parse_instance_text(R"({"coordinates": "x", "exponents": [[0], [1], [2]], "coefficients": [2, -3, 1]})");
  CHECK(tri.raw.ambient_dim() == 1);
  CHECK(tri.raw.term(2).exponent[0] == 2.0);
  const auto ns = normalize_instance(tri);
  CHECK(ns.n == 1);
  CHECK(ns.l == 1);

  const auto back = parse_instance_text(instance_to_json(ellipse));
  CHECK(back.raw.size() == ellipse.raw.size());
  CHECK(back.label == ellipse.label);
}

TEST_CASE("input errors carry distinct codes") {
  CHECK(code_of("{not json") == 4);
  CHECK(code_of(R"({"exponents": [], "coefficients": []})") == 4);
  CHECK(code_of(R"({"exponents": [[0]]})") == 4);
  CHECK(code_of(R"({"exponents": [[0], [1]], "coefficients": [1, 0]})") == 5);
  CHECK(code_of(R"({"exponents": [[0], [1, 2]], "coefficients": [1, 2]})") == 6);
  CHECK(code_of(R"({"exponents": [[0], [1]], "coefficients": [1]})") == 6);
  CHECK(code_of(R"({"exponents": [[0], [1]], "coefficients": [1, 2], "coordinates": "y"})") == 4);
  CHECK_THROWS_AS(parse_instance("/nonexistent/instance.json"), InputError);
}

TEST_CASE("random instances") {
  const auto a = random_instance(2, 0, 7);
  CHECK(a.raw.size() == 3);
  const auto b = random_instance(2, 0, 7);
  CHECK(instance_to_json(a) == instance_to_json(b));
  CHECK(instance_to_json(random_instance(2, 0, 8)) != instance_to_json(a));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int n = 1 + static_cast<int>(seed % 3);
    const int l = static_cast<int>(seed % 4);
    const auto inst = random_instance(n, l, seed);
    for (const auto& t : inst.raw.terms()) {
      CHECK(std::abs(t.coefficient) >= 0.01);
      CHECK(std::abs(t.coefficient) <= 1.0);
    }
    const auto ns = normalize_instance(inst);
    CHECK(ns.n == n);
    CHECK(ns.l == l);
  }
}

TEST_CASE("verify: curated chain") {
  const auto rep = run_verify(parse_instance(data("ellipse")));
  CHECK(rep.exit_code == 0);
  REQUIRE(rep.oracle.has_value());
  CHECK(rep.oracle->betti.sum() == 2);
  REQUIRE(rep.shifted.has_value());
  CHECK(rep.shifted->contributing_count >= 2);
  CHECK(rep.shifted->contributing_count <= 31);
  CHECK(rep.verified == true);
  CHECK(rep.known_betti_match == true);

  const auto hyper = run_verify(parse_instance(data("hyperplane")));
  CHECK(hyper.exit_code == 0);
  CHECK(hyper.oracle->betti.sum() == 1);
  CHECK(hyper.shifted->contributing_count == 1);

  const auto four = run_verify(parse_instance(data("simplex4")));
  CHECK(four.mode == "bounds+census only");
  CHECK_FALSE(four.oracle.has_value());
  CHECK_FALSE(four.verified.has_value());
  CHECK(four.exit_code == 0);
}

TEST_CASE("verify reports stage failures") {
  Instance inst = parse_instance(data("ellipse"));
  inst.base_M = Vector::Constant(5, 1.0);
  const auto rep = run_verify(inst);
  REQUIRE(rep.failure.has_value());
  CHECK(rep.exit_code == 6);
  CHECK_FALSE(rep.verified.has_value());
  CHECK(to_json(rep)["failure"]["kind"] == "input");
}

TEST_CASE("reports are deterministic apart from timings") {
  const auto inst = parse_instance(data("segment"));
  VerifyConfig cfg;
  cfg.seed = 4;
  const auto a = to_json(run_verify(inst, cfg), false).dump();
  const auto b = to_json(run_verify(inst, cfg), false).dump();
  CHECK(a == b);
  CHECK(a.find("timings") == std::string::npos);
  CHECK(to_json(run_verify(inst, cfg)).contains("timings"));
}

TEST_CASE("report formats") {
  const auto j = to_json(compare_bounds(2, 1));
  CHECK(j["khovanskii"]["value"] == 10976.0);
  CHECK(j["simple"].is_object());
  CHECK(to_json(compare_bounds(1, 0))["simple"].is_null());
  CHECK(ReportJson::parse(to_json(compare_bounds(1, 1)).dump()).is_object());
  const std::string csv = to_csv(compare_bounds(2, 2, 2));
  CHECK(csv.rfind("quantity,", 0) == 0);
  CHECK(csv.find("milnor,,,18,") != std::string::npos);
  CHECK(to_json(compare_bounds(40, 30))["khovanskii"]["value"].is_null());
}
