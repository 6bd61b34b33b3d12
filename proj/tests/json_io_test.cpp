#include <doctest.h>

#include "g2forms/json_io.hpp"
#include "test_util.hpp"

using namespace g2f;

TEST_CASE("3-form JSON round trip") {
  KForm w = canonical_split_g2();
  Json j = kform_to_json(w);
  CHECK(kform_from_json(j) == w);
  CHECK(j["dim"] == 7);
  CHECK(j["degree"] == 3);
  CHECK(j["terms"].size() == 7);

  test::Rng rng(71);
  KForm r(6, 2);
  auto blades = blade::enumerate(6, 2);
  for (int i = 0; i < 8; ++i)
    r.add_term(blades[rng.range(0, (long)blades.size() - 1)], rng.scalar());
  CHECK(kform_from_json(kform_to_json(r)) == r);
}

TEST_CASE("malformed 3-form input is rejected") {
  CHECK_THROWS_AS(kform_from_json(Json::parse(R"({"degree": 3})")), InputError);
  CHECK_THROWS_AS(kform_from_json(Json::parse(
                      R"({"dim": 7, "degree": 3, "terms": [
                          {"indices": [1, 2], "coeff": "1"}]})")),
                  InputError);
  CHECK_THROWS_AS(kform_from_json(Json::parse(
                      R"({"dim": 7, "degree": 3, "terms": [
                          {"indices": [1, 2, 3], "coeff": 5}]})")),
                  InputError);
  CHECK_THROWS_AS(kform_from_json(Json::parse(
                      R"({"dim": 7, "degree": 3, "terms": [
                          {"indices": [1, 2, 3], "coeff": "1"},
                          {"indices": [1, 2, 3], "coeff": "2"}]})")),
                  InputError);
  CHECK_THROWS_AS(kform_from_json(Json::parse(
                      R"({"dim": 7, "degree": 3, "terms": [
                          {"indices": [3, 2, 1], "coeff": "1"}]})")),
                  InputError);
}

TEST_CASE("type report serialization") {
  Json j = type_report_to_json(classify(canonical_split_g2()));
  CHECK(j["verdict"] == "SplitStable");
  CHECK(j["stabilizer_dim"] == 14);
  CHECK(j["b_rank"] == 7);
  int p = j["signature"][0].get<int>(), q = j["signature"][1].get<int>();
  CHECK(((p == 3 && q == 4) || (p == 4 && q == 3)));
}

TEST_CASE("Lie algebra files are validated on load") {
  // so(3)-like: [e1,e2] = e3, [e2,e3] = e1, [e1,e3] = -e2.
  Json good = Json::parse(R"({"dim": 3, "brackets": [
    {"i": 1, "j": 2, "coeffs": ["0", "0", "1"]},
    {"i": 2, "j": 3, "coeffs": ["1", "0", "0"]},
    {"i": 1, "j": 3, "coeffs": ["0", "-1", "0"]}]})");
  LieAlgebra g = lie_algebra_from_json(good);
  CHECK(g.dim() == 3);
  CHECK(is_semisimple(g));

  // Corrupting [e1, e2] to e1 breaks the Jacobi identity.
  Json bad = good;
  bad["brackets"][0]["coeffs"] = {"1", "0", "0"};
  CHECK_THROWS_AS(lie_algebra_from_json(bad), InputError);

  Json dup = good;
  dup["brackets"].push_back(good["brackets"][0]);
  CHECK_THROWS_AS(lie_algebra_from_json(dup), InputError);
}

TEST_CASE("verification report serialization") {
  VerifyOptions opts;
  opts.samples = 2;
  opts.seed = 0;
  opts.translate_points = 1;
  VerifyRun run = run_verification(opts);
  Json j = verify_run_to_json(run);
  CHECK(j["records"].size() == 2);
  CHECK(j["summary"]["samples"] == 2);
  CHECK(j["summary"]["all_split_stable"] == true);
  CHECK(j["summary"]["seed"] == 0);
  CHECK(j["records"][0]["in_x7"] == true);
  CHECK(j["records"][0]["tangent_rank"] == 7);
  CHECK(j["records"][0]["report"]["verdict"] == "SplitStable");
  std::string text = verify_run_to_text(run);
  CHECK(text.find("all_split_stable: true") != std::string::npos);
}

TEST_CASE("missing files raise input errors") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), InputError);
}
