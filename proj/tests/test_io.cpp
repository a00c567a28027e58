#include <gtest/gtest.h>

#include <json.hpp>
#include <random>

#include "fixtures.hpp"
#include "skelsum/instances.hpp"
#include "skelsum/problem_io.hpp"

using namespace skelsum;

namespace {

const char* kSquare = R"({
  "ambient_dim": 2,
  "vertices": [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]],
  "target": ["1/2", "1/2"],
  "dims": [1, 1],
  "weights": ["1/2", "1/2"],
  "mode": "decompose"
})";

std::string with(const std::string& key, const nlohmann::json& value) {
  auto doc = nlohmann::json::parse(kSquare);
  if (value.is_null()) {
    doc.erase(key);
  } else {
    doc[key] = value;
  }
  return doc.dump();
}

}  // namespace

TEST(ProblemFile, ParsesAndRoundTrips) {
  const auto file = parse_problem(kSquare);
  EXPECT_EQ(file.ambient_dim, 2u);
  EXPECT_EQ(file.vertices.size(), 4u);
  EXPECT_EQ(file.target, (Point{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(parse_problem(write_problem(file)), file);

  auto probe = file;
  probe.mode = Mode::probe;
  probe.probe_index = 1;
  probe.weights.clear();
  EXPECT_EQ(parse_problem(write_problem(probe)), probe);
}

TEST(ProblemFile, RoundTripsConstructedInstances) {
  std::mt19937_64 rng(1);
  std::vector<DecompositionProblem> problems{propA_instance(2, 2, 4), propB_instance(3, 1, 2), lemma_instance(2, 3)};
  for (int i = 0; i < 10; ++i) {
    problems.push_back(fixture::forward_instance(rng, fixture::random_3_polytope(rng, 6), 3).problem);
  }
  for (const auto& p : problems) {
    const auto file = problem_file(p);
    const auto back = parse_problem(write_problem(file));
    EXPECT_EQ(back, file);
    const auto rebuilt = to_problem(back);
    EXPECT_EQ(rebuilt.polytope.vertices(), p.polytope.vertices());
    EXPECT_EQ(rebuilt.target, p.target);
    EXPECT_EQ(rebuilt.weights, p.weights);
  }
}

TEST(ProblemFile, AcceptsJsonIntegers) {
  const auto file = parse_problem(with("target", {1, 0}));
  EXPECT_EQ(file.target, (Point{Rational(1), Rational(0)}));
}

TEST(ProblemFile, RejectsNonRationalTokens) {
  EXPECT_THROW(parse_problem(with("target", {"0.5", "1/2"})), InputError);
  EXPECT_THROW(parse_problem(with("target", {0.5, "1/2"})), InputError);
  EXPECT_THROW(parse_problem(with("target", {"1/0", "1/2"})), InputError);
  EXPECT_THROW(parse_problem(with("target", {true, "1/2"})), InputError);
  EXPECT_THROW(parse_problem(with("target", {"one half", "1/2"})), InputError);
  EXPECT_THROW(parse_problem(with("weights", {"1/2", "1/2 "})), InputError);
}

TEST(ProblemFile, RejectsShapeErrors) {
  EXPECT_THROW(parse_problem("{"), InputError);
  EXPECT_THROW(parse_problem("[]"), InputError);
  EXPECT_THROW(parse_problem(with("ambient_dim", 3)), InputError);
  EXPECT_THROW(parse_problem(with("target", {"1/2"})), InputError);
  EXPECT_THROW(parse_problem(with("dims", {1, -1})), InputError);
  EXPECT_THROW(parse_problem(with("dims", nlohmann::json::array())), InputError);
  EXPECT_THROW(parse_problem(with("weights", {"1/2", "2/5"})), InputError);
  EXPECT_THROW(parse_problem(with("weights", {"3/2", "-1/2"})), InputError);
  EXPECT_THROW(parse_problem(with("weights", {"1"})), InputError);
  EXPECT_THROW(parse_problem(with("vertices", nullptr)), InputError);
  EXPECT_THROW(parse_problem(with("mode", "search")), InputError);
  EXPECT_THROW(parse_problem(with("mode", "probe")), InputError);  // no probe_index
}

TEST(Report, CertificateRevalidatesAndDetectsTampering) {
  const auto file = parse_problem(kSquare);
  const auto result = decompose(to_problem(file));
  ASSERT_TRUE(std::holds_alternative<Certificate>(result));
  const auto text = write_report(result, RunInfo{0.5, true});
  EXPECT_EQ(report_outcome(text), "certificate");
  EXPECT_TRUE(revalidate_report(file, text));

  auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc["version"], std::string(kToolVersion));
  EXPECT_TRUE(doc["deterministic"].get<bool>());
  auto& mu = doc["certificate"]["mu"][0];
  mu[0] = (Rational::parse(mu[0].get<std::string>()) + Rational(1, 1000)).str();
  EXPECT_FALSE(revalidate_report(file, doc.dump()));

  // A report for another target does not validate.
  auto moved = file;
  moved.target = Point{Rational(1, 3), Rational(1, 2)};
  EXPECT_FALSE(revalidate_report(moved, text));
}

TEST(Report, RefutationRevalidatesAndDetectsTampering) {
  const auto problem = propA_instance(2, 2, 4);
  const auto file = problem_file(problem);
  const auto result = decompose(problem);
  const auto text = write_report(result, RunInfo{});
  EXPECT_EQ(report_outcome(text), "refutation");
  EXPECT_TRUE(revalidate_report(file, text));

  auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc["refutation"]["tuple_count"], 10);
  EXPECT_EQ(doc["refutation"]["witness_digest"], std::get<Refutation>(result).digest());
  auto tampered = doc;
  tampered["refutation"]["witnesses"][3]["farkas"][0] = "12345";
  EXPECT_FALSE(revalidate_report(file, tampered.dump()));
  auto dropped = doc;
  dropped["refutation"]["witnesses"].erase(0);
  EXPECT_FALSE(revalidate_report(file, dropped.dump()));
}

TEST(Report, ProbeRevalidates) {
  const auto tri = standard_simplex(2);
  auto file = problem_file(balanced_problem(tri, vertex_barycenter(tri), {1, 1}));
  file.mode = Mode::probe;
  const auto result = max_weight_probe(tri, file.target, file.dims, 0);
  const auto text = write_probe_report(result, 0, RunInfo{});
  EXPECT_EQ(report_outcome(text), "probe");
  EXPECT_TRUE(revalidate_report(file, text));
  auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc["probe"]["value"], "2/3");
  doc["probe"]["value"] = "3/4";
  EXPECT_FALSE(revalidate_report(file, doc.dump()));

  const auto none = write_probe_report(std::nullopt, 0, RunInfo{});
  EXPECT_TRUE(nlohmann::json::parse(none)["probe"]["value"].is_null());
}
