#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "bihar/report.hpp"
#include "bihar/tubes.hpp"
#include "json.hpp"

using namespace bihar;

namespace {

MultiPoly P(std::string_view s) { return MultiPoly::parse(s); }

const StepRecord& must_find(const VerificationReport& r, std::string_view name) {
  const StepRecord* s = r.find(name);
  REQUIRE(s != nullptr);
  return *s;
}

long count_of(const StepRecord& s, std::string_view label) {
  for (const auto& [k, v] : s.counts)
    if (k == label) return v;
  FAIL("missing count ", label);
  return 0;
}

std::string enclosure_of(const StepRecord& s, std::string_view label) {
  for (const auto& [k, v] : s.enclosures)
    if (k == label) return v;
  FAIL("missing enclosure ", label);
  return {};
}

}  // namespace

TEST_CASE("scenario names round-trip") {
  CHECK(all_scenarios().size() == 8);
  for (ScenarioId id : all_scenarios()) {
    auto back = scenario_from_name(scenario_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK(!scenario_from_name("thm-nope").has_value());
  CHECK(scenario_name(ScenarioId::thm2_nonhopf_case1) == "thm2-nonhopf-case1");
}

TEST_CASE("homogeneous sweep passes with pinned radii") {
  VerificationReport r = run_scenario(ScenarioId::thm_hom);
  CHECK(r.status == "pass");
  CHECK(r.scenario == "thm-hom");

  const StepRecord& sweep = must_find(r, "radius-formula-sweep");
  CHECK(sweep.ok);
  CHECK(count_of(sweep, "pairs") == 300);

  CHECK(must_find(r, "discriminant-identity").ok);

  const StepRecord& roots = must_find(r, "root-match-sweep");
  CHECK(roots.ok);
  CHECK(count_of(roots, "roots") == 600);

  const StepRecord& radii = must_find(r, "radius-decimals-first");
  CHECK(enclosure_of(radii, "r1") == "1.222935900863");
  CHECK(enclosure_of(radii, "r2") == "0.560790665218");
  CHECK(must_find(r, "radius-decimals-last").ok);
}

TEST_CASE("small homogeneous sweep obeys the bounds") {
  ScenarioParams p;
  p.n_max = 4;
  VerificationReport r = run_scenario(ScenarioId::thm_hom, p);
  CHECK(r.status == "pass");
  // pairs for n in [2,4]: 1 + 2 + 3.
  CHECK(count_of(must_find(r, "radius-formula-sweep"), "pairs") == 6);

  ScenarioParams bad;
  bad.n_min = 1;
  CHECK_THROWS_AS(run_scenario(ScenarioId::thm_hom, bad), std::invalid_argument);
  bad.n_min = 6;
  bad.n_max = 4;
  CHECK_THROWS_AS(run_scenario(ScenarioId::thm_hom, bad), std::invalid_argument);
}

TEST_CASE("first elimination scenario records the closed equation") {
  VerificationReport r = run_scenario(ScenarioId::thm1);
  CHECK(r.status == "pass");
  CHECK(must_find(r, "elim").artifact == P("27*H^2-2*delta^2+4").str());
  CHECK(must_find(r, "condition-quadratic").artifact == P("3*X^2-8*X+1").str());

  const StepRecord& pos = must_find(r, "positive-roots");
  CHECK(pos.ok);
  CHECK(pos.artifact == "13");
  CHECK(count_of(pos, "roots-whole-line") == 2);
  CHECK(count_of(pos, "roots-admissible") == 2);

  const StepRecord& radii = must_find(r, "radius-decimals-sphere");
  CHECK(enclosure_of(radii, "r1") == "1.222935900863");
  CHECK(enclosure_of(radii, "r2") == "0.560790665218");

  const StepRecord& data = must_find(r, "certificate-data");
  CHECK(enclosure_of(data, "mean_curvature_degree") == "2");
}

TEST_CASE("hopf scenario sweeps the geodesic-sphere radicand") {
  VerificationReport r = run_scenario(ScenarioId::thm2_hopf);
  CHECK(r.status == "pass");
  CHECK(must_find(r, "radicand-identity").artifact == P("lambda^2+2*lambda+5").str());
  CHECK(count_of(must_find(r, "radicand-sweep"), "cases") == 24);
  CHECK(count_of(must_find(r, "root-sweep"), "roots") == 48);
}

TEST_CASE("first derivation chain reports the honest failure") {
  VerificationReport r = run_scenario(ScenarioId::thm2_nonhopf_case1);
  CHECK(r.status == "fail");

  // Exactly one failing step: the recorded comparand of the second
  // derivative pass. Everything downstream still verifies.
  int failing = 0;
  for (const auto& s : r.steps)
    if (!s.ok) ++failing;
  CHECK(failing == 1);

  const StepRecord& quartic = must_find(r, "quartic");
  CHECK(!quartic.ok);
  CHECK(quartic.detail.find("not proportional") != std::string::npos);
  CHECK(enclosure_of(quartic, "expected").find("2600") != std::string::npos);

  const StepRecord& res = must_find(r, "res-final");
  CHECK(res.ok);
  CHECK(res.artifact == P("218700*alpha^4-20615*alpha^2+484").str());

  const StepRecord& data = must_find(r, "certificate-data");
  CHECK(enclosure_of(data, "quartic_difference_divisible_by_f") == "false");
  CHECK(enclosure_of(data, "comparand_resultant_nonzero") == "true");
}

TEST_CASE("second derivation chain passes and honors its parameters") {
  VerificationReport r = run_scenario(ScenarioId::thm2_nonhopf_case2);
  CHECK(r.status == "pass");
  CHECK(must_find(r, "res-final-d").ok);
  CHECK(must_find(r, "pointwise-oracle").detail == "20/20 sample points agree");

  ScenarioParams p;
  p.d_samples = 7;
  p.seed = 99;
  VerificationReport reseeded = run_scenario(ScenarioId::thm2_nonhopf_case2, p);
  CHECK(reseeded.status == "pass");
  CHECK(reseeded.seed == 99);
  // Certificate polynomials are seed-independent; only the sampled points move.
  CHECK(must_find(reseeded, "res-final-d").artifact == must_find(r, "res-final-d").artifact);
  CHECK(must_find(reseeded, "d-specializations").detail !=
        must_find(r, "d-specializations").detail);

  ScenarioParams zero;
  zero.d_samples = 0;
  CHECK_THROWS_AS(run_scenario(ScenarioId::thm2_nonhopf_case2, zero), std::invalid_argument);
}

TEST_CASE("model comparison scenario checks norms, roots and decompositions") {
  VerificationReport r = run_scenario(ScenarioId::type_DE);
  CHECK(r.status == "pass");
  CHECK(r.steps.size() == 8);

  CHECK(must_find(r, "norm-D").artifact ==
        P("5*X^4-4*X^3+62*X^2-4*X+5").str() + " / " + P("X^3-2*X^2+X").str());
  CHECK(must_find(r, "condition-D").artifact == P("5*X^4-24*X^3+102*X^2-24*X+5").str());
  CHECK(must_find(r, "condition-E").artifact == P("9*X^4-40*X^3+158*X^2-40*X+9").str());
  CHECK(count_of(must_find(r, "roots-D"), "roots-whole-line") == 0);
  CHECK(count_of(must_find(r, "roots-E"), "roots-admissible") == 0);

  const StepRecord& dd = must_find(r, "decomp-D");
  CHECK(dd.ok);
  CHECK(enclosure_of(dd, "disc(" + P("5*X^2-24*X+51").str() + ")") == "-444");
  CHECK(enclosure_of(dd, "disc(" + P("51*X^2-24*X+5").str() + ")") == "-444");
  const StepRecord& de = must_find(r, "decomp-E");
  CHECK(enclosure_of(de, "disc(" + P("9*X^2-40*X+79").str() + ")") == "-1244");
  CHECK(enclosure_of(de, "disc(" + P("79*X^2-40*X+9").str() + ")") == "-1244");
}

TEST_CASE("corrupting the model table fails exactly at the norm match") {
  TubeModel good = TubeModel::make(Family::D, 9);
  auto spectrum = good.spectrum;
  spectrum[2].multiplicity = 2;
  spectrum[3].multiplicity = 2;
  TubeModel bad = TubeModel::raw(Family::D, 9, 0, spectrum);

  VerificationReport r = type_de_report(bad, TubeModel::make(Family::E, 15));
  CHECK(r.status == "fail");
  CHECK(!must_find(r, "norm-D").ok);
  CHECK(must_find(r, "norm-D").detail.find("expected") != std::string::npos);
  // The E half is untouched and still verifies.
  CHECK(must_find(r, "norm-E").ok);
  CHECK(must_find(r, "decomp-E").ok);
}

TEST_CASE("rank-two sweeps find no admissible radius") {
  VerificationReport r = run_scenario(ScenarioId::type_BC_sweep);
  CHECK(r.status == "pass");
  const StepRecord& b = must_find(r, "B-sweep");
  CHECK(count_of(b, "cases") == 24);
  CHECK(count_of(b, "admissible-roots") == 0);
  const StepRecord& c = must_find(r, "C-sweep");
  CHECK(count_of(c, "cases") == 11);
  CHECK(count_of(c, "admissible-roots") == 0);
}

TEST_CASE("ruled scenario closes minimal across dimensions") {
  VerificationReport r = run_scenario(ScenarioId::ruled);
  CHECK(r.status == "pass");
  CHECK(count_of(must_find(r, "curvature-component"), "dimensions") == 3);
  CHECK(must_find(r, "branch-equation").artifact == P("2*alpha*beta^2-alpha").str());
  CHECK(must_find(r, "branch-reject").artifact == "3/2");
  const StepRecord& verdict = must_find(r, "minimal-verdict");
  CHECK(verdict.artifact == "minimal");
  CHECK(enclosure_of(verdict, "H(n=5)") == P("1/9*alpha").str());

  ScenarioParams p;
  p.n = 4;
  VerificationReport single = run_scenario(ScenarioId::ruled, p);
  CHECK(single.status == "pass");
  CHECK(count_of(must_find(single, "curvature-component"), "dimensions") == 1);

  p.n = 1;
  CHECK_THROWS_AS(run_scenario(ScenarioId::ruled, p), std::invalid_argument);
}

TEST_CASE("tube report serves single models") {
  VerificationReport r = tube_report(Family::A, 3, 1);
  CHECK(r.scenario == "tube-A-n3-m1");
  CHECK(r.status == "pass");
  CHECK(must_find(r, "condition").ok);
  // n=3, m=1 has the rational radii cot^2 r in {3, 1/3}.
  const StepRecord& radii = must_find(r, "radius-decimals-admissible");
  CHECK(enclosure_of(radii, "r1") == "1.047197551197");  // arccot(sqrt(1/3)) = pi/3
  CHECK(enclosure_of(radii, "r2") == "0.523598775598");  // arccot(sqrt(3)) = pi/6

  VerificationReport e = tube_report(Family::E, 15, std::nullopt);
  CHECK(e.scenario == "tube-E-n15");
  CHECK(e.status == "pass");
  CHECK(count_of(must_find(e, "roots-admissible"), "admissible-roots") == 0);

  CHECK_THROWS_AS(tube_report(Family::C, 6, std::nullopt), std::invalid_argument);
}

TEST_CASE("aggregate run is deterministic and reports the honest failure") {
  AggregateReport a = run_all();
  CHECK(a.status == "fail");  // the recorded comparand of chain case 1
  REQUIRE(a.reports.size() == 8);
  for (std::size_t i = 0; i < a.reports.size(); ++i)
    CHECK(a.reports[i].scenario == scenario_name(all_scenarios()[i]));
  for (const auto& r : a.reports) {
    if (r.scenario == "thm2-nonhopf-case1") {
      CHECK(r.status == "fail");
    } else {
      CHECK(r.status == "pass");
    }
  }

  // Byte-identical reruns, including serialized forms.
  AggregateReport again = run_all();
  CHECK(to_json(a) == to_json(again));
  CHECK(to_markdown(a) == to_markdown(again));

  // A different seed flips no verdict and changes no certificate polynomial.
  ScenarioParams p;
  p.seed = 0xFEED;
  AggregateReport reseeded = run_all(p);
  CHECK(reseeded.status == a.status);
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(reseeded.reports[i].status == a.reports[i].status);
    REQUIRE(reseeded.reports[i].steps.size() == a.reports[i].steps.size());
    for (std::size_t j = 0; j < a.reports[i].steps.size(); ++j)
      CHECK(reseeded.reports[i].steps[j].artifact == a.reports[i].steps[j].artifact);
  }
}

TEST_CASE("json serialization carries the schema keys") {
  VerificationReport r = run_scenario(ScenarioId::ruled);
  nlohmann::json j = nlohmann::json::parse(to_json(r));
  CHECK(j["scenario"] == "ruled");
  CHECK(j["status"] == "pass");
  CHECK(j["version"] == "0.1.0");
  CHECK(j["seed"] == 0xB1A4);
  REQUIRE(j["steps"].is_array());
  for (const auto& s : j["steps"]) {
    for (const char* key : {"name", "anchor", "artifact", "scalar", "counts", "enclosures",
                            "millis", "ok", "detail"})
      CHECK(s.contains(key));
    CHECK(s["millis"] == 0);
  }

  nlohmann::json all = nlohmann::json::parse(to_json(run_all()));
  CHECK(all["status"] == "fail");
  CHECK(all["scenarios"].size() == 8);

  // Scalar slots render as strings when present, null when not.
  VerificationReport de = run_scenario(ScenarioId::type_DE);
  nlohmann::json jde = nlohmann::json::parse(to_json(de));
  bool saw_scalar = false, saw_null = false;
  for (const auto& s : jde["steps"]) {
    if (s["scalar"].is_string()) saw_scalar = true;
    if (s["scalar"].is_null()) saw_null = true;
  }
  CHECK(saw_scalar);
  CHECK(saw_null);
}

TEST_CASE("markdown rendering carries every anchor") {
  VerificationReport r = run_scenario(ScenarioId::thm2_nonhopf_case1);
  std::string md = to_markdown(r);
  for (const auto& s : r.steps) {
    CHECK(md.find("[" + s.anchor + "]") != std::string::npos);
    CHECK(md.find(s.name) != std::string::npos);
  }
  CHECK(md.find("FAILED") != std::string::npos);
  CHECK(md.find("thm2-nonhopf-case1 : fail") != std::string::npos);

  std::string all_md = to_markdown(run_all());
  for (ScenarioId id : all_scenarios())
    CHECK(all_md.find("## " + std::string(scenario_name(id))) != std::string::npos);
}

TEST_CASE("timings stay zeroed unless requested") {
  ScenarioParams p;
  p.timings = true;
  VerificationReport timed = run_scenario(ScenarioId::type_DE, p);
  VerificationReport untimed = run_scenario(ScenarioId::type_DE);
  for (const auto& s : untimed.steps) CHECK(s.millis == 0);
  // Timed steps may still round to zero; the point is the default is exact.
  CHECK(timed.status == untimed.status);
}
