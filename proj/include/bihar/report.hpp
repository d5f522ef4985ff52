#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bihar/exact.hpp"
#include "bihar/tubes.hpp"

namespace bihar {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// The named verification scenarios, in their fixed reporting order.
enum class ScenarioId {
  thm_hom,
  thm1,
  thm2_hopf,
  thm2_nonhopf_case1,
  thm2_nonhopf_case2,
  type_DE,
  type_BC_sweep,
  ruled,
};

std::string_view scenario_name(ScenarioId id);
std::optional<ScenarioId> scenario_from_name(std::string_view name);
const std::vector<ScenarioId>& all_scenarios();

struct ScenarioParams {
  unsigned n_min = 2;
  unsigned n_max = 25;
  std::optional<unsigned> n;  // single-dimension override where meaningful
  std::optional<unsigned> m;
  unsigned d_samples = 5;
  std::uint64_t seed = 0xB1A4;
  unsigned precision_bits = 40;  // decimal renderings are 2^-bits accurate
  bool timings = false;          // wall-clock millis instead of the 0 default
};

/// One replayed verification step. Counts and enclosures are labeled so the
/// serialized report stays self-describing; millis stays 0 unless timings
/// were requested, keeping reports byte-identical across runs.
struct StepRecord {
  std::string name;
  std::string anchor;
  std::string artifact;
  std::optional<Rational> scalar;
  std::vector<std::pair<std::string, long>> counts;
  std::vector<std::pair<std::string, std::string>> enclosures;
  long millis = 0;
  bool ok = false;
  std::string detail;
};

struct VerificationReport {
  std::string scenario;
  std::string status;  // "pass" | "fail" | "inconclusive"
  std::vector<StepRecord> steps;
  std::string version{kToolVersion};
  std::uint64_t seed = 0;

  const StepRecord* find(std::string_view name) const;
};

/// Runs one named scenario. Parameter violations surface as
/// std::invalid_argument (usage errors), never as scenario failures.
VerificationReport run_scenario(ScenarioId id, const ScenarioParams& params = {});

/// The model-comparison scenario on explicit tube models. run_scenario feeds
/// it the canonical tables; tests feed it corrupted ones and watch the norm
/// match fail.
VerificationReport type_de_report(const TubeModel& d_model, const TubeModel& e_model,
                                  const ScenarioParams& params = {});

/// Ad hoc report for a single tube model, backing the tube subcommand.
VerificationReport tube_report(Family family, unsigned n, std::optional<unsigned> m,
                               const ScenarioParams& params = {});

struct AggregateReport {
  std::string status;  // "pass" iff every scenario passed
  std::uint64_t seed = 0;
  std::string version{kToolVersion};
  std::vector<VerificationReport> reports;
};

AggregateReport run_all(const ScenarioParams& params = {});

std::string to_json(const VerificationReport& report);
std::string to_json(const AggregateReport& report);
std::string to_markdown(const VerificationReport& report);
std::string to_markdown(const AggregateReport& report);

}  // namespace bihar
