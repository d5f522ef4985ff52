#include "bihar/report.hpp"

#include <chrono>
#include <stdexcept>

#include "bihar/chains.hpp"
#include "bihar/framecalc.hpp"
#include "bihar/realalg.hpp"
#include "json.hpp"

namespace bihar {

namespace {

using Clock = std::chrono::steady_clock;
using ordered_json = nlohmann::ordered_json;

MultiPoly P(std::string_view text) { return MultiPoly::parse(text); }

/// Decimal target implied by the bit precision: the printed radii carry
/// floor(bits * log10(2)) digits, at least one.
unsigned decimal_digits(unsigned precision_bits) {
  unsigned digits = static_cast<unsigned>((static_cast<unsigned long>(precision_bits) * 301) / 1000);
  return digits == 0 ? 1 : digits;
}

Rational power_of_ten(unsigned digits) {
  return Rational(Integer(1), Integer(10).pow(digits));
}

class StepBuilder {
 public:
  StepBuilder(VerificationReport& report, bool timings, std::string name, std::string anchor)
      : report_(report), timings_(timings), start_(Clock::now()) {
    step_.name = std::move(name);
    step_.anchor = std::move(anchor);
  }

  StepRecord& step() { return step_; }

  void commit() {
    if (timings_) {
      step_.millis = static_cast<long>(
          std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count());
    }
    report_.steps.push_back(std::move(step_));
  }

 private:
  VerificationReport& report_;
  bool timings_;
  Clock::time_point start_;
  StepRecord step_;
};

void finalize(VerificationReport& report) {
  bool all_ok = true;
  for (const auto& s : report.steps) all_ok = all_ok && s.ok;
  report.status = all_ok ? "pass" : "fail";
}

void append_chain(VerificationReport& report, const ChainCertificate& cert,
                  std::string_view data_anchor) {
  for (const auto& cs : cert.steps) {
    StepRecord s;
    s.name = cs.name;
    s.anchor = cs.anchor;
    s.artifact = cs.produced.str();
    s.scalar = cs.scalar;
    s.ok = cs.ok;
    s.detail = cs.detail;
    if (cs.cofactor) s.enclosures.emplace_back("cofactor", cs.cofactor->str());
    if (cs.expected && !cs.ok) s.enclosures.emplace_back("expected", cs.expected->str());
    report.steps.push_back(std::move(s));
  }
  if (!cert.data.empty()) {
    StepRecord s;
    s.name = "certificate-data";
    s.anchor = std::string(data_anchor);
    s.artifact = cert.id;
    s.ok = true;
    s.detail = "recorded artifacts from the replay";
    for (const auto& [key, value] : cert.data) s.enclosures.emplace_back(key, value);
    report.steps.push_back(std::move(s));
  }
}

void check_sweep_bounds(const ScenarioParams& p) {
  if (p.n_min < 2 || p.n_max < p.n_min || p.n_max > 1000)
    throw std::invalid_argument("sweep bounds need 2 <= n_min <= n_max <= 1000");
}

/// Admissible-root bookkeeping plus decimal radii for one tube model.
void tube_root_steps(VerificationReport& report, const ScenarioParams& params,
                     const BiharmonicCondition& cond, std::string_view tag,
                     std::string_view roots_anchor, std::string_view radii_anchor,
                     std::optional<unsigned> expected_roots) {
  const unsigned digits = decimal_digits(params.precision_bits);
  const Rational precision = power_of_ten(digits);
  const Rational tight = power_of_ten(digits + 2);

  StepBuilder roots(report, params.timings, "roots-" + std::string(tag), std::string(roots_anchor));
  RootIsolation iso = admissible_roots(cond);
  roots.step().artifact = cond.numerator.str();
  roots.step().counts.emplace_back("admissible-roots", static_cast<long>(iso.roots.size()));
  roots.step().ok = !expected_roots || iso.roots.size() == *expected_roots;
  if (roots.step().ok) {
    roots.step().detail = "admissible root count matches on " + cond.domain.str();
  } else {
    roots.step().detail = "expected " + std::to_string(*expected_roots) + " admissible roots, found " +
                          std::to_string(iso.roots.size());
  }
  roots.commit();

  if (iso.roots.empty()) return;
  StepBuilder radii(report, params.timings, "radius-decimals-" + std::string(tag),
                    std::string(radii_anchor));
  radii.step().ok = true;
  radii.step().artifact = cond.numerator.str();
  unsigned index = 1;
  for (const auto& root : iso.roots) {
    RationalInterval x = refine_root(cond.numerator, Var::X, root.interval, tight);
    const std::string label = "x" + std::to_string(index);
    radii.step().enclosures.emplace_back(label, x.str());
    radii.step().enclosures.emplace_back("r" + std::to_string(index),
                                         render_radius(x, precision));
    ++index;
  }
  radii.step().detail = "radii at 10^-" + std::to_string(digits) + " precision";
  radii.commit();
}

VerificationReport scenario_thm_hom(const ScenarioParams& params) {
  check_sweep_bounds(params);
  VerificationReport report;
  report.scenario = std::string(scenario_name(ScenarioId::thm_hom));
  report.seed = params.seed;

  long pairs = 0;
  {
    StepBuilder b(report, params.timings, "radius-formula-sweep", "Aquad");
    b.step().ok = true;
    b.step().artifact = "(2n-2m-1)*X^2 - 2*(n+2)*X + (2m+1)";
    for (unsigned n = params.n_min; n <= params.n_max && b.step().ok; ++n) {
      for (unsigned m = 0; m + 2 <= n; ++m) {
        ++pairs;
        RadiusFormulaCheck check = check_radius_formula(n, m);
        if (!check.ok) {
          b.step().ok = false;
          b.step().detail = "n=" + std::to_string(n) + ", m=" + std::to_string(m) + ": " + check.detail;
        }
      }
    }
    b.step().counts.emplace_back("pairs", pairs);
    if (b.step().ok)
      b.step().detail = "condition quadratic and discriminant bookkeeping match on every pair";
    b.commit();
  }

  {
    StepBuilder b(report, params.timings, "discriminant-identity", "disc");
    b.step().ok = radius_discriminant_identity();
    b.step().artifact = P("(2*mu-lambda+1)^2+4*(lambda+1)").str();
    b.step().detail = b.step().ok ? "polynomial identity over the two sweep symbols"
                                  : "symbolic discriminant identity failed";
    b.commit();
  }

  {
    StepBuilder b(report, params.timings, "root-match-sweep", "roots");
    b.step().ok = true;
    const Rational width = Rational(Integer(1), Integer(2).pow(20));
    long roots = 0;
    for (unsigned n = params.n_min; n <= params.n_max && b.step().ok; ++n) {
      for (unsigned m = 0; m + 2 <= n; ++m) {
        BiharmonicCondition cond = biharmonic_condition(TubeModel::make(Family::A, n, m));
        RootIsolation iso = admissible_roots(cond);
        auto [small_x, large_x] = closed_form_root_enclosures(n, m, width);
        const bool counted = iso.roots.size() == 2;
        // A sign change of the numerator across each closed-form enclosure
        // pins the closed-form roots to the counted ones.
        UniPoly u = UniPoly::from_multipoly(cond.numerator, Var::X);
        const bool pinned = counted &&
                            u.sign_at(small_x.lo()) * u.sign_at(small_x.hi()) < 0 &&
                            u.sign_at(large_x.lo()) * u.sign_at(large_x.hi()) < 0;
        roots += static_cast<long>(iso.roots.size());
        if (!pinned) {
          b.step().ok = false;
          b.step().detail = "n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                            ": closed-form roots do not match the isolated ones";
        }
      }
    }
    b.step().counts.emplace_back("pairs", pairs);
    b.step().counts.emplace_back("roots", roots);
    if (b.step().ok)
      b.step().detail = "two admissible roots per pair, each enclosed by the closed form";
    b.commit();
  }

  tube_root_steps(report, params, biharmonic_condition(TubeModel::make(Family::A, params.n_min, 0)),
                  "first", "roots", "radii", 2);
  tube_root_steps(report, params,
                  biharmonic_condition(TubeModel::make(Family::A, params.n_max, params.n_max - 2)),
                  "last", "roots", "radii", 2);

  finalize(report);
  return report;
}

VerificationReport scenario_thm1(const ScenarioParams& params) {
  VerificationReport report;
  report.scenario = std::string(scenario_name(ScenarioId::thm1));
  report.seed = params.seed;

  append_chain(report, thm1_elimination(), "elim");

  BiharmonicCondition cond = biharmonic_condition(TubeModel::make(Family::A, 2, 0));
  {
    StepBuilder b(report, params.timings, "condition-quadratic", "Aquad");
    b.step().artifact = cond.numerator.str();
    b.step().scalar = cond.scale;
    b.step().ok = cond.numerator == P("3*X^2-8*X+1");
    b.step().detail = b.step().ok ? "smallest geodesic-sphere condition in X = cot^2 r"
                                  : "condition numerator mismatch";
    b.commit();
  }
  {
    StepBuilder b(report, params.timings, "positive-roots", "radicand");
    RadiusFormulaCheck check = check_radius_formula(2, 0);
    const bool radicand_ok = check.radicand == Rational(13);
    // All real roots already sit in (0, inf): the admissible count equals the
    // whole-line count, so both roots are positive without any numerics.
    const int whole = count_real_roots(cond.numerator, Var::X, RationalInterval::whole());
    const int admissible = count_real_roots(cond.numerator, Var::X, cond.domain);
    b.step().artifact = check.radicand.str();
    b.step().counts.emplace_back("roots-whole-line", whole);
    b.step().counts.emplace_back("roots-admissible", admissible);
    b.step().ok = radicand_ok && whole == 2 && admissible == 2;
    b.step().detail = b.step().ok
                          ? "radicand 13 = 2^2 + 2*2 + 5; every real root is admissible"
                          : "positivity bookkeeping failed";
    b.commit();
  }
  tube_root_steps(report, params, cond, "sphere", "roots", "radii", 2);

  finalize(report);
  return report;
}

VerificationReport scenario_thm2_hopf(const ScenarioParams& params) {
  check_sweep_bounds(params);
  VerificationReport report;
  report.scenario = std::string(scenario_name(ScenarioId::thm2_hopf));
  report.seed = params.seed;

  {
    StepBuilder b(report, params.timings, "radicand-identity", "radicand");
    // m = 0 in the sweep symbols: the discriminant radicand collapses to
    // lambda^2 + 2*lambda + 5 identically.
    const MultiPoly lhs = P("(2*0-lambda+1)^2+4*(lambda+1)");
    const MultiPoly rhs = P("lambda^2+2*lambda+5");
    b.step().ok = lhs == rhs;
    b.step().artifact = rhs.str();
    b.step().detail = b.step().ok ? "geodesic-sphere radicand identity" : "identity failed";
    b.commit();
  }
  {
    StepBuilder b(report, params.timings, "radicand-sweep", "Aquad");
    b.step().ok = true;
    long cases = 0;
    for (unsigned n = params.n_min; n <= params.n_max && b.step().ok; ++n) {
      ++cases;
      RadiusFormulaCheck check = check_radius_formula(n, 0);
      long ln = static_cast<long>(n);
      if (!check.ok || !(check.radicand == Rational(ln * ln + 2 * ln + 5))) {
        b.step().ok = false;
        b.step().detail = "n=" + std::to_string(n) + ": radicand mismatch";
      }
    }
    b.step().counts.emplace_back("cases", cases);
    if (b.step().ok) b.step().detail = "radicand equals n^2+2n+5 across the sweep";
    b.commit();
  }
  {
    StepBuilder b(report, params.timings, "root-sweep", "roots");
    b.step().ok = true;
    long cases = 0, roots = 0;
    for (unsigned n = params.n_min; n <= params.n_max && b.step().ok; ++n) {
      ++cases;
      BiharmonicCondition cond = biharmonic_condition(TubeModel::make(Family::A, n, 0));
      RootIsolation iso = admissible_roots(cond);
      roots += static_cast<long>(iso.roots.size());
      if (iso.roots.size() != 2) {
        b.step().ok = false;
        b.step().detail = "n=" + std::to_string(n) + ": expected two admissible radii";
      }
    }
    b.step().counts.emplace_back("cases", cases);
    b.step().counts.emplace_back("roots", roots);
    if (b.step().ok) b.step().detail = "two geodesic-sphere radii in every dimension";
    b.commit();
  }
  tube_root_steps(report, params, biharmonic_condition(TubeModel::make(Family::A, params.n_min, 0)),
                  "sphere", "roots", "radii", 2);

  finalize(report);
  return report;
}

VerificationReport scenario_case1(const ScenarioParams& params) {
  VerificationReport report;
  report.scenario = std::string(scenario_name(ScenarioId::thm2_nonhopf_case1));
  report.seed = params.seed;
  append_chain(report, chain_case1(), "cert1");
  finalize(report);
  return report;
}

VerificationReport scenario_case2(const ScenarioParams& params) {
  if (params.d_samples == 0) throw std::invalid_argument("d-samples must be positive");
  VerificationReport report;
  report.scenario = std::string(scenario_name(ScenarioId::thm2_nonhopf_case2));
  report.seed = params.seed;
  append_chain(report, chain_case2(params.d_samples, params.seed), "cert2");
  finalize(report);
  return report;
}

struct ModelExpectations {
  std::string tag;
  MultiPoly condition;
  PolyFraction norm;
  MultiPoly inner_quadratic;  // q1 in X^2*q1 + q2
  MultiPoly outer_quadratic;  // q2
};

void type_de_model_steps(VerificationReport& report, const ScenarioParams& params,
                         const TubeModel& model, const ModelExpectations& expect) {
  const std::string& tag = expect.tag;
  {
    StepBuilder b(report, params.timings, "norm-" + tag, "norm" + tag);
    PolyFraction norm = norm_a_squared(model);
    b.step().artifact = norm.num().str() + " / " + norm.den().str();
    b.step().ok = norm == expect.norm;
    b.step().detail = b.step().ok
                          ? "squared shape norm matches the corrected closed form"
                          : "squared shape norm mismatch; expected " + expect.norm.num().str() +
                                " / " + expect.norm.den().str();
    b.commit();
  }
  BiharmonicCondition cond = biharmonic_condition(model);
  {
    StepBuilder b(report, params.timings, "condition-" + tag, "quart" + tag);
    b.step().artifact = cond.numerator.str();
    b.step().scalar = cond.scale;
    b.step().ok = cond.numerator == expect.condition;
    b.step().detail = b.step().ok ? "condition numerator matches the closed quartic"
                                  : "condition numerator mismatch; expected " + expect.condition.str();
    b.commit();
  }
  {
    StepBuilder b(report, params.timings, "roots-" + tag, "roots" + tag);
    const int whole = count_real_roots(cond.numerator, Var::X, RationalInterval::whole());
    const int admissible = count_real_roots(cond.numerator, Var::X, cond.domain);
    b.step().artifact = cond.numerator.str();
    b.step().counts.emplace_back("roots-whole-line", whole);
    b.step().counts.emplace_back("roots-admissible", admissible);
    b.step().ok = whole == 0 && admissible == 0;
    b.step().detail = b.step().ok ? "no real roots anywhere, so no admissible radius"
                                  : "unexpected real roots";
    b.commit();
  }
  {
    StepBuilder b(report, params.timings, "decomp-" + tag, "decomp" + tag);
    const MultiPoly rebuilt =
        P("X^2") * expect.inner_quadratic + expect.outer_quadratic;
    const bool identity = rebuilt == expect.condition && cond.numerator == expect.condition;
    b.step().artifact = "X^2*(" + expect.inner_quadratic.str() + ") + (" +
                        expect.outer_quadratic.str() + ")";
    bool quads_positive = true;
    for (const MultiPoly* q : {&expect.inner_quadratic, &expect.outer_quadratic}) {
      auto cert = certify_positive(*q, Var::X, RationalInterval::whole());
      if (cert && cert->discriminant) {
        b.step().enclosures.emplace_back("disc(" + q->str() + ")", cert->discriminant->str());
        quads_positive = quads_positive && cert->discriminant->sign() < 0;
      } else {
        quads_positive = false;
      }
    }
    b.step().ok = identity && quads_positive;
    b.step().detail = b.step().ok
                          ? "exact identity with both quadratics positive by discriminant"
                          : "positivity decomposition failed";
    b.commit();
  }
}

VerificationReport scenario_type_bc(const ScenarioParams& params) {
  check_sweep_bounds(params);
  VerificationReport report;
  report.scenario = std::string(scenario_name(ScenarioId::type_BC_sweep));
  report.seed = params.seed;

  {
    StepBuilder b(report, params.timings, "B-sweep", "Bsweep");
    b.step().ok = true;
    long cases = 0, roots = 0;
    for (unsigned n = params.n_min; n <= params.n_max && b.step().ok; ++n) {
      ++cases;
      BiharmonicCondition cond = biharmonic_condition(TubeModel::make(Family::B, n));
      if (n == params.n_min) b.step().artifact = cond.numerator.str();
      RootIsolation iso = admissible_roots(cond);
      roots += static_cast<long>(iso.roots.size());
      if (!iso.roots.empty()) {
        b.step().ok = false;
        b.step().detail = "n=" + std::to_string(n) + ": unexpected admissible root";
      }
    }
    b.step().counts.emplace_back("cases", cases);
    b.step().counts.emplace_back("admissible-roots", roots);
    if (b.step().ok) b.step().detail = "no admissible radius anywhere in the sweep";
    b.commit();
  }
  {
    StepBuilder b(report, params.timings, "C-sweep", "Csweep");
    b.step().ok = true;
    long cases = 0, roots = 0;
    unsigned start = params.n_min < 5 ? 5u : params.n_min;
    if (start % 2 == 0) ++start;
    for (unsigned n = start; n <= params.n_max && b.step().ok; n += 2) {
      ++cases;
      BiharmonicCondition cond = biharmonic_condition(TubeModel::make(Family::C, n));
      if (n == start) b.step().artifact = cond.numerator.str();
      RootIsolation iso = admissible_roots(cond);
      roots += static_cast<long>(iso.roots.size());
      if (!iso.roots.empty()) {
        b.step().ok = false;
        b.step().detail = "n=" + std::to_string(n) + ": unexpected admissible root";
      }
    }
    b.step().counts.emplace_back("cases", cases);
    b.step().counts.emplace_back("admissible-roots", roots);
    if (b.step().ok) b.step().detail = "no admissible radius anywhere in the sweep";
    b.commit();
  }

  finalize(report);
  return report;
}

VerificationReport scenario_ruled(const ScenarioParams& params) {
  VerificationReport report;
  report.scenario = std::string(scenario_name(ScenarioId::ruled));
  report.seed = params.seed;

  std::vector<unsigned> dims;
  if (params.n) {
    if (*params.n < 2) throw std::invalid_argument("ruled scenario needs n >= 2");
    dims.push_back(*params.n);
  } else {
    dims = {2, 3, 5};
  }

  std::vector<RuledScenario> runs;
  for (unsigned n : dims) runs.push_back(ruled_scenario(n));

  {
    StepBuilder b(report, params.timings, "curvature-component", "gauss");
    b.step().ok = true;
    for (const auto& rs : runs) {
      if (!rs.gauss_value.is_zero() || !(rs.subframe_value == rs.gauss_value)) {
        b.step().ok = false;
        b.step().detail = "n=" + std::to_string(rs.n) + ": " + rs.detail;
      }
    }
    b.step().artifact = runs.front().gauss_value.str();
    b.step().counts.emplace_back("dimensions", static_cast<long>(runs.size()));
    if (b.step().ok)
      b.step().detail = "component vanishes on the full frame and the 3-label subframe";
    b.commit();
  }
  {
    StepBuilder b(report, params.timings, "branch-equation", "branch");
    b.step().ok = true;
    for (const auto& rs : runs) {
      if (!(rs.equation == runs.front().equation) ||
          !(rs.equation == rs.accepted_branch * rs.rejected_branch)) {
        b.step().ok = false;
        b.step().detail = "n=" + std::to_string(rs.n) + ": branch equation drifted";
      }
    }
    b.step().artifact = runs.front().equation.str();
    b.step().enclosures.emplace_back("accepted", runs.front().accepted_branch.str());
    b.step().enclosures.emplace_back("rejected", runs.front().rejected_branch.str());
    if (b.step().ok)
      b.step().detail = "beta-cleared equation splits into the two branches, dimension-free";
    b.commit();
  }
  {
    StepBuilder b(report, params.timings, "branch-reject", "betareject");
    b.step().ok = true;
    for (const auto& rs : runs)
      b.step().ok = b.step().ok && rs.rejection_witness == Rational(3, 2);
    b.step().artifact = runs.front().rejection_witness.str();
    b.step().detail = b.step().ok
                          ? "constant beta^2 = 1/2 forces derivative 0, but the image is 3/2"
                          : "rejection witness mismatch";
    b.commit();
  }
  {
    StepBuilder b(report, params.timings, "minimal-verdict", "Hzero");
    b.step().ok = true;
    std::string dims_text;
    for (const auto& rs : runs) {
      b.step().ok = b.step().ok && rs.ok && rs.verdict == "minimal";
      dims_text += (dims_text.empty() ? "" : ", ") + std::to_string(rs.n);
      b.step().enclosures.emplace_back("H(n=" + std::to_string(rs.n) + ")",
                                       rs.mean_curvature.str());
    }
    b.step().artifact = "minimal";
    b.step().detail = b.step().ok ? "alpha = 0 forces H = 0 for n in {" + dims_text + "}"
                                  : "verdict did not close";
    b.commit();
  }

  finalize(report);
  return report;
}

ordered_json step_json(const StepRecord& s) {
  ordered_json j;
  j["name"] = s.name;
  j["anchor"] = s.anchor;
  j["artifact"] = s.artifact;
  if (s.scalar)
    j["scalar"] = s.scalar->str();
  else
    j["scalar"] = nullptr;
  ordered_json counts = ordered_json::object();
  for (const auto& [k, v] : s.counts) counts[k] = v;
  j["counts"] = counts;
  ordered_json enc = ordered_json::object();
  for (const auto& [k, v] : s.enclosures) enc[k] = v;
  j["enclosures"] = enc;
  j["millis"] = s.millis;
  j["ok"] = s.ok;
  j["detail"] = s.detail;
  return j;
}

ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["scenario"] = r.scenario;
  j["status"] = r.status;
  ordered_json steps = ordered_json::array();
  for (const auto& s : r.steps) steps.push_back(step_json(s));
  j["steps"] = steps;
  j["version"] = r.version;
  j["seed"] = r.seed;
  return j;
}

void markdown_report(std::string& out, const VerificationReport& r) {
  out += "## " + r.scenario + " : " + r.status + "\n\n";
  for (const auto& s : r.steps) {
    out += "### " + s.name + " [" + s.anchor + "] " + (s.ok ? "ok" : "FAILED") + "\n";
    if (!s.artifact.empty()) out += "- artifact: `" + s.artifact + "`\n";
    if (s.scalar) out += "- scalar: " + s.scalar->str() + "\n";
    for (const auto& [k, v] : s.counts) out += "- " + k + ": " + std::to_string(v) + "\n";
    for (const auto& [k, v] : s.enclosures) out += "- " + k + ": `" + v + "`\n";
    if (s.millis > 0) out += "- millis: " + std::to_string(s.millis) + "\n";
    if (!s.detail.empty()) out += "- " + s.detail + "\n";
    out += "\n";
  }
}

}  // namespace

std::string_view scenario_name(ScenarioId id) {
  switch (id) {
    case ScenarioId::thm_hom: return "thm-hom";
    case ScenarioId::thm1: return "thm1";
    case ScenarioId::thm2_hopf: return "thm2-hopf";
    case ScenarioId::thm2_nonhopf_case1: return "thm2-nonhopf-case1";
    case ScenarioId::thm2_nonhopf_case2: return "thm2-nonhopf-case2";
    case ScenarioId::type_DE: return "type-DE";
    case ScenarioId::type_BC_sweep: return "type-BC-sweep";
    case ScenarioId::ruled: return "ruled";
  }
  throw std::logic_error("unknown scenario id");
}

std::optional<ScenarioId> scenario_from_name(std::string_view name) {
  for (ScenarioId id : all_scenarios())
    if (scenario_name(id) == name) return id;
  return std::nullopt;
}

const std::vector<ScenarioId>& all_scenarios() {
  static const std::vector<ScenarioId> order = {
      ScenarioId::thm_hom,           ScenarioId::thm1,
      ScenarioId::thm2_hopf,         ScenarioId::thm2_nonhopf_case1,
      ScenarioId::thm2_nonhopf_case2, ScenarioId::type_DE,
      ScenarioId::type_BC_sweep,     ScenarioId::ruled,
  };
  return order;
}

const StepRecord* VerificationReport::find(std::string_view name) const {
  for (const auto& s : steps)
    if (s.name == name) return &s;
  return nullptr;
}

VerificationReport type_de_report(const TubeModel& d_model, const TubeModel& e_model,
                                  const ScenarioParams& params) {
  VerificationReport report;
  report.scenario = std::string(scenario_name(ScenarioId::type_DE));
  report.seed = params.seed;

  ModelExpectations d{
      "D",
      P("5*X^4-24*X^3+102*X^2-24*X+5"),
      PolyFraction(P("5*X^4-4*X^3+62*X^2-4*X+5"), P("X*(X-1)^2")),
      P("5*X^2-24*X+51"),
      P("51*X^2-24*X+5"),
  };
  ModelExpectations e{
      "E",
      P("9*X^4-40*X^3+158*X^2-40*X+9"),
      PolyFraction(P("9*X^4-8*X^3+94*X^2-8*X+9"), P("X*(X-1)^2")),
      P("9*X^2-40*X+79"),
      P("79*X^2-40*X+9"),
  };
  type_de_model_steps(report, params, d_model, d);
  type_de_model_steps(report, params, e_model, e);

  finalize(report);
  return report;
}

VerificationReport tube_report(Family family, unsigned n, std::optional<unsigned> m,
                               const ScenarioParams& params) {
  TubeModel model = TubeModel::make(family, n, m);
  VerificationReport report;
  report.scenario = "tube-" + std::string(family_name(family)) + "-n" + std::to_string(n) +
                    (family == Family::A ? "-m" + std::to_string(model.m) : "");
  report.seed = params.seed;

  {
    StepBuilder b(report, params.timings, "model", "spectrum");
    b.step().ok = model.spectrum_dimension() == model.dimension();
    std::string spectrum;
    for (const auto& branch : model.spectrum) {
      if (!spectrum.empty()) spectrum += "; ";
      spectrum += branch.label + " x" + std::to_string(branch.multiplicity);
    }
    b.step().artifact = spectrum;
    b.step().counts.emplace_back("dimension", static_cast<long>(model.dimension()));
    b.step().detail = b.step().ok ? "multiplicities fill the hypersurface dimension"
                                  : "dimension bookkeeping failed";
    b.commit();
  }
  {
    StepBuilder b(report, params.timings, "condition", "bihar");
    BiharmonicCondition cond = biharmonic_condition(model);
    b.step().artifact = cond.numerator.str();
    b.step().scalar = cond.scale;
    b.step().ok = validate_positive(cond.denominator_positive, cond.denominator, Var::X, cond.domain);
    b.step().detail = b.step().ok
                          ? "denominator certified positive on " + cond.domain.str()
                          : "denominator positivity certificate failed to validate";
    b.commit();
  }
  tube_root_steps(report, params, biharmonic_condition(model), "admissible", "roots", "radii",
                  std::nullopt);

  finalize(report);
  return report;
}

VerificationReport run_scenario(ScenarioId id, const ScenarioParams& params) {
  switch (id) {
    case ScenarioId::thm_hom: return scenario_thm_hom(params);
    case ScenarioId::thm1: return scenario_thm1(params);
    case ScenarioId::thm2_hopf: return scenario_thm2_hopf(params);
    case ScenarioId::thm2_nonhopf_case1: return scenario_case1(params);
    case ScenarioId::thm2_nonhopf_case2: return scenario_case2(params);
    case ScenarioId::type_DE:
      return type_de_report(TubeModel::make(Family::D, 9), TubeModel::make(Family::E, 15), params);
    case ScenarioId::type_BC_sweep: return scenario_type_bc(params);
    case ScenarioId::ruled: return scenario_ruled(params);
  }
  throw std::logic_error("unknown scenario id");
}

AggregateReport run_all(const ScenarioParams& params) {
  AggregateReport aggregate;
  aggregate.seed = params.seed;
  bool all_pass = true;
  for (ScenarioId id : all_scenarios()) {
    aggregate.reports.push_back(run_scenario(id, params));
    all_pass = all_pass && aggregate.reports.back().status == "pass";
  }
  aggregate.status = all_pass ? "pass" : "fail";
  return aggregate;
}

std::string to_json(const VerificationReport& report) {
  return report_json(report).dump(2) + "\n";
}

std::string to_json(const AggregateReport& report) {
  ordered_json j;
  j["status"] = report.status;
  j["seed"] = report.seed;
  j["version"] = report.version;
  ordered_json scenarios = ordered_json::array();
  for (const auto& r : report.reports) scenarios.push_back(report_json(r));
  j["scenarios"] = scenarios;
  return j.dump(2) + "\n";
}

std::string to_markdown(const VerificationReport& report) {
  std::string out = "# verification report\n\n";
  markdown_report(out, report);
  out += "version " + report.version + ", seed " + std::to_string(report.seed) + "\n";
  return out;
}

std::string to_markdown(const AggregateReport& report) {
  std::string out = "# verification report : " + report.status + "\n\n";
  for (const auto& r : report.reports) markdown_report(out, r);
  out += "version " + report.version + ", seed " + std::to_string(report.seed) + "\n";
  return out;
}

}  // namespace bihar
