#pragma once

#include "json.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace latmeans::verify {

enum class ClaimId {
  RMP,
  GM,
  SCHUR,
  ORTHO,
  HM,
  GEOS,
  WGM,
  CROSS_TERMS,
  POSITIVE_OA,  // P(f+g) = P(f)+P(g) on disjoint f, g >= 0
  OA,           // same on sign-mixed disjoint f, g
  POLARIZATION,
};

std::string_view to_string(ClaimId id);
ClaimId parse_claim(std::string_view text);

/// forward: the identity is expected to hold and a counterexample is a
/// failure. falsification: a witness is the goal and finding one passes.
enum class Mode { forward, falsification };

enum class Outcome { pass, fail, inconclusive, precondition_violated };

std::string_view to_string(Mode m);
std::string_view to_string(Outcome o);

struct Counterexample {
  std::size_t trial = 0;
  std::vector<std::vector<double>> inputs;
  std::vector<double> lhs;
  std::vector<double> rhs;
  std::string note;
};

struct VerificationReport {
  ClaimId claim = ClaimId::RMP;
  Mode mode = Mode::forward;
  std::size_t trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  Outcome outcome = Outcome::pass;
  std::optional<Counterexample> counterexample;
  std::string detail;

  bool passed() const { return outcome == Outcome::pass; }
};

/// Tolerances and the relative/absolute switch for residuals, in one place.
struct Tolerances {
  double identity_rel = 1e-9;
  double lemma_rel = 1e-12;
  double grid = 1e-4;
  double polarization_rel = 1e-8;
  double cross_abs = 1e-10;
  double witness = 1e-6;
  /// Ulps of slack on the order comparisons of the harmonic-mean bounds.
  int order_slack_ulps = 1;
  /// Residuals are divided by max(relative_switch, |lhs|, |rhs|).
  double relative_switch = 1.0;
};

/// ||lhs - rhs||_inf / max(switch, ||lhs||_inf, ||rhs||_inf): relative when
/// the reference magnitude exceeds the switch, absolute otherwise.
double residual(std::span<const double> lhs, std::span<const double> rhs,
                double relative_switch = 1.0);

double inf_norm(std::span<const double> v);

/// Folds per-trial residuals into a report. Forward mode records the first
/// trial whose residual exceeds the tolerance; falsification mode records the
/// first trial whose residual exceeds it as the witness. Results do not depend
/// on anything but the order of record() calls.
class ReportAccumulator {
 public:
  ReportAccumulator(ClaimId claim, Mode mode, double tolerance);

  /// `make` is only invoked when the trial becomes the recorded example.
  void record(double residual, const std::function<Counterexample()>& make);
  void absorb(const VerificationReport& other);
  void note(std::string detail);
  void set_outcome(Outcome o) { forced_ = o; }

  bool has_example() const { return example_.has_value(); }
  std::size_t trials() const { return trials_; }

  /// Forward: pass iff no trial exceeded the tolerance. Falsification: pass
  /// iff a witness was found, inconclusive otherwise.
  VerificationReport finish() const;

 private:
  ClaimId claim_;
  Mode mode_;
  double tolerance_;
  std::size_t trials_ = 0;
  double max_residual_ = 0.0;
  bool failed_ = false;
  std::optional<Counterexample> example_;
  std::optional<Outcome> forced_;
  std::string detail_;
};

nlohmann::json to_json(const VerificationReport& r);

/// claim_id,trials,max_residual,tolerance,passed
std::string csv_header();
std::string to_csv_row(const VerificationReport& r);

}  // namespace latmeans::verify
