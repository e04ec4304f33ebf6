#include "latmeans/report.hpp"

#include "latmeans/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <sstream>
#include <utility>

namespace latmeans::verify {

namespace {

constexpr std::array<std::pair<ClaimId, std::string_view>, 11> kClaimNames{{
    {ClaimId::RMP, "RMP"},
    {ClaimId::GM, "GM"},
    {ClaimId::SCHUR, "SCHUR"},
    {ClaimId::ORTHO, "ORTHO"},
    {ClaimId::HM, "HM"},
    {ClaimId::GEOS, "GEOS"},
    {ClaimId::WGM, "WGM"},
    {ClaimId::CROSS_TERMS, "CROSS_TERMS"},
    {ClaimId::POSITIVE_OA, "POSITIVE_OA"},
    {ClaimId::OA, "OA"},
    {ClaimId::POLARIZATION, "POLARIZATION"},
}};

// Shortest round-trip representation, matching the JSON output.
std::string format_double(double x) { return nlohmann::json(x).dump(); }

}  // namespace

std::string_view to_string(ClaimId id) {
  for (const auto& [claim, name] : kClaimNames) {
    if (claim == id) return name;
  }
  return "UNKNOWN";
}

ClaimId parse_claim(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "CROSS") return ClaimId::CROSS_TERMS;
  for (const auto& [claim, name] : kClaimNames) {
    if (name == upper) return claim;
  }
  throw InvalidArgument("unknown claim \"" + std::string(text) + "\"");
}

std::string_view to_string(Mode m) {
  return m == Mode::forward ? "forward" : "falsification";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::inconclusive:
      return "inconclusive";
    case Outcome::precondition_violated:
      return "precondition_violated";
  }
  return "unknown";
}

double inf_norm(std::span<const double> v) {
  double out = 0.0;
  for (double x : v) out = std::max(out, std::fabs(x));
  return out;
}

double residual(std::span<const double> lhs, std::span<const double> rhs, double relative_switch) {
  if (lhs.size() != rhs.size()) throw DimensionMismatch("residual of vectors of different length");
  double diff = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) diff = std::max(diff, std::fabs(lhs[i] - rhs[i]));
  const double scale = std::max({relative_switch, inf_norm(lhs), inf_norm(rhs)});
  if (scale == 0.0) return diff == 0.0 ? 0.0 : INFINITY;
  return diff / scale;
}

ReportAccumulator::ReportAccumulator(ClaimId claim, Mode mode, double tolerance)
    : claim_(claim), mode_(mode), tolerance_(tolerance) {}

void ReportAccumulator::record(double r, const std::function<Counterexample()>& make) {
  const std::size_t trial = trials_++;
  // NaN counts as exceeding any tolerance.
  const bool exceeds = !(r <= tolerance_);
  if (std::isnan(r)) {
    max_residual_ = INFINITY;
  } else {
    max_residual_ = std::max(max_residual_, r);
  }
  if (exceeds) {
    failed_ = true;
    if (!example_) {
      example_ = make();
      example_->trial = trial;
    }
  }
}

void ReportAccumulator::absorb(const VerificationReport& other) {
  const std::size_t offset = trials_;
  trials_ += other.trials;
  max_residual_ = std::max(max_residual_, other.max_residual);
  if (other.outcome == Outcome::fail || (mode_ == Mode::falsification && other.counterexample)) {
    failed_ = true;
  }
  if (other.outcome == Outcome::precondition_violated) forced_ = other.outcome;
  if (!example_ && other.counterexample) {
    example_ = other.counterexample;
    example_->trial += offset;
  }
  if (!other.detail.empty()) note(other.detail);
}

void ReportAccumulator::note(std::string detail) {
  if (detail.empty()) return;
  if (!detail_.empty()) detail_ += "; ";
  detail_ += detail;
}

VerificationReport ReportAccumulator::finish() const {
  VerificationReport r;
  r.claim = claim_;
  r.mode = mode_;
  r.trials = trials_;
  r.max_residual = max_residual_;
  r.tolerance = tolerance_;
  r.counterexample = example_;
  r.detail = detail_;
  if (forced_) {
    r.outcome = *forced_;
  } else if (mode_ == Mode::forward) {
    r.outcome = failed_ ? Outcome::fail : Outcome::pass;
  } else {
    r.outcome = example_ ? Outcome::pass : Outcome::inconclusive;
  }
  return r;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json out;
  out["claim_id"] = std::string(to_string(r.claim));
  out["mode"] = std::string(to_string(r.mode));
  out["trials"] = r.trials;
  out["max_residual"] = std::isfinite(r.max_residual) ? nlohmann::json(r.max_residual)
                                                      : nlohmann::json("inf");
  out["tolerance"] = r.tolerance;
  out["passed"] = r.passed();
  out["outcome"] = std::string(to_string(r.outcome));
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out["counterexample"] = {{"trial", c.trial}, {"inputs", c.inputs}, {"lhs", c.lhs},
                             {"rhs", c.rhs},     {"note", c.note}};
  } else {
    out["counterexample"] = nullptr;
  }
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

std::string csv_header() { return "claim_id,trials,max_residual,tolerance,passed"; }

std::string to_csv_row(const VerificationReport& r) {
  std::ostringstream os;
  os << to_string(r.claim) << (r.mode == Mode::falsification ? "_CONVERSE" : "") << ','
     << r.trials << ',' << format_double(r.max_residual) << ',' << format_double(r.tolerance)
     << ',' << (r.passed() ? "true" : "false");
  return os.str();
}

}  // namespace latmeans::verify
