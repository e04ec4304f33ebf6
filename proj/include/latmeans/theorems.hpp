#pragma once

// Executable checks of the mean/polynomial identities. Forward checks take
// one input tuple and return a one-trial report; sweeps draw many tuples from
// a seeded generator and fold the per-trial reports. The converse directions
// are checked by falsification: a witness is searched for among structured
// disjoint-pair families and random inputs.

#include "latmeans/lattice.hpp"
#include "latmeans/means.hpp"
#include "latmeans/partitions.hpp"
#include "latmeans/polynomial.hpp"
#include "latmeans/report.hpp"
#include "latmeans/rng.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace latmeans::verify {

using lattice::BasicPositiveVector;
using lattice::LatticeVector;
using lattice::PositiveVector;
using partitions::CompletePartition;
using poly::HomogeneousPolynomial;

/// f_1 repeated counts[0] times, f_2 repeated counts[1] times, ...
template <class V>
std::vector<V> repeat_arguments(std::span<const V> fs, std::span<const int> counts) {
  if (fs.size() != counts.size()) {
    throw DimensionMismatch("argument count does not match repetition count");
  }
  std::vector<V> out;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    for (int c = 0; c < counts[k]; ++c) out.push_back(fs[k]);
  }
  return out;
}

/// P(S_s(f_1..f_r)) = sum_k P(f_k), s = degree of P. Needs r >= 2.
VerificationReport check_rmp(const HomogeneousPolynomial& p, std::span<const PositiveVector> fs,
                             const Tolerances& tol = {});

/// P(G_s(f_1..f_s)) = Pcheck(f_1..f_s).
VerificationReport check_gm(const HomogeneousPolynomial& p, std::span<const PositiveVector> fs,
                            const Tolerances& tol = {});

/// meet(f) <= eta_s(f) <= s * meet(f) coordinatewise, with `ulps` of slack on
/// each comparison (0 for exact scalars). Residual is the largest violation.
template <class T>
VerificationReport check_schur_bounds(std::span<const BasicPositiveVector<T>> fs, int ulps);

/// Pass iff eta_s(fs) is exactly zero; precondition_violated when no pair of
/// arguments is disjoint.
template <class T>
VerificationReport check_eta_disjoint(std::span<const BasicPositiveVector<T>> fs);

/// s * Pcheck(f_1..f_s) = sum_j Pcheck(f_1, .., f_{j-1}, eta_s(f), f_{j+1}, .., f_s).
/// lhs/rhs in the report are those two sides. Throws InvalidArgument for s < 2.
VerificationReport check_hm_identity(const HomogeneousPolynomial& p,
                                     std::span<const PositiveVector> fs, const Tolerances& tol = {});

/// gamma_{r/s}(f_1..f_p) = G_s(f_1 x r_1, ..., f_p x r_p).
VerificationReport check_geos_lemma(const CompletePartition& cp, std::span<const PositiveVector> fs,
                                    const Tolerances& tol = {});

/// P(gamma_{r/s}(f_1..f_p)) = Pcheck(f_1 x r_1, ..., f_p x r_p).
VerificationReport check_wgm_identity(const HomogeneousPolynomial& p, const CompletePartition& cp,
                                      std::span<const PositiveVector> fs,
                                      const Tolerances& tol = {});

/// For disjoint f, g: every mixed value Pcheck(f x k, g x (s-k)), 0 < k < s,
/// is at most tol.cross_abs in absolute value, and
/// P(f+g) = sum_k C(s,k) Pcheck(f x k, g x (s-k)) to tol.identity_rel.
/// precondition_violated when f and g are not disjoint.
VerificationReport check_cross_terms(const HomogeneousPolynomial& p, const LatticeVector& f,
                                     const LatticeVector& g, const Tolerances& tol = {});

struct FalsifyOptions {
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
  /// Random positive fillings per support bipartition in the structured phase.
  int fillings_per_bipartition = 2;
};

/// Searches for an input violating the HM (claim HM) or WGM (claim WGM, needs
/// `cp`) identity by more than tol.witness. Order: coordinate pairs
/// (e_i, e_j) for i < j, then every support bipartition with random positive
/// fillings, then random positive tuples, until `budget` identity
/// evaluations are spent. Outcomes: pass (witness found), inconclusive
/// (budget exhausted), precondition_violated (P passes the exhaustive
/// positive-orthogonal-additivity check, so no witness exists).
VerificationReport falsify(const HomogeneousPolynomial& p, ClaimId claim,
                           const std::optional<CompletePartition>& cp, const FalsifyOptions& opts,
                           const Tolerances& tol = {});

// Randomized sweeps. Each draws its inputs from `rng`.

struct SweepSetup {
  int s = 2;
  std::size_t n = 3;
  std::size_t trials = 1000;
  Tolerances tol;
};

VerificationReport sweep_rmp(const HomogeneousPolynomial& p, int r, const SweepSetup& setup,
                             Rng& rng);
VerificationReport sweep_gm(const HomogeneousPolynomial& p, const SweepSetup& setup, Rng& rng);
VerificationReport sweep_schur(const SweepSetup& setup, Rng& rng);
VerificationReport sweep_ortho(const SweepSetup& setup, Rng& rng);
VerificationReport sweep_hm(const HomogeneousPolynomial& p, const SweepSetup& setup, Rng& rng);
VerificationReport sweep_geos(const CompletePartition& cp, const SweepSetup& setup, Rng& rng);
VerificationReport sweep_wgm(const HomogeneousPolynomial& p, const CompletePartition& cp,
                             const SweepSetup& setup, Rng& rng);
VerificationReport sweep_cross(const HomogeneousPolynomial& p, const SweepSetup& setup, Rng& rng);

/// Scalar form of the product identity behind the harmonic-mean theorem:
/// eta_s(x) * sum_j prod_{i != j} x_i = s * prod_i x_i for positive x.
VerificationReport check_product_identity(std::span<const double> x, const Tolerances& tol = {});

// Template definitions.

namespace detail {

inline double as_double(double x) { return x; }
inline double as_double(const Rational& x) { return latmeans::to_double(x); }

template <class T>
std::vector<double> row(const lattice::BasicVector<T>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v.entries()) out.push_back(as_double(x));
  return out;
}

template <class T>
std::vector<std::vector<double>> rows(std::span<const BasicPositiveVector<T>> fs) {
  std::vector<std::vector<double>> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(row(f.vec()));
  return out;
}

}  // namespace detail

template <class T>
VerificationReport check_schur_bounds(std::span<const BasicPositiveVector<T>> fs, int ulps) {
  ReportAccumulator acc(ClaimId::SCHUR, Mode::forward, 0.0);
  const auto eta = means::harmonic_mean<T>(fs);
  const auto lo = lattice::meet<T>(fs);
  const T s(static_cast<int>(fs.size()));
  auto widen = [ulps](const T& x) {
    if constexpr (std::is_floating_point_v<T>) {
      T out = x;
      for (int u = 0; u < ulps; ++u) out = std::nextafter(out, T(INFINITY));
      return out;
    } else {
      return x;
    }
  };
  T violation(0);
  for (std::size_t i = 0; i < eta.size(); ++i) {
    const T hi = s * lo[i];
    if (widen(eta[i]) < lo[i]) violation = std::max<T>(violation, T(lo[i] - eta[i]));
    if (widen(hi) < eta[i]) violation = std::max<T>(violation, T(eta[i] - hi));
  }
  double r = detail::as_double(violation);
  if (violation != T(0)) r = std::max(r, 0x1p-1074);
  acc.record(r, [&] {
    Counterexample c;
    c.inputs = detail::rows(fs);
    c.lhs = detail::row(lo.vec());
    c.rhs = detail::row(eta.vec());
    c.note = "meet <= eta <= s * meet violated";
    return c;
  });
  return acc.finish();
}

template <class T>
VerificationReport check_eta_disjoint(std::span<const BasicPositiveVector<T>> fs) {
  ReportAccumulator acc(ClaimId::ORTHO, Mode::forward, 0.0);
  bool has_pair = false;
  for (std::size_t i = 0; i < fs.size() && !has_pair; ++i) {
    for (std::size_t j = i + 1; j < fs.size() && !has_pair; ++j) {
      has_pair = lattice::is_disjoint(fs[i].vec(), fs[j].vec());
    }
  }
  if (!has_pair) {
    acc.set_outcome(Outcome::precondition_violated);
    acc.note("no pair of arguments is disjoint");
    return acc.finish();
  }
  const auto eta = means::harmonic_mean<T>(fs);
  double worst = 0.0;
  for (const auto& v : eta.entries()) {
    if (v == T(0)) continue;
    // Any nonzero value fails, even one too small to survive conversion.
    worst = std::max(worst, std::max(detail::as_double(v), 0x1p-1074));
  }
  acc.record(worst, [&] {
    Counterexample c;
    c.inputs = detail::rows(fs);
    c.lhs = detail::row(eta.vec());
    c.rhs.assign(eta.size(), 0.0);
    c.note = "harmonic mean of a tuple with a disjoint pair is nonzero";
    return c;
  });
  return acc.finish();
}

}  // namespace latmeans::verify
