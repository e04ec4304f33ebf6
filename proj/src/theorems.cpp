#include "latmeans/theorems.hpp"

#include "latmeans/generators.hpp"

#include <cmath>
#include <string>

namespace latmeans::verify {

namespace {

std::vector<std::vector<double>> rows(std::span<const PositiveVector> fs) {
  std::vector<std::vector<double>> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(f.vec().to_vector());
  return out;
}

std::vector<LatticeVector> as_lattice(std::span<const PositiveVector> fs) {
  return std::vector<LatticeVector>(fs.begin(), fs.end());
}

std::vector<double> sum_of(std::vector<double> a, const std::vector<double>& b) {
  for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
  return a;
}

std::vector<double> scaled(std::vector<double> a, double lambda) {
  for (auto& v : a) v *= lambda;
  return a;
}

VerificationReport single(ClaimId claim, double tolerance, const std::vector<double>& lhs,
                          const std::vector<double>& rhs, double relative_switch,
                          const std::function<std::vector<std::vector<double>>()>& inputs,
                          std::string note) {
  ReportAccumulator acc(claim, Mode::forward, tolerance);
  acc.record(residual(lhs, rhs, relative_switch), [&] {
    return Counterexample{0, inputs(), lhs, rhs, std::move(note)};
  });
  return acc.finish();
}

void require_degree_arity(const HomogeneousPolynomial& p, std::size_t count) {
  if (count != static_cast<std::size_t>(p.degree())) {
    throw DimensionMismatch("degree-" + std::to_string(p.degree()) + " identity needs " +
                            std::to_string(p.degree()) + " arguments, got " +
                            std::to_string(count));
  }
}

void require_cp_matches(const HomogeneousPolynomial& p, const CompletePartition& cp,
                        std::size_t count) {
  if (cp.target() != p.degree()) {
    throw InvalidArgument("partition of " + std::to_string(cp.target()) +
                          " does not match polynomial degree " + std::to_string(p.degree()));
  }
  if (count != cp.size()) {
    throw DimensionMismatch("partition has " + std::to_string(cp.size()) + " parts but got " +
                            std::to_string(count) + " arguments");
  }
}

struct Sides {
  std::vector<double> lhs;
  std::vector<double> rhs;
};

Sides hm_sides(const HomogeneousPolynomial& p, std::span<const PositiveVector> fs) {
  const auto s = static_cast<std::size_t>(p.degree());
  const auto eta = means::harmonic_mean<double>(fs);
  auto args = as_lattice(fs);
  Sides out{scaled(p.eval_multilinear(args), double(s)), std::vector<double>(p.codomain_dim(), 0.0)};
  for (std::size_t j = 0; j < s; ++j) {
    const LatticeVector saved = args[j];
    args[j] = eta.vec();
    out.rhs = sum_of(std::move(out.rhs), p.eval_multilinear(args));
    args[j] = saved;
  }
  return out;
}

Sides wgm_sides(const HomogeneousPolynomial& p, const CompletePartition& cp,
                std::span<const PositiveVector> fs) {
  const auto gamma = means::weighted_geometric_mean(partitions::weights(cp), fs);
  const auto args = as_lattice(fs);
  const auto repeated = repeat_arguments<LatticeVector>(args, cp.parts());
  return Sides{p.eval(gamma.vec()), p.eval_multilinear(repeated)};
}

}  // namespace

VerificationReport check_rmp(const HomogeneousPolynomial& p, std::span<const PositiveVector> fs,
                             const Tolerances& tol) {
  if (fs.size() < 2) throw InvalidArgument("root-mean-power identity needs r >= 2 arguments");
  const auto lhs = p.eval(means::root_mean_power(p.degree(), fs).vec());
  std::vector<double> rhs(p.codomain_dim(), 0.0);
  for (const auto& f : fs) rhs = sum_of(std::move(rhs), p.eval(f.vec()));
  return single(ClaimId::RMP, tol.identity_rel, lhs, rhs, tol.relative_switch,
                [&] { return rows(fs); }, "P(S_s(f)) vs sum_k P(f_k)");
}

VerificationReport check_gm(const HomogeneousPolynomial& p, std::span<const PositiveVector> fs,
                            const Tolerances& tol) {
  require_degree_arity(p, fs.size());
  const auto lhs = p.eval(means::geometric_mean(fs).vec());
  const auto rhs = p.eval_multilinear(as_lattice(fs));
  return single(ClaimId::GM, tol.identity_rel, lhs, rhs, tol.relative_switch,
                [&] { return rows(fs); }, "P(G_s(f)) vs Pcheck(f_1..f_s)");
}

VerificationReport check_hm_identity(const HomogeneousPolynomial& p,
                                     std::span<const PositiveVector> fs, const Tolerances& tol) {
  if (p.degree() < 2) throw InvalidArgument("harmonic-mean identity needs degree s >= 2");
  require_degree_arity(p, fs.size());
  const auto sides = hm_sides(p, fs);
  return single(ClaimId::HM, tol.identity_rel, sides.lhs, sides.rhs, tol.relative_switch,
                [&] { return rows(fs); }, "s*Pcheck(f) vs sum_j Pcheck(f with eta in slot j)");
}

VerificationReport check_geos_lemma(const CompletePartition& cp, std::span<const PositiveVector> fs,
                                    const Tolerances& tol) {
  if (fs.size() != cp.size()) {
    throw DimensionMismatch("partition has " + std::to_string(cp.size()) + " parts but got " +
                            std::to_string(fs.size()) + " arguments");
  }
  const auto lhs = means::weighted_geometric_mean(partitions::weights(cp), fs);
  const auto repeated = repeat_arguments<PositiveVector>(fs, cp.parts());
  const auto rhs = means::geometric_mean(repeated);
  // Purely relative: the identity is between positive scalars of any size.
  return single(ClaimId::GEOS, tol.lemma_rel, lhs.vec().to_vector(), rhs.vec().to_vector(), 0.0,
                [&] { return rows(fs); }, "gamma_{r/s}(f) vs G_s(repeated f)");
}

VerificationReport check_wgm_identity(const HomogeneousPolynomial& p, const CompletePartition& cp,
                                      std::span<const PositiveVector> fs, const Tolerances& tol) {
  require_cp_matches(p, cp, fs.size());
  const auto sides = wgm_sides(p, cp, fs);
  return single(ClaimId::WGM, tol.identity_rel, sides.lhs, sides.rhs, tol.relative_switch,
                [&] { return rows(fs); }, "P(gamma_{r/s}(f)) vs Pcheck(repeated f)");
}

VerificationReport check_cross_terms(const HomogeneousPolynomial& p, const LatticeVector& f,
                                     const LatticeVector& g, const Tolerances& tol) {
  ReportAccumulator acc(ClaimId::CROSS_TERMS, Mode::forward, tol.cross_abs);
  if (!lattice::is_disjoint(f, g)) {
    acc.set_outcome(Outcome::precondition_violated);
    acc.note("f and g are not disjoint");
    return acc.finish();
  }
  const int s = p.degree();
  std::vector<double> binomial_sum(p.codomain_dim(), 0.0);
  double worst_mixed = 0.0;
  std::optional<Counterexample> witness;
  double coefficient = 1.0;  // C(s, k)
  for (int k = 0; k <= s; ++k) {
    std::vector<LatticeVector> args(static_cast<std::size_t>(k), f);
    args.insert(args.end(), static_cast<std::size_t>(s - k), g);
    const auto value = p.eval_multilinear(args);
    binomial_sum = sum_of(std::move(binomial_sum), scaled(value, coefficient));
    if (k > 0 && k < s) {
      const double magnitude = inf_norm(value);
      if (magnitude > worst_mixed) worst_mixed = magnitude;
      if (magnitude > tol.cross_abs && !witness) {
        witness = Counterexample{0, {f.to_vector(), g.to_vector()}, value,
                                 std::vector<double>(value.size(), 0.0),
                                 "Pcheck(f x " + std::to_string(k) + ", g x " +
                                     std::to_string(s - k) + ") != 0"};
      }
    }
    coefficient = coefficient * double(s - k) / double(k + 1);
  }
  acc.record(worst_mixed, [&] { return *witness; });

  const auto direct = p.eval(f + g);
  const double binomial_residual = residual(direct, binomial_sum, tol.relative_switch);
  if (!(binomial_residual <= tol.identity_rel)) {
    acc.set_outcome(Outcome::fail);
    acc.note("binomial reconstruction residual " + std::to_string(binomial_residual));
  }
  return acc.finish();
}

VerificationReport check_product_identity(std::span<const double> x, const Tolerances& tol) {
  const std::size_t s = x.size();
  double cofactor_sum = 0.0;
  for (std::size_t j = 0; j < s; ++j) {
    double prod = 1.0;
    for (std::size_t i = 0; i < s; ++i) {
      if (i != j) prod *= x[i];
    }
    cofactor_sum += prod;
  }
  double full = 1.0;
  for (double v : x) full *= v;
  const std::vector<double> lhs{means::harmonic_mean_scalar<double>(x) * cofactor_sum};
  const std::vector<double> rhs{double(s) * full};
  return single(ClaimId::HM, tol.identity_rel, lhs, rhs, 0.0,
                [&] { return std::vector<std::vector<double>>{{x.begin(), x.end()}}; },
                "eta * sum_j prod_{i!=j} x_i vs s * prod x_i");
}

VerificationReport falsify(const HomogeneousPolynomial& p, ClaimId claim,
                           const std::optional<CompletePartition>& cp, const FalsifyOptions& opts,
                           const Tolerances& tol) {
  const int s = p.degree();
  if (claim != ClaimId::HM && claim != ClaimId::WGM) {
    throw InvalidArgument("falsification is defined for the HM and WGM claims only");
  }
  if (s < 2) throw InvalidArgument("falsification needs degree s >= 2");
  if (claim == ClaimId::WGM) {
    if (!cp) throw InvalidArgument("WGM falsification needs a complete partition");
    if (cp->target() != s) {
      throw InvalidArgument("partition of " + std::to_string(cp->target()) +
                            " does not match polynomial degree " + std::to_string(s));
    }
  }

  ReportAccumulator acc(claim, Mode::falsification, tol.witness);
  const auto oa = poly::check_positive_oa_exhaustive(p, opts.seed, 2, tol.identity_rel);
  if (oa.passed()) {
    acc.set_outcome(Outcome::precondition_violated);
    acc.note("polynomial passes the exhaustive positive orthogonal additivity check");
    return acc.finish();
  }

  const std::size_t n = p.domain_dim();
  Rng rng(opts.seed);
  std::string phase;

  auto try_args = [&](std::span<const PositiveVector> fs) {
    if (acc.trials() >= opts.budget || acc.has_example()) return;
    const Sides sides = claim == ClaimId::HM ? hm_sides(p, fs) : wgm_sides(p, *cp, fs);
    acc.record(residual(sides.lhs, sides.rhs, tol.relative_switch), [&] {
      return Counterexample{0, rows(fs), sides.lhs, sides.rhs, "witness from " + phase};
    });
  };

  // Argument tuples built from a disjoint pair: the HM family puts f in the
  // first k slots; the WGM family puts f on a sub-tuple of parts summing to q.
  auto try_pair = [&](const PositiveVector& f, const PositiveVector& g) {
    for (int q = 1; q < s; ++q) {
      std::vector<PositiveVector> fs;
      if (claim == ClaimId::HM) {
        fs.assign(static_cast<std::size_t>(q), f);
        fs.insert(fs.end(), static_cast<std::size_t>(s - q), g);
      } else {
        const auto chosen = partitions::subset_with_sum(cp->parts(), q);
        fs.assign(cp->size(), g);
        for (auto k : *chosen) fs[k] = f;
      }
      try_args(fs);
    }
  };

  auto done = [&] { return acc.has_example() || acc.trials() >= opts.budget; };

  phase = "coordinate pairs";
  for (std::size_t i = 0; i < n && !done(); ++i) {
    for (std::size_t j = i + 1; j < n && !done(); ++j) {
      std::vector<double> f(n, 0.0);
      std::vector<double> g(n, 0.0);
      f[i] = 1.0;
      g[j] = 1.0;
      try_pair(PositiveVector(f), PositiveVector(g));
    }
  }

  phase = "support bipartitions";
  if (n >= 2 && n <= 12) {
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 1; mask < half && !done(); ++mask) {
      std::vector<bool> side(n);
      for (std::size_t i = 0; i < n; ++i) side[i] = (mask >> i) & 1u;
      for (int k = 0; k < opts.fillings_per_bipartition && !done(); ++k) {
        auto [f, g] = gen::disjoint_pair(rng, side);
        try_pair(f, g);
      }
    }
  }

  phase = "random tuples";
  const std::size_t arity = claim == ClaimId::HM ? static_cast<std::size_t>(s) : cp->size();
  while (!done()) try_args(gen::positive_tuple(rng, arity, n));

  if (acc.has_example()) acc.note("witness found after " + std::to_string(acc.trials()) + " samples");
  return acc.finish();
}

VerificationReport sweep_rmp(const HomogeneousPolynomial& p, int r, const SweepSetup& setup,
                             Rng& rng) {
  ReportAccumulator acc(ClaimId::RMP, Mode::forward, setup.tol.identity_rel);
  for (std::size_t t = 0; t < setup.trials; ++t) {
    acc.absorb(check_rmp(p, gen::positive_tuple(rng, static_cast<std::size_t>(r), setup.n),
                         setup.tol));
  }
  return acc.finish();
}

VerificationReport sweep_gm(const HomogeneousPolynomial& p, const SweepSetup& setup, Rng& rng) {
  ReportAccumulator acc(ClaimId::GM, Mode::forward, setup.tol.identity_rel);
  for (std::size_t t = 0; t < setup.trials; ++t) {
    acc.absorb(check_gm(p, gen::positive_tuple(rng, static_cast<std::size_t>(p.degree()), setup.n),
                        setup.tol));
  }
  return acc.finish();
}

VerificationReport sweep_schur(const SweepSetup& setup, Rng& rng) {
  ReportAccumulator acc(ClaimId::SCHUR, Mode::forward, 0.0);
  const auto count = static_cast<std::size_t>(setup.s);
  for (std::size_t t = 0; t < setup.trials; ++t) {
    // Every fourth tuple carries a disjoint pair, where the lower bound is tight.
    const auto fs = (count >= 2 && t % 4 == 3) ? gen::tuple_with_disjoint_pair(rng, count, setup.n)
                                               : gen::positive_tuple(rng, count, setup.n);
    acc.absorb(check_schur_bounds<double>(fs, setup.tol.order_slack_ulps));
  }
  return acc.finish();
}

VerificationReport sweep_ortho(const SweepSetup& setup, Rng& rng) {
  ReportAccumulator acc(ClaimId::ORTHO, Mode::forward, 0.0);
  for (std::size_t t = 0; t < setup.trials; ++t) {
    acc.absorb(check_eta_disjoint<double>(
        gen::tuple_with_disjoint_pair(rng, static_cast<std::size_t>(setup.s), setup.n)));
  }
  return acc.finish();
}

VerificationReport sweep_hm(const HomogeneousPolynomial& p, const SweepSetup& setup, Rng& rng) {
  ReportAccumulator acc(ClaimId::HM, Mode::forward, setup.tol.identity_rel);
  for (std::size_t t = 0; t < setup.trials; ++t) {
    acc.absorb(check_hm_identity(
        p, gen::positive_tuple(rng, static_cast<std::size_t>(p.degree()), setup.n), setup.tol));
  }
  return acc.finish();
}

VerificationReport sweep_geos(const CompletePartition& cp, const SweepSetup& setup, Rng& rng) {
  ReportAccumulator acc(ClaimId::GEOS, Mode::forward, setup.tol.lemma_rel);
  for (std::size_t t = 0; t < setup.trials; ++t) {
    acc.absorb(check_geos_lemma(cp, gen::positive_tuple(rng, cp.size(), setup.n), setup.tol));
  }
  return acc.finish();
}

VerificationReport sweep_wgm(const HomogeneousPolynomial& p, const CompletePartition& cp,
                             const SweepSetup& setup, Rng& rng) {
  ReportAccumulator acc(ClaimId::WGM, Mode::forward, setup.tol.identity_rel);
  for (std::size_t t = 0; t < setup.trials; ++t) {
    acc.absorb(check_wgm_identity(p, cp, gen::positive_tuple(rng, cp.size(), setup.n), setup.tol));
  }
  return acc.finish();
}

VerificationReport sweep_cross(const HomogeneousPolynomial& p, const SweepSetup& setup, Rng& rng) {
  ReportAccumulator acc(ClaimId::CROSS_TERMS, Mode::forward, setup.tol.cross_abs);
  for (std::size_t t = 0; t < setup.trials; ++t) {
    auto [f, g] = gen::disjoint_pair(rng, setup.n);
    acc.absorb(check_cross_terms(p, f.vec(), g.vec(), setup.tol));
  }
  return acc.finish();
}

}  // namespace latmeans::verify
