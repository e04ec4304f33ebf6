#include "latmeans/polynomial.hpp"

#include "latmeans/generators.hpp"

#include <cmath>

namespace latmeans::poly {

using lattice::LatticeVector;
using lattice::PositiveVector;
using verify::ClaimId;
using verify::Counterexample;
using verify::Mode;
using verify::ReportAccumulator;

namespace {

std::vector<double> add(std::vector<double> a, const std::vector<double>& b) {
  for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
  return a;
}

void check_split(ReportAccumulator& acc, const HomogeneousPolynomial& p, const LatticeVector& f,
                 const LatticeVector& g, double relative_switch) {
  const auto lhs = p.eval(f + g);
  const auto rhs = add(p.eval(f), p.eval(g));
  acc.record(verify::residual(lhs, rhs, relative_switch), [&] {
    return Counterexample{0, {f.to_vector(), g.to_vector()}, lhs, rhs, "P(f+g) vs P(f)+P(g)"};
  });
}

void collect_keys(std::size_t n, int s, std::size_t start, MultiIndex& key,
                  std::vector<MultiIndex>& out) {
  if (key.size() == static_cast<std::size_t>(s)) {
    out.push_back(key);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    key.push_back(i);
    collect_keys(n, s, i, key, out);
    key.pop_back();
  }
}

std::vector<double> random_coeff(Rng& rng, std::size_t d, double lo, double hi) {
  std::vector<double> c(d);
  for (auto& v : c) v = rng.uniform(lo, hi);
  return c;
}

MultiIndex random_mixed_key(Rng& rng, int s, std::size_t n) {
  MultiIndex key(static_cast<std::size_t>(s));
  for (auto& i : key) i = rng.below(n);
  std::sort(key.begin(), key.end());
  if (!is_mixed(key)) {
    std::size_t other = rng.below(n - 1);
    if (other >= key.back()) ++other;
    key.back() = other;
    std::sort(key.begin(), key.end());
  }
  return key;
}

double l1(const std::vector<double>& c) {
  double out = 0.0;
  for (double v : c) out += std::fabs(v);
  return out;
}

}  // namespace

double mixed_mass_fraction(const HomogeneousPolynomial& p) {
  double mixed = 0.0;
  double total = 0.0;
  for (const auto& [key, coeff] : p.terms()) {
    const double m = l1(coeff);
    total += m;
    if (is_mixed(key)) mixed += m;
  }
  return total == 0.0 ? 0.0 : mixed / total;
}

std::vector<double> polarize_blackbox(const Evaluator& p, int s, std::span<const LatticeVector> fs,
                                      double homogeneity_tol) {
  if (s < 1) throw InvalidArgument("polarization degree must be >= 1");
  if (s > kMaxPolarizationDegree) {
    throw BoundExceeded("polarization degree " + std::to_string(s) + " exceeds " +
                        std::to_string(kMaxPolarizationDegree));
  }
  if (fs.size() != static_cast<std::size_t>(s)) {
    throw DimensionMismatch("polarization of degree " + std::to_string(s) + " needs " +
                            std::to_string(s) + " arguments, got " + std::to_string(fs.size()));
  }
  const std::size_t n = lattice::common_dimension(fs);

  LatticeVector total = LatticeVector::zeros(n);
  for (const auto& f : fs) total = total + f;
  std::vector<LatticeVector> probes(fs.begin(), fs.end());
  probes.push_back(total);
  for (const auto& g : probes) {
    const auto base = p(g);
    for (double lambda : {2.0, -0.5}) {
      auto expected = base;
      for (auto& v : expected) v *= std::pow(lambda, s);
      if (verify::residual(p(lambda * g), expected) > homogeneity_tol) {
        throw NotHomogeneous("evaluator is not " + std::to_string(s) +
                             "-homogeneous on the sampled inputs");
      }
    }
  }

  std::vector<double> acc;
  const unsigned masks = 1u << s;
  for (unsigned mask = 0; mask < masks; ++mask) {
    LatticeVector g = LatticeVector::zeros(n);
    int sign = 1;
    for (int k = 0; k < s; ++k) {
      if (mask & (1u << k)) {
        g = g - fs[k];
        sign = -sign;
      } else {
        g = g + fs[k];
      }
    }
    const auto value = p(g);
    if (acc.empty()) acc.assign(value.size(), 0.0);
    for (std::size_t j = 0; j < value.size(); ++j) acc[j] += sign * value[j];
  }
  double scale = double(masks);
  for (int k = 2; k <= s; ++k) scale *= k;
  for (auto& v : acc) v /= scale;
  return acc;
}

verify::VerificationReport is_positively_orthogonally_additive(const HomogeneousPolynomial& p,
                                                                int trials, std::uint64_t seed,
                                                                double tol) {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  Rng rng(seed);
  ReportAccumulator acc(ClaimId::POSITIVE_OA, Mode::forward, tol);
  for (int t = 0; t < trials; ++t) {
    auto [f, g] = gen::disjoint_pair(rng, p.domain_dim());
    check_split(acc, p, f, g, 1.0);
  }
  return acc.finish();
}

verify::VerificationReport check_positive_oa_exhaustive(const HomogeneousPolynomial& p,
                                                         std::uint64_t seed, int draws,
                                                         double tol) {
  const std::size_t n = p.domain_dim();
  if (n > 12) throw BoundExceeded("exhaustive bipartition check needs n <= 12");
  Rng rng(seed);
  ReportAccumulator acc(ClaimId::POSITIVE_OA, Mode::forward, tol);
  // Masks with the top coordinate fixed on the g side enumerate each unordered
  // bipartition once; mask 0 (f = 0) is the trivial split.
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < half; ++mask) {
    std::vector<bool> side(n);
    for (std::size_t i = 0; i < n; ++i) side[i] = (mask >> i) & 1u;
    for (int k = 0; k < draws; ++k) {
      auto [f, g] = gen::disjoint_pair(rng, side);
      check_split(acc, p, f, g, 1.0);
    }
  }
  if (acc.trials() == 0) acc.note("n = 1 admits no nontrivial disjoint pair");
  return acc.finish();
}

verify::VerificationReport is_orthogonally_additive(const HomogeneousPolynomial& p, int trials,
                                                     std::uint64_t seed, double tol) {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  Rng rng(seed);
  ReportAccumulator acc(ClaimId::OA, Mode::forward, tol);
  for (int t = 0; t < trials; ++t) {
    auto [f, g] = gen::signed_disjoint_pair(rng, p.domain_dim());
    check_split(acc, p, f, g, 1.0);
  }
  return acc.finish();
}

HomogeneousPolynomial random_diagonal(Rng& rng, int s, std::size_t n, std::size_t d) {
  std::vector<std::vector<double>> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_coeff(rng, d, -2.0, 2.0));
  return make_diagonal<double>(std::span<const std::vector<double>>(c), s);
}

HomogeneousPolynomial random_polynomial(Rng& rng, int s, std::size_t n, std::size_t d,
                                        double mixed_fraction, int mixed_terms) {
  if (s < 2 || n < 2) throw InvalidArgument("mixed terms need s >= 2 and n >= 2");
  if (!(mixed_fraction > 0.0 && mixed_fraction <= 1.0)) {
    throw InvalidArgument("mixed fraction must lie in (0, 1]");
  }
  if (mixed_terms < 1) throw InvalidArgument("need at least one mixed term");

  std::map<MultiIndex, std::vector<double>> mixed;
  for (int attempt = 0; attempt < 16 * mixed_terms && static_cast<int>(mixed.size()) < mixed_terms;
       ++attempt) {
    auto key = random_mixed_key(rng, s, n);
    if (mixed.count(key)) continue;
    auto c = random_coeff(rng, d, 0.5, 2.0);
    for (auto& v : c) v = rng.coin() ? v : -v;
    mixed.emplace(std::move(key), std::move(c));
  }

  std::vector<Term<double>> terms;
  double diagonal_mass = 0.0;
  if (mixed_fraction < 1.0) {
    for (std::size_t i = 0; i < n; ++i) {
      auto c = random_coeff(rng, d, -2.0, 2.0);
      diagonal_mass += l1(c);
      terms.push_back(Term<double>{MultiIndex(static_cast<std::size_t>(s), i), std::move(c)});
    }
  }
  double mixed_mass = 0.0;
  for (const auto& [key, c] : mixed) mixed_mass += l1(c);
  const double scale =
      mixed_fraction < 1.0 ? mixed_fraction * diagonal_mass / ((1.0 - mixed_fraction) * mixed_mass)
                           : 1.0;
  for (auto& [key, c] : mixed) {
    for (auto& v : c) v *= scale;
    terms.push_back(Term<double>{key, c});
  }
  return HomogeneousPolynomial(s, n, d, std::move(terms));
}

HomogeneousPolynomial random_full_polynomial(Rng& rng, int s, std::size_t n, std::size_t d) {
  std::vector<MultiIndex> keys;
  MultiIndex scratch;
  collect_keys(n, s, 0, scratch, keys);
  std::vector<Term<double>> terms;
  for (auto& key : keys) {
    if (rng.below(4) == 0) continue;
    terms.push_back(Term<double>{std::move(key), random_coeff(rng, d, -1.0, 1.0)});
  }
  return HomogeneousPolynomial(s, n, d, std::move(terms));
}

}  // namespace latmeans::poly
