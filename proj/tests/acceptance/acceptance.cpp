// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "latmeans/generators.hpp"
#include "latmeans/means.hpp"
#include "latmeans/partitions.hpp"
#include "latmeans/polynomial.hpp"
#include "latmeans/theorems.hpp"
#include "partition_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace latmeans;
using lattice::LatticeVector;
using lattice::PositiveRationalVector;
using lattice::PositiveVector;
using partitions::CompletePartition;
using poly::HomogeneousPolynomial;
using verify::ClaimId;
using verify::Outcome;
using verify::VerificationReport;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Folds reports into one verdict: all must pass, tracks the worst residual.
class Tally {
 public:
  void add(const VerificationReport& r, const std::string& where) {
    ++reports_;
    trials_ += r.trials;
    worst_ = std::max(worst_, r.max_residual);
    if (!r.passed() && ok_) {
      ok_ = false;
      first_failure_ = where + ": " + std::string(verify::to_string(r.outcome)) + " residual " +
                       sci(r.max_residual);
    }
  }
  void fail(const std::string& why) {
    if (ok_) first_failure_ = why;
    ok_ = false;
  }
  bool ok() const { return ok_; }
  double worst() const { return worst_; }
  std::size_t trials() const { return trials_; }
  std::string failure() const { return first_failure_; }

 private:
  bool ok_ = true;
  std::size_t reports_ = 0;
  std::size_t trials_ = 0;
  double worst_ = 0.0;
  std::string first_failure_;
};

std::size_t pick(Rng& rng, int lo, int hi) { return static_cast<std::size_t>(rng.between(lo, hi)); }

Verdict schur() {
  Rng rng(1001);
  Tally t;
  for (int k = 0; k < 10000; ++k) {
    const std::size_t s = pick(rng, 1, 6);
    const std::size_t n = pick(rng, 1, 8);
    const bool disjoint = s >= 2 && n >= 2 && k % 4 == 3;
    const auto fs = disjoint ? gen::tuple_with_disjoint_pair(rng, s, n) : gen::positive_tuple(rng, s, n);
    t.add(verify::check_schur_bounds<double>(fs, 1), "double case " + std::to_string(k));
  }
  std::size_t exact = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t s = pick(rng, 1, 6);
    const std::size_t n = pick(rng, 1, 4);
    std::vector<PositiveRationalVector> fs;
    for (std::size_t j = 0; j < s; ++j) fs.push_back(gen::small_rational(rng, n, 9, 6, k % 5 == 0));
    const auto r = verify::check_schur_bounds<Rational>(fs, 0);
    t.add(r, "rational case " + std::to_string(k));
    exact += r.passed();
  }
  return {t.ok(), t.ok() ? "10000 float tuples, worst violation " + sci(t.worst()) + "; " +
                               std::to_string(exact) + "/100 exact cases"
                         : t.failure()};
}

Verdict ortho() {
  Rng rng(1002);
  std::size_t zero = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto fs = gen::tuple_with_disjoint_pair(rng, pick(rng, 2, 6), pick(rng, 2, 8));
    zero += verify::check_eta_disjoint<double>(fs).passed() &&
            means::harmonic_mean<double>(fs).vec().is_zero();
  }
  return {zero == 1000, std::to_string(zero) + "/1000 tuples give eta = 0 exactly"};
}

Verdict two_routes() {
  Rng rng(1003);
  double worst_h = 0.0;
  double worst_g = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const int s = rng.between(1, 6);
    const std::size_t n = pick(rng, 1, 6);
    const auto fs = gen::positive_tuple(rng, static_cast<std::size_t>(s), n);
    const auto closed = means::harmonic_mean<double>(fs).vec().to_vector();
    const auto lag = means::harmonic_mean_via_infimum(fs, means::InfimumSpec::harmonic(s),
                                                      means::Method::lagrange);
    worst_h = std::max(worst_h, verify::residual(closed, lag.value.vec().to_vector(), 0.0));

    const auto cps = partitions::enumerate_complete(s);
    const auto w = partitions::weights(cps[rng.below(cps.size())]);
    const auto gs = gen::positive_tuple(rng, w.size(), n);
    const auto gclosed = means::weighted_geometric_mean(w, gs).vec().to_vector();
    const auto glag = means::wgm_via_infimum(w, gs, means::InfimumSpec::weighted_geometric(w),
                                             means::Method::lagrange);
    worst_g = std::max(worst_g, verify::residual(gclosed, glag.value.vec().to_vector(), 0.0));
  }
  bool ok = worst_h <= 1e-9 && worst_g <= 1e-9;
  std::ostringstream detail;
  detail << "lagrange vs closed: eta " << sci(worst_h) << ", gamma " << sci(worst_g);

  const std::vector<int> ms{8, 16, 32, 64, 128};
  // Grid convergence on the documented cases.
  auto grid_run = [&](const std::function<means::MeanResult(int)>& eval,
                      const std::vector<double>& exact, const char* name) {
    double prev = INFINITY;
    double last = 0.0;
    bool mono = true;
    for (int m : ms) {
      const auto r = eval(m);
      const double res = verify::residual(r.value.vec().to_vector(), exact);
      mono &= res <= prev;
      mono &= r.value[0] >= exact[0] * (1 - 1e-12);
      prev = res;
      last = res;
    }
    ok &= mono && last <= 1e-4;
    detail << "; grid " << name << (mono ? " monotone" : " NOT monotone") << ", final " << sci(last);
  };
  const std::vector<PositiveVector> h3{PositiveVector{1}, PositiveVector{2}, PositiveVector{4}};
  grid_run([&](int m) {
    return means::harmonic_mean_via_infimum(h3, means::InfimumSpec::harmonic(3, m), means::Method::grid);
  }, {12.0 / 7.0}, "eta(1,2,4)");
  const auto w211 = partitions::WeightVector::from_parts(std::vector<int>{2, 1, 1});
  const std::vector<PositiveVector> g3{PositiveVector{16}, PositiveVector{1}, PositiveVector{1}};
  grid_run([&](int m) {
    return means::wgm_via_infimum(w211, g3, means::InfimumSpec::weighted_geometric(w211, m),
                                  means::Method::grid);
  }, {4.0}, "gamma(16,1,1)");

  // Random log-uniform inputs: monotonicity is required, the final level is reported.
  std::size_t mono_count = 0;
  std::size_t within = 0;
  const int samples = 100;
  for (int k = 0; k < samples; ++k) {
    const int s = rng.between(2, 3);
    const auto fs = gen::positive_tuple(rng, static_cast<std::size_t>(s), 1);
    const auto exact = means::harmonic_mean<double>(fs).vec().to_vector();
    double prev = INFINITY;
    bool mono = true;
    for (int m : ms) {
      const auto r = means::harmonic_mean_via_infimum(fs, means::InfimumSpec::harmonic(s, m),
                                                      means::Method::grid);
      const double res = verify::residual(r.value.vec().to_vector(), exact);
      mono &= res <= prev;
      prev = res;
    }
    mono_count += mono;
    within += prev <= 1e-4;
  }
  ok &= mono_count == static_cast<std::size_t>(samples);
  detail << "; random eta grids monotone " << mono_count << "/" << samples << ", within 1e-4 at m=128 "
         << within << "/" << samples;
  return {ok, detail.str()};
}

Verdict geos() {
  Rng rng(1004);
  Tally t;
  std::size_t count = 0;
  for (int s = 1; s <= 8; ++s) {
    for (const auto& cp : partitions::enumerate_complete(s)) {
      ++count;
      const verify::SweepSetup setup{s, pick(rng, 1, 6), 100, {}};
      t.add(verify::sweep_geos(cp, setup, rng), "partition of " + std::to_string(s));
    }
  }
  return {t.ok(), t.ok() ? std::to_string(count) + " partitions x 100 inputs, worst " + sci(t.worst())
                         : t.failure()};
}

struct Family {
  HomogeneousPolynomial p;
  std::size_t n;
};

// Diagonal polynomials with s in {lo..hi}, covering n in 1..6 and d in 1..3.
std::vector<Family> diagonal_family(Rng& rng, int lo, int hi) {
  std::vector<Family> out;
  for (int s = lo; s <= hi; ++s) {
    for (std::size_t n : {1, 3, 6}) {
      const std::size_t d = pick(rng, 1, 3);
      out.push_back({poly::random_diagonal(rng, s, n, d), n});
    }
  }
  return out;
}

Verdict hm_forward() {
  Rng rng(1005);
  Tally t;
  const auto family = diagonal_family(rng, 2, 5);
  for (const auto& f : family) {
    const verify::SweepSetup setup{f.p.degree(), f.n, 1000, {}};
    t.add(verify::sweep_hm(f.p, setup, rng), "s=" + std::to_string(f.p.degree()));
  }
  double scalar_worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const auto x = gen::positive(rng, pick(rng, 2, 6));
    const auto r = verify::check_product_identity(x.entries());
    scalar_worst = std::max(scalar_worst, r.max_residual);
    t.add(r, "scalar tuple " + std::to_string(k));
  }
  return {t.ok(), t.ok() ? std::to_string(family.size()) + " polynomials x 1000 inputs; worst " +
                               sci(t.worst()) + " (scalar identity " + sci(scalar_worst) + ")"
                         : t.failure()};
}

Verdict wgm_forward() {
  Rng rng(1006);
  Tally t;
  const auto family = diagonal_family(rng, 1, 6);
  std::size_t runs = 0;
  for (const auto& f : family) {
    const int s = f.p.degree();
    for (const auto& cp : partitions::enumerate_complete(s)) {
      const verify::SweepSetup setup{s, f.n, 1000, {}};
      t.add(verify::sweep_wgm(f.p, cp, setup, rng), "s=" + std::to_string(s));
      ++runs;
    }
  }
  return {t.ok(), t.ok() ? std::to_string(runs) + " (polynomial, partition) pairs x 1000 inputs, worst " +
                               sci(t.worst())
                         : t.failure()};
}

// Structured pair e_i, e_j placed as in the search; residual of the identity.
double pair_residual(const HomogeneousPolynomial& p, ClaimId claim, const CompletePartition* cp,
                     std::size_t i, std::size_t j, int q) {
  const std::size_t n = p.domain_dim();
  std::vector<double> fi(n, 0.0);
  std::vector<double> gj(n, 0.0);
  fi[i] = 1.0;
  gj[j] = 1.0;
  const PositiveVector f(fi);
  const PositiveVector g(gj);
  verify::Tolerances tol;
  tol.identity_rel = 1e-6;
  const int s = p.degree();
  std::vector<PositiveVector> fs;
  if (claim == ClaimId::HM) {
    fs.assign(static_cast<std::size_t>(q), f);
    fs.insert(fs.end(), static_cast<std::size_t>(s - q), g);
    return verify::check_hm_identity(p, fs, tol).max_residual;
  }
  const auto chosen = partitions::subset_with_sum(cp->parts(), q);
  fs.assign(cp->size(), g);
  for (auto k : *chosen) fs[k] = f;
  return verify::check_wgm_identity(p, *cp, fs, tol).max_residual;
}

Verdict converse() {
  Rng rng(1007);
  Tally t;
  std::size_t pair_keys = 0;
  for (int k = 0; k < 50; ++k) {
    const int s = rng.between(2, 5);
    const std::size_t n = pick(rng, 2, 6);
    const auto p = poly::random_polynomial(rng, s, n, pick(rng, 1, 3), rng.uniform(0.1, 1.0));
    if (poly::mixed_mass_fraction(p) < 0.1 - 1e-12) t.fail("polynomial " + std::to_string(k) + " below mass 0.1");
    verify::FalsifyOptions opts;
    opts.seed = rng.next();
    const auto where = "polynomial " + std::to_string(k);
    t.add(verify::falsify(p, ClaimId::HM, std::nullopt, opts), where + " HM");
    const auto cps = partitions::enumerate_complete(s);
    for (const auto& cp : cps) t.add(verify::falsify(p, ClaimId::WGM, cp, opts), where + " WGM");

    // every mixed key supported on exactly {i, j} must be witnessed by e_i, e_j
    for (const auto& [key, coeff] : p.terms()) {
      const std::set<std::size_t> support(key.begin(), key.end());
      if (support.size() != 2) continue;
      ++pair_keys;
      const std::size_t i = *support.begin();
      const std::size_t j = *support.rbegin();
      const int q = static_cast<int>(std::count(key.begin(), key.end(), i));
      if (!(pair_residual(p, ClaimId::HM, nullptr, i, j, q) > 1e-6)) t.fail(where + " HM pair");
      for (const auto& cp : cps) {
        if (!(pair_residual(p, ClaimId::WGM, &cp, i, j, q) > 1e-6)) t.fail(where + " WGM pair");
      }
    }
  }

  const HomogeneousPolynomial sq(2, 2, 1,
                                 {poly::Term<double>{{0, 0}, {1.0}}, poly::Term<double>{{0, 1}, {1.0}},
                                  poly::Term<double>{{1, 1}, {1.0}}});
  const verify::FalsifyOptions opts;
  const auto hm = verify::falsify(sq, ClaimId::HM, std::nullopt, opts);
  const auto wgm = verify::falsify(sq, ClaimId::WGM, CompletePartition({1, 1}, 2), opts);
  t.add(hm, "(f1+f2)^2 HM");
  t.add(wgm, "(f1+f2)^2 WGM");
  const bool worked = hm.max_residual == 1.0 && wgm.max_residual == 1.0 && hm.trials == 1 && wgm.trials == 1;
  if (!worked) t.fail("(f1+f2)^2 witness residual is not 1 on the first pair");
  return {t.ok(), t.ok() ? "50 polynomials, witnesses for HM and every WGM partition; " +
                               std::to_string(pair_keys) + " two-index keys witnessed by e_i, e_j; "
                               "(f1+f2)^2 residual 1"
                         : t.failure()};
}

Verdict baseline() {
  Rng rng(1008);
  Tally t;
  for (int s = 1; s <= 5; ++s) {
    const std::size_t n = pick(rng, 1, 6);
    const auto p = poly::random_diagonal(rng, s, n, pick(rng, 1, 3));
    const verify::SweepSetup setup{s, n, 1000, {}};
    t.add(verify::sweep_rmp(p, rng.between(2, 5), setup, rng), "rmp s=" + std::to_string(s));
    t.add(verify::sweep_gm(p, setup, rng), "gm s=" + std::to_string(s));
  }
  return {t.ok(), t.ok() ? "s = 1..5, 1000 samples per identity, worst " + sci(t.worst()) : t.failure()};
}

Verdict partition_oracle() {
  for (int s = 1; s <= 20; ++s) {
    std::vector<std::vector<int>> got;
    for (const auto& cp : partitions::enumerate_complete(s)) got.push_back(cp.parts());
    if (got != oracle::complete_partitions(s)) return {false, "mismatch at s = " + std::to_string(s)};
  }
  std::vector<std::size_t> counts;
  std::vector<std::size_t> expected;
  for (int s = 1; s <= 6; ++s) {
    counts.push_back(partitions::enumerate_complete(s).size());
    expected.push_back(oracle::complete_partitions(s).size());
  }
  const std::vector<std::size_t> sequence{1, 1, 2, 2, 4, 5};
  std::string shown;
  for (auto c : counts) shown += (shown.empty() ? "" : ",") + std::to_string(c);
  return {counts == expected && counts == sequence, "s <= 20 equal; counts s=1..6: " + shown};
}

Verdict polarization() {
  Rng rng(1010);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int s = rng.between(1, 5);
    const std::size_t n = pick(rng, 1, 4);
    const auto p = poly::random_full_polynomial(rng, s, n, pick(rng, 1, 3));
    std::vector<LatticeVector> fs;
    for (int j = 0; j < s; ++j) {
      std::vector<double> x(n);
      for (auto& v : x) v = rng.uniform(-3.0, 3.0);
      fs.emplace_back(std::move(x));
    }
    const auto polar = poly::polarize_blackbox([&](const LatticeVector& f) { return p.eval(f); }, s, fs);
    worst = std::max(worst, verify::residual(polar, p.eval_multilinear(fs)));
  }
  return {worst <= 1e-8, "1000 polynomials, worst " + sci(worst)};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "harmonic mean order bounds", 10, schur},
      {2, "harmonic mean vanishes on disjoint pairs", 2, ortho},
      {3, "closed form, lagrange and grid routes", 60, two_routes},
      {4, "weighted geometric splitting lemma", 10, geos},
      {5, "harmonic mean identity, diagonal polynomials", 30, hm_forward},
      {6, "weighted geometric identity, diagonal polynomials", 60, wgm_forward},
      {7, "converse falsification", 60, converse},
      {8, "root mean power and geometric mean identities", 10, baseline},
      {9, "complete partitions vs brute force", 30, partition_oracle},
      {10, "black-box polarization", 30, polarization},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool ok = v.ok && in_time;
    failed += !ok;
    std::printf("%s  %2d  %-50s %7.2fs / %3.0fs  %s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.limit_seconds, v.detail.c_str(), in_time ? "" : " [over time limit]");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
