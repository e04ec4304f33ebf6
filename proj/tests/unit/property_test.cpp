#include "doctest.h"
#include "latmeans/generators.hpp"
#include "latmeans/means.hpp"
#include "latmeans/polynomial.hpp"
#include "latmeans/theorems.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

using namespace latmeans;
using lattice::LatticeVector;
using lattice::PositiveVector;
using poly::HomogeneousPolynomial;
using poly::MultiIndex;
using testutil::rel_diff;

namespace {

std::vector<MultiIndex> all_keys(int s, std::size_t n) {
  std::vector<MultiIndex> out;
  MultiIndex cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == static_cast<std::size_t>(s)) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<LatticeVector> signed_tuple(Rng& rng, std::size_t count, std::size_t n) {
  std::vector<LatticeVector> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(testutil::signed_vector(rng, n));
  return out;
}

}  // namespace

TEST_CASE("lattice laws hold exactly") {
  Rng rng(101);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.between(1, 6));
    const auto f = testutil::integer_vector(rng, n);
    const auto g = testutil::integer_vector(rng, n);
    const auto h = testutil::integer_vector(rng, n);
    using lattice::inf;
    using lattice::sup;
    CHECK(sup(f, g) == sup(g, f));
    CHECK(inf(f, g) == inf(g, f));
    CHECK(sup(sup(f, g), h) == sup(f, sup(g, h)));
    CHECK(inf(inf(f, g), h) == inf(f, inf(g, h)));
    CHECK(sup(f, inf(f, g)) == f);
    CHECK(inf(f, sup(f, g)) == f);
    CHECK(lattice::abs(f).vec() == sup(f, -f));
    CHECK(lattice::is_disjoint(f, g) == lattice::is_disjoint(g, f));
    if (lattice::is_disjoint(f, g)) {
      CHECK(lattice::is_disjoint(lattice::abs(f).vec(), lattice::abs(g).vec()));
    }
  }
}

TEST_CASE("apply_homogeneous commutes with positive scaling") {
  Rng rng(102);
  auto phi = [](std::span<const double> c) {
    return std::sqrt(c[0] * c[1]) + *std::max_element(c.begin(), c.end());
  };
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.between(1, 5));
    const auto fs = gen::positive_tuple(rng, 3, n);
    const double lambda = rng.log_uniform(1e-2, 1e2);
    std::vector<PositiveVector> scaled;
    for (const auto& f : fs) scaled.emplace_back(lambda * f.vec());
    const auto a = lattice::apply_homogeneous<double>(phi, std::span<const PositiveVector>(scaled));
    const auto b = lattice::apply_homogeneous<double>(phi, std::span<const PositiveVector>(fs));
    CHECK(rel_diff(a.vec().to_vector(), (lambda * b.vec()).to_vector()) <= 1e-14);
  }
}

TEST_CASE("means are positively homogeneous") {
  Rng rng(103);
  const auto w = partitions::WeightVector::from_parts(std::vector<int>{2, 1, 1});
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.between(1, 5));
    const auto fs = gen::positive_tuple(rng, 3, n);
    const double lambda = rng.log_uniform(1e-3, 1e3);
    std::vector<PositiveVector> scaled;
    for (const auto& f : fs) scaled.emplace_back(lambda * f.vec());
    auto check = [&](const std::function<PositiveVector(std::span<const PositiveVector>)>& m) {
      const auto a = m(scaled).vec();
      const auto b = lambda * m(fs).vec();
      for (std::size_t i = 0; i < n; ++i) CHECK(std::fabs(a[i] - b[i]) <= 8e-16 * 4 * std::fabs(b[i]));
    };
    check([](auto xs) { return means::root_mean_power(3, xs); });
    check([](auto xs) { return means::geometric_mean(xs); });
    check([](auto xs) { return means::harmonic_mean<double>(xs); });
    check([&](auto xs) { return means::weighted_geometric_mean(w, xs); });
  }
}

TEST_CASE("harmonic <= geometric <= arithmetic") {
  Rng rng(104);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t s = static_cast<std::size_t>(rng.between(1, 6));
    std::vector<double> x(s);
    for (auto& v : x) v = rng.log_uniform(gen::kLow, gen::kHigh);
    const double h = means::harmonic_mean_scalar<double>(x);
    const double g = means::geometric_mean_scalar(x);
    const double a = means::arithmetic_mean_scalar(x);
    CHECK(h <= g * (1 + 1e-14));
    CHECK(g <= a * (1 + 1e-14));
  }
}

TEST_CASE("closed form and lagrange routes agree") {
  Rng rng(105);
  for (int t = 0; t < 500; ++t) {
    const int s = rng.between(1, 6);
    const std::size_t n = static_cast<std::size_t>(rng.between(1, 4));
    const auto fs = gen::positive_tuple(rng, static_cast<std::size_t>(s), n);
    const auto closed = means::harmonic_mean<double>(fs);
    const auto lag = means::harmonic_mean_via_infimum(fs, means::InfimumSpec::harmonic(s),
                                                      means::Method::lagrange);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::fabs(lag.value[i] - closed[i]) <= 1e-9 * closed[i]);
    }

    const auto cps = partitions::enumerate_complete(s);
    const auto& cp = cps[rng.below(cps.size())];
    const auto w = partitions::weights(cp);
    const auto gs = gen::positive_tuple(rng, cp.size(), n);
    const auto wclosed = means::weighted_geometric_mean(w, gs);
    const auto wlag = means::wgm_via_infimum(w, gs, means::InfimumSpec::weighted_geometric(w),
                                             means::Method::lagrange);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::fabs(wlag.value[i] - wclosed[i]) <= 1e-9 * wclosed[i]);
    }
  }
}

TEST_CASE("grid routes approach the closed form from above") {
  Rng rng(106);
  for (int t = 0; t < 30; ++t) {
    const int s = rng.between(2, 3);
    const auto fs = gen::positive_tuple(rng, static_cast<std::size_t>(s), 2);
    const auto closed = means::harmonic_mean<double>(fs);
    std::vector<double> prev(2, INFINITY);
    for (int m : {8, 16, 32, 64}) {
      const auto g = means::harmonic_mean_via_infimum(fs, means::InfimumSpec::harmonic(s, m),
                                                      means::Method::grid);
      for (std::size_t i = 0; i < 2; ++i) {
        CHECK(g.value[i] >= closed[i] * (1 - 1e-12));
        CHECK(g.value[i] <= prev[i]);
        CHECK(g.value[i] - closed[i] <= *g.residual_bound * (1 + 1e-9) + 1e-12);
        prev[i] = g.value[i];
      }
    }

    const auto w = partitions::WeightVector::from_parts(std::vector<int>(static_cast<std::size_t>(s), 1));
    const auto wclosed = means::weighted_geometric_mean(w, fs);
    std::vector<double> wprev(2, INFINITY);
    for (int m : {4, 8, 16}) {
      const auto g = means::wgm_via_infimum(w, fs, means::InfimumSpec::weighted_geometric(w, m),
                                            means::Method::grid);
      for (std::size_t i = 0; i < 2; ++i) {
        CHECK(g.value[i] >= wclosed[i] * (1 - 1e-12));
        CHECK(g.value[i] <= wprev[i] * (1 + 1e-15));
        CHECK(g.value[i] - wclosed[i] <= *g.residual_bound * (1 + 1e-9) + 1e-12);
        wprev[i] = g.value[i];
      }
    }
  }
}

TEST_CASE("order bounds and disjoint arguments") {
  Rng rng(107);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t s = static_cast<std::size_t>(rng.between(1, 6));
    const std::size_t n = static_cast<std::size_t>(rng.between(1, 8));
    CHECK(verify::check_schur_bounds<double>(gen::positive_tuple(rng, s, n), 1).passed());
    if (s >= 2 && n >= 2) {
      const auto fs = gen::tuple_with_disjoint_pair(rng, s, n);
      CHECK(verify::check_eta_disjoint<double>(fs).passed());
      CHECK(means::harmonic_mean<double>(fs).vec().is_zero());
    }
  }
}

TEST_CASE("polynomial homogeneity, restriction and symmetry") {
  Rng rng(108);
  for (int t = 0; t < 200; ++t) {
    const int s = rng.between(1, 5);
    const std::size_t n = static_cast<std::size_t>(rng.between(1, 4));
    const std::size_t d = static_cast<std::size_t>(rng.between(1, 3));
    const auto p = poly::random_full_polynomial(rng, s, n, d);
    const auto f = testutil::signed_vector(rng, n);
    const double lambda = rng.uniform(-2.0, 2.0);
    auto expected = p.eval(f);
    for (auto& v : expected) v *= std::pow(lambda, s);
    CHECK(rel_diff(p.eval(lambda * f), expected) <= 1e-10);

    const std::vector<LatticeVector> same(static_cast<std::size_t>(s), f);
    CHECK(rel_diff(p.eval_multilinear(same), p.eval(f)) <= 1e-12);

    auto fs = signed_tuple(rng, static_cast<std::size_t>(s), n);
    const auto before = p.eval_multilinear(fs);
    for (std::size_t k = fs.size(); k > 1; --k) std::swap(fs[k - 1], fs[rng.below(k)]);
    CHECK(rel_diff(p.eval_multilinear(fs), before) <= 1e-12);
  }
}

TEST_CASE("black-box polarization recovers the multilinear map") {
  Rng rng(109);
  for (int t = 0; t < 200; ++t) {
    const int s = rng.between(1, 5);
    const std::size_t n = static_cast<std::size_t>(rng.between(1, 4));
    const auto p = poly::random_full_polynomial(rng, s, n, 2);
    const auto fs = signed_tuple(rng, static_cast<std::size_t>(s), n);
    const auto polar =
        poly::polarize_blackbox([&](const LatticeVector& f) { return p.eval(f); }, s, fs);
    CHECK(rel_diff(polar, p.eval_multilinear(fs)) <= 1e-8);
  }
}

TEST_CASE("exhaustive orthogonal additivity iff no mixed key") {
  for (int s = 1; s <= 3; ++s) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const auto& key : all_keys(s, n)) {
        const HomogeneousPolynomial p(s, n, 1, {poly::Term<double>{key, {1.5}}});
        CAPTURE(s);
        CAPTURE(n);
        CHECK(poly::check_positive_oa_exhaustive(p, 1).passed() == !poly::is_mixed(key));
      }
    }
  }
  Rng rng(110);
  for (int t = 0; t < 200; ++t) {
    const int s = rng.between(2, 4);
    const std::size_t n = static_cast<std::size_t>(rng.between(2, 6));
    const auto keys = all_keys(s, n);
    std::vector<poly::Term<double>> terms;
    for (const auto& key : keys) {
      if (rng.below(4) == 0) terms.push_back({key, {rng.uniform(0.5, 2.0) * (rng.coin() ? 1 : -1)}});
    }
    const HomogeneousPolynomial p(s, n, 1, terms);
    CHECK(poly::check_positive_oa_exhaustive(p, rng.next()).passed() == p.is_diagonal());
  }
}

TEST_CASE("falsification finds witnesses for non-additive polynomials") {
  Rng rng(111);
  for (int t = 0; t < 40; ++t) {
    const int s = rng.between(2, 4);
    const std::size_t n = static_cast<std::size_t>(rng.between(2, 5));
    const auto p = poly::random_polynomial(rng, s, n, static_cast<std::size_t>(rng.between(1, 2)),
                                           rng.uniform(0.05, 1.0));
    verify::FalsifyOptions opts;
    opts.seed = rng.next();
    CHECK(verify::falsify(p, verify::ClaimId::HM, std::nullopt, opts).passed());
    for (const auto& cp : partitions::enumerate_complete(s)) {
      CHECK(verify::falsify(p, verify::ClaimId::WGM, cp, opts).passed());
    }
  }
}

TEST_CASE("weighted identity with unit parts follows the geometric identity") {
  Rng rng(112);
  for (int t = 0; t < 100; ++t) {
    const int s = rng.between(2, 5);
    const std::size_t n = static_cast<std::size_t>(rng.between(1, 5));
    const auto p = poly::random_diagonal(rng, s, n, 2);
    const partitions::CompletePartition ones(std::vector<int>(static_cast<std::size_t>(s), 1), s);
    const auto fs = gen::positive_tuple(rng, static_cast<std::size_t>(s), n);
    const auto gm = verify::check_gm(p, fs);
    if (gm.passed()) CHECK(verify::check_wgm_identity(p, ones, fs).passed());
  }
}

TEST_CASE("generators produce what they promise") {
  Rng rng(113);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.between(2, 8));
    const auto side = gen::bipartition(rng, n);
    CHECK(std::count(side.begin(), side.end(), true) > 0);
    CHECK(std::count(side.begin(), side.end(), false) > 0);
    const auto [f, g] = gen::disjoint_pair(rng, n);
    CHECK(lattice::is_disjoint(f.vec(), g.vec()));
    const auto [sf, sg] = gen::signed_disjoint_pair(rng, n);
    CHECK(lattice::is_disjoint(sf, sg));
    const std::size_t count = static_cast<std::size_t>(rng.between(2, 6));
    const auto tuple = gen::tuple_with_disjoint_pair(rng, count, n);
    bool found = false;
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = a + 1; b < count; ++b) found |= lattice::is_disjoint(tuple[a].vec(), tuple[b].vec());
    }
    CHECK(found);
    const auto pos = gen::positive(rng, n);
    for (double x : pos.entries()) {
      CHECK(x >= gen::kLow);
      CHECK(x <= gen::kHigh);
    }
  }
}

TEST_CASE("same seed, same stream") {
  Rng a(99);
  Rng b(99);
  for (int t = 0; t < 100; ++t) CHECK(a.next() == b.next());
  Rng c(99);
  const auto x = gen::positive_tuple(c, 3, 4);
  Rng d(99);
  CHECK(gen::positive_tuple(d, 3, 4) == x);
}
