#include "latmeans/generators.hpp"

#include "latmeans/errors.hpp"

namespace latmeans::gen {

using lattice::LatticeVector;
using lattice::PositiveVector;

PositiveVector positive(Rng& rng, std::size_t n) {
  std::vector<double> x(n);
  for (auto& v : x) v = rng.log_uniform(kLow, kHigh);
  return PositiveVector(std::move(x));
}

std::vector<PositiveVector> positive_tuple(Rng& rng, std::size_t count, std::size_t n) {
  std::vector<PositiveVector> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(positive(rng, n));
  return out;
}

std::vector<bool> bipartition(Rng& rng, std::size_t n) {
  std::vector<bool> side(n);
  if (n == 1) {
    side[0] = rng.coin();
    return side;
  }
  // Fix one coordinate on each side, randomize the rest.
  const std::size_t a = rng.below(n);
  std::size_t b = rng.below(n - 1);
  if (b >= a) ++b;
  for (std::size_t i = 0; i < n; ++i) side[i] = rng.coin();
  side[a] = true;
  side[b] = false;
  return side;
}

std::pair<PositiveVector, PositiveVector> disjoint_pair(Rng& rng, const std::vector<bool>& side) {
  std::vector<double> f(side.size(), 0.0);
  std::vector<double> g(side.size(), 0.0);
  for (std::size_t i = 0; i < side.size(); ++i) {
    (side[i] ? f[i] : g[i]) = rng.log_uniform(kLow, kHigh);
  }
  return {PositiveVector(std::move(f)), PositiveVector(std::move(g))};
}

std::pair<PositiveVector, PositiveVector> disjoint_pair(Rng& rng, std::size_t n) {
  return disjoint_pair(rng, bipartition(rng, n));
}

std::pair<LatticeVector, LatticeVector> signed_disjoint_pair(Rng& rng, std::size_t n) {
  const auto side = bipartition(rng, n);
  std::vector<double> f(n, 0.0);
  std::vector<double> g(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = rng.log_uniform(kLow, kHigh) * (rng.coin() ? 1.0 : -1.0);
    (side[i] ? f[i] : g[i]) = v;
  }
  return {LatticeVector(std::move(f)), LatticeVector(std::move(g))};
}

std::vector<PositiveVector> tuple_with_disjoint_pair(Rng& rng, std::size_t count, std::size_t n) {
  if (count < 2) throw InvalidArgument("a disjoint pair needs at least two slots");
  std::vector<PositiveVector> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<double> x(n);
    for (auto& v : x) v = rng.below(4) == 0 ? 0.0 : rng.log_uniform(kLow, kHigh);
    out.emplace_back(std::move(x));
  }
  const std::size_t i = rng.below(count);
  std::size_t j = rng.below(count - 1);
  if (j >= i) ++j;
  auto [f, g] = disjoint_pair(rng, n);
  out[i] = std::move(f);
  out[j] = std::move(g);
  return out;
}

lattice::PositiveRationalVector small_rational(Rng& rng, std::size_t n, int max_num, int max_den,
                                               bool allow_zero) {
  std::vector<Rational> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int num = rng.between(allow_zero ? 0 : 1, max_num);
    const int den = rng.between(1, max_den);
    x.emplace_back(num, den);
  }
  return lattice::PositiveRationalVector(std::move(x));
}

PositiveVector to_double(const lattice::PositiveRationalVector& v) {
  std::vector<double> x;
  x.reserve(v.size());
  for (const auto& r : v.entries()) x.push_back(latmeans::to_double(r));
  return PositiveVector(std::move(x));
}

}  // namespace latmeans::gen
