#include "latmeans/partitions.hpp"

#include "latmeans/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace latmeans::partitions {

namespace {

void require_valid_parts(std::span<const int> parts) {
  if (parts.empty()) throw InvalidArgument("partition must have at least one part");
  for (int r : parts) {
    if (r < 1) throw InvalidArgument("partition parts must be positive, got " + std::to_string(r));
  }
}

long long total(std::span<const int> parts) {
  return std::accumulate(parts.begin(), parts.end(), 0LL);
}

}  // namespace

bool is_complete(std::span<const int> parts, int s) {
  if (s < 1) throw InvalidArgument("partition target must be >= 1, got " + std::to_string(s));
  require_valid_parts(parts);
  if (total(parts) != s) return false;

  // reachable[q]: q is a subset sum of the parts seen so far.
  std::vector<char> reachable(static_cast<std::size_t>(s) + 1, 0);
  reachable[0] = 1;
  for (int r : parts) {
    for (int q = s; q >= r; --q) {
      if (reachable[q - r]) reachable[q] = 1;
    }
  }
  return std::all_of(reachable.begin() + 1, reachable.end(), [](char c) { return c != 0; });
}

CompletePartition::CompletePartition(std::vector<int> parts, int s)
    : parts_(std::move(parts)), target_(s) {
  if (!is_complete(parts_, s)) {
    throw InvalidArgument("parts do not form a complete partition of " + std::to_string(s));
  }
}

std::vector<int> CompletePartition::canonical() const {
  std::vector<int> out = parts_;
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<CompletePartition> enumerate_complete(int s, int bound) {
  if (s < 1) throw InvalidArgument("partition target must be >= 1, got " + std::to_string(s));
  if (s > bound) {
    throw BoundExceeded("s = " + std::to_string(s) + " exceeds enumeration bound " +
                        std::to_string(bound));
  }

  // A nondecreasing tuple is complete iff each part is at most one more than
  // the sum of the parts before it. Grow tuples under that rule.
  std::vector<std::vector<int>> found;
  std::vector<int> prefix;
  std::function<void(int, int)> grow = [&](int sum, int last) {
    if (sum == s) {
      found.emplace_back(prefix.rbegin(), prefix.rend());
      return;
    }
    const int hi = std::min(sum + 1, s - sum);
    for (int r = std::max(last, 1); r <= hi; ++r) {
      prefix.push_back(r);
      grow(sum + r, r);
      prefix.pop_back();
    }
  };
  grow(0, 1);

  std::sort(found.begin(), found.end());
  std::vector<CompletePartition> out;
  out.reserve(found.size());
  for (auto& parts : found) out.emplace_back(std::move(parts), s);
  return out;
}

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidArgument("weight vector must be nonempty");
  Rational sum = 0;
  for (const auto& t : weights_) {
    if (t <= 0 || t > 1) throw InvalidArgument("weights must lie in (0, 1]");
    sum += t;
  }
  if (sum != 1) throw InvalidArgument("weights must sum to exactly 1, got " + format_rational(sum));
}

WeightVector WeightVector::from_parts(std::span<const int> parts) {
  require_valid_parts(parts);
  const long long s = total(parts);
  std::vector<Rational> w;
  w.reserve(parts.size());
  for (int r : parts) w.emplace_back(r, s);
  return WeightVector(std::move(w));
}

std::vector<double> WeightVector::as_double() const {
  std::vector<double> out;
  out.reserve(weights_.size());
  for (const auto& t : weights_) out.push_back(to_double(t));
  return out;
}

WeightVector weights(const CompletePartition& cp) { return WeightVector::from_parts(cp.parts()); }

std::optional<std::vector<std::size_t>> subset_with_sum(std::span<const int> parts, int q) {
  require_valid_parts(parts);
  if (q < 0) return std::nullopt;
  const std::size_t p = parts.size();
  // via[k][v]: v reachable using the first k parts.
  std::vector<std::vector<char>> via(p + 1, std::vector<char>(static_cast<std::size_t>(q) + 1, 0));
  via[0][0] = 1;
  for (std::size_t k = 0; k < p; ++k) {
    for (int v = 0; v <= q; ++v) {
      if (!via[k][v]) continue;
      via[k + 1][v] = 1;
      if (v + parts[k] <= q) via[k + 1][v + parts[k]] = 1;
    }
  }
  if (!via[p][q]) return std::nullopt;
  std::vector<std::size_t> chosen;
  int v = q;
  for (std::size_t k = p; k > 0; --k) {
    if (via[k - 1][v]) continue;
    chosen.push_back(k - 1);
    v -= parts[k - 1];
  }
  std::reverse(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace latmeans::partitions
