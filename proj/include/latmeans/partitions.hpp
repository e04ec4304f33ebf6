#pragma once

// Complete partitions of a positive integer s: tuples of positive parts
// summing to s such that every q in {1, ..., s} is the sum of some sub-tuple.

#include "latmeans/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace latmeans::partitions {

inline constexpr int kDefaultEnumerationBound = 30;

/// True iff every part is >= 1, the parts sum to s, and every q in 1..s is a
/// subset sum. Parts may come in any order. Throws InvalidArgument for s < 1,
/// empty parts, or a non-positive part.
bool is_complete(std::span<const int> parts, int s);

class CompletePartition {
 public:
  /// Validates completeness; throws InvalidArgument otherwise. The caller's
  /// part order is preserved (it fixes which argument carries which weight).
  CompletePartition(std::vector<int> parts, int s);

  const std::vector<int>& parts() const { return parts_; }
  int target() const { return target_; }
  std::size_t size() const { return parts_.size(); }

  /// Nonincreasing copy of the parts.
  std::vector<int> canonical() const;

  friend bool operator==(const CompletePartition&, const CompletePartition&) = default;

 private:
  std::vector<int> parts_;
  int target_;
};

/// All complete partitions of s as nonincreasing tuples in ascending
/// lexicographic order. Throws BoundExceeded when s > bound.
std::vector<CompletePartition> enumerate_complete(int s, int bound = kDefaultEnumerationBound);

/// Positive rational weights summing to exactly 1.
class WeightVector {
 public:
  /// Throws InvalidArgument unless every weight is in (0, 1] and they sum to 1.
  /// A weight of exactly 1 only occurs for the one-part tuple.
  explicit WeightVector(std::vector<Rational> weights);

  /// Weights r_k / s for positive integer parts with s = sum of parts.
  static WeightVector from_parts(std::span<const int> parts);

  const std::vector<Rational>& exact() const { return weights_; }
  std::vector<double> as_double() const;
  std::size_t size() const { return weights_.size(); }

 private:
  std::vector<Rational> weights_;
};

WeightVector weights(const CompletePartition& cp);

/// Indices of a sub-tuple of parts summing to q, or nullopt when none exists. Used to arrange the
/// disjoint-pair argument families in the falsification search.
std::optional<std::vector<std::size_t>> subset_with_sum(std::span<const int> parts, int q);

}  // namespace latmeans::partitions
