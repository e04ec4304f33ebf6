#pragma once

// Random inputs for identity checks. Entries are log-uniform in [1e-3, 1e3]
// unless stated otherwise.

#include "latmeans/lattice.hpp"
#include "latmeans/rng.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace latmeans::gen {

inline constexpr double kLow = 1e-3;
inline constexpr double kHigh = 1e3;

lattice::PositiveVector positive(Rng& rng, std::size_t n);

std::vector<lattice::PositiveVector> positive_tuple(Rng& rng, std::size_t count, std::size_t n);

/// Each coordinate goes to exactly one side; both sides nonempty when n >= 2.
std::vector<bool> bipartition(Rng& rng, std::size_t n);

/// f supported on `side`, g on its complement, positive log-uniform entries.
std::pair<lattice::PositiveVector, lattice::PositiveVector> disjoint_pair(
    Rng& rng, const std::vector<bool>& side);

std::pair<lattice::PositiveVector, lattice::PositiveVector> disjoint_pair(Rng& rng, std::size_t n);

/// Like disjoint_pair but entries carry random signs.
std::pair<lattice::LatticeVector, lattice::LatticeVector> signed_disjoint_pair(Rng& rng,
                                                                               std::size_t n);

/// count >= 2 vectors, two of which (at random positions) are disjoint; the
/// others are positive and may contain zeros.
std::vector<lattice::PositiveVector> tuple_with_disjoint_pair(Rng& rng, std::size_t count,
                                                              std::size_t n);

/// Vector of `num`/`den` entries with small integers, for exact-rational cases.
lattice::PositiveRationalVector small_rational(Rng& rng, std::size_t n, int max_num = 9,
                                               int max_den = 6, bool allow_zero = false);

lattice::PositiveVector to_double(const lattice::PositiveRationalVector& v);

}  // namespace latmeans::gen
