#pragma once

// Root mean power, geometric, harmonic and weighted geometric means on the
// positive cone of R^n. The harmonic and weighted geometric means are also
// available through their infimum-of-tangents representations, evaluated
// either at the Lagrange stationary point or by deterministic grid search.

#include "latmeans/errors.hpp"
#include "latmeans/lattice.hpp"
#include "latmeans/partitions.hpp"

#include <optional>
#include <span>
#include <string_view>

namespace latmeans::means {

using lattice::BasicPositiveVector;
using lattice::PositiveVector;
using partitions::WeightVector;

enum class Method { closed_form, lagrange, grid };

std::string_view to_string(Method m);
Method parse_method(std::string_view text);

enum class InfimumKind { harmonic, weighted_geometric };

/// Description of one infimum representation. For the harmonic kind `arity`
/// is s; for the weighted geometric kind `weights` holds (r_k / s).
/// `resolution` is the grid refinement m.
struct InfimumSpec {
  InfimumKind kind;
  int arity = 0;
  std::optional<WeightVector> weights;
  int resolution = 64;

  static InfimumSpec harmonic(int s, int resolution = 64);
  static InfimumSpec weighted_geometric(WeightVector w, int resolution = 64);
};

struct MeanResult {
  PositiveVector value;
  Method method;
  /// Upper bound on (grid value - infimum), worst coordinate. Grid only.
  std::optional<double> residual_bound;
};

/// Total number of grid points (summed over coordinates) above which the
/// grid evaluators refuse to run.
inline constexpr double kMaxGridPoints = 6.0e7;

// Scalar kernels. Arguments are nonnegative.

double root_mean_power_scalar(int s, std::span<const double> x);
double geometric_mean_scalar(std::span<const double> x);
double weighted_geometric_mean_scalar(std::span<const double> weights, std::span<const double> x);
double arithmetic_mean_scalar(std::span<const double> x);

/// s / sum(1/x_k) when every x_k != 0, else 0.
template <class T>
T harmonic_mean_scalar(std::span<const T> x) {
  T reciprocal_sum(0);
  for (const auto& v : x) {
    if (v == T(0)) return T(0);
    reciprocal_sum += T(1) / v;
  }
  return T(static_cast<int>(x.size())) / reciprocal_sum;
}

// Lattice means, coordinatewise.

/// (sum_k f_k^s)^(1/s) for r >= 1 arguments. Throws InvalidArgument for s < 1.
PositiveVector root_mean_power(int s, std::span<const PositiveVector> fs);

/// (prod_k f_k)^(1/s) with s = number of arguments.
PositiveVector geometric_mean(std::span<const PositiveVector> fs);

/// Harmonic mean of s = fs.size() arguments; exactly 0 on every coordinate
/// where some argument vanishes. Instantiated for double and Rational.
template <class T>
BasicPositiveVector<T> harmonic_mean(std::span<const BasicPositiveVector<T>> fs) {
  return lattice::apply_homogeneous<T>(
      [](std::span<const T> column) { return harmonic_mean_scalar<T>(column); }, fs);
}

/// prod_k f_k^(t_k). Throws DimensionMismatch when |w| != number of arguments.
PositiveVector weighted_geometric_mean(const WeightVector& w, std::span<const PositiveVector> fs);

PositiveVector arithmetic_mean(std::span<const PositiveVector> fs);

/// s * inf { sum_k a_k f_k : 0 <= a_k <= 1, sum_k sqrt(a_k) = 1 }.
/// With u_k = sqrt(a_k) this is s * min over the standard simplex of
/// sum_k u_k^2 x_k, a convex problem whose interior stationary point is
/// u_k proportional to 1/x_k. The grid method scans every point c/m of the
/// simplex with integer compositions c of m.
/// Throws InvalidArgument for a non-harmonic spec or method closed_form.
MeanResult harmonic_mean_via_infimum(std::span<const PositiveVector> fs, const InfimumSpec& spec,
                                     Method method);

/// (1/s) * inf { sum_k r_k theta_k f_k : theta_k > 0, prod_k theta_k^(r_k/s) = 1 }.
/// The Lagrange route uses theta_k = lambda / (s x_k) with
/// lambda = s * prod_k x_k^(r_k/s). The grid route scans log(theta_k) on the
/// lattice Z/m over a data-dependent box for every argument but the one with
/// the largest weight, which is solved from the constraint. Coordinates with a
/// vanishing argument return 0 (the infimum there is not attained).
MeanResult wgm_via_infimum(const WeightVector& w, std::span<const PositiveVector> fs,
                           const InfimumSpec& spec, Method method);

}  // namespace latmeans::means
