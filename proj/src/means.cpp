#include "latmeans/means.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace latmeans::means {

namespace {

void require_nonempty(std::span<const PositiveVector> fs) {
  if (fs.empty()) throw InvalidArgument("mean of an empty argument list");
}

bool has_zero(std::span<const double> x) {
  return std::any_of(x.begin(), x.end(), [](double v) { return v == 0.0; });
}

std::vector<double> column(std::span<const PositiveVector> fs, std::size_t i) {
  std::vector<double> out(fs.size());
  for (std::size_t k = 0; k < fs.size(); ++k) out[k] = fs[k][i];
  return out;
}

double binomial(int n, int k) {
  double out = 1.0;
  for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

// Minimum of sum_k x_k c_k^2 over compositions c of m into x.size() parts.
// Returns the unscaled minimum (divide by m^2 for the simplex value).
double min_over_compositions(std::span<const double> x, int m) {
  const std::size_t s = x.size();
  double best = INFINITY;
  // Depth-first over the first s-1 parts; the last part takes the remainder.
  std::vector<int> c(s, 0);
  std::vector<double> partial(s + 1, 0.0);
  auto visit = [&](auto&& self, std::size_t k, int remaining) -> void {
    if (k + 1 == s) {
      const double value = partial[k] + x[k] * double(remaining) * double(remaining);
      if (value < best) best = value;
      return;
    }
    for (int ck = 0; ck <= remaining; ++ck) {
      partial[k + 1] = partial[k] + x[k] * double(ck) * double(ck);
      if (partial[k + 1] >= best) break;  // nonnegative terms, monotone in ck
      self(self, k + 1, remaining - ck);
    }
  };
  visit(visit, 0, m);
  return best;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form:
      return "closed_form";
    case Method::lagrange:
      return "lagrange";
    case Method::grid:
      return "grid";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "closed" || text == "closed_form") return Method::closed_form;
  if (text == "lagrange") return Method::lagrange;
  if (text == "grid") return Method::grid;
  throw InvalidArgument("unknown method \"" + std::string(text) + "\"");
}

InfimumSpec InfimumSpec::harmonic(int s, int resolution) {
  if (s < 1) throw InvalidArgument("harmonic arity must be >= 1");
  if (resolution < 1) throw InvalidArgument("grid resolution must be >= 1");
  return InfimumSpec{InfimumKind::harmonic, s, std::nullopt, resolution};
}

InfimumSpec InfimumSpec::weighted_geometric(WeightVector w, int resolution) {
  if (resolution < 1) throw InvalidArgument("grid resolution must be >= 1");
  const int p = static_cast<int>(w.size());
  return InfimumSpec{InfimumKind::weighted_geometric, p, std::move(w), resolution};
}

double root_mean_power_scalar(int s, std::span<const double> x) {
  if (s < 1) throw InvalidArgument("root mean power needs s >= 1, got " + std::to_string(s));
  const double scale = *std::max_element(x.begin(), x.end());
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double v : x) sum += std::pow(v / scale, s);
  return scale * std::pow(sum, 1.0 / s);
}

double geometric_mean_scalar(std::span<const double> x) {
  if (has_zero(x)) return 0.0;
  double product = 1.0;
  for (double v : x) product *= v;
  if (std::isnormal(product)) return std::pow(product, 1.0 / double(x.size()));
  double log_sum = 0.0;
  for (double v : x) log_sum += std::log(v);
  return std::exp(log_sum / double(x.size()));
}

double weighted_geometric_mean_scalar(std::span<const double> weights, std::span<const double> x) {
  if (weights.size() != x.size()) {
    throw DimensionMismatch("weight count " + std::to_string(weights.size()) +
                            " does not match argument count " + std::to_string(x.size()));
  }
  double out = 1.0;
  for (std::size_t k = 0; k < x.size(); ++k) out *= std::pow(x[k], weights[k]);
  return out;
}

double arithmetic_mean_scalar(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / double(x.size());
}

PositiveVector root_mean_power(int s, std::span<const PositiveVector> fs) {
  require_nonempty(fs);
  if (s < 1) throw InvalidArgument("root mean power needs s >= 1, got " + std::to_string(s));
  return lattice::apply_homogeneous<double>(
      [s](std::span<const double> x) { return root_mean_power_scalar(s, x); }, fs);
}

PositiveVector geometric_mean(std::span<const PositiveVector> fs) {
  require_nonempty(fs);
  return lattice::apply_homogeneous<double>(
      [](std::span<const double> x) { return geometric_mean_scalar(x); }, fs);
}

PositiveVector weighted_geometric_mean(const WeightVector& w, std::span<const PositiveVector> fs) {
  require_nonempty(fs);
  const auto t = w.as_double();
  if (t.size() != fs.size()) {
    throw DimensionMismatch("weight count " + std::to_string(t.size()) +
                            " does not match argument count " + std::to_string(fs.size()));
  }
  return lattice::apply_homogeneous<double>(
      [&t](std::span<const double> x) { return weighted_geometric_mean_scalar(t, x); }, fs);
}

PositiveVector arithmetic_mean(std::span<const PositiveVector> fs) {
  require_nonempty(fs);
  return lattice::apply_homogeneous<double>(
      [](std::span<const double> x) { return arithmetic_mean_scalar(x); }, fs);
}

MeanResult harmonic_mean_via_infimum(std::span<const PositiveVector> fs, const InfimumSpec& spec,
                                     Method method) {
  if (spec.kind != InfimumKind::harmonic) {
    throw InvalidArgument("harmonic infimum needs a harmonic spec");
  }
  if (spec.resolution < 1) throw InvalidArgument("grid resolution must be >= 1");
  require_nonempty(fs);
  if (static_cast<int>(fs.size()) != spec.arity) {
    throw DimensionMismatch("harmonic spec has arity " + std::to_string(spec.arity) + " but got " +
                            std::to_string(fs.size()) + " arguments");
  }
  const std::size_t n = lattice::common_dimension(fs);
  const int s = spec.arity;
  const int m = spec.resolution;
  std::vector<double> out(n, 0.0);

  switch (method) {
    case Method::lagrange: {
      for (std::size_t i = 0; i < n; ++i) {
        const auto x = column(fs, i);
        if (has_zero(x)) continue;  // a_k = 1 at a vanishing argument attains 0
        double z = 0.0;
        for (double v : x) z += 1.0 / v;
        double objective = 0.0;
        for (double v : x) {
          const double u = (1.0 / v) / z;
          objective += u * u * v;
        }
        out[i] = s * objective;
      }
      return MeanResult{PositiveVector(std::move(out)), method, std::nullopt};
    }
    case Method::grid: {
      const double points = binomial(m + s - 1, s - 1) * double(n);
      if (points > kMaxGridPoints) {
        throw BoundExceeded("harmonic grid would scan " + std::to_string(points) +
                            " points; lower the resolution or arity");
      }
      double bound = 0.0;
      const double m2 = double(m) * double(m);
      for (std::size_t i = 0; i < n; ++i) {
        const auto x = column(fs, i);
        out[i] = s * (min_over_compositions(x, m) / m2);
        // Rounding the stationary point to the lattice moves each u_k by less
        // than 1/m with zero net change, and the objective is quadratic with
        // vanishing tangential gradient there, so the excess is below
        // sum_k x_k / m^2.
        if (!has_zero(x)) {
          bound = std::max(bound, s * std::accumulate(x.begin(), x.end(), 0.0) / m2);
        }
      }
      return MeanResult{PositiveVector(std::move(out)), method, bound};
    }
    case Method::closed_form:
      break;
  }
  throw InvalidArgument("closed_form is not an infimum evaluation method");
}

MeanResult wgm_via_infimum(const WeightVector& w, std::span<const PositiveVector> fs,
                           const InfimumSpec& spec, Method method) {
  if (spec.kind != InfimumKind::weighted_geometric || !spec.weights) {
    throw InvalidArgument("weighted geometric infimum needs a weighted_geometric spec");
  }
  if (spec.weights->exact() != w.exact()) {
    throw InvalidArgument("weights do not match the infimum spec parameters");
  }
  if (spec.resolution < 1) throw InvalidArgument("grid resolution must be >= 1");
  require_nonempty(fs);
  if (fs.size() != w.size()) {
    throw DimensionMismatch("weight count " + std::to_string(w.size()) +
                            " does not match argument count " + std::to_string(fs.size()));
  }
  const std::size_t n = lattice::common_dimension(fs);
  const std::size_t p = w.size();

  // Integer parts r_k over the common denominator s.
  boost::multiprecision::cpp_int lcm = 1;
  for (const auto& t : w.exact()) {
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(t));
  }
  const double s = lcm.convert_to<double>();
  std::vector<double> r(p);
  for (std::size_t k = 0; k < p; ++k) {
    r[k] = (w.exact()[k] * lcm).convert_to<double>();
  }
  std::vector<double> out(n, 0.0);

  switch (method) {
    case Method::lagrange: {
      for (std::size_t i = 0; i < n; ++i) {
        const auto x = column(fs, i);
        if (has_zero(x)) continue;
        double lambda = s;
        for (std::size_t k = 0; k < p; ++k) lambda *= std::pow(x[k], r[k] / s);
        double objective = 0.0;
        for (std::size_t k = 0; k < p; ++k) {
          const double theta = lambda / (s * x[k]);
          objective += r[k] * theta * x[k];
        }
        out[i] = objective / s;
      }
      return MeanResult{PositiveVector(std::move(out)), method, std::nullopt};
    }
    case Method::grid: {
      const int m = spec.resolution;
      const double h = 1.0 / m;
      // Pivot: the argument with the largest part, solved from the constraint.
      const std::size_t pivot =
          static_cast<std::size_t>(std::max_element(r.begin(), r.end()) - r.begin());
      const double excess_factor =
          (r[pivot] * std::exp(h * (s - r[pivot]) / (2.0 * r[pivot])) +
           (s - r[pivot]) * std::exp(h / 2.0)) /
              s -
          1.0;

      double total_points = 0.0;
      std::vector<long long> half_width(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        const auto x = column(fs, i);
        if (has_zero(x)) continue;
        double spread = 0.0;
        for (double v : x) spread = std::max(spread, std::fabs(std::log(v)));
        // |log theta*_k| <= 2 max |log x|; the box is fixed in units of 1 so
        // the grid at 2m contains the grid at m.
        half_width[i] = static_cast<long long>(std::ceil(2.0 * spread + 1.0)) * m;
        total_points += std::pow(2.0 * double(half_width[i]) + 1.0, double(p - 1));
      }
      if (total_points > kMaxGridPoints) {
        throw BoundExceeded("weighted geometric grid would scan " + std::to_string(total_points) +
                            " points; lower the resolution or arity");
      }

      double bound = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto x = column(fs, i);
        if (has_zero(x)) continue;
        const long long J = half_width[i];
        std::vector<long long> j(p, -J);
        j[pivot] = 0;
        double best = INFINITY;
        while (true) {
          double weighted_log_sum = 0.0;
          double objective = 0.0;
          for (std::size_t k = 0; k < p; ++k) {
            if (k == pivot) continue;
            const double log_theta = double(j[k]) * h;
            weighted_log_sum += r[k] * log_theta;
            objective += r[k] * std::exp(log_theta) * x[k];
          }
          objective += r[pivot] * std::exp(-weighted_log_sum / r[pivot]) * x[pivot];
          if (objective < best) best = objective;
          // Odometer over the free coordinates.
          std::size_t k = 0;
          for (; k < p; ++k) {
            if (k == pivot) continue;
            if (j[k] < J) {
              ++j[k];
              break;
            }
            j[k] = -J;
          }
          if (k == p) break;
        }
        out[i] = best / s;
        bound = std::max(bound, out[i] * excess_factor);
      }
      return MeanResult{PositiveVector(std::move(out)), method, bound};
    }
    case Method::closed_form:
      break;
  }
  throw InvalidArgument("closed_form is not an infimum evaluation method");
}

}  // namespace latmeans::means
