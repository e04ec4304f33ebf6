#pragma once

// s-homogeneous polynomials P: R^n -> R^d and their symmetric s-linear maps.
//
// Coefficient convention. A term is keyed by a sorted multiset
// kappa = {i_1 <= ... <= i_s} of 0-based coordinates and stores the value of
// the symmetric tensor T[j_1, ..., j_s] for every ordering (j_1..j_s) of
// kappa. Hence
//
//   Pcheck(f_1, ..., f_s) = sum_kappa c(kappa) * sum_{distinct orderings j of kappa}
//                           f_1[j_1] * ... * f_s[j_s]
//   P(f)                  = sum_kappa c(kappa) * multinomial(kappa) * prod_{i in kappa} f[i]
//
// where multinomial(kappa) = s! / prod(multiplicity!) counts the distinct
// orderings. Example: (f_1 + f_2)^2 has c({0,0}) = c({0,1}) = c({1,1}) = 1.

#include "latmeans/errors.hpp"
#include "latmeans/lattice.hpp"
#include "latmeans/rational.hpp"
#include "latmeans/report.hpp"
#include "latmeans/rng.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace latmeans::poly {

using MultiIndex = std::vector<std::size_t>;

template <class T>
struct Term {
  MultiIndex key;
  std::vector<T> coeff;
};

/// Number of distinct orderings of the multiset `key`.
template <class T>
T multinomial(const MultiIndex& key) {
  T out(1);
  std::size_t run = 0;
  for (std::size_t k = 0; k < key.size(); ++k) {
    run = (k > 0 && key[k] == key[k - 1]) ? run + 1 : 1;
    out = out * T(static_cast<long long>(k + 1)) / T(static_cast<long long>(run));
  }
  return out;
}

/// True when the multiset contains at least two distinct coordinates.
inline bool is_mixed(const MultiIndex& key) {
  return !key.empty() && key.front() != key.back();
}

template <class T>
class BasicHomogeneousPolynomial {
 public:
  using Vector = lattice::BasicVector<T>;

  /// Keys are sorted on entry; repeated keys accumulate; all-zero
  /// coefficients are dropped. Throws InvalidArgument for s < 1, n < 1, d < 1,
  /// a key of length != s, an index >= n, or a coefficient of length != d.
  BasicHomogeneousPolynomial(int degree, std::size_t domain_dim, std::size_t codomain_dim,
                             std::vector<Term<T>> terms = {})
      : degree_(degree), n_(domain_dim), d_(codomain_dim) {
    if (degree < 1) throw InvalidArgument("polynomial degree must be >= 1");
    if (n_ < 1 || d_ < 1) throw InvalidArgument("polynomial dimensions must be >= 1");
    for (auto& term : terms) {
      if (term.key.size() != static_cast<std::size_t>(degree)) {
        throw InvalidArgument("term key has length " + std::to_string(term.key.size()) +
                              ", expected degree " + std::to_string(degree));
      }
      if (term.coeff.size() != d_) {
        throw InvalidArgument("term coefficient has length " + std::to_string(term.coeff.size()) +
                              ", expected codomain dimension " + std::to_string(d_));
      }
      for (auto i : term.key) {
        if (i >= n_) throw InvalidArgument("term index " + std::to_string(i) + " out of range");
      }
      for (const auto& c : term.coeff) {
        if (!is_finite_scalar(c)) throw InvalidArgument("polynomial coefficients must be finite");
      }
      std::sort(term.key.begin(), term.key.end());
      auto [it, inserted] = terms_.try_emplace(term.key, std::vector<T>(d_, T(0)));
      for (std::size_t j = 0; j < d_; ++j) it->second[j] += term.coeff[j];
    }
    std::erase_if(terms_, [](const auto& kv) {
      return std::all_of(kv.second.begin(), kv.second.end(), [](const T& c) { return c == T(0); });
    });
  }

  int degree() const { return degree_; }
  std::size_t domain_dim() const { return n_; }
  std::size_t codomain_dim() const { return d_; }
  const std::map<MultiIndex, std::vector<T>>& terms() const { return terms_; }

  /// No mixed key carries a nonzero coefficient.
  bool is_diagonal() const {
    return std::none_of(terms_.begin(), terms_.end(),
                        [](const auto& kv) { return is_mixed(kv.first); });
  }

  std::vector<T> eval(const Vector& f) const {
    require_dim(f.size());
    std::vector<T> out(d_, T(0));
    for (const auto& [key, coeff] : terms_) {
      T w = multinomial<T>(key);
      for (auto i : key) w *= f[i];
      if (w == T(0)) continue;
      for (std::size_t j = 0; j < d_; ++j) out[j] += coeff[j] * w;
    }
    return out;
  }

  std::vector<T> operator()(const Vector& f) const { return eval(f); }

  /// Symmetric s-linear map evaluated at s vectors (any slot order).
  std::vector<T> eval_multilinear(std::span<const Vector> fs) const {
    if (fs.size() != static_cast<std::size_t>(degree_)) {
      throw DimensionMismatch("multilinear map of degree " + std::to_string(degree_) +
                              " applied to " + std::to_string(fs.size()) + " arguments");
    }
    for (const auto& f : fs) require_dim(f.size());
    std::vector<T> out(d_, T(0));
    MultiIndex order;
    for (const auto& [key, coeff] : terms_) {
      order = key;  // sorted: first permutation
      T sum(0);
      do {
        T prod(1);
        for (std::size_t k = 0; k < order.size(); ++k) {
          prod *= fs[k][order[k]];
          if (prod == T(0)) break;
        }
        sum += prod;
      } while (std::next_permutation(order.begin(), order.end()));
      if (sum == T(0)) continue;
      for (std::size_t j = 0; j < d_; ++j) out[j] += coeff[j] * sum;
    }
    return out;
  }

 private:
  void require_dim(std::size_t n) const {
    if (n != n_) {
      throw DimensionMismatch("polynomial on R^" + std::to_string(n_) + " evaluated at a vector in R^" +
                              std::to_string(n));
    }
  }

  int degree_;
  std::size_t n_;
  std::size_t d_;
  std::map<MultiIndex, std::vector<T>> terms_;
};

/// The symmetric multilinear map of a polynomial. Non-owning.
template <class T>
class SymmetricMultilinearView {
 public:
  explicit SymmetricMultilinearView(const BasicHomogeneousPolynomial<T>& p) : p_(&p) {}

  std::vector<T> operator()(std::span<const lattice::BasicVector<T>> fs) const {
    return p_->eval_multilinear(fs);
  }
  const BasicHomogeneousPolynomial<T>& polynomial() const { return *p_; }

 private:
  const BasicHomogeneousPolynomial<T>* p_;
};

using HomogeneousPolynomial = BasicHomogeneousPolynomial<double>;
using RationalPolynomial = BasicHomogeneousPolynomial<Rational>;

template <class T>
std::vector<T> eval(const BasicHomogeneousPolynomial<T>& p, const lattice::BasicVector<T>& f) {
  return p.eval(f);
}

template <class T>
std::vector<T> eval_multilinear(const SymmetricMultilinearView<T>& v,
                                std::span<const lattice::BasicVector<T>> fs) {
  return v(fs);
}

/// P(f) = sum_i c_i f_i^s with c_i in R^d; c has one entry per coordinate.
template <class T>
BasicHomogeneousPolynomial<T> make_diagonal(std::span<const std::vector<T>> c, int s) {
  if (c.empty()) throw InvalidArgument("diagonal polynomial needs at least one coefficient");
  const std::size_t d = c[0].size();
  std::vector<Term<T>> terms;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].size() != d) throw DimensionMismatch("diagonal coefficients of unequal length");
    terms.push_back(Term<T>{MultiIndex(static_cast<std::size_t>(s), i), c[i]});
  }
  return BasicHomogeneousPolynomial<T>(s, c.size(), d, std::move(terms));
}

/// Scalar-valued convenience overload: c_i in R.
template <class T>
BasicHomogeneousPolynomial<T> make_diagonal(std::span<const T> c, int s) {
  std::vector<std::vector<T>> lifted;
  for (const auto& ci : c) lifted.push_back({ci});
  return make_diagonal<T>(std::span<const std::vector<T>>(lifted), s);
}

/// Sum over all mixed terms of the l1 norm of the coefficient, divided by
/// the same sum over all terms. 0 for the zero polynomial.
double mixed_mass_fraction(const HomogeneousPolynomial& p);

// Black-box polarization.

using Evaluator = std::function<std::vector<double>(const lattice::LatticeVector&)>;

inline constexpr int kMaxPolarizationDegree = 8;

class NotHomogeneous : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// (1 / (2^s s!)) sum_{eps in {-1,1}^s} (prod eps) P(sum_k eps_k f_k).
/// Before polarizing, checks P(lambda g) = lambda^s P(g) for lambda in
/// {2, -1/2} and g in {f_1, ..., f_s, f_1 + ... + f_s}, relative tolerance
/// `homogeneity_tol`. Throws BoundExceeded for s > 8 and NotHomogeneous when the
/// spot-check fails.
std::vector<double> polarize_blackbox(const Evaluator& p, int s,
                                      std::span<const lattice::LatticeVector> fs,
                                      double homogeneity_tol = 1e-8);

// Orthogonal additivity tests.

/// Random disjoint pairs f, g >= 0 (random support bipartition, log-uniform
/// entries), checking P(f+g) = P(f) + P(g) to `tol`.
verify::VerificationReport is_positively_orthogonally_additive(const HomogeneousPolynomial& p,
                                                                int trials, std::uint64_t seed,
                                                                double tol = 1e-9);

/// Every support bipartition of {0..n-1} into two nonempty sets, each with
/// `draws` random positive fillings. Throws BoundExceeded for n > 12.
verify::VerificationReport check_positive_oa_exhaustive(const HomogeneousPolynomial& p,
                                                         std::uint64_t seed, int draws = 2,
                                                         double tol = 1e-9);

/// Like is_positively_orthogonally_additive but with entries of random sign.
verify::VerificationReport is_orthogonally_additive(const HomogeneousPolynomial& p, int trials,
                                                     std::uint64_t seed, double tol = 1e-9);

// Random polynomial families.

/// Diagonal polynomial with coefficients uniform in [-2, 2].
HomogeneousPolynomial random_diagonal(Rng& rng, int s, std::size_t n, std::size_t d);

/// Random sparse polynomial whose mixed terms carry exactly `mixed_fraction`
/// of the coefficient l1 mass (0 < mixed_fraction <= 1). Needs n >= 2 and s >= 2.
HomogeneousPolynomial random_polynomial(Rng& rng, int s, std::size_t n, std::size_t d,
                                        double mixed_fraction, int mixed_terms = 2);

/// Random dense-ish polynomial over all keys, used for polarization checks.
HomogeneousPolynomial random_full_polynomial(Rng& rng, int s, std::size_t n, std::size_t d);

}  // namespace latmeans::poly
