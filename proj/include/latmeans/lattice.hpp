#pragma once

// Coordinatewise vector lattice R^n. Point evaluations are the real-valued
// lattice homomorphisms of R^n, so the functional calculus for continuous
// positively homogeneous functions is plain coordinatewise evaluation.

#include "latmeans/errors.hpp"
#include "latmeans/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace latmeans::lattice {

template <class T>
class BasicVector {
 public:
  using value_type = T;

  explicit BasicVector(std::vector<T> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidArgument("lattice vector must have dimension >= 1");
    for (const auto& x : entries_) {
      if (!is_finite_scalar(x)) throw InvalidArgument("lattice vector entries must be finite");
    }
  }
  BasicVector(std::initializer_list<T> entries) : BasicVector(std::vector<T>(entries)) {}

  static BasicVector zeros(std::size_t n) { return BasicVector(std::vector<T>(n, T(0))); }

  std::size_t size() const { return entries_.size(); }
  const T& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const T> entries() const { return entries_; }
  const std::vector<T>& to_vector() const { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const T& x) { return x == T(0); });
  }

  friend bool operator==(const BasicVector&, const BasicVector&) = default;

  friend BasicVector operator+(const BasicVector& a, const BasicVector& b) {
    return zip(a, b, [](const T& x, const T& y) { return T(x + y); });
  }
  friend BasicVector operator-(const BasicVector& a, const BasicVector& b) {
    return zip(a, b, [](const T& x, const T& y) { return T(x - y); });
  }
  friend BasicVector operator-(const BasicVector& a) {
    std::vector<T> out(a.entries_);
    for (auto& x : out) x = -x;
    return BasicVector(std::move(out));
  }
  friend BasicVector operator*(const T& lambda, const BasicVector& a) {
    std::vector<T> out(a.entries_);
    for (auto& x : out) x *= lambda;
    return BasicVector(std::move(out));
  }

  template <class Op>
  static BasicVector zip(const BasicVector& a, const BasicVector& b, Op op) {
    if (a.size() != b.size()) {
      throw DimensionMismatch("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()));
    }
    std::vector<T> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
    return BasicVector(std::move(out));
  }

 private:
  std::vector<T> entries_;
};

/// Element of the positive cone E_+.
template <class T>
class BasicPositiveVector {
 public:
  using value_type = T;

  explicit BasicPositiveVector(BasicVector<T> v) : v_(std::move(v)) {
    for (const auto& x : v_.entries()) {
      if (x < T(0)) throw InvalidArgument("positive vector has a negative entry");
    }
  }
  explicit BasicPositiveVector(std::vector<T> entries)
      : BasicPositiveVector(BasicVector<T>(std::move(entries))) {}
  BasicPositiveVector(std::initializer_list<T> entries)
      : BasicPositiveVector(BasicVector<T>(entries)) {}

  static BasicPositiveVector zeros(std::size_t n) {
    return BasicPositiveVector(BasicVector<T>::zeros(n));
  }

  std::size_t size() const { return v_.size(); }
  const T& operator[](std::size_t i) const { return v_[i]; }
  std::span<const T> entries() const { return v_.entries(); }
  const BasicVector<T>& vec() const { return v_; }
  operator const BasicVector<T>&() const { return v_; }  // NOLINT: E_+ embeds in E

  friend bool operator==(const BasicPositiveVector&, const BasicPositiveVector&) = default;

 private:
  BasicVector<T> v_;
};

using LatticeVector = BasicVector<double>;
using PositiveVector = BasicPositiveVector<double>;
using RationalVector = BasicVector<Rational>;
using PositiveRationalVector = BasicPositiveVector<Rational>;

template <class T>
BasicVector<T> sup(const BasicVector<T>& f, const BasicVector<T>& g) {
  return BasicVector<T>::zip(f, g, [](const T& x, const T& y) { return x < y ? y : x; });
}

template <class T>
BasicVector<T> inf(const BasicVector<T>& f, const BasicVector<T>& g) {
  return BasicVector<T>::zip(f, g, [](const T& x, const T& y) { return y < x ? y : x; });
}

template <class T>
BasicPositiveVector<T> abs(const BasicVector<T>& f) {
  std::vector<T> out(f.entries().begin(), f.entries().end());
  for (auto& x : out) x = scalar_abs(x);
  return BasicPositiveVector<T>(std::move(out));
}

template <class T>
BasicPositiveVector<T> positive_part(const BasicVector<T>& f) {
  return BasicPositiveVector<T>(sup(f, BasicVector<T>::zeros(f.size())));
}

/// |f| ∧ |g| == 0, tested exactly.
template <class T>
bool is_disjoint(const BasicVector<T>& f, const BasicVector<T>& g) {
  if (f.size() != g.size()) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(f.size()) + " vs " +
                            std::to_string(g.size()));
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != T(0) && g[i] != T(0)) return false;
  }
  return true;
}

/// Pointwise order f <= g.
template <class T>
bool leq(const BasicVector<T>& f, const BasicVector<T>& g) {
  if (f.size() != g.size()) throw DimensionMismatch("dimension mismatch in order comparison");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (g[i] < f[i]) return false;
  }
  return true;
}

/// Meet of a nonempty family.
template <class T>
BasicPositiveVector<T> meet(std::span<const BasicPositiveVector<T>> fs) {
  if (fs.empty()) throw InvalidArgument("meet of an empty family");
  BasicVector<T> acc = fs[0].vec();
  for (std::size_t k = 1; k < fs.size(); ++k) acc = inf(acc, fs[k].vec());
  return BasicPositiveVector<T>(std::move(acc));
}

/// Common dimension of a nonempty family; throws DimensionMismatch otherwise.
template <class V>
std::size_t common_dimension(std::span<const V> fs) {
  if (fs.empty()) throw InvalidArgument("expected at least one vector");
  const std::size_t n = fs[0].size();
  for (const auto& f : fs) {
    if (f.size() != n) {
      throw DimensionMismatch("dimension mismatch: " + std::to_string(n) + " vs " +
                              std::to_string(f.size()));
    }
  }
  return n;
}

/// Functional calculus on R^n: result_i = phi(f_1[i], ..., f_k[i]).
/// `phi` is called with a span of k scalars and must be positively
/// homogeneous and nonnegative on the positive cone.
template <class T, class Phi>
BasicPositiveVector<T> apply_homogeneous(Phi&& phi, std::span<const BasicPositiveVector<T>> fs) {
  const std::size_t n = common_dimension(fs);
  std::vector<T> column(fs.size());
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < fs.size(); ++k) column[k] = fs[k][i];
    out[i] = phi(std::span<const T>(column));
  }
  return BasicPositiveVector<T>(std::move(out));
}

}  // namespace latmeans::lattice
