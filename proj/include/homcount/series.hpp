#pragma once

// Truncated formal power series with exact coefficients, and the
// exponential generating functions built from them.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"

namespace homcount {

class series_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Power series sum_{j=0..order} c_j x^j over a field `Coeff`.
template <typename Coeff>
class basic_truncated_series {
 public:
  /// The zero series of the given order.
  explicit basic_truncated_series(std::size_t order) : coeffs_(order + 1, Coeff(0)) {}

  explicit basic_truncated_series(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw series_error("a series needs at least a constant term");
  }

  basic_truncated_series(std::initializer_list<Coeff> coeffs)
      : basic_truncated_series(std::vector<Coeff>(coeffs)) {}

  /// c + 0 x + ... to the given order.
  static basic_truncated_series constant(const Coeff& c, std::size_t order) {
    basic_truncated_series s(order);
    s.coeffs_[0] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Coeff& operator[](std::size_t j) const { return coeffs_[j]; }
  Coeff& operator[](std::size_t j) { return coeffs_[j]; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  basic_truncated_series truncated(std::size_t order) const {
    order = std::min(order, this->order());
    return basic_truncated_series(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend basic_truncated_series operator+(const basic_truncated_series& a,
                                          const basic_truncated_series& b) {
    basic_truncated_series out(std::min(a.order(), b.order()));
    for (std::size_t j = 0; j <= out.order(); ++j) out.coeffs_[j] = a[j] + b[j];
    return out;
  }

  friend basic_truncated_series operator-(const basic_truncated_series& a,
                                          const basic_truncated_series& b) {
    basic_truncated_series out(std::min(a.order(), b.order()));
    for (std::size_t j = 0; j <= out.order(); ++j) out.coeffs_[j] = a[j] - b[j];
    return out;
  }

  /// Cauchy product truncated to the smaller order.
  friend basic_truncated_series operator*(const basic_truncated_series& a,
                                          const basic_truncated_series& b) {
    basic_truncated_series out(std::min(a.order(), b.order()));
    for (std::size_t j = 0; j <= out.order(); ++j) {
      Coeff acc(0);
      for (std::size_t i = 0; i <= j; ++i) acc += a[i] * b[j - i];
      out.coeffs_[j] = std::move(acc);
    }
    return out;
  }

  friend basic_truncated_series operator*(const Coeff& c, const basic_truncated_series& s) {
    basic_truncated_series out = s;
    for (auto& x : out.coeffs_) x *= c;
    return out;
  }

  bool operator==(const basic_truncated_series&) const = default;

 private:
  std::vector<Coeff> coeffs_;
};

using TruncatedSeries = basic_truncated_series<Rational>;

template <typename Coeff>
basic_truncated_series<Coeff> ps_add(const basic_truncated_series<Coeff>& a,
                                     const basic_truncated_series<Coeff>& b) {
  return a + b;
}

template <typename Coeff>
basic_truncated_series<Coeff> ps_mul(const basic_truncated_series<Coeff>& a,
                                     const basic_truncated_series<Coeff>& b) {
  return a * b;
}

/// b with a * b = 1 to the order of a. Throws series_error when the
/// constant term is zero.
template <typename Coeff>
basic_truncated_series<Coeff> ps_reciprocal(const basic_truncated_series<Coeff>& a) {
  if (a[0] == Coeff(0)) throw series_error("series not invertible: zero constant term");
  basic_truncated_series<Coeff> b(a.order());
  const Coeff inv = Coeff(1) / a[0];
  b[0] = inv;
  for (std::size_t j = 1; j <= a.order(); ++j) {
    Coeff acc(0);
    for (std::size_t i = 1; i <= j; ++i) acc += a[i] * b[j - i];
    b[j] = -acc * inv;
  }
  return b;
}

/// outer(inner(x)) by Horner's scheme. Requires inner(0) = 0; the result has
/// the smaller of the two orders.
template <typename Coeff>
basic_truncated_series<Coeff> ps_compose(const basic_truncated_series<Coeff>& outer,
                                         const basic_truncated_series<Coeff>& inner) {
  if (inner[0] != Coeff(0))
    throw series_error("composition needs an inner series with zero constant term");
  const std::size_t order = std::min(outer.order(), inner.order());
  auto acc = basic_truncated_series<Coeff>::constant(outer[order], order);
  const auto x = inner.truncated(order);
  for (std::size_t j = order; j-- > 0;) {
    acc = acc * x;
    acc[0] += outer[j];
  }
  return acc;
}

/// e^x: coefficients 1/j!
inline TruncatedSeries ps_exp(std::size_t order) {
  TruncatedSeries s(order);
  Rational term(1);
  for (std::size_t j = 0; j <= order; ++j) {
    if (j > 0) term /= static_cast<long long>(j);
    s[j] = term;
  }
  return s;
}

/// 1/(1-x): all coefficients 1
inline TruncatedSeries ps_geometric(std::size_t order) {
  return TruncatedSeries(std::vector<Rational>(order + 1, Rational(1)));
}

/// The identity series x.
inline TruncatedSeries ps_x(std::size_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

/// e^x + x - 1: a nonempty set or a single point.
inline TruncatedSeries egf_block_choice(std::size_t order) {
  return ps_exp(order) + ps_x(order) - TruncatedSeries::constant(1, order);
}

/// f(x) = 1/(2 - x - e^x), the EGF of surjective unconstrained models.
inline TruncatedSeries egf_f(std::size_t order) {
  return ps_reciprocal(TruncatedSeries::constant(2, order) - ps_x(order) - ps_exp(order));
}

/// H(x) = e^x / (2 - x - e^x), the EGF of L.
inline TruncatedSeries egf_H(std::size_t order) { return ps_exp(order) * egf_f(order); }

/// 1/(2 - e^x), the EGF of ordered set partitions.
inline TruncatedSeries egf_fubini(std::size_t order) {
  return ps_reciprocal(TruncatedSeries::constant(2, order) - ps_exp(order));
}

/// k! [x^k] s as an integer. Throws series_error if that is not a
/// nonnegative integer, which means the series was built wrong.
inline BigCount egf_counts(const TruncatedSeries& s, std::size_t k) {
  if (k > s.order())
    throw series_error("coefficient " + std::to_string(k) + " beyond series order " +
                       std::to_string(s.order()));
  const Rational scaled = s[k] * Rational(factorial(static_cast<unsigned>(k)));
  if (boost::multiprecision::denominator(scaled) != 1 || scaled < 0)
    throw series_error("k! [x^" + std::to_string(k) + "] = " + to_string(scaled) +
                       " is not a nonnegative integer");
  return boost::multiprecision::numerator(scaled);
}

}  // namespace homcount
