#pragma once

// Exact integers and rationals plus the memoized combinatorial tables every
// counting path draws from.

#include <cmath>
#include <cstddef>
#include <mutex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace homcount {

/// Arbitrary-precision integer. Counts are nonnegative; the signed type is
/// kept so intermediate differences in verification code stay exact.
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational, always normalized to lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

inline std::string to_string(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

namespace detail {

// Append-only table guarded by a mutex. Lookups copy the value out, so a
// caller never holds a reference into storage another thread may grow.
template <typename Row>
class growing_table {
 public:
  template <typename Extend>
  auto get(std::size_t index, Extend&& extend) {
    std::lock_guard lock(mutex_);
    while (rows_.size() <= index) extend(rows_);
    return rows_[index];
  }

  template <typename Extend, typename Read>
  auto read(std::size_t index, Extend&& extend, Read&& reader) {
    std::lock_guard lock(mutex_);
    while (rows_.size() <= index) extend(rows_);
    return reader(rows_[index]);
  }

 private:
  std::mutex mutex_;
  std::vector<Row> rows_;
};

inline growing_table<BigCount>& factorial_table() {
  static growing_table<BigCount> table;
  return table;
}

inline growing_table<std::vector<BigCount>>& pascal_table() {
  static growing_table<std::vector<BigCount>> table;
  return table;
}

inline growing_table<std::vector<BigCount>>& stirling2_table() {
  static growing_table<std::vector<BigCount>> table;
  return table;
}

}  // namespace detail

/// n!
inline BigCount factorial(unsigned n) {
  return detail::factorial_table().get(n, [](std::vector<BigCount>& rows) {
    if (rows.empty()) {
      rows.emplace_back(1);
      return;
    }
    BigCount next = rows.back() * rows.size();
    rows.push_back(std::move(next));
  });
}

/// C(n, r), zero when r > n. Backed by a Pascal triangle grown on demand.
inline BigCount binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  return detail::pascal_table().read(
      n,
      [](std::vector<std::vector<BigCount>>& rows) {
        const std::size_t i = rows.size();
        std::vector<BigCount> row(i + 1, BigCount(1));
        for (std::size_t j = 1; j < i; ++j) row[j] = rows[i - 1][j - 1] + rows[i - 1][j];
        rows.push_back(std::move(row));
      },
      [r](const std::vector<BigCount>& row) { return row[r]; });
}

/// Stirling number of the second kind S(n, m): partitions of an n-set into
/// m nonempty blocks. S(0,0) = 1, S(n,0) = 0 for n > 0, S(n,m) = 0 for m > n.
inline BigCount stirling2(unsigned n, unsigned m) {
  if (m > n) return 0;
  return detail::stirling2_table().read(
      n,
      [](std::vector<std::vector<BigCount>>& rows) {
        const std::size_t i = rows.size();
        std::vector<BigCount> row(i + 1, BigCount(0));
        if (i == 0) {
          row[0] = 1;
        } else {
          for (std::size_t j = 1; j <= i; ++j) {
            BigCount stay = j < i ? BigCount(rows[i - 1][j] * j) : BigCount(0);
            row[j] = stay + rows[i - 1][j - 1];
          }
        }
        rows.push_back(std::move(row));
      },
      [m](const std::vector<BigCount>& row) { return row[m]; });
}

/// Natural log of a positive big integer, accurate to double precision even
/// when the value exceeds the double range.
inline double log_of(const BigCount& value) {
  if (value <= 0) return -HUGE_VAL;
  const auto bits = static_cast<long>(boost::multiprecision::msb(value));
  const long shift = bits > 900 ? bits - 900 : 0;
  const BigCount head = value >> shift;
  return std::log(head.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

/// num / den as a double, computed without overflowing either operand.
inline double ratio_to_double(const BigCount& num, const BigCount& den) {
  if (num == 0) return 0.0;
  const auto bits = static_cast<long>(
      std::max(boost::multiprecision::msb(num), boost::multiprecision::msb(den)));
  const long shift = bits > 1000 ? bits - 1000 : 0;
  const BigCount a = num >> shift;
  const BigCount b = den >> shift;
  return a.convert_to<double>() / b.convert_to<double>();
}

}  // namespace homcount
