#pragma once

// Exact counting formulas.
//
//   I(k)      C_{n,m}-homogeneous linear orderings with n+m+1 = k, counted
//             with the empty ordering (indexed from k = 1)
//   L(k)      homogeneous k-colored linear orderings, counted with the empty
//             ordering (indexed from k = 0)
//   J(k)      of those, the ones using all k colors
//   K1, K2    surjective constrained models whose first point is not / is an
//             R-point
//   Fubini(k) ordered set partitions of a k-set
//
// The closed form for I sums over nonempty color sets only and therefore
// returns I(k) - 1. It is kept verbatim and exposed as its own sequence.

#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "model.hpp"

namespace homcount {

enum class SequenceId { I, L, J_surjective, K1, K2, Fubini, I_closed_nonempty };

inline constexpr SequenceId all_sequences[] = {
    SequenceId::I,  SequenceId::L,      SequenceId::J_surjective,     SequenceId::K1,
    SequenceId::K2, SequenceId::Fubini, SequenceId::I_closed_nonempty};

inline std::string_view name_of(SequenceId id) {
  switch (id) {
    case SequenceId::I: return "I";
    case SequenceId::L: return "L";
    case SequenceId::J_surjective: return "J";
    case SequenceId::K1: return "K1";
    case SequenceId::K2: return "K2";
    case SequenceId::Fubini: return "Fubini";
    case SequenceId::I_closed_nonempty: return "I_closed";
  }
  return "?";
}

inline std::optional<SequenceId> parse_sequence(std::string_view text) {
  for (SequenceId id : all_sequences)
    if (text == name_of(id)) return id;
  if (text == "J_surjective") return SequenceId::J_surjective;
  if (text == "I_closed_nonempty") return SequenceId::I_closed_nonempty;
  if (text == "fubini") return SequenceId::Fubini;
  return std::nullopt;
}

/// First index of the sequence's printed convention.
inline unsigned first_index(SequenceId id) {
  return id == SequenceId::I || id == SequenceId::I_closed_nonempty ? 1 : 0;
}

namespace detail {

// Memo for a recurrence whose n-th term depends on all earlier terms.
class recurrence_memo {
 public:
  template <typename Next>
  BigCount at(unsigned n, Next&& next) {
    std::lock_guard lock(mutex_);
    while (terms_.size() <= n) terms_.push_back(next(terms_));
    return terms_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<BigCount> terms_;
};

struct k_pair {
  BigCount k1;
  BigCount k2;
};

inline k_pair k_terms(unsigned k) {
  static std::mutex mutex;
  static std::vector<k_pair> terms;
  std::lock_guard lock(mutex);
  if (terms.empty()) terms.push_back({1, 0});
  while (terms.size() <= k) {
    const unsigned n = static_cast<unsigned>(terms.size()) - 1;  // computing n+1
    BigCount k1 = 0;
    for (unsigned i = 0; i <= n; ++i) k1 += binomial(n + 1, i) * (terms[i].k1 + terms[i].k2);
    BigCount k2 = terms[n].k1 * (n + 1);
    terms.push_back({std::move(k1), std::move(k2)});
  }
  return terms[k];
}

}  // namespace detail

/// K1(0) = 1, K1(k+1) = sum_{i=0..k} C(k+1,i) (K1(i) + K2(i))
inline BigCount k1(unsigned k) { return detail::k_terms(k).k1; }

/// K2(0) = 0, K2(k+1) = (k+1) K1(k)
inline BigCount k2(unsigned k) { return detail::k_terms(k).k2; }

/// I(k) = sum_{i=0..k} (K1(i) + K2(i)) C(k,i); includes the empty ordering.
inline BigCount count_I(unsigned k) {
  BigCount total = 0;
  for (unsigned i = 0; i <= k; ++i) {
    const auto t = detail::k_terms(i);
    total += (t.k1 + t.k2) * binomial(k, i);
  }
  return total;
}

/// The closed form
///   sum_{m=1..k} C(k,m) sum_{n=1..m} sum_{r=0..ceil(n/2)}
///       C(n-r+1, r) C(m,r) r! (n-r)! S(m-r, n-r)
/// evaluated term by term. Equals count_I(k) - 1 (no empty ordering).
inline BigCount closed_form_I(unsigned k) {
  BigCount total = 0;
  for (unsigned m = 1; m <= k; ++m) {
    BigCount inner = 0;
    for (unsigned n = 1; n <= m; ++n) {
      const unsigned r_max = (n + 1) / 2;
      for (unsigned r = 0; r <= r_max && r <= n; ++r) {
        if (r > m) break;
        inner += binomial(n - r + 1, r) * binomial(m, r) * factorial(r) * factorial(n - r) *
                 stirling2(m - r, n - r);
      }
    }
    total += binomial(k, m) * inner;
  }
  return total;
}

/// J(0) = 1, J(k+1) = 2(k+1) J(k) + sum_{i=2..k+1} C(k+1,i) J(k+1-i)
inline BigCount j_surjective(unsigned k) {
  static detail::recurrence_memo memo;
  return memo.at(k, [](const std::vector<BigCount>& j) -> BigCount {
    if (j.empty()) return 1;
    const unsigned n = static_cast<unsigned>(j.size());  // computing J(n)
    BigCount next = j[n - 1] * (2 * n);
    for (unsigned i = 2; i <= n; ++i) next += binomial(n, i) * j[n - i];
    return next;
  });
}

/// L(k) = sum_{i=0..k} C(k,i) J(i). The i = 0 term is the empty ordering.
inline BigCount count_L(unsigned k) {
  BigCount total = 0;
  for (unsigned i = 0; i <= k; ++i) total += binomial(k, i) * j_surjective(i);
  return total;
}

/// Fubini(0) = 1, Fubini(k) = sum_{i=1..k} C(k,i) Fubini(k-i)
inline BigCount fubini(unsigned k) {
  static detail::recurrence_memo memo;
  return memo.at(k, [](const std::vector<BigCount>& f) -> BigCount {
    if (f.empty()) return 1;
    const unsigned n = static_cast<unsigned>(f.size());
    BigCount next = 0;
    for (unsigned i = 1; i <= n; ++i) next += binomial(n, i) * f[n - i];
    return next;
  });
}

/// Recurrence-based value of any sequence (closed form for I_closed).
inline BigCount sequence_value(SequenceId id, unsigned k) {
  switch (id) {
    case SequenceId::I: return count_I(k);
    case SequenceId::L: return count_L(k);
    case SequenceId::J_surjective: return j_surjective(k);
    case SequenceId::K1: return k1(k);
    case SequenceId::K2: return k2(k);
    case SequenceId::Fubini: return fubini(k);
    case SequenceId::I_closed_nonempty: return closed_form_I(k);
  }
  throw usage_error("unknown sequence");
}

}  // namespace homcount
