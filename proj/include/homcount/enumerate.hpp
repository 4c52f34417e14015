#pragma once

// Brute-force generation of multicolored models in canonical order.
//
// Generation works position by position for each model length in turn, so
// the stream comes out already sorted by canonical_compare: shorter models
// first, then R-points (by color) before S-points (by sorted color list).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "model.hpp"

namespace homcount {

inline constexpr unsigned default_enumeration_cap = 7;

/// Refusal to brute-force beyond the configured cap.
class cap_exceeded : public std::runtime_error {
 public:
  cap_exceeded(unsigned requested, unsigned cap)
      : std::runtime_error("brute-force enumeration refused: k=" + std::to_string(requested) +
                           " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  unsigned requested() const { return requested_; }
  unsigned cap() const { return cap_; }

 private:
  unsigned requested_;
  unsigned cap_;
};

inline void check_cap(unsigned k, unsigned cap) {
  if (k > cap) throw cap_exceeded(k, cap);
}

struct EnumerationFilter {
  /// only models whose used colors are exactly {1..k}
  bool surjective = false;
  /// only S-points (models of the ordered-partition theory)
  bool s_only = false;
};

namespace detail {

template <typename Visitor>
class model_generator {
 public:
  model_generator(unsigned k, Adjacency adjacency, EnumerationFilter filter, Visitor& visit)
      : filter_(filter), visit_(visit) {
    model_.k = k;
    model_.adjacency = adjacency;
    model_.points.reserve(k);
  }

  void run() {
    const ColorSet all = ColorSet::first(model_.k);
    for (unsigned n = 0; n <= model_.k; ++n) {
      length_ = n;
      model_.points.clear();
      place(all, false);
    }
  }

 private:
  void place(ColorSet unused, bool last_was_r) {
    const std::size_t pos = model_.points.size();
    if (pos == length_) {
      if (!filter_.surjective || unused.empty()) visit_(std::as_const(model_));
      return;
    }
    if (!filter_.s_only && !(last_was_r && model_.constrained())) {
      for (int c : unused.to_vector()) {
        ColorSet rest = unused;
        rest.erase(c);
        if (!fits(rest, pos)) continue;
        model_.points.emplace_back(RPoint{c});
        place(rest, true);
        model_.points.pop_back();
      }
    }
    shuffles(unused, ColorSet{}, 0, pos);
  }

  // Nonempty subsets of `unused`, extending `chosen` with colors above
  // `floor`, in lexicographic order of their sorted member lists.
  void shuffles(ColorSet unused, ColorSet chosen, int floor, std::size_t pos) {
    for (int c : unused.to_vector()) {
      if (c <= floor) continue;
      ColorSet set = chosen;
      set.insert(c);
      const ColorSet rest = unused.without(set);
      if (fits(rest, pos)) {
        model_.points.emplace_back(SPoint{set});
        place(rest, false);
        model_.points.pop_back();
      }
      // a strict superset leaves at least one color fewer
      if (rest.size() >= length_ - pos) shuffles(unused, set, c, pos);
    }
  }

  // Can the points after `pos` still be colored from `rest`?
  bool fits(ColorSet rest, std::size_t pos) const {
    const std::size_t remaining = length_ - pos - 1;
    if (rest.size() < remaining) return false;
    if (filter_.surjective && remaining == 0 && !rest.empty()) return false;
    return true;
  }

  MulticoloredModel model_;
  EnumerationFilter filter_;
  Visitor& visit_;
  std::size_t length_ = 0;
};

}  // namespace detail

/// Streams every model over colors 1..k matching `filter` to `visit` in
/// canonical order. The visitor receives a reference to a buffer that is
/// reused; copy the model to keep it.
template <typename Visitor>
void for_each_model(unsigned k, Adjacency adjacency, EnumerationFilter filter, Visitor&& visit) {
  if (k > max_colors) throw usage_error("k=" + std::to_string(k) + " exceeds " + std::to_string(max_colors));
  detail::model_generator<std::remove_reference_t<Visitor>> gen(k, adjacency, filter, visit);
  gen.run();
}

template <typename Visitor>
void enumerate_models(unsigned k, Adjacency adjacency, Visitor&& visit) {
  for_each_model(k, adjacency, {}, std::forward<Visitor>(visit));
}

/// Models using every one of the k colors.
template <typename Visitor>
void enumerate_surjective(unsigned k, Adjacency adjacency, Visitor&& visit) {
  for_each_model(k, adjacency, {.surjective = true}, std::forward<Visitor>(visit));
}

/// Ordered set partitions of {1..k}, as all-S models using every color.
template <typename Visitor>
void enumerate_ordered_set_partitions(unsigned k, Visitor&& visit,
                                      unsigned cap = default_enumeration_cap) {
  check_cap(k, cap);
  for_each_model(k, Adjacency::unconstrained, {.surjective = true, .s_only = true},
                 std::forward<Visitor>(visit));
}

inline std::vector<MulticoloredModel> collect_models(unsigned k, Adjacency adjacency,
                                                     EnumerationFilter filter = {}) {
  std::vector<MulticoloredModel> out;
  for_each_model(k, adjacency, filter, [&](const MulticoloredModel& m) { out.push_back(m); });
  return out;
}

inline std::uint64_t count_matching(unsigned k, Adjacency adjacency, EnumerationFilter filter) {
  std::uint64_t n = 0;
  for_each_model(k, adjacency, filter, [&](const MulticoloredModel&) { ++n; });
  return n;
}

/// Number of models of the theory over k colors, counted by streaming them.
inline BigCount count_by_enumeration(unsigned k, Adjacency adjacency,
                                     unsigned cap = default_enumeration_cap) {
  check_cap(k, cap);
  return count_matching(k, adjacency, {});
}

/// Number of nonempty models over k colors.
inline BigCount count_nonempty_by_enumeration(unsigned k, Adjacency adjacency,
                                              unsigned cap = default_enumeration_cap) {
  return count_by_enumeration(k, adjacency, cap) - 1;
}

inline BigCount count_surjective_by_enumeration(unsigned k, Adjacency adjacency,
                                                unsigned cap = default_enumeration_cap) {
  check_cap(k, cap);
  return count_matching(k, adjacency, {.surjective = true});
}

inline BigCount count_ordered_set_partitions(unsigned k, unsigned cap = default_enumeration_cap) {
  check_cap(k, cap);
  return count_matching(k, Adjacency::unconstrained, {.surjective = true, .s_only = true});
}

/// Surjective constrained models split by their first point. The empty
/// model falls on the S side, matching the base case K1(0) = 1, K2(0) = 0.
struct FirstPointSplit {
  BigCount not_r_first;  // S-first or empty: the K1 side
  BigCount r_first;      // the K2 side
};

inline FirstPointSplit split_surjective_by_first_point(unsigned k,
                                                       unsigned cap = default_enumeration_cap) {
  check_cap(k, cap);
  std::uint64_t s_side = 0;
  std::uint64_t r_side = 0;
  enumerate_surjective(k, Adjacency::constrained, [&](const MulticoloredModel& m) {
    if (!m.points.empty() && is_r(m.points.front()))
      ++r_side;
    else
      ++s_side;
  });
  return {s_side, r_side};
}

}  // namespace homcount
