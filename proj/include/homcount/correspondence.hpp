#pragma once

// Maps between multicolored models and the symbolic descriptions they
// encode, the C_{n,m} block-size classification, and a brute-force
// homogeneity check for explicit finite colored orderings.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "model.hpp"

namespace homcount {

/// Input that fails its validator. Carries the report.
class invalid_input : public std::invalid_argument {
 public:
  explicit invalid_input(const std::string& what, ValidationReport report)
      : std::invalid_argument(what + ": " + report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A description that uses kinds outside the finite labels 1..k.
class out_of_range_description : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// R(i) becomes a singleton block of size i; S(A) becomes the shuffle of
/// the finite kinds in A. The model must satisfy the adjacency-constrained
/// axioms, whatever its flag says.
inline OrderingDescription expand_model(const MulticoloredModel& m) {
  MulticoloredModel as_constrained = m;
  as_constrained.adjacency = Adjacency::constrained;
  if (auto report = validate_model(as_constrained); !report.ok())
    throw invalid_input("expand_model: invalid model", std::move(report));

  OrderingDescription d;
  d.segments.reserve(m.points.size());
  for (const Point& p : m.points) {
    if (const auto* r = std::get_if<RPoint>(&p)) {
      d.segments.emplace_back(SingletonBlock{BlockKind::finite(static_cast<unsigned>(r->color))});
    } else {
      Shuffle sh;
      for (int c : std::get<SPoint>(p).colors.to_vector())
        sh.kinds.insert(BlockKind::finite(static_cast<unsigned>(c)));
      d.segments.emplace_back(std::move(sh));
    }
  }
  return d;
}

/// Inverse of expand_model. The result is adjacency-constrained.
inline MulticoloredModel contract_description(const OrderingDescription& d, unsigned k) {
  if (auto report = validate_description(d); !report.ok())
    throw invalid_input("contract_description: invalid description", std::move(report));

  auto label = [k](const BlockKind& kind) {
    if (!kind.is_finite() || kind.size > k || kind.size > max_colors)
      throw out_of_range_description("description not in T'_" + std::to_string(k) +
                                     " range: kind " + to_string(kind));
    return static_cast<int>(kind.size);
  };

  MulticoloredModel m;
  m.k = k;
  m.adjacency = Adjacency::constrained;
  m.points.reserve(d.segments.size());
  for (const Segment& seg : d.segments) {
    if (const auto* b = std::get_if<SingletonBlock>(&seg)) {
      m.points.emplace_back(RPoint{label(b->kind)});
    } else {
      ColorSet colors;
      for (const auto& kind : std::get<Shuffle>(seg).kinds) colors.insert(label(kind));
      m.points.emplace_back(SPoint{colors});
    }
  }
  return m;
}

/// R(i) becomes a point of color i and S(A) the color shuffle of A.
/// Either adjacency flag is accepted.
inline ColoredDescription expand_colored(const MulticoloredModel& m) {
  if (auto report = validate_model(m); !report.ok())
    throw invalid_input("expand_colored: invalid model", std::move(report));
  ColoredDescription d;
  d.segments.reserve(m.points.size());
  for (const Point& p : m.points) {
    if (const auto* r = std::get_if<RPoint>(&p))
      d.segments.emplace_back(ColorPoint{r->color});
    else
      d.segments.emplace_back(ColorShuffle{std::get<SPoint>(p).colors});
  }
  return d;
}

/// Inverse of expand_colored. The result is unconstrained.
inline MulticoloredModel contract_colored(const ColoredDescription& d, unsigned k) {
  if (auto report = validate_colored(d, k); !report.ok())
    throw invalid_input("contract_colored: invalid description", std::move(report));
  MulticoloredModel m;
  m.k = k;
  m.adjacency = Adjacency::unconstrained;
  m.points.reserve(d.segments.size());
  for (const ColorSegment& seg : d.segments) {
    if (const auto* p = std::get_if<ColorPoint>(&seg))
      m.points.emplace_back(RPoint{p->color});
    else
      m.points.emplace_back(SPoint{std::get<ColorShuffle>(seg).colors});
  }
  return m;
}

/// A natural number or infinity.
class ExtendedNat {
 public:
  constexpr ExtendedNat(unsigned n) : value_(n) {}  // NOLINT: implicit on purpose
  static constexpr ExtendedNat infinity() { return ExtendedNat(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr unsigned value() const { return *value_; }

  friend std::string to_string(const ExtendedNat& n) {
    return n.is_infinite() ? "inf" : std::to_string(*n.value_);
  }

 private:
  constexpr ExtendedNat() = default;
  std::optional<unsigned> value_;
};

/// Whether the ordering described by `d` is C_{n,m}-homogeneous, i.e. each
/// block kind it uses is allowed:
///   n, m finite   finite blocks of size at most n+m+1 only
///   n infinite    no omega blocks while m is finite
///   m infinite    no omega* blocks while n is finite
///   both infinite every kind
/// `d` is assumed to pass validate_description.
inline bool classify_cnm(const OrderingDescription& d, ExtendedNat n, ExtendedNat m) {
  auto allowed = [&](const BlockKind& kind) {
    using T = BlockKind::Type;
    if (!n.is_infinite() && !m.is_infinite())
      return kind.is_finite() && kind.size <= n.value() + m.value() + 1;
    switch (kind.type) {
      case T::finite: return true;
      case T::omega: return m.is_infinite();
      case T::omega_star: return n.is_infinite();
      case T::zeta: return true;
    }
    return false;
  };
  for (const Segment& seg : d.segments) {
    if (const auto* b = std::get_if<SingletonBlock>(&seg)) {
      if (!allowed(b->kind)) return false;
    } else {
      for (const auto& kind : std::get<Shuffle>(seg).kinds)
        if (!allowed(kind)) return false;
    }
  }
  return true;
}

inline constexpr std::size_t default_homogeneity_cap = 8;

/// Every order- and color-preserving bijection of `o` onto itself, found by
/// trying all permutations.
inline std::vector<std::vector<std::size_t>> automorphisms(const FiniteColoredOrdering& o) {
  const std::size_t n = o.colors.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (o.colors[perm[i]] != o.colors[i]) ok = false;
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (perm[i] > perm[j]) ok = false;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Brute-force homogeneity: every isomorphism between two finite
/// substructures (equal-length position sets with the same color sequence)
/// must extend to an automorphism. Throws cap_exceeded above `cap` points.
inline bool is_finite_homogeneous(const FiniteColoredOrdering& o,
                                  std::size_t cap = default_homogeneity_cap) {
  const std::size_t n = o.colors.size();
  const std::size_t limit_cap = std::min<std::size_t>(cap, 20);
  if (n > limit_cap) throw cap_exceeded(static_cast<unsigned>(n), static_cast<unsigned>(limit_cap));
  const auto autos = automorphisms(o);

  auto members = [n](std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) out.push_back(i);
    return out;
  };

  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t a = 1; a < limit; ++a) {
    const auto from = members(a);
    for (std::uint32_t b = 1; b < limit; ++b) {
      if (std::popcount(a) != std::popcount(b)) continue;
      const auto to = members(b);
      bool isomorphic = true;
      for (std::size_t i = 0; i < from.size() && isomorphic; ++i)
        isomorphic = o.colors[from[i]] == o.colors[to[i]];
      if (!isomorphic) continue;
      const bool extends = std::any_of(autos.begin(), autos.end(), [&](const auto& sigma) {
        for (std::size_t i = 0; i < from.size(); ++i)
          if (sigma[from[i]] != to[i]) return false;
        return true;
      });
      if (!extends) return false;
    }
  }
  return true;
}

}  // namespace homcount
