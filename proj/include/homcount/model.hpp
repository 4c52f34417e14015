#pragma once

// Finite presentations: multicolored models, symbolic block/shuffle
// descriptions, colored descriptions, and explicit finite colored orderings.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace homcount {

/// Raised when an operation is called outside its contract (mismatched k,
/// malformed input, out-of-range parameters).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr unsigned max_colors = 64;

/// A set of color indices 1..64.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  ColorSet(std::initializer_list<int> colors) {
    for (int c : colors) insert(c);
  }

  static constexpr ColorSet from_bits(std::uint64_t bits) {
    ColorSet s;
    s.bits_ = bits;
    return s;
  }
  /// {1..k}
  static constexpr ColorSet first(unsigned k) {
    return from_bits(k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
  }

  void insert(int color) {
    if (color < 1 || color > static_cast<int>(max_colors))
      throw usage_error("color index " + std::to_string(color) + " outside 1.." +
                        std::to_string(max_colors));
    bits_ |= std::uint64_t{1} << (color - 1);
  }
  constexpr void erase(int color) { bits_ &= ~(std::uint64_t{1} << (color - 1)); }

  constexpr bool contains(int color) const {
    return color >= 1 && color <= static_cast<int>(max_colors) &&
           ((bits_ >> (color - 1)) & 1u) != 0;
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }
  /// Largest member, 0 when empty.
  constexpr int max() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  constexpr bool disjoint(ColorSet other) const { return (bits_ & other.bits_) == 0; }
  constexpr bool subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr ColorSet operator|(ColorSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr ColorSet operator&(ColorSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr ColorSet without(ColorSet o) const { return from_bits(bits_ & ~o.bits_); }

  /// Members in increasing order.
  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  constexpr bool operator==(const ColorSet&) const = default;
  /// Lexicographic on the sorted member lists: {1} < {1,2} < {2}.
  std::strong_ordering operator<=>(const ColorSet& other) const {
    std::uint64_t a = bits_;
    std::uint64_t b = other.bits_;
    while (a != 0 && b != 0) {
      const int x = std::countr_zero(a);
      const int y = std::countr_zero(b);
      if (x != y) return x <=> y;
      a &= a - 1;
      b &= b - 1;
    }
    return (a != 0) <=> (b != 0);
  }

 private:
  std::uint64_t bits_ = 0;
};

/// A point standing for a single block: carries exactly one color.
struct RPoint {
  int color = 0;
  auto operator<=>(const RPoint&) const = default;
};

/// A point standing for a dense shuffle of its colors.
struct SPoint {
  ColorSet colors;
  auto operator<=>(const SPoint&) const = default;
};

/// Ordered R before S; R by color; S by sorted color list.
using Point = std::variant<RPoint, SPoint>;

inline bool is_r(const Point& p) { return std::holds_alternative<RPoint>(p); }

inline ColorSet colors_of(const Point& p) {
  if (const auto* r = std::get_if<RPoint>(&p)) {
    ColorSet s;
    if (r->color >= 1 && r->color <= static_cast<int>(max_colors)) s.insert(r->color);
    return s;
  }
  return std::get<SPoint>(p).colors;
}

enum class Adjacency : bool { unconstrained = false, constrained = true };

/// A finite model over colors 1..k. With Adjacency::constrained no two
/// consecutive points may both be R-points.
struct MulticoloredModel {
  unsigned k = 0;
  Adjacency adjacency = Adjacency::constrained;
  std::vector<Point> points;

  bool constrained() const { return adjacency == Adjacency::constrained; }
  ColorSet used_colors() const {
    ColorSet used;
    for (const auto& p : points) used = used | colors_of(p);
    return used;
  }
  bool operator==(const MulticoloredModel&) const = default;
};

/// One axiom failure. `axiom` is a stable identifier such as "Tprime.5".
struct Violation {
  std::string axiom;
  std::vector<std::size_t> positions;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(std::string_view axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }
  std::string summary() const {
    std::string out;
    for (const auto& v : violations) {
      if (!out.empty()) out += "; ";
      out += v.axiom + ": " + v.message;
    }
    return out;
  }
};

namespace detail {

inline std::string positions_text(std::initializer_list<std::size_t> ps) {
  std::string out;
  for (auto p : ps) {
    if (!out.empty()) out += ",";
    out += std::to_string(p);
  }
  return out;
}

}  // namespace detail

/// Checks the finite-label axioms:
///   Tprime.lang  every color lies in 1..k
///   Tprime.2     every point carries at least one color
///   Tprime.3b    no two consecutive R-points (constrained models only)
///   Tprime.5     an R color is used at most once
///   Tprime.6     an S color is used at most once
///   Tprime.7     no color is used both as R and as S
inline ValidationReport validate_model(const MulticoloredModel& m) {
  ValidationReport report;
  auto fail = [&](std::string axiom, std::vector<std::size_t> at, std::string msg) {
    report.violations.push_back({std::move(axiom), std::move(at), std::move(msg)});
  };
  if (m.k > max_colors)
    fail("Tprime.lang", {}, "k=" + std::to_string(m.k) + " exceeds " + std::to_string(max_colors));

  // first position at which each color was seen, and whether as R
  std::vector<std::pair<std::size_t, bool>> seen(max_colors + 1, {SIZE_MAX, false});
  auto note = [&](int color, std::size_t pos, bool as_r) {
    if (color < 1 || color > static_cast<int>(std::min(m.k, max_colors))) {
      fail("Tprime.lang", {pos},
           "color " + std::to_string(color) + " at " + std::to_string(pos) + " outside 1.." +
               std::to_string(m.k));
      return;
    }
    auto& [first, first_r] = seen[static_cast<std::size_t>(color)];
    if (first == SIZE_MAX) {
      first = pos;
      first_r = as_r;
      return;
    }
    const std::string where = " at " + detail::positions_text({first, pos});
    if (first_r && as_r)
      fail("Tprime.5", {first, pos}, "R color " + std::to_string(color) + " reused" + where);
    else if (!first_r && !as_r)
      fail("Tprime.6", {first, pos}, "S color " + std::to_string(color) + " reused" + where);
    else
      fail("Tprime.7", {first, pos},
           "color " + std::to_string(color) + " used as both R and S" + where);
  };

  for (std::size_t i = 0; i < m.points.size(); ++i) {
    const Point& p = m.points[i];
    if (const auto* r = std::get_if<RPoint>(&p)) {
      note(r->color, i, true);
    } else {
      const auto& s = std::get<SPoint>(p);
      if (s.colors.empty()) fail("Tprime.2", {i}, "S-point at " + std::to_string(i) + " has no colors");
      for (int c : s.colors.to_vector()) note(c, i, false);
    }
    if (m.constrained() && i > 0 && is_r(m.points[i - 1]) && is_r(p))
      fail("Tprime.3b", {i - 1, i}, "consecutive R-points at " + detail::positions_text({i - 1, i}));
  }
  return report;
}

/// Deterministic enumeration order: shorter first, then lexicographic by
/// point. Throws usage_error when the color counts differ.
inline std::strong_ordering canonical_compare(const MulticoloredModel& a,
                                              const MulticoloredModel& b) {
  if (a.k != b.k)
    throw usage_error("canonical_compare: k mismatch (" + std::to_string(a.k) + " vs " +
                      std::to_string(b.k) + ")");
  if (auto c = a.points.size() <=> b.points.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.points.size(); ++i)
    if (auto c = a.points[i] <=> b.points[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Block descriptions

/// Order type of a 1-block: a finite size n >= 1, omega, omega*, or zeta.
struct BlockKind {
  enum class Type : std::uint8_t { finite, omega, omega_star, zeta };

  Type type = Type::finite;
  unsigned size = 1;  // meaningful for finite only

  static constexpr BlockKind finite(unsigned n) { return {Type::finite, n}; }
  static constexpr BlockKind omega() { return {Type::omega, 0}; }
  static constexpr BlockKind omega_star() { return {Type::omega_star, 0}; }
  static constexpr BlockKind zeta() { return {Type::zeta, 0}; }

  constexpr bool is_finite() const { return type == Type::finite; }

  auto operator<=>(const BlockKind&) const = default;
};

inline std::string to_string(const BlockKind& kind) {
  switch (kind.type) {
    case BlockKind::Type::finite: return std::to_string(kind.size);
    case BlockKind::Type::omega: return "omega";
    case BlockKind::Type::omega_star: return "omega*";
    case BlockKind::Type::zeta: return "zeta";
  }
  return "?";
}

struct SingletonBlock {
  BlockKind kind;
  auto operator<=>(const SingletonBlock&) const = default;
};

/// Dense shuffle of the given block kinds. Kinds are kept as a set.
struct Shuffle {
  std::set<BlockKind> kinds;
  bool operator==(const Shuffle&) const = default;
};

using Segment = std::variant<SingletonBlock, Shuffle>;

struct OrderingDescription {
  std::vector<Segment> segments;
  bool operator==(const OrderingDescription&) const = default;
};

/// Checks the structural axioms of a block description:
///   T.2         every shuffle names at least one kind
///   T.kind      finite sizes are positive
///   T.disjoint  each kind occurs at most once in the whole description
///   T.4         no two adjacent finite singleton blocks
///   T.5         no finite singleton immediately before an omega singleton
///   T.6         no omega* singleton immediately before a finite singleton
///   T.7         no omega* singleton immediately before an omega singleton
inline ValidationReport validate_description(const OrderingDescription& d) {
  ValidationReport report;
  auto fail = [&](std::string axiom, std::vector<std::size_t> at, std::string msg) {
    report.violations.push_back({std::move(axiom), std::move(at), std::move(msg)});
  };

  std::vector<std::pair<BlockKind, std::size_t>> seen;
  auto note = [&](const BlockKind& kind, std::size_t pos) {
    if (kind.is_finite() && kind.size == 0)
      fail("T.kind", {pos}, "finite block of size 0 at " + std::to_string(pos));
    for (const auto& [other, where] : seen) {
      if (other == kind) {
        fail("T.disjoint", {where, pos},
             "kind " + to_string(kind) + " repeated at " + detail::positions_text({where, pos}));
        return;
      }
    }
    seen.emplace_back(kind, pos);
  };

  const SingletonBlock* previous = nullptr;
  for (std::size_t i = 0; i < d.segments.size(); ++i) {
    const Segment& seg = d.segments[i];
    const auto* block = std::get_if<SingletonBlock>(&seg);
    if (block) {
      note(block->kind, i);
    } else {
      const auto& sh = std::get<Shuffle>(seg);
      if (sh.kinds.empty()) fail("T.2", {i}, "empty shuffle at " + std::to_string(i));
      for (const auto& kind : sh.kinds) note(kind, i);
    }

    if (previous && block) {
      using T = BlockKind::Type;
      const T a = previous->kind.type;
      const T b = block->kind.type;
      const std::string at = detail::positions_text({i - 1, i});
      if (a == T::finite && b == T::finite)
        fail("T.4", {i - 1, i}, "adjacent finite blocks at " + at);
      else if (a == T::finite && b == T::omega)
        fail("T.5", {i - 1, i}, "finite block before omega at " + at);
      else if (a == T::omega_star && b == T::finite)
        fail("T.6", {i - 1, i}, "omega-star before finite block at " + at);
      else if (a == T::omega_star && b == T::omega)
        fail("T.7", {i - 1, i}, "omega-star before omega at " + at);
    }
    previous = block;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Colored descriptions

struct ColorPoint {
  int color = 0;
  auto operator<=>(const ColorPoint&) const = default;
};

struct ColorShuffle {
  ColorSet colors;
  auto operator<=>(const ColorShuffle&) const = default;
};

using ColorSegment = std::variant<ColorPoint, ColorShuffle>;

struct ColoredDescription {
  std::vector<ColorSegment> segments;
  bool operator==(const ColoredDescription&) const = default;
};

/// Each color at most once, shuffles nonempty, colors within 1..k.
/// There are no adjacency constraints.
inline ValidationReport validate_colored(const ColoredDescription& d, unsigned k) {
  ValidationReport report;
  ColorSet seen;
  for (std::size_t i = 0; i < d.segments.size(); ++i) {
    ColorSet here;
    if (const auto* p = std::get_if<ColorPoint>(&d.segments[i])) {
      if (p->color < 1 || p->color > static_cast<int>(k)) {
        report.violations.push_back({"Tprime.lang", {i},
                                     "color " + std::to_string(p->color) + " outside 1.." +
                                         std::to_string(k)});
        continue;
      }
      here.insert(p->color);
    } else {
      here = std::get<ColorShuffle>(d.segments[i]).colors;
      if (here.empty()) report.violations.push_back({"Tprime.2", {i}, "empty color shuffle"});
      if (!here.subset_of(ColorSet::first(k)))
        report.violations.push_back({"Tprime.lang", {i}, "shuffle color outside 1.." + std::to_string(k)});
    }
    if (!here.disjoint(seen))
      report.violations.push_back({"Tprime.unique", {i},
                                   "color repeated at segment " + std::to_string(i)});
    seen = seen | here;
  }
  return report;
}

/// An explicit finite colored linear ordering: position i has colors[i].
struct FiniteColoredOrdering {
  std::vector<int> colors;
};

}  // namespace homcount
