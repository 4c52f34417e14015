#pragma once

// JSON exchange formats for models and descriptions. Requires nlohmann/json.
//
//   model        {"k": 2, "adjacency_constrained": true, "points": [{"type":"R","color":1},{"type":"S","colors":[2]}]}
//   description  {"segments":[{"type":"block","kind":{"finite":2}}, {"type":"shuffle","kinds":[{"finite":1},"omega"]}]}
//   colored      {"segments":[{"type":"block","color":2}, {"type":"shuffle","colors":[1,3]}]}
//
// Writers reproduce this spacing exactly. Readers accept any whitespace.

#include <string>
#include <string_view>

#include <json.hpp>  // nlohmann/json single header

#include "model.hpp"

namespace homcount {

class json_format_error : public usage_error {
 public:
  using usage_error::usage_error;
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson colors_json(ColorSet s) {
  ojson arr = ojson::array();
  for (int c : s.to_vector()) arr.push_back(c);
  return arr;
}

inline ojson kind_json(const BlockKind& kind) {
  switch (kind.type) {
    case BlockKind::Type::finite: return ojson{{"finite", kind.size}};
    case BlockKind::Type::omega: return "omega";
    case BlockKind::Type::omega_star: return "omega_star";
    case BlockKind::Type::zeta: return "zeta";
  }
  return nullptr;
}

template <typename Range, typename Fn>
std::string join(const Range& items, std::string_view sep, Fn&& render) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += sep;
    first = false;
    out += render(item).dump();
  }
  return out;
}

[[noreturn]] inline void bad(const std::string& what) { throw json_format_error("invalid JSON: " + what); }

inline nlohmann::json parse(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(e.what());
  }
}

inline const nlohmann::json& field(const nlohmann::json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) bad(std::string("missing \"") + key + "\"");
  return obj.at(key);
}

inline int color_from(const nlohmann::json& j) {
  if (!j.is_number_integer()) bad("color must be an integer");
  return j.get<int>();
}

inline ColorSet colors_from(const nlohmann::json& j) {
  if (!j.is_array()) bad("colors must be an array");
  ColorSet s;
  for (const auto& c : j) {
    const int color = color_from(c);
    if (color < 1 || color > static_cast<int>(max_colors))
      bad("color " + std::to_string(color) + " outside 1.." + std::to_string(max_colors));
    if (s.contains(color)) bad("color " + std::to_string(color) + " listed twice in one set");
    s.insert(color);
  }
  return s;
}

inline BlockKind kind_from(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "omega") return BlockKind::omega();
    if (name == "omega_star") return BlockKind::omega_star();
    if (name == "zeta") return BlockKind::zeta();
    bad("unknown block kind \"" + name + "\"");
  }
  const auto& n = field(j, "finite");
  if (!n.is_number_integer() || n.get<long long>() < 0) bad("finite size must be a nonnegative integer");
  return BlockKind::finite(n.get<unsigned>());
}

inline std::string type_of(const nlohmann::json& j) {
  const auto& t = field(j, "type");
  if (!t.is_string()) bad("\"type\" must be a string");
  return t.get<std::string>();
}

}  // namespace detail

inline std::string to_json(const MulticoloredModel& m) {
  auto point = [](const Point& p) {
    if (const auto* r = std::get_if<RPoint>(&p)) return detail::ojson{{"type", "R"}, {"color", r->color}};
    return detail::ojson{{"type", "S"}, {"colors", detail::colors_json(std::get<SPoint>(p).colors)}};
  };
  return "{\"k\": " + std::to_string(m.k) +
         ", \"adjacency_constrained\": " + (m.constrained() ? "true" : "false") +
         ", \"points\": [" + detail::join(m.points, ",", point) + "]}";
}

inline std::string to_json(const OrderingDescription& d) {
  auto segment = [](const Segment& s) {
    if (const auto* b = std::get_if<SingletonBlock>(&s))
      return detail::ojson{{"type", "block"}, {"kind", detail::kind_json(b->kind)}};
    detail::ojson kinds = detail::ojson::array();
    for (const auto& kind : std::get<Shuffle>(s).kinds) kinds.push_back(detail::kind_json(kind));
    return detail::ojson{{"type", "shuffle"}, {"kinds", kinds}};
  };
  return "{\"segments\":[" + detail::join(d.segments, ", ", segment) + "]}";
}

inline std::string to_json(const ColoredDescription& d) {
  auto segment = [](const ColorSegment& s) {
    if (const auto* p = std::get_if<ColorPoint>(&s)) return detail::ojson{{"type", "block"}, {"color", p->color}};
    return detail::ojson{{"type", "shuffle"},
                         {"colors", detail::colors_json(std::get<ColorShuffle>(s).colors)}};
  };
  return "{\"segments\":[" + detail::join(d.segments, ", ", segment) + "]}";
}

inline MulticoloredModel model_from_json(std::string_view text) {
  const auto j = detail::parse(text);
  MulticoloredModel m;
  const auto& k = detail::field(j, "k");
  if (!k.is_number_integer() || k.get<long long>() < 0) detail::bad("\"k\" must be a nonnegative integer");
  m.k = k.get<unsigned>();
  const auto& flag = detail::field(j, "adjacency_constrained");
  if (!flag.is_boolean()) detail::bad("\"adjacency_constrained\" must be a boolean");
  m.adjacency = flag.get<bool>() ? Adjacency::constrained : Adjacency::unconstrained;
  const auto& points = detail::field(j, "points");
  if (!points.is_array()) detail::bad("\"points\" must be an array");
  for (const auto& p : points) {
    const auto type = detail::type_of(p);
    if (type == "R")
      m.points.emplace_back(RPoint{detail::color_from(detail::field(p, "color"))});
    else if (type == "S")
      m.points.emplace_back(SPoint{detail::colors_from(detail::field(p, "colors"))});
    else
      detail::bad("point type must be \"R\" or \"S\", got \"" + type + "\"");
  }
  return m;
}

/// True when the description uses "color"/"colors" rather than kinds.
inline bool is_colored_description_json(std::string_view text) {
  const auto j = detail::parse(text);
  for (const auto& s : detail::field(j, "segments"))
    if (s.is_object()) return s.contains("color") || s.contains("colors");
  return false;
}

inline OrderingDescription description_from_json(std::string_view text) {
  const auto j = detail::parse(text);
  const auto& segments = detail::field(j, "segments");
  if (!segments.is_array()) detail::bad("\"segments\" must be an array");
  OrderingDescription d;
  for (const auto& s : segments) {
    const auto type = detail::type_of(s);
    if (type == "block") {
      d.segments.emplace_back(SingletonBlock{detail::kind_from(detail::field(s, "kind"))});
    } else if (type == "shuffle") {
      const auto& kinds = detail::field(s, "kinds");
      if (!kinds.is_array()) detail::bad("\"kinds\" must be an array");
      Shuffle sh;
      for (const auto& kind : kinds)
        if (!sh.kinds.insert(detail::kind_from(kind)).second) detail::bad("kind listed twice in one shuffle");
      d.segments.emplace_back(std::move(sh));
    } else {
      detail::bad("segment type must be \"block\" or \"shuffle\", got \"" + type + "\"");
    }
  }
  return d;
}

inline ColoredDescription colored_description_from_json(std::string_view text) {
  const auto j = detail::parse(text);
  const auto& segments = detail::field(j, "segments");
  if (!segments.is_array()) detail::bad("\"segments\" must be an array");
  ColoredDescription d;
  for (const auto& s : segments) {
    const auto type = detail::type_of(s);
    if (type == "block")
      d.segments.emplace_back(ColorPoint{detail::color_from(detail::field(s, "color"))});
    else if (type == "shuffle")
      d.segments.emplace_back(ColorShuffle{detail::colors_from(detail::field(s, "colors"))});
    else
      detail::bad("segment type must be \"block\" or \"shuffle\", got \"" + type + "\"");
  }
  return d;
}

}  // namespace homcount
