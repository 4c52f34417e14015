#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// in-process with captured streams.
//
// Exit status: 0 success, 1 a verification check failed, 2 usage or input
// error (including brute-force cap refusals and unwritable outputs).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homcount/asymptotics.hpp"
#include "homcount/combinatorics.hpp"
#include "homcount/correspondence.hpp"
#include "homcount/count.hpp"
#include "homcount/enumerate.hpp"
#include "homcount/json_io.hpp"
#include "homcount/series.hpp"
#include "homcount/verify.hpp"

namespace homcount::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

enum class Method { recurrence, closed_form, egf, brute_force };

inline std::optional<Method> parse_method(const std::string& s) {
  if (s == "recurrence") return Method::recurrence;
  if (s == "closed-form") return Method::closed_form;
  if (s == "egf") return Method::egf;
  if (s == "brute-force") return Method::brute_force;
  return std::nullopt;
}

/// HOMCOUNT_CAP if set and numeric, else the default.
inline unsigned cap_from_environment() {
  if (const char* env = std::getenv("HOMCOUNT_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(env, &used);
      if (used == std::char_traits<char>::length(env) && v <= max_colors) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw usage_error(std::string("HOMCOUNT_CAP must be an integer in 0..") + std::to_string(max_colors));
  }
  return default_enumeration_cap;
}

inline bool method_applies(SequenceId seq, Method method) {
  switch (method) {
    case Method::recurrence: return seq != SequenceId::I_closed_nonempty;
    case Method::closed_form: return seq == SequenceId::I || seq == SequenceId::I_closed_nonempty;
    case Method::egf:
      return seq == SequenceId::L || seq == SequenceId::J_surjective || seq == SequenceId::Fubini;
    case Method::brute_force: return true;
  }
  return false;
}

inline BigCount brute_force_value(SequenceId seq, unsigned k, unsigned cap) {
  switch (seq) {
    case SequenceId::I: return count_by_enumeration(k, Adjacency::constrained, cap);
    case SequenceId::I_closed_nonempty: return count_nonempty_by_enumeration(k, Adjacency::constrained, cap);
    case SequenceId::L: return count_by_enumeration(k, Adjacency::unconstrained, cap);
    case SequenceId::J_surjective: return count_surjective_by_enumeration(k, Adjacency::unconstrained, cap);
    case SequenceId::K1: return split_surjective_by_first_point(k, cap).not_r_first;
    case SequenceId::K2: return split_surjective_by_first_point(k, cap).r_first;
    case SequenceId::Fubini: return count_ordered_set_partitions(k, cap);
  }
  throw usage_error("unknown sequence");
}

inline BigCount egf_value(SequenceId seq, unsigned k) {
  switch (seq) {
    case SequenceId::L: return egf_counts(egf_H(k), k);
    case SequenceId::J_surjective: return egf_counts(egf_f(k), k);
    case SequenceId::Fubini: return egf_counts(egf_fubini(k), k);
    default: throw usage_error("no generating function for this sequence");
  }
}

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw usage_error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string point_text(const Point& p) {
  if (const auto* r = std::get_if<RPoint>(&p)) return "R" + std::to_string(r->color);
  std::string out = "S{";
  bool first = true;
  for (int c : std::get<SPoint>(p).colors.to_vector()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(c);
  }
  return out + "}";
}

inline std::string model_text(const MulticoloredModel& m) {
  if (m.points.empty()) return "(empty)";
  std::string out;
  for (const auto& p : m.points) {
    if (!out.empty()) out += " ";
    out += point_text(p);
  }
  return out;
}

/// Export body for terms first_index(seq)..k_max.
inline std::string export_sequence(SequenceId seq, unsigned k_max, const std::string& format) {
  std::ostringstream os;
  const unsigned first = first_index(seq);
  if (format == "b-file") {
    for (unsigned k = first; k <= k_max; ++k) os << k << ' ' << sequence_value(seq, k).str() << '\n';
  } else if (format == "csv") {
    os << "k,value\n";
    for (unsigned k = first; k <= k_max; ++k) os << k << ',' << sequence_value(seq, k).str() << '\n';
  } else if (format == "json") {
    nlohmann::ordered_json doc;
    doc["sequence"] = std::string(name_of(seq));
    doc["terms"] = nlohmann::ordered_json::array();
    for (unsigned k = first; k <= k_max; ++k) doc["terms"].push_back({k, sequence_value(seq, k).str()});
    os << doc.dump() << '\n';
  } else {
    throw usage_error("unknown export format " + format + " (b-file, csv, json)");
  }
  return os.str();
}

inline void print_series(const TruncatedSeries& s, std::ostream& out) {
  out << "j  coefficient  j!*coefficient\n";
  for (std::size_t j = 0; j <= s.order(); ++j)
    out << j << "  " << to_string(s[j]) << "  " << egf_counts(s, j).str() << '\n';
}

inline std::string fmt10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of homogeneous colored and C_{n,m}-homogeneous linear orderings", "homcount"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "homcount 1.0.0");

  std::optional<unsigned> cap_flag;
  auto cap = [&]() { return cap_flag ? *cap_flag : cap_from_environment(); };

  // count
  std::string seq_name;
  std::string method_name = "recurrence";
  unsigned k = 0;
  auto* count = app.add_subcommand("count", "Print one exact term of a sequence");
  count->add_option("--sequence", seq_name, "I, L, J, K1, K2, Fubini or I_closed")->required();
  count->add_option("--k", k, "Index")->required();
  count->add_option("--method", method_name, "recurrence, closed-form, egf or brute-force");
  count->add_option("--cap", cap_flag, "Brute-force cap (default 7, or HOMCOUNT_CAP)");

  // enumerate
  bool unconstrained = false;
  bool surjective = false;
  bool partitions = false;
  std::string enum_format = "text";
  auto* enumerate = app.add_subcommand("enumerate", "List models in canonical order");
  enumerate->add_option("--k", k, "Number of colors")->required();
  enumerate->add_flag("--unconstrained", unconstrained, "Allow adjacent R-points (homogeneous colored orderings)");
  enumerate->add_flag("--surjective", surjective, "Only models using all k colors");
  enumerate->add_flag("--partitions", partitions, "Ordered set partitions (S-points only, all colors)");
  enumerate->add_option("--format", enum_format, "text or json (one model per line)");
  enumerate->add_option("--cap", cap_flag, "Brute-force cap");

  // verify
  unsigned k_max = default_enumeration_cap;
  unsigned terms = 25;
  auto* verify = app.add_subcommand("verify", "Run every cross-check and report");
  verify->add_option("--k-max", k_max, "Largest k for the k-indexed checks");
  verify->add_option("--terms", terms, "Series order for the generating-function checks");
  verify->add_option("--cap", cap_flag, "Brute-force cap");

  // export
  std::string export_format = "b-file";
  std::string output = "-";
  auto* exporter = app.add_subcommand("export", "Write sequence terms (I from k=1, others from k=0)");
  exporter->add_option("--sequence", seq_name, "Sequence name")->required();
  exporter->add_option("--k-max", k_max, "Last index")->required();
  exporter->add_option("--format", export_format, "b-file, csv or json");
  exporter->add_option("--output", output, "Destination file, - for stdout");

  // series
  std::string egf_name = "H";
  unsigned series_terms = 10;
  auto* series = app.add_subcommand("series", "Print generating-function coefficients");
  series->add_option("--egf", egf_name, "H, f or fubini");
  series->add_option("--terms", series_terms, "Truncation order");

  // asymptotic
  auto* asymptotic = app.add_subcommand("asymptotic", "Dominant-pole constants and ratios");
  asymptotic->require_subcommand(1);
  auto* constants_cmd = asymptotic->add_subcommand("constants", "Print Z, R, S, limit ratio, p*, M");
  unsigned ratio_k_max = 12;
  auto* ratios_cmd = asymptotic->add_subcommand("ratios", "Tabulate L/A and J/L");
  ratios_cmd->add_option("--k-max", ratio_k_max, "Last index (at most 170)");

  // expand / contract
  std::string input = "-";
  auto* expand = app.add_subcommand("expand", "Model JSON to description JSON");
  expand->add_option("--input", input, "Model JSON file, - for stdin");
  std::optional<unsigned> contract_k;
  auto* contract = app.add_subcommand("contract", "Description JSON to model JSON");
  contract->add_option("--input", input, "Description JSON file, - for stdin");
  contract->add_option("--k", contract_k, "Color count (default: largest label used)");

  std::vector<const char*> argv{"homcount"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*count) {
      const auto seq = parse_sequence(seq_name);
      if (!seq) throw usage_error("unknown sequence " + seq_name);
      const auto method = parse_method(method_name);
      if (!method) throw usage_error("unknown method " + method_name);
      if (!method_applies(*seq, *method))
        throw usage_error("method " + method_name + " does not apply to " + std::string(name_of(*seq)));
      BigCount value;
      switch (*method) {
        case Method::recurrence: value = sequence_value(*seq, k); break;
        case Method::closed_form: value = closed_form_I(k); break;
        case Method::egf: value = egf_value(*seq, k); break;
        case Method::brute_force: value = brute_force_value(*seq, k, cap()); break;
      }
      out << value.str() << '\n' << "method: " << method_name << '\n';
      if (*seq == SequenceId::I && *method == Method::closed_form)
        out << "note: excludes the empty ordering; recurrence value is +1 (" << count_I(k).str() << ")\n";
      return exit_ok;
    }

    if (*enumerate) {
      check_cap(k, cap());
      if (enum_format != "text" && enum_format != "json") throw usage_error("unknown format " + enum_format);
      const EnumerationFilter filter{.surjective = surjective || partitions, .s_only = partitions};
      const Adjacency adj = unconstrained || partitions ? Adjacency::unconstrained : Adjacency::constrained;
      std::uint64_t n = 0;
      for_each_model(k, adj, filter, [&](const MulticoloredModel& m) {
        out << (enum_format == "json" ? to_json(m) : model_text(m)) << '\n';
        ++n;
      });
      if (enum_format == "text") out << "# " << n << " models\n";
      return exit_ok;
    }

    if (*verify) {
      return report_checks(run_checks({.k_max = k_max, .series_order = terms, .cap = cap()}), out);
    }

    if (*exporter) {
      const auto seq = parse_sequence(seq_name);
      if (!seq) throw usage_error("unknown sequence " + seq_name);
      const std::string body = export_sequence(*seq, k_max, export_format);
      if (output == "-") {
        out << body;
      } else {
        std::ofstream file(output, std::ios::binary);
        if (!file || !(file << body) || !file.flush()) {
          err << "error: cannot write " << output << '\n';
          return exit_usage;
        }
      }
      return exit_ok;
    }

    if (*series) {
      TruncatedSeries s(0);
      if (egf_name == "H")
        s = egf_H(series_terms);
      else if (egf_name == "f")
        s = egf_f(series_terms);
      else if (egf_name == "fubini")
        s = egf_fubini(series_terms);
      else
        throw usage_error("unknown generating function " + egf_name + " (H, f, fubini)");
      print_series(s, out);
      return exit_ok;
    }

    if (*constants_cmd) {
      const auto c = constants();
      out << "W(e^2)       " << fmt10(c.W) << '\n'
          << "Z            " << fmt10(c.Z) << '\n'
          << "R            " << fmt10(c.R) << '\n'
          << "S            " << fmt10(c.S) << '\n'
          << "limit_ratio  " << fmt10(c.limit_ratio) << '\n'
          << "p_star       " << fmt10(c.p_star) << '\n'
          << "M            " << fmt10(c.M) << '\n';
      return exit_ok;
    }

    if (*ratios_cmd) {
      char line[128];
      std::snprintf(line, sizeof line, "%4s  %18s  %18s\n", "k", "L/A", "J/L");
      out << line;
      for (const auto& row : ratio_report(ratio_k_max)) {
        std::snprintf(line, sizeof line, "%4u  %18.12f  %18.12f\n", row.k, row.L_over_A, row.J_over_L);
        out << line;
      }
      return exit_ok;
    }

    if (*expand) {
      const auto m = model_from_json(read_input(input));
      if (m.constrained())
        out << to_json(expand_model(m)) << '\n';
      else
        out << to_json(expand_colored(m)) << '\n';
      return exit_ok;
    }

    if (*contract) {
      const std::string text = read_input(input);
      if (is_colored_description_json(text)) {
        const auto d = colored_description_from_json(text);
        unsigned labels = 0;
        for (const auto& s : d.segments) {
          if (const auto* p = std::get_if<ColorPoint>(&s))
            labels = std::max(labels, static_cast<unsigned>(std::max(p->color, 0)));
          else
            labels = std::max(labels, static_cast<unsigned>(std::get<ColorShuffle>(s).colors.max()));
        }
        out << to_json(contract_colored(d, contract_k.value_or(labels))) << '\n';
      } else {
        const auto d = description_from_json(text);
        unsigned labels = 0;
        auto note = [&](const BlockKind& kind) {
          if (kind.is_finite()) labels = std::max(labels, kind.size);
        };
        for (const auto& s : d.segments) {
          if (const auto* b = std::get_if<SingletonBlock>(&s))
            note(b->kind);
          else
            for (const auto& kind : std::get<Shuffle>(s).kinds) note(kind);
        }
        out << to_json(contract_description(d, contract_k.value_or(labels))) << '\n';
      }
      return exit_ok;
    }
  } catch (const cap_exceeded& e) {
    err << "error: " << e.what() << " (raise with --cap or HOMCOUNT_CAP)\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace homcount::cli
