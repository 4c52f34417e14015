#pragma once

// Cross-checks every counting route against every other one and against
// brute force, plus the numeric constants. Used by `homcount verify`.

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "combinatorics.hpp"
#include "correspondence.hpp"
#include "count.hpp"
#include "enumerate.hpp"
#include "series.hpp"

namespace homcount {

/// Printed I(1..13).
inline const std::vector<BigCount>& printed_I_terms() {
  static const std::vector<BigCount> terms = {
      BigCount(3),           BigCount(12),           BigCount(71),
      BigCount(558),         BigCount(5487),         BigCount(64734),
      BigCount(891039),      BigCount(14016774),     BigCount(248057927),
      BigCount(4877703126),  BigCount(105504350679), BigCount(2489510252238),
      BigCount(63638447941551)};
  return terms;
}

/// Printed L(0..12).
inline const std::vector<BigCount>& printed_L_terms() {
  static const std::vector<BigCount> terms = {
      BigCount(1),           BigCount(3),           BigCount(14),
      BigCount(95),          BigCount(858),         BigCount(9687),
      BigCount(131244),      BigCount(2074515),     BigCount(37475342),
      BigCount(761600375),   BigCount(17197534296), BigCount(427167206259),
      BigCount(11574924994554)};
  return terms;
}

/// Printed A(0..4).
inline constexpr double printed_A_terms[] = {1.37496, 3.10493, 14.0224, 94.9907, 857.986};

/// Printed asymptotic constants.
inline constexpr double printed_Z = 0.442854;
inline constexpr double printed_R = -0.6089389;
inline constexpr double printed_limit_ratio = 0.6422007;
inline constexpr double printed_M = 2.12243;

/// The counting functions under test. Replaceable so the failure path of
/// the report can itself be exercised.
struct CountSources {
  std::function<BigCount(unsigned)> I = count_I;
  std::function<BigCount(unsigned)> I_closed = closed_form_I;
  std::function<BigCount(unsigned)> L = count_L;
  std::function<BigCount(unsigned)> J = j_surjective;
  std::function<BigCount(unsigned)> K1 = k1;
  std::function<BigCount(unsigned)> K2 = k2;
  std::function<BigCount(unsigned)> Fubini = fubini;
};

struct VerifyOptions {
  unsigned k_max = default_enumeration_cap;
  unsigned series_order = 25;
  unsigned cap = default_enumeration_cap;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string values;
  std::string tolerance;
};

namespace detail {

class check_builder {
 public:
  check_builder(std::string name, std::string tolerance)
      : result_{std::move(name), true, {}, std::move(tolerance)} {}

  void expect_equal(const std::string& label, const BigCount& got, const BigCount& want) {
    ++count_;
    if (got == want) return;
    fail(label + ": got " + got.str() + ", expected " + want.str());
  }

  void expect_near(const std::string& label, double got, double want, double tol) {
    ++count_;
    if (std::abs(got - want) <= tol) return;
    fail(label + ": got " + fmt(got) + ", expected " + fmt(want));
  }

  void expect(const std::string& label, bool ok) {
    ++count_;
    if (!ok) fail(label);
  }

  CheckResult done() {
    if (result_.passed) result_.values = std::to_string(count_) + " comparisons";
    return std::move(result_);
  }

  static std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
  }

 private:
  void fail(std::string what) {
    if (result_.passed) result_.values = std::move(what);
    result_.passed = false;
  }

  CheckResult result_;
  std::size_t count_ = 0;
};

}  // namespace detail

inline std::vector<CheckResult> run_checks(const VerifyOptions& opt, const CountSources& src = {}) {
  using detail::check_builder;
  std::vector<CheckResult> out;
  const unsigned brute_max = std::min(opt.k_max, opt.cap);

  {
    check_builder c("I-sequence matches printed terms", "exact");
    const auto& terms = printed_I_terms();
    for (unsigned k = 1; k <= std::min<unsigned>(opt.k_max, 13); ++k)
      c.expect_equal("I(" + std::to_string(k) + ")", src.I(k), terms[k - 1]);
    out.push_back(c.done());
  }
  {
    check_builder c("L-sequence matches printed terms", "exact");
    const auto& terms = printed_L_terms();
    for (unsigned k = 0; k <= std::min<unsigned>(opt.k_max, 12); ++k)
      c.expect_equal("L(" + std::to_string(k) + ")", src.L(k), terms[k]);
    out.push_back(c.done());
  }
  {
    check_builder c("I(k) = brute-force count of constrained models", "exact");
    for (unsigned k = 1; k <= brute_max; ++k)
      c.expect_equal("k=" + std::to_string(k), src.I(k),
                     count_by_enumeration(k, Adjacency::constrained, opt.cap));
    out.push_back(c.done());
  }
  {
    check_builder c("L(k) = brute-force count of unconstrained models", "exact");
    for (unsigned k = 0; k <= brute_max; ++k)
      c.expect_equal("k=" + std::to_string(k), src.L(k),
                     count_by_enumeration(k, Adjacency::unconstrained, opt.cap));
    out.push_back(c.done());
  }
  {
    check_builder c("closed form + 1 = I(k) (closed form omits the empty ordering)", "exact");
    for (unsigned k = 1; k <= opt.k_max; ++k)
      c.expect_equal("k=" + std::to_string(k), src.I_closed(k) + 1, src.I(k));
    for (unsigned k = 1; k <= brute_max; ++k)
      c.expect_equal("nonempty brute force k=" + std::to_string(k), src.I_closed(k),
                     count_nonempty_by_enumeration(k, Adjacency::constrained, opt.cap));
    out.push_back(c.done());
  }
  {
    check_builder c("L(k) = sum_i C(k,i) J(i)", "exact");
    for (unsigned k = 0; k <= opt.k_max; ++k) {
      BigCount sum = 0;
      for (unsigned i = 0; i <= k; ++i) sum += binomial(k, i) * src.J(i);
      c.expect_equal("k=" + std::to_string(k), src.L(k), sum);
    }
    out.push_back(c.done());
  }
  {
    check_builder c("surjective splits: K1+K2 and J against brute force", "exact");
    for (unsigned k = 0; k <= brute_max; ++k) {
      const auto split = split_surjective_by_first_point(k, opt.cap);
      c.expect_equal("K1(" + std::to_string(k) + ") vs S-first", src.K1(k), split.not_r_first);
      c.expect_equal("K2(" + std::to_string(k) + ") vs R-first", src.K2(k), split.r_first);
      c.expect_equal("J(" + std::to_string(k) + ")", src.J(k),
                     count_surjective_by_enumeration(k, Adjacency::unconstrained, opt.cap));
    }
    out.push_back(c.done());
  }
  {
    check_builder c("Fubini(k) = ordered set partitions by brute force", "exact");
    for (unsigned k = 0; k <= brute_max; ++k)
      c.expect_equal("k=" + std::to_string(k), src.Fubini(k), count_ordered_set_partitions(k, opt.cap));
    out.push_back(c.done());
  }
  {
    check_builder c("EGF coefficients: H -> L, f -> J, 1/(2-e^x) -> Fubini (order " +
                        std::to_string(opt.series_order) + ")",
                    "exact rational");
    const auto H = egf_H(opt.series_order);
    const auto f = egf_f(opt.series_order);
    const auto h = egf_fubini(opt.series_order);
    for (unsigned k = 0; k <= opt.series_order; ++k) {
      const auto ks = std::to_string(k);
      c.expect_equal("L(" + ks + ")", egf_counts(H, k), src.L(k));
      c.expect_equal("J(" + ks + ")", egf_counts(f, k), src.J(k));
      c.expect_equal("Fubini(" + ks + ")", egf_counts(h, k), src.Fubini(k));
    }
    c.expect("H = e^x * f", H == ps_exp(opt.series_order) * f);
    c.expect("f = 1/(1-x) composed with e^x+x-1",
             f == ps_compose(ps_geometric(opt.series_order), egf_block_choice(opt.series_order)));
    out.push_back(c.done());
  }
  {
    check_builder c("contract(expand(m)) = m for both theories", "exact");
    for (unsigned k = 0; k <= std::min(brute_max, 5u); ++k) {
      bool ok = true;
      enumerate_models(k, Adjacency::constrained, [&](const MulticoloredModel& m) {
        const auto d = expand_model(m);
        ok = ok && validate_description(d).ok() && contract_description(d, k) == m;
      });
      enumerate_models(k, Adjacency::unconstrained, [&](const MulticoloredModel& m) {
        const auto d = expand_colored(m);
        ok = ok && validate_colored(d, k).ok() && contract_colored(d, k) == m;
      });
      c.expect("k=" + std::to_string(k), ok);
    }
    out.push_back(c.done());
  }
  {
    const auto k = constants();
    check_builder c("asymptotic constants Z, R, S/R, M", "1e-5 / 1e-6 / 1e-6 / 1e-4");
    c.expect_near("Z", k.Z, printed_Z, 1e-5);
    c.expect_near("R", k.R, printed_R, 1e-6);
    c.expect_near("S/R", k.limit_ratio, printed_limit_ratio, 1e-6);
    c.expect_near("M", k.M, printed_M, 1e-4);
    c.expect_near("2 - Z - e^Z", 2.0 - k.Z - std::exp(k.Z), 0.0, 1e-12);
    out.push_back(c.done());
  }
  {
    check_builder c("A(k) matches printed terms", "1e-3 relative");
    for (unsigned k = 0; k <= std::min(opt.k_max, 4u); ++k)
      c.expect_near("A(" + std::to_string(k) + ")/printed", approx_A(k) / printed_A_terms[k], 1.0, 1e-3);
    out.push_back(c.done());
  }
  if (opt.k_max >= 12) {
    check_builder c("L(12)/A(12) -> 1 and J(12)/L(12) -> 1/W(e^2)", "1e-8 / 1e-3");
    const double la = ratio_to_double(src.L(12), 1) / approx_A(12);
    c.expect_near("L(12)/A(12)", la, 1.0, 1e-8);
    c.expect_near("J(12)/L(12)", ratio_to_double(src.J(12), src.L(12)), printed_limit_ratio, 1e-3);
    out.push_back(c.done());
  }
  return out;
}

/// Writes one line per check and returns the exit status: 0 when all pass,
/// 1 otherwise.
inline int report_checks(const std::vector<CheckResult>& results, std::ostream& os) {
  int failed = 0;
  for (const auto& r : results) {
    os << (r.passed ? "PASS  " : "FAIL  ") << r.name << " | " << r.values << " | tolerance "
       << r.tolerance << '\n';
    if (!r.passed) ++failed;
  }
  os << (failed == 0 ? "all " + std::to_string(results.size()) + " checks passed"
                     : std::to_string(failed) + " of " + std::to_string(results.size()) + " checks failed")
     << '\n';
  return failed == 0 ? 0 : 1;
}

}  // namespace homcount
