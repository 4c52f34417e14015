#pragma once

// Double-precision singularity analysis for the EGFs of L and J, and the
// growth-rate constant bounding I.

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "count.hpp"

namespace homcount {

/// Principal branch of the product logarithm on t >= 0: the w >= 0 with
/// w e^w = t. Halley iteration from ln(1 + t).
inline double lambert_w0(double t) {
  if (std::isnan(t)) return t;
  if (t < 0.0) throw std::domain_error("lambert_w0: negative argument " + std::to_string(t));
  if (t == 0.0) return 0.0;
  if (std::isinf(t)) return t;

  double w = std::log1p(t);
  for (int iter = 0; iter < 50; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - t;
    const double w1 = w + 1.0;
    const double step = f / (ew * w1 - (w + 2.0) * f / (2.0 * w1));
    w -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
  }
  return w;
}

/// Constants of the dominant-pole analysis.
struct AsymptoticConstants {
  double W = 0;            // W(e^2)
  double Z = 0;            // dominant pole of H and f, 2 - W(e^2)
  double R = 0;            // residue of H at Z
  double S = 0;            // residue of f at Z
  double limit_ratio = 0;  // S / R = 1 / W(e^2)
  double p_star = 0;       // maximizer of growth_profile on (0, 1/2)
  double M = 0;            // growth_profile(p_star)
};

/// (1/ln 2)^(1-p) * 2^((1-p) H2(p/(1-p))) with H2 the binary entropy.
/// Bounds the exponential growth of the I terms with a fraction p of
/// R-points.
inline double growth_profile(double p) {
  const double q = p / (1.0 - p);
  double entropy = 0.0;
  if (q > 0.0 && q < 1.0) entropy = -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
  return std::pow(1.0 / std::numbers::ln2, 1.0 - p) * std::exp2((1.0 - p) * entropy);
}

inline AsymptoticConstants constants() {
  AsymptoticConstants c;
  const double e2 = std::exp(2.0);
  c.W = lambert_w0(e2);
  const double eW = std::exp(c.W);
  c.Z = 2.0 - c.W;
  c.R = -e2 / (eW + e2);
  c.S = -eW / (eW + e2);
  c.limit_ratio = c.S / c.R;
  const double root = std::sqrt(1.0 + 4.0 * std::numbers::ln2);
  c.p_star = (-1.0 + root) / (2.0 * root);
  c.M = growth_profile(c.p_star);
  return c;
}

/// Maximum of growth_profile over a uniform grid on (0, 1/2); a cross-check
/// of the closed-form maximizer.
inline double growth_profile_grid_max(int steps = 100000) {
  double best = 0.0;
  for (int i = 1; i < steps; ++i) best = std::max(best, growth_profile(0.5 * i / steps));
  return best;
}

inline constexpr unsigned approx_A_max_k = 170;

/// ln A(k) with A(k) = -k! R (1/Z)^(k+1).
inline double log_approx_A(unsigned k) {
  if (k > approx_A_max_k)
    throw std::out_of_range("approx_A: k=" + std::to_string(k) + " beyond " +
                            std::to_string(approx_A_max_k));
  const auto c = constants();
  return std::lgamma(static_cast<double>(k) + 1.0) + std::log(-c.R) -
         (static_cast<double>(k) + 1.0) * std::log(c.Z);
}

/// A(k) = -k! R (1/Z)^(k+1), the first-order approximation of L(k).
/// Throws std::overflow_error where A(k) exceeds the double range.
inline double approx_A(unsigned k) {
  if (k > approx_A_max_k)
    throw std::out_of_range("approx_A: k=" + std::to_string(k) + " beyond " +
                            std::to_string(approx_A_max_k));
  const auto c = constants();
  if (k <= 20) {
    double fact = 1.0;
    for (unsigned i = 2; i <= k; ++i) fact *= i;
    return -fact * c.R * std::pow(1.0 / c.Z, k + 1);
  }
  const double value = std::exp(log_approx_A(k));
  if (!std::isfinite(value))
    throw std::overflow_error("approx_A: A(" + std::to_string(k) + ") exceeds double range");
  return value;
}

inline double growth_bound_M() { return constants().M; }

inline constexpr double printed_growth_base = 2.123;

/// I(k) / (k! 2.123^k).
inline double bound_ratio_I(unsigned k) {
  return std::exp(log_of(count_I(k)) - log_of(factorial(k)) -
                  static_cast<double>(k) * std::log(printed_growth_base));
}

struct RatioRow {
  unsigned k = 0;
  double L_over_A = 0;
  double J_over_L = 0;
};

/// L(k)/A(k) and J(k)/L(k) for k = 0..k_max. Ratios are taken in log space
/// so they stay finite where A(k) itself overflows.
inline std::vector<RatioRow> ratio_report(unsigned k_max) {
  if (k_max > approx_A_max_k)
    throw std::out_of_range("ratio_report: k_max=" + std::to_string(k_max) + " beyond " +
                            std::to_string(approx_A_max_k));
  std::vector<RatioRow> rows;
  rows.reserve(k_max + 1);
  for (unsigned k = 0; k <= k_max; ++k) {
    const BigCount L = count_L(k);
    RatioRow row;
    row.k = k;
    row.L_over_A = k <= 20 ? L.convert_to<double>() / approx_A(k)
                           : std::exp(log_of(L) - log_approx_A(k));
    row.J_over_L = ratio_to_double(j_surjective(k), L);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace homcount
