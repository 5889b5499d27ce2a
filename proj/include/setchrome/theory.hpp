#pragma once

// Closed-form parameter functions of (n, p). Throughout, lg is log base 2 and
// log is the natural logarithm.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "setchrome/error.hpp"
#include "setchrome/format.hpp"

namespace setchrome::theory {

// Per-class collision factor f(l) = [(1-p)^l]^2 + [1-(1-p)^l]^2, evaluated in
// the form 2[(1-p)^l - 1/2]^2 + 1/2.
inline double class_factor(double p, double l) {
  const double t = std::exp(l * std::log1p(-p));
  const double d = t - 0.5;
  return 2.0 * d * d + 0.5;
}

struct SEll0 {
  double s;
  std::uint64_t ell0;
};

inline void require_open_unit(double p, const char* who) {
  if (!(p > 0.0 && p < 1.0)) throw ParameterError(std::string(who) + ": p must lie in (0, 1)");
}

// s(p) = min over l >= 1 of f(l), with the smallest minimising l.
// (1-p)^l decreases in l and f is a parabola in (1-p)^l centred at 1/2, so the
// minimiser is floor or ceil of log(1/2)/log(1-p); one extra candidate on each
// side absorbs rounding in the quotient. Values within 1e-15 count as a tie.
inline SEll0 s_and_ell0(double p) {
  require_open_unit(p, "s_and_ell0");
  const double x = std::log(0.5) / std::log1p(-p);
  const double lo = std::max(1.0, std::floor(x) - 1.0);
  const double hi = std::max(1.0, std::ceil(x) + 1.0);
  SEll0 best{class_factor(p, lo), static_cast<std::uint64_t>(lo)};
  for (double l = lo + 1.0; l <= hi; l += 1.0) {
    const double f = class_factor(p, l);
    if (f < best.s - 1e-15) best = {f, static_cast<std::uint64_t>(l)};
  }
  return best;
}

inline double s_of(double p) { return s_and_ell0(p).s; }

// r = 2 / lg(1/s), the constant-p coefficient of lg n.
inline double r_const(double p) { return -2.0 / std::log2(s_of(p)); }

// r solving n^2 p s^{r lg n} = 1.
inline double r_upper(double n, double p) {
  require_open_unit(p, "r_upper");
  if (!(n >= 2.0)) throw DomainError("r_upper: n must be at least 2");
  const double lhs = 2.0 * std::log2(n) + std::log2(p);
  if (!(lhs > 0.0)) throw DomainError("r_upper: n^2 p must exceed 1");
  return lhs / (-std::log2(s_of(p)) * std::log2(n));
}

// r_upper(n, p) * lg n = lg(n^2 p) / lg(1/s), without the round trip through lg n.
inline double r_upper_lg_n(double n, double p) {
  r_upper(n, p);
  return (2.0 * std::log2(n) + std::log2(p)) / -std::log2(s_of(p));
}

// 2(lg(np) - lg log n - lg log(np)), shared by r_lower and the sparse envelope.
inline double sparse_lower_numerator(double n, double p) {
  const double np = n * p;
  return 2.0 * (std::log2(np) - std::log2(std::log(n)) - std::log2(std::log(np)));
}

// r solving (np)^2 s^{r lg n} = (log^2 n)(log^2 (np)).
inline double r_lower(double n, double p) {
  require_open_unit(p, "r_lower");
  if (!(n >= 3.0)) throw DomainError("r_lower: n must be at least 3");
  if (!(n * p > 1.0)) throw DomainError("r_lower: np must exceed 1");
  return -sparse_lower_numerator(n, p) / (std::log2(n) * std::log2(s_of(p)));
}

enum class Regime { DenseConst, Polynomial, Subpolynomial };

inline std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::DenseConst: return "dense-const";
    case Regime::Polynomial: return "polynomial";
    case Regime::Subpolynomial: return "subpolynomial";
  }
  return "?";
}

// Finite-n stand-ins for the asymptotic regime boundaries.
struct RegimeThresholds {
  double p_const = 0.01;     // p at or above this is treated as constant
  double alpha_poly = 0.05;  // np = n^alpha with alpha at or above this is polynomial
};

struct Envelope {
  double lower;
  double upper;
  Regime regime;
  double alpha;
  // Trivial sandwich lg chi + 1 <= chi_s <= chi with chi replaced by the
  // first-order estimate n log(1/(1-p)) / (2 log(np)) of chi(G(n,p)).
  // Absent when np <= e, where that estimate is meaningless.
  std::optional<double> trivial_lower;
  std::optional<double> trivial_upper;
  // np > (log^2 n)(log^2 np): the range where the lower envelope is proved.
  bool in_hypothesis_range;
};

inline Envelope theorem_envelope(double n, double p, RegimeThresholds th = {}) {
  require_open_unit(p, "theorem_envelope");
  if (!(n >= 3.0)) throw ParameterError("theorem_envelope: n must be at least 3");
  const double lg_n = std::log2(n);
  const double np = n * p;
  Envelope e{};
  e.alpha = std::log(np) / std::log(n);
  if (p >= th.p_const) {
    e.regime = Regime::DenseConst;
    e.lower = e.upper = r_const(p) * lg_n;
  } else if (e.alpha >= th.alpha_poly) {
    e.regime = Regime::Polynomial;
    e.lower = 2.0 * e.alpha * lg_n;
    e.upper = (1.0 + e.alpha) * lg_n;
  } else {
    e.regime = Regime::Subpolynomial;
    // Below np = e the lg log(np) term turns positive and the bound is vacuous.
    e.lower = np >= std::exp(1.0) ? sparse_lower_numerator(n, p) : 0.0;
    e.upper = lg_n;
  }
  if (np > std::exp(1.0)) {
    const double chi = std::clamp(n * -std::log1p(-p) / (2.0 * std::log(np)), 1.0, n);
    e.trivial_lower = std::log2(chi) + 1.0;
    e.trivial_upper = chi;
  }
  const double ln_n = std::log(n);
  const double ln_np = std::log(np);
  e.in_hypothesis_range = np > 1.0 && np > ln_n * ln_n * ln_np * ln_np;
  return e;
}

struct TheoryPoint {
  double n;
  double p;
  std::uint64_t ell0;
  double s;
  double r_const;
  std::optional<double> r_upper;
  std::optional<double> r_lower;
  double alpha;
  Envelope envelope;
};

inline TheoryPoint theory_point(double n, double p, RegimeThresholds th = {}) {
  const auto [s, ell0] = s_and_ell0(p);
  TheoryPoint t{n, p, ell0, s, -2.0 / std::log2(s), std::nullopt, std::nullopt, 0.0,
                theorem_envelope(n, p, th)};
  try {
    t.r_upper = r_upper(n, p);
  } catch (const DomainError&) {
  }
  try {
    t.r_lower = r_lower(n, p);
  } catch (const DomainError&) {
  }
  t.alpha = t.envelope.alpha;
  return t;
}

struct ZigzagRow {
  double p;
  std::uint64_t ell0;
  double s;
  double r;
  std::optional<double> r_upper;
  std::optional<double> r_lower;
};

// Rows at p_min, p_min + step, ..., p_max. With n given, the two sparse r
// variants are filled in where defined.
inline std::vector<ZigzagRow> zigzag_table(double p_min, double p_max, double step,
                                           std::optional<double> n = std::nullopt) {
  if (!(p_min > 0.0 && p_min < p_max && p_max < 1.0 && step > 0.0))
    throw ParameterError("zigzag_table: need 0 < p_min < p_max < 1 and step > 0");
  std::vector<ZigzagRow> rows;
  for (double p : linear_grid(p_min, p_max, step)) {
    const auto [s, ell0] = s_and_ell0(p);
    ZigzagRow row{p, ell0, s, -2.0 / std::log2(s), std::nullopt, std::nullopt};
    if (n) {
      try {
        row.r_upper = r_upper(*n, p);
      } catch (const DomainError&) {
      }
      try {
        row.r_lower = r_lower(*n, p);
      } catch (const DomainError&) {
      }
    }
    rows.push_back(row);
  }
  return rows;
}

inline void write_zigzag_csv(std::ostream& out, const std::vector<ZigzagRow>& rows, bool with_n) {
  out << "p,ell0,s,r" << (with_n ? ",r_upper,r_lower" : "") << '\n';
  auto opt = [](const std::optional<double>& v) { return v ? fmt12(*v) : std::string(); };
  for (const auto& row : rows) {
    out << fmt12(row.p) << ',' << row.ell0 << ',' << fmt12(row.s) << ',' << fmt12(row.r);
    if (with_n) out << ',' << opt(row.r_upper) << ',' << opt(row.r_lower);
    out << '\n';
  }
}

}  // namespace setchrome::theory
