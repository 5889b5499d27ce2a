#pragma once

// Numeric evaluators for the probabilistic estimates: Chernoff tails,
// neighbourhood-colour-set collision probabilities, Suen's inequality, and
// the weighted ratio inequality for products of t^2 + (1-t)^2 factors.
//
// Products of factors in (0, 1] are accumulated as sums of logarithms in
// long double and exponentiated once.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "setchrome/error.hpp"

namespace setchrome::prob {

// P[X < (1-delta) mu] <= exp(-delta^2 mu / 2) for X binomial with mean mu.
inline double chernoff_lower(double mu, double delta) {
  if (!(mu > 0.0)) throw DomainError("chernoff_lower: mu must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("chernoff_lower: delta must lie in (0, 1)");
  return std::exp(-delta * delta * mu / 2.0);
}

// P[X > (1+delta) mu] <= exp(-delta^2 mu / (2 + delta)).
inline double chernoff_upper(double mu, double delta) {
  if (!(mu > 0.0)) throw DomainError("chernoff_upper: mu must be positive");
  if (!(delta > 0.0)) throw DomainError("chernoff_upper: delta must be positive");
  return std::exp(-delta * delta * mu / (2.0 + delta));
}

namespace detail {

inline void check_classes(std::span<const std::uint64_t> kappa, double p, const char* who) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError(std::string(who) + ": p must lie in (0, 1)");
  for (auto kap : kappa)
    if (kap < 1) throw DomainError(std::string(who) + ": class sizes must be positive");
}

// sum_i log(t_i^e + (1 - t_i)^e) with t_i = (1-p)^kappa_i.
inline long double log_power_sum(std::span<const std::uint64_t> kappa, double p, int e) {
  const long double log_q = std::log1p(-static_cast<long double>(p));
  long double acc = 0.0L;
  for (auto kap : kappa) {
    const long double t = std::exp(static_cast<long double>(kap) * log_q);
    acc += std::log(std::pow(t, e) + std::pow(1.0L - t, e));
  }
  return acc;
}

}  // namespace detail

// Probability that two vertices outside the classes, each joined to every
// class vertex independently with probability p, see the same set of classes:
// prod_i ([(1-p)^kappa_i]^2 + [1-(1-p)^kappa_i]^2).
inline double collision_probability(std::span<const std::uint64_t> kappa, double p) {
  detail::check_classes(kappa, p, "collision_probability");
  return static_cast<double>(std::exp(detail::log_power_sum(kappa, p, 2)));
}

// Same for three vertices: prod_i ([(1-p)^kappa_i]^3 + [1-(1-p)^kappa_i]^3).
inline double collision_probability_triple(std::span<const std::uint64_t> kappa, double p) {
  detail::check_classes(kappa, p, "collision_probability_triple");
  return static_cast<double>(std::exp(detail::log_power_sum(kappa, p, 3)));
}

struct SuenInputs {
  std::vector<std::uint64_t> kappa;
  double p = 0.5;
  double pair_count = 0.0;  // |I|
  double max_deg = 0.0;     // degree bound; 2 * max_deg neighbouring pairs per pair
};

struct SuenOutputs {
  double mu;
  double delta_big;    // upper bound on Delta
  double delta_small;  // upper bound on delta
  double bound;        // exp(-mu + Delta e^{2 delta})
};

// P(X = 0) <= exp(-mu + Delta e^{2 delta}) where
//   mu      = |I| P(A)
//   Delta  <= |I| (2 max_deg) P(A_xy A_yz)
//   delta  <= (2 max_deg) P(A).
// Callers pass max_deg = 2pn for the a.a.s. degree bound, giving the 4pn
// neighbour count, or the observed maximum degree of a sampled graph.
inline SuenOutputs suen_bound(const SuenInputs& in) {
  detail::check_classes(in.kappa, in.p, "suen_bound");
  if (!(in.pair_count >= 0.0)) throw DomainError("suen_bound: pair_count must be non-negative");
  if (!(in.max_deg >= 0.0)) throw DomainError("suen_bound: max_deg must be non-negative");
  const double pair = collision_probability(in.kappa, in.p);
  const double triple = collision_probability_triple(in.kappa, in.p);
  SuenOutputs out{};
  out.mu = in.pair_count * pair;
  out.delta_big = in.pair_count * (2.0 * in.max_deg) * triple;
  out.delta_small = 2.0 * in.max_deg * pair;
  out.bound = std::exp(-out.mu + out.delta_big * std::exp(2.0 * out.delta_small));
  return out;
}

struct HoelderCheck {
  double lhs;
  double rhs;
  double s;
  bool holds;
};

inline constexpr double kInequalitySlack = 1e-12;

// For x_i in [1/2, 1] and weights beta_i > 0, with a_i = x_i^2 + (1-x_i)^2 and
// s the beta-weighted geometric mean of the a_i:
//   lhs = prod (x_i^3 + (1-x_i)^3)^beta_i / prod a_i^beta_i
//   rhs = ((3s - 1) / (2s))^{sum beta_i}
// and lhs <= rhs, with equality when all x_i coincide. Unit weights give the
// k-fold product form.
inline HoelderCheck hoelder_ratio_check(std::span<const double> x, std::span<const double> beta) {
  if (x.empty()) throw DomainError("hoelder_ratio_check: need at least one x");
  if (x.size() != beta.size()) throw DomainError("hoelder_ratio_check: x and beta differ in length");
  long double log_a = 0.0L, log_cube = 0.0L, total = 0.0L;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const long double xi = x[i];
    const long double bi = beta[i];
    if (!(xi >= 0.5L && xi <= 1.0L)) throw DomainError("hoelder_ratio_check: x must lie in [1/2, 1]");
    if (!(bi > 0.0L)) throw DomainError("hoelder_ratio_check: weights must be positive");
    const long double a = xi * xi + (1.0L - xi) * (1.0L - xi);
    const long double c = xi * xi * xi + (1.0L - xi) * (1.0L - xi) * (1.0L - xi);
    log_a += bi * std::log(a);
    log_cube += bi * std::log(c);
    total += bi;
  }
  const long double s = std::exp(log_a / total);
  HoelderCheck out{};
  out.s = static_cast<double>(s);
  out.lhs = static_cast<double>(std::exp(log_cube - log_a));
  out.rhs = static_cast<double>(std::exp(total * std::log((3.0L * s - 1.0L) / (2.0L * s))));
  out.holds = out.lhs <= out.rhs + kInequalitySlack;
  return out;
}

inline HoelderCheck hoelder_ratio_check(std::span<const double> x) {
  std::vector<double> ones(x.size(), 1.0);
  return hoelder_ratio_check(x, ones);
}

}  // namespace setchrome::prob
