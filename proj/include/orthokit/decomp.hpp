#ifndef ORTHOKIT_DECOMP_HPP
#define ORTHOKIT_DECOMP_HPP

#include <cmath>
#include <string>

#include "orthokit/core.hpp"

namespace orthokit {

inline constexpr double kDefaultTol = 1e-9;

// Factorization A = gamma * T with gamma > 0 and T a real-linear isometry.
struct ScaledIsometry {
  double gamma;
  RealLinearMap isometry;
};

namespace detail {

// Gram matrix M^T M of the real form, the whole story of norm behavior:
// A is a scaled isometry exactly when this is gamma^2 * I.
inline RMatrix real_gram(const RealLinearMap& a) {
  const RMatrix m = real_form(a);
  RMatrix g(m.cols, m.cols);
  for (std::size_t i = 0; i < m.cols; ++i) {
    for (std::size_t j = i; j < m.cols; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < m.rows; ++r) acc += m.at(r, i) * m.at(r, j);
      g.at(i, j) = acc;
      g.at(j, i) = acc;
    }
  }
  return g;
}

}  // namespace detail

// Root-mean-square column norm of the real form; equals gamma for scaled
// isometries and is defined for every nonzero map.
inline double trace_gamma(const RealLinearMap& a) {
  const RMatrix g = detail::real_gram(a);
  double trace = 0.0;
  for (std::size_t i = 0; i < g.rows; ++i) trace += g.at(i, i);
  return std::sqrt(trace / static_cast<double>(g.rows));
}

inline bool is_real_isometry(const RealLinearMap& a, double tol = kDefaultTol) {
  const RMatrix g = detail::real_gram(a);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.rows; ++i)
    for (std::size_t j = 0; j < g.cols; ++j)
      worst = std::max(worst, std::abs(g.at(i, j) - (i == j ? 1.0 : 0.0)));
  return worst <= tol;
}

// Detects A = gamma * T and extracts the factorization. gamma is estimated
// from the trace of the real Gram matrix so all directions contribute
// symmetrically; the residual test is relative to gamma^2.
inline ScaledIsometry wojcik_decompose(const RealLinearMap& a,
                                       double tol = kDefaultTol) {
  if (a.dim_h() < 2)
    throw DimensionError("wojcik_decompose: domain dimension must be >= 2");
  if (a.is_zero()) throw ZeroMapError("wojcik_decompose: zero map");
  const RMatrix g = detail::real_gram(a);
  double trace = 0.0;
  for (std::size_t i = 0; i < g.rows; ++i) trace += g.at(i, i);
  const double gamma2 = trace / static_cast<double>(g.rows);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.rows; ++i)
    for (std::size_t j = 0; j < g.cols; ++j)
      worst = std::max(worst, std::abs(g.at(i, j) - (i == j ? gamma2 : 0.0)));
  if (worst > tol * gamma2)
    throw NotScaledIsometry(
        "wojcik_decompose: real Gram matrix deviates from gamma^2 * I by " +
        std::to_string(worst) + " (limit " + std::to_string(tol * gamma2) +
        "); the map cannot preserve orthogonality");
  const double gamma = std::sqrt(gamma2);
  return ScaledIsometry{gamma, scale(1.0 / gamma, a)};
}

}  // namespace orthokit

#endif  // ORTHOKIT_DECOMP_HPP
