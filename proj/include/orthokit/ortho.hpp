#ifndef ORTHOKIT_ORTHO_HPP
#define ORTHOKIT_ORTHO_HPP

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "orthokit/core.hpp"
#include "orthokit/rng.hpp"

namespace orthokit {

// Vectors below this norm are treated as degenerate rather than normalized.
inline constexpr double kMinVectorNorm = 1e-300;

// Euclidean orthogonality with a relative tolerance: scale-free for both
// tiny and huge vectors.
inline bool is_orthogonal(const ComplexVec& x, const ComplexVec& y, double tol) {
  if (tol <= 0.0) throw PreconditionError("is_orthogonal: tol must be > 0");
  const double bound = tol * std::max(1.0, norm(x) * norm(y));
  return std::abs(inner(x, y)) <= bound;
}

struct BirkhoffResult {
  Complex minimizer;  // alpha* attaining min over alpha of |x + alpha y|
  double min_value;
};

// Closed-form minimum of |x + alpha y| over complex alpha. x is
// Birkhoff-orthogonal to y exactly when the minimum equals |x|, which in an
// inner product space coincides with <x|y> = 0.
inline BirkhoffResult birkhoff_min(const ComplexVec& x, const ComplexVec& y) {
  const double ny2 = norm_squared(y);
  if (!(std::sqrt(ny2) >= kMinVectorNorm))
    throw DegenerateError("birkhoff_min: y vanishes");
  const Complex g = inner(x, y);
  const Complex alpha = -g / ny2;
  const double val2 = norm_squared(x) - std::norm(g) / ny2;
  return BirkhoffResult{alpha, std::sqrt(std::max(0.0, val2))};
}

// w minus its component along z; the returned vector is orthogonal to z and
// differs from w by a complex multiple of z.
inline ComplexVec project_orthogonal(const ComplexVec& w, const ComplexVec& z) {
  const double nz2 = norm_squared(z);
  if (!(std::sqrt(nz2) >= kMinVectorNorm))
    throw DegenerateError("project_orthogonal: z vanishes");
  const Complex coeff = inner(w, z) / nz2;
  ComplexVec out(w.dim());
  for (std::size_t j = 0; j < w.dim(); ++j) out[j] = w[j] - coeff * z[j];
  return out;
}

// Deterministic stream of nonzero orthogonal pairs: Gaussian draws with the
// second vector projected against the first. Re-draws on near-collinear
// pairs so both members stay well away from zero.
inline std::vector<std::pair<ComplexVec, ComplexVec>> sample_orthogonal_pairs(
    std::size_t m, std::size_t count, std::uint64_t seed) {
  if (m < 2)
    throw DimensionError("sample_orthogonal_pairs: need dimension >= 2");
  if (count < 1)
    throw PreconditionError("sample_orthogonal_pairs: count must be >= 1");
  Rng rng(seed);
  std::vector<std::pair<ComplexVec, ComplexVec>> pairs;
  pairs.reserve(count);
  while (pairs.size() < count) {
    ComplexVec x = rng.gaussian_vec(m);
    const double nx = norm(x);
    if (nx < 1e-6) continue;
    ComplexVec y = project_orthogonal(rng.gaussian_vec(m), x);
    const double ny = norm(y);
    if (ny < 1e-6) continue;
    // One re-projection pass tightens |<x|y>| to O(eps * |x||y|).
    y = project_orthogonal(y, x);
    pairs.emplace_back(std::move(x), std::move(y));
  }
  return pairs;
}

}  // namespace orthokit

#endif  // ORTHOKIT_ORTHO_HPP
