#ifndef ORTHOKIT_TYPING_HPP
#define ORTHOKIT_TYPING_HPP

#include <cmath>
#include <string>

#include "orthokit/core.hpp"
#include "orthokit/decomp.hpp"
#include "orthokit/ortho.hpp"

namespace orthokit {

// Per-point decomposition T(iz) = i s(z) T(z) + eta(z) with eta(z)
// orthogonal to T(z). For an isometry that preserves orthogonality,
// alpha(z) = <T(iz)|T(z)> (computed on the normalized point) is purely
// imaginary, s = Im(alpha) lies in [-1, 1], and s^2 + |eta|^2/|z|^2 = 1.
struct TypeProfile {
  ComplexVec point;
  Complex alpha;
  double s;
  ComplexVec eta;
  double eta_norm;
};

enum class PointType { Pure, Mixed };

inline TypeProfile type_profile(const RealLinearMap& t, const ComplexVec& z,
                                double tol = kDefaultTol) {
  if (!is_real_isometry(t, tol))
    throw PreconditionError("type_profile: map is not an isometry at tol");
  const double nz = norm(z);
  if (!(nz >= kMinVectorNorm))
    throw DegenerateError("type_profile: point vanishes");
  const ComplexVec u = (1.0 / nz) * z;
  const ComplexVec tu = apply(t, u);
  const ComplexVec tiu = apply(t, times_i(u));
  const Complex alpha = inner(tiu, tu);
  if (std::abs(alpha.real()) > tol)
    throw NotOrthogonalityPreservingEvidence(
        "type_profile: Re<T(iz)|T(z)> = " + std::to_string(alpha.real()) +
            " exceeds tol; the map does not preserve orthogonality",
        alpha.real());
  const ComplexVec eta = nz * (tiu - alpha * tu);
  return TypeProfile{z, alpha, alpha.imag(), eta, norm(eta)};
}

// Pure/Mixed threshold on |eta| rather than |s|: |eta| degrades linearly
// near the pure case while |s| only degrades quadratically. Ties go to Pure.
inline PointType classify_point(const TypeProfile& profile,
                                double tol = kDefaultTol) {
  return profile.eta_norm <= tol * norm(profile.point) ? PointType::Pure
                                                       : PointType::Mixed;
}

struct PropagationReport {
  TypeProfile profile0;
  TypeProfile profile1;
  bool s_equal;
  bool eta_norm_equal;
  bool sets_orthogonal;  // {T(x0), eta(x0)} against {T(x1), eta(x1)}

  bool all() const { return s_equal && eta_norm_equal && sets_orthogonal; }
};

// Checks the behavior of two orthogonal directions: for a genuine
// orthogonality-preserving isometry, s and |eta| agree across the pair and
// the image/defect sets are mutually orthogonal.
inline PropagationReport check_orthogonal_propagation(const RealLinearMap& t,
                                                      const ComplexVec& x0,
                                                      const ComplexVec& x1,
                                                      double tol = kDefaultTol) {
  if (!is_orthogonal(x0, x1, std::max(tol, 1e-8)))
    throw PreconditionError("check_orthogonal_propagation: points are not orthogonal");
  TypeProfile p0 = type_profile(t, x0, tol);
  TypeProfile p1 = type_profile(t, x1, tol);
  const bool s_equal = std::abs(p0.s - p1.s) <= tol;
  const bool eta_equal =
      std::abs(p0.eta_norm / norm(x0) - p1.eta_norm / norm(x1)) <= tol;
  const ComplexVec t0 = apply(t, x0);
  const ComplexVec t1 = apply(t, x1);
  const double cross = std::max(
      {std::abs(inner(t0, t1)), std::abs(inner(t0, p1.eta)),
       std::abs(inner(p0.eta, t1)), std::abs(inner(p0.eta, p1.eta))});
  const bool sets_orthogonal =
      cross <= tol * std::max(1.0, norm(x0) * norm(x1));
  return PropagationReport{std::move(p0), std::move(p1), s_equal, eta_equal,
                           sets_orthogonal};
}

}  // namespace orthokit

#endif  // ORTHOKIT_TYPING_HPP
