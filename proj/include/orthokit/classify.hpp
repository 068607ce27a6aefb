#ifndef ORTHOKIT_CLASSIFY_HPP
#define ORTHOKIT_CLASSIFY_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthokit/core.hpp"
#include "orthokit/decomp.hpp"
#include "orthokit/ortho.hpp"
#include "orthokit/rng.hpp"
#include "orthokit/typing.hpp"

namespace orthokit {

// Residual threshold deciding range membership for criterion (d). Sits far
// below the range gap c of every mixed-type map the suite generates.
inline constexpr double kMembershipTol = 1e-8;

// Witness that A = gamma * T where T satisfies the Gram identity
// <Tx|Ty> = Re<x|y> + i s Im<x|y>. The identity forces orthogonality
// preservation; s = +1 is the complex-linear case, s = -1 conjugate-linear,
// |s| < 1 genuinely mixed. s = 0 still preserves orthogonality but only in
// one direction, hence the both_directions flag.
struct OPCertificate {
  double gamma;
  double s;
  double c;  // sqrt(1 - s^2), derived
  bool both_directions;
  // Per basis direction: (T(e_j), eta(e_j)).
  std::vector<std::pair<ComplexVec, ComplexVec>> basis_data;
};

enum class Classification {
  Zero,
  ComplexLinear,
  ConjugateLinear,
  MixedType,
  NotOrthogonalityPreserving,
};

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::Zero: return "zero";
    case Classification::ComplexLinear: return "complex_linear";
    case Classification::ConjugateLinear: return "conjugate_linear";
    case Classification::MixedType: return "mixed";
    case Classification::NotOrthogonalityPreserving:
      return "not_orthogonality_preserving";
  }
  return "unknown";
}

enum class OPStatus { ZeroMap, Certified, NotPreserving };

struct OPDecision {
  OPStatus status;
  std::optional<OPCertificate> certificate;

  // The zero map preserves orthogonality trivially.
  bool preserving() const { return status != OPStatus::NotPreserving; }
};

// Decides orthogonality preservation by factoring A = gamma * T and
// verifying the Gram identity on every real basis pair {e_j, i e_j}. Both
// sides of the identity are real-bilinear, so equality on the basis pairs
// is equality everywhere.
inline OPDecision is_orthogonality_preserving(const RealLinearMap& a,
                                              double tol = kDefaultTol) {
  if (a.dim_h() < 2)
    throw DimensionError(
        "is_orthogonality_preserving: domain dimension must be >= 2");
  if (a.is_zero()) return OPDecision{OPStatus::ZeroMap, std::nullopt};

  ScaledIsometry factored{0.0, RealLinearMap::zero(a.dim_h(), a.dim_k())};
  try {
    factored = wojcik_decompose(a, tol);
  } catch (const NotScaledIsometry&) {
    return OPDecision{OPStatus::NotPreserving, std::nullopt};
  }
  const RealLinearMap& t = factored.isometry;
  const std::size_t m = t.dim_h();

  std::vector<ComplexVec> te, tie;
  te.reserve(m);
  tie.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const ComplexVec ej = unit_vector(m, j);
    te.push_back(apply(t, ej));
    tie.push_back(apply(t, times_i(ej)));
  }

  // One-pass estimate from the first direction, then a global check.
  double s = inner(tie[0], te[0]).imag();
  s = std::clamp(s, -1.0, 1.0);

  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      const Complex delta = (j == k) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      const Complex is_delta = kImagUnit * s * delta;
      if (std::abs(inner(te[j], te[k]) - delta) > tol ||
          std::abs(inner(tie[j], tie[k]) - delta) > tol ||
          std::abs(inner(tie[j], te[k]) - is_delta) > tol ||
          std::abs(inner(te[j], tie[k]) + is_delta) > tol)
        return OPDecision{OPStatus::NotPreserving, std::nullopt};
    }
  }

  OPCertificate cert;
  cert.gamma = factored.gamma;
  cert.s = s;
  cert.c = std::sqrt(std::max(0.0, 1.0 - s * s));
  cert.both_directions = std::abs(s) > tol;
  cert.basis_data.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const Complex alpha_j = inner(tie[j], te[j]);
    cert.basis_data.emplace_back(te[j], tie[j] - alpha_j * te[j]);
  }
  return OPDecision{OPStatus::Certified, std::move(cert)};
}

// Distance from v to the range {T(x)} of the real-linear map, computed as
// the least-squares residual of the real coordinates of v against the
// column space of the real form. Modified Gram-Schmidt with one
// re-orthogonalization pass; rank-deficient columns are dropped.
inline double range_distance(const RealLinearMap& t, const ComplexVec& v) {
  if (v.dim() != t.dim_k())
    throw DimensionError("range_distance: vector not in the codomain");
  const RMatrix m = real_form(t);
  std::vector<std::vector<double>> basis;
  std::vector<double> col(m.rows);
  for (std::size_t j = 0; j < m.cols; ++j) {
    for (std::size_t r = 0; r < m.rows; ++r) col[r] = m.at(r, j);
    double orig = 0.0;
    for (double x : col) orig += x * x;
    orig = std::sqrt(orig);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        double dot = 0.0;
        for (std::size_t r = 0; r < m.rows; ++r) dot += q[r] * col[r];
        for (std::size_t r = 0; r < m.rows; ++r) col[r] -= dot * q[r];
      }
    }
    double nrm = 0.0;
    for (double x : col) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (nrm > 1e-13 * std::max(1.0, orig)) {
      std::vector<double> q(m.rows);
      for (std::size_t r = 0; r < m.rows; ++r) q[r] = col[r] / nrm;
      basis.push_back(std::move(q));
    }
  }
  std::vector<double> res = real_coords(v);
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : basis) {
      double dot = 0.0;
      for (std::size_t r = 0; r < res.size(); ++r) dot += q[r] * res[r];
      for (std::size_t r = 0; r < res.size(); ++r) res[r] -= dot * q[r];
    }
  }
  double out = 0.0;
  for (double x : res) out += x * x;
  return std::sqrt(out);
}

struct CriteriaReport {
  bool b;  // T(i e_1) is +/- i T(e_1)
  bool c;  // same test at a random nonzero point
  bool d;  // i T(e_1) lies in the range of T
};

struct ClassificationResult {
  Classification kind;
  std::optional<OPCertificate> certificate;
  CriteriaReport criteria;
};

namespace detail {

inline bool plus_minus_i_match(const RealLinearMap& t, const ComplexVec& z,
                               double tol) {
  const ComplexVec tz = apply(t, z);
  const ComplexVec tiz = apply(t, times_i(z));
  const ComplexVec itz = times_i(tz);
  const double bound = tol * std::max(1.0, norm(z));
  return norm(tiz - itz) <= bound || norm(tiz + itz) <= bound;
}

inline CriteriaReport criteria_for(const RealLinearMap& normalized,
                                   double tol, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t m = normalized.dim_h();
  const ComplexVec e1 = unit_vector(m, 0);
  const bool b = plus_minus_i_match(normalized, e1, tol);
  ComplexVec z = rng.gaussian_vec(m);
  while (norm(z) < 1e-6) z = rng.gaussian_vec(m);
  const bool c = plus_minus_i_match(normalized, z, tol);
  const ComplexVec ite1 = times_i(apply(normalized, e1));
  const bool d = range_distance(normalized, ite1) <=
                 kMembershipTol * std::max(norm(ite1), 1e-300);
  return CriteriaReport{b, c, d};
}

}  // namespace detail

// Full classification: Zero / ComplexLinear / ConjugateLinear / MixedType /
// NotOrthogonalityPreserving, with the three algebraic criteria evaluated
// independently of the certificate.
inline ClassificationResult classify_map(const RealLinearMap& a,
                                         double tol = kDefaultTol,
                                         std::uint64_t seed = 0) {
  if (a.dim_h() < 2)
    throw DimensionError("classify_map: domain dimension must be >= 2");
  if (a.is_zero())
    return ClassificationResult{Classification::Zero, std::nullopt,
                                CriteriaReport{true, true, true}};

  OPDecision decision = is_orthogonality_preserving(a, tol);
  const RealLinearMap normalized = scale(1.0 / trace_gamma(a), a);
  const CriteriaReport criteria = detail::criteria_for(normalized, tol, seed);

  if (!decision.certificate)
    return ClassificationResult{Classification::NotOrthogonalityPreserving,
                                std::nullopt, criteria};
  const double s = decision.certificate->s;
  Classification kind = Classification::MixedType;
  if (s >= 1.0 - tol)
    kind = Classification::ComplexLinear;
  else if (s <= -1.0 + tol)
    kind = Classification::ConjugateLinear;
  return ClassificationResult{kind, std::move(decision.certificate), criteria};
}

struct EquivalenceReport {
  bool a;  // certificate says complex-linear or conjugate-linear
  bool b;  // T(iz) in {+/- i T(z)} at 100 seeded points
  bool c;  // same at one point
  bool d;  // i T(e_1) in the range

  bool coherent() const { return a == b && b == c && c == d; }
};

// Evaluates the four equivalent characterizations independently. For any
// orthogonality-preserving map all four must agree.
inline EquivalenceReport theorem_equivalence_check(const RealLinearMap& a,
                                                   double tol = kDefaultTol,
                                                   std::uint64_t seed = 0) {
  OPDecision decision = is_orthogonality_preserving(a, tol);
  if (!decision.certificate)
    throw PreconditionError(
        "theorem_equivalence_check: map does not preserve orthogonality");
  const OPCertificate& cert = *decision.certificate;
  const RealLinearMap t = scale(1.0 / cert.gamma, a);
  const std::size_t m = t.dim_h();

  const bool crit_a = std::abs(cert.s) >= 1.0 - tol;

  Rng rng(seed);
  bool crit_b = true;
  for (int i = 0; i < 100 && crit_b; ++i) {
    ComplexVec z = rng.gaussian_vec(m);
    while (norm(z) < 1e-6) z = rng.gaussian_vec(m);
    crit_b = detail::plus_minus_i_match(t, z, tol);
  }
  ComplexVec z = rng.gaussian_vec(m);
  while (norm(z) < 1e-6) z = rng.gaussian_vec(m);
  const bool crit_c = detail::plus_minus_i_match(t, z, tol);

  const ComplexVec ite1 = times_i(apply(t, unit_vector(m, 0)));
  const bool crit_d =
      range_distance(t, ite1) <= kMembershipTol * std::max(norm(ite1), 1e-300);
  return EquivalenceReport{crit_a, crit_b, crit_c, crit_d};
}

struct OracleReport {
  bool preserved;
  // On failure, an orthogonal pair whose images are not orthogonal.
  std::optional<std::pair<ComplexVec, ComplexVec>> witness;
};

// Brute-force check of the defining property on sampled orthogonal pairs.
// This is the independent oracle the Gram-identity decision is validated
// against.
inline OracleReport sampling_oracle_report(const RealLinearMap& a,
                                           std::size_t samples,
                                           std::uint64_t seed,
                                           double tol = kDefaultTol) {
  if (a.dim_h() < 2)
    throw DimensionError("sampling_oracle: domain dimension must be >= 2");
  if (samples < 1)
    throw PreconditionError("sampling_oracle: samples must be >= 1");
  const auto pairs = sample_orthogonal_pairs(a.dim_h(), samples, seed);
  for (const auto& [x, y] : pairs) {
    if (!is_orthogonal(apply(a, x), apply(a, y), tol))
      return OracleReport{false, std::make_pair(x, y)};
  }
  return OracleReport{true, std::nullopt};
}

inline bool sampling_oracle(const RealLinearMap& a, std::size_t samples,
                            std::uint64_t seed, double tol = kDefaultTol) {
  return sampling_oracle_report(a, samples, seed, tol).preserved;
}

// Finite-dimension bound: a certificate with |s| < 1 can only exist when
// the codomain holds 2m orthonormal vectors, i.e. n >= 2m.
inline bool dimension_bound_check(std::size_t m, std::size_t n,
                                  const OPCertificate& certificate) {
  return n >= 2 * m || std::abs(certificate.s) >= 1.0 - 1e-6;
}

}  // namespace orthokit

#endif  // ORTHOKIT_CLASSIFY_HPP
