#ifndef ORTHOKIT_SYNTH_HPP
#define ORTHOKIT_SYNTH_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orthokit/classify.hpp"
#include "orthokit/core.hpp"
#include "orthokit/decomp.hpp"
#include "orthokit/rng.hpp"

namespace orthokit {

namespace detail {

inline double orthonormality_residual(const CMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.cols; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      Complex dot{0.0, 0.0};
      for (std::size_t r = 0; r < m.rows; ++r)
        dot += m.at(r, i) * std::conj(m.at(r, j));
      worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

// Modified Gram-Schmidt over the complex inner product, repeated until the
// orthonormality residual drops below 1e-12.
inline void orthonormalize_columns(CMatrix& m) {
  for (int sweep = 0; sweep < 4; ++sweep) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      ComplexVec col = m.column(j);
      for (std::size_t i = 0; i < j; ++i) {
        const ComplexVec q = m.column(i);
        const Complex dot = inner(col, q);
        for (std::size_t r = 0; r < m.rows; ++r) col[r] -= dot * q[r];
      }
      const double nrm = norm(col);
      if (nrm < 1e-8)
        throw DegenerateError("orthonormalize_columns: dependent columns");
      m.set_column(j, (1.0 / nrm) * col);
    }
    if (orthonormality_residual(m) <= 1e-12) return;
  }
  throw DegenerateError("orthonormalize_columns: residual did not converge");
}

inline CMatrix random_orthonormal_columns(std::size_t rows, std::size_t count,
                                          Rng& rng) {
  if (count > rows)
    throw DimensionError("random_orthonormal_columns: count exceeds rows");
  CMatrix m = rng.gaussian_matrix(rows, count);
  orthonormalize_columns(m);
  return m;
}

// Extends the given orthonormal vectors to a full orthonormal basis of C^n,
// greedily picking the standard basis vector with the largest residual.
inline std::vector<ComplexVec> orthonormal_extension(
    std::vector<ComplexVec> vectors, std::size_t n) {
  while (vectors.size() < n) {
    ComplexVec best(n);
    double best_norm = -1.0;
    for (std::size_t l = 0; l < n; ++l) {
      ComplexVec cand = unit_vector(n, l);
      for (const ComplexVec& q : vectors) {
        const Complex dot = inner(cand, q);
        for (std::size_t r = 0; r < n; ++r) cand[r] -= dot * q[r];
      }
      const double nrm = norm(cand);
      if (nrm > best_norm) {
        best_norm = nrm;
        best = std::move(cand);
      }
    }
    // Second projection pass on the winner keeps the basis orthonormal to
    // machine precision.
    for (const ComplexVec& q : vectors) {
      const Complex dot = inner(best, q);
      for (std::size_t r = 0; r < n; ++r) best[r] -= dot * q[r];
    }
    vectors.push_back((1.0 / norm(best)) * best);
  }
  return vectors;
}

}  // namespace detail

// Parameters of the canonical orthogonality-preserving isometry
// T(e_j) = k_j, T(i e_j) = i s k_j + sigma(j) c k_tilde_j with c = sqrt(1-s^2).
// The columns {k_j} and {k_tilde_j} together must be orthonormal, which
// forces dim_k >= 2 dim_h whenever |s| < 1.
struct CanonicalSpec {
  std::size_t dim_h = 0;
  std::size_t dim_k = 0;
  double s = 1.0;
  std::vector<int> sigma;   // entries +/-1, length dim_h
  CMatrix domain_basis;     // dim_h x dim_h unitary, columns e_j
  CMatrix codomain_k;       // dim_k x dim_h, columns k_j
  CMatrix codomain_ktilde;  // dim_k x dim_h, columns k_tilde_j; unused if |s|=1

  double c() const { return std::sqrt(std::max(0.0, 1.0 - s * s)); }
  bool mixed() const { return std::abs(s) < 1.0; }

  void validate() const {
    if (dim_h < 2) throw DimensionError("CanonicalSpec: dim_h must be >= 2");
    if (std::abs(s) > 1.0) throw SpecError("CanonicalSpec: |s| must be <= 1");
    if (sigma.size() != dim_h)
      throw SpecError("CanonicalSpec: sigma must have one sign per direction");
    for (int sg : sigma)
      if (sg != 1 && sg != -1) throw SpecError("CanonicalSpec: sigma entries must be +/-1");
    if (mixed() && dim_k < 2 * dim_h)
      throw InsufficientCodomain(
          "CanonicalSpec: |s| < 1 requires dim_k >= 2*dim_h (got dim_k = " +
          std::to_string(dim_k) + ", dim_h = " + std::to_string(dim_h) + ")");
    if (!mixed() && dim_k < dim_h)
      throw InsufficientCodomain("CanonicalSpec: |s| = 1 requires dim_k >= dim_h");
    if (domain_basis.rows != dim_h || domain_basis.cols != dim_h)
      throw SpecError("CanonicalSpec: domain_basis must be dim_h x dim_h");
    if (codomain_k.rows != dim_k || codomain_k.cols != dim_h)
      throw SpecError("CanonicalSpec: codomain_k must be dim_k x dim_h");
    if (detail::orthonormality_residual(domain_basis) > 1e-12)
      throw SpecError("CanonicalSpec: domain_basis is not unitary");
    CMatrix system = codomain_k;
    if (mixed()) {
      if (codomain_ktilde.rows != dim_k || codomain_ktilde.cols != dim_h)
        throw SpecError("CanonicalSpec: codomain_ktilde must be dim_k x dim_h");
      system = CMatrix(dim_k, 2 * dim_h);
      for (std::size_t j = 0; j < dim_h; ++j) {
        system.set_column(j, codomain_k.column(j));
        system.set_column(dim_h + j, codomain_ktilde.column(j));
      }
    }
    if (detail::orthonormality_residual(system) > 1e-12)
      throw SpecError("CanonicalSpec: codomain system is not orthonormal");
  }

  // Standard bases everywhere: e_j the standard basis, k_j = e_j and
  // k_tilde_j = e_{dim_h + j} in the codomain.
  static CanonicalSpec standard(std::size_t m, std::size_t n, double s,
                                std::vector<int> sigma = {}) {
    CanonicalSpec spec;
    spec.dim_h = m;
    spec.dim_k = n;
    spec.s = s;
    spec.sigma = sigma.empty() ? std::vector<int>(m, 1) : std::move(sigma);
    spec.domain_basis = CMatrix::identity(m);
    spec.codomain_k = CMatrix(n, m);
    for (std::size_t j = 0; j < m && j < n; ++j)
      spec.codomain_k.at(j, j) = Complex{1.0, 0.0};
    if (spec.mixed() && n >= 2 * m) {
      spec.codomain_ktilde = CMatrix(n, m);
      for (std::size_t j = 0; j < m; ++j)
        spec.codomain_ktilde.at(m + j, j) = Complex{1.0, 0.0};
    }
    spec.validate();
    return spec;
  }

  // Seeded random orthonormal systems (and a random unitary domain basis).
  static CanonicalSpec random(std::size_t m, std::size_t n, double s,
                              std::uint64_t seed, std::vector<int> sigma = {}) {
    if (m < 2) throw DimensionError("CanonicalSpec: dim_h must be >= 2");
    if (std::abs(s) < 1.0 && n < 2 * m)
      throw InsufficientCodomain(
          "CanonicalSpec: |s| < 1 requires dim_k >= 2*dim_h");
    if (std::abs(s) >= 1.0 && n < m)
      throw InsufficientCodomain("CanonicalSpec: dim_k must be >= dim_h");
    Rng rng(seed);
    CanonicalSpec spec;
    spec.dim_h = m;
    spec.dim_k = n;
    spec.s = s;
    spec.sigma = sigma.empty() ? std::vector<int>(m, 1) : std::move(sigma);
    spec.domain_basis = detail::random_orthonormal_columns(m, m, rng);
    if (std::abs(s) < 1.0) {
      const CMatrix system = detail::random_orthonormal_columns(n, 2 * m, rng);
      spec.codomain_k = CMatrix(n, m);
      spec.codomain_ktilde = CMatrix(n, m);
      for (std::size_t j = 0; j < m; ++j) {
        spec.codomain_k.set_column(j, system.column(j));
        spec.codomain_ktilde.set_column(j, system.column(m + j));
      }
    } else {
      spec.codomain_k = detail::random_orthonormal_columns(n, m, rng);
    }
    spec.validate();
    return spec;
  }
};

// Assembles the canonical isometry into linear/anti-linear parts. With
// alpha_j the coordinates of x in the domain basis,
//   T(x) = sum_j Re(alpha_j) k_j + i s Im(alpha_j) k_j
//                + sigma(j) c Im(alpha_j) k_tilde_j.
inline RealLinearMap synth_canonical(const CanonicalSpec& spec) {
  spec.validate();
  const std::size_t m = spec.dim_h, n = spec.dim_k;
  const double half_plus = 0.5 * (1.0 + spec.s);
  const double half_minus = 0.5 * (1.0 - spec.s);
  const Complex i_half_c = kImagUnit * (0.5 * spec.c());
  CMatrix cpart(n, m), dpart(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    const ComplexVec b = spec.domain_basis.column(j);
    const ComplexVec k = spec.codomain_k.column(j);
    ComplexVec ktil(n);
    if (spec.mixed()) {
      ktil = spec.codomain_ktilde.column(j);
      if (spec.sigma[j] == -1)
        for (std::size_t r = 0; r < n; ++r) ktil[r] = -ktil[r];
    }
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vplus = half_plus * k[r] - i_half_c * ktil[r];
      const Complex vminus = half_minus * k[r] + i_half_c * ktil[r];
      for (std::size_t t = 0; t < m; ++t) {
        cpart.at(r, t) += vplus * std::conj(b[t]);
        dpart.at(r, t) += vminus * b[t];
      }
    }
  }
  return RealLinearMap(std::move(cpart), std::move(dpart));
}

// Builds the real-linear corrector R on the codomain making R o T
// complex-linear. For a mixed-type isometry, R is defined on the
// orthonormal system {T(e_j), i T(e_j), eta_hat_j, i eta_hat_j} by
//   R(T(e_j)) = T(e_j),  R(i T(e_j)) = i s T(e_j),
//   R(eta_hat_j) = i c T(e_j),  R(i eta_hat_j) = 0,
// and vanishes on the real-orthogonal complement; i eta_hat_j never meets
// the range of T, so any choice there leaves R o T unchanged. For a
// conjugate-linear map, composing two conjugations in the same basis
// linearizes it: R is the conjugation fixing an orthonormal basis that
// extends {T(e_j)}. For a complex-linear map R is the identity. Scaled
// inputs A = gamma * T are accepted; R corrects the isometry factor T.
inline RealLinearMap build_corrector(const RealLinearMap& a,
                                     double tol = kDefaultTol) {
  OPDecision decision = is_orthogonality_preserving(a, tol);
  if (!decision.certificate)
    throw PreconditionError(
        "build_corrector: map does not preserve orthogonality");
  const OPCertificate& cert = *decision.certificate;
  const std::size_t n = a.dim_k();
  const double s = cert.s;

  if (s >= 1.0 - tol) return RealLinearMap::identity(n);

  if (s <= -1.0 + tol) {
    std::vector<ComplexVec> image;
    image.reserve(cert.basis_data.size());
    for (const auto& [te, eta] : cert.basis_data) image.push_back(te);
    const std::vector<ComplexVec> basis = detail::orthonormal_extension(
        std::move(image), n);
    CMatrix dpart(n, n);
    for (const ComplexVec& f : basis)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t t = 0; t < n; ++t) dpart.at(r, t) += f[r] * f[t];
    return RealLinearMap(CMatrix(n, n), std::move(dpart));
  }

  const double half_plus = 0.5 * (1.0 + s);
  const double half_minus = 0.5 * (1.0 - s);
  const Complex i_half_c = kImagUnit * (0.5 * cert.c);
  CMatrix cpart(n, n), dpart(n, n);
  for (const auto& [te, eta] : cert.basis_data) {
    const ComplexVec eta_hat = (1.0 / norm(eta)) * eta;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t t = 0; t < n; ++t) {
        cpart.at(r, t) += half_plus * te[r] * std::conj(te[t]) +
                          i_half_c * te[r] * std::conj(eta_hat[t]);
        dpart.at(r, t) += half_minus * te[r] * te[t] +
                          i_half_c * te[r] * eta_hat[t];
      }
    }
  }
  return RealLinearMap(std::move(cpart), std::move(dpart));
}

struct GalleryEntry {
  std::string name;
  RealLinearMap map;
  Classification expected;
};

// Fixed suite of maps with known classifications: the basic isometries, the
// coordinate-wise half conjugation (a surjective real-linear isometry that
// does not preserve orthogonality), canonical mixed maps, a scaled mixed
// map, and a non-isometry.
inline std::vector<GalleryEntry> gallery() {
  std::vector<GalleryEntry> out;
  out.push_back({"identity", RealLinearMap::identity(2),
                 Classification::ComplexLinear});
  out.push_back({"conjugation", RealLinearMap::conjugation(2),
                 Classification::ConjugateLinear});

  // (alpha, beta) -> (conj(alpha), beta)
  CMatrix c(2, 2), d(2, 2);
  c.at(1, 1) = Complex{1.0, 0.0};
  d.at(0, 0) = Complex{1.0, 0.0};
  out.push_back({"partial_conjugation", RealLinearMap(c, d),
                 Classification::NotOrthogonalityPreserving});

  const RealLinearMap mixed_06 =
      synth_canonical(CanonicalSpec::standard(2, 4, 0.6));
  out.push_back({"mixed_2_4_s06", mixed_06, Classification::MixedType});
  out.push_back({"mixed_2_4_s0",
                 synth_canonical(CanonicalSpec::standard(2, 4, 0.0)),
                 Classification::MixedType});
  out.push_back({"mixed_3_6_sm08",
                 synth_canonical(CanonicalSpec::standard(3, 6, -0.8)),
                 Classification::MixedType});
  out.push_back({"scaled_mixed", scale(2.5, mixed_06),
                 Classification::MixedType});

  CMatrix stretched = CMatrix::identity(2);
  stretched.at(1, 1) = Complex{0.5, 0.0};
  out.push_back({"non_isometry", RealLinearMap(stretched, CMatrix(2, 2)),
                 Classification::NotOrthogonalityPreserving});
  return out;
}

enum class OPKind { PureLinear, PureConjugate, Mixed };

// Seeded generator of orthogonality-preserving isometries of the requested
// kind. Mixed maps draw s uniformly from [-0.95, 0.95] and use random
// orthonormal systems on both sides.
inline RealLinearMap random_op_map(std::size_t m, std::size_t n, OPKind kind,
                                   std::uint64_t seed) {
  if (m < 2) throw DimensionError("random_op_map: dim_h must be >= 2");
  Rng rng(seed);
  switch (kind) {
    case OPKind::PureLinear: {
      if (n < m) throw InsufficientCodomain("random_op_map: need dim_k >= dim_h");
      return RealLinearMap(detail::random_orthonormal_columns(n, m, rng),
                           CMatrix(n, m));
    }
    case OPKind::PureConjugate: {
      if (n < m) throw InsufficientCodomain("random_op_map: need dim_k >= dim_h");
      return RealLinearMap(CMatrix(n, m),
                           detail::random_orthonormal_columns(n, m, rng));
    }
    case OPKind::Mixed: {
      if (n < 2 * m)
        throw InsufficientCodomain(
            "random_op_map: mixed maps need dim_k >= 2*dim_h");
      const double s = rng.uniform(-0.95, 0.95);
      return synth_canonical(CanonicalSpec::random(m, n, s, rng.integer()));
    }
  }
  throw PreconditionError("random_op_map: unknown kind");
}

}  // namespace orthokit

#endif  // ORTHOKIT_SYNTH_HPP
