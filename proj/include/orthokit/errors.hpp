#ifndef ORTHOKIT_ERRORS_HPP
#define ORTHOKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orthokit {

// Base class for every error the library raises on its own behalf.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Vector/matrix dimensions incompatible, or a space too small for the
// requested operation.
class DimensionError : public Error {
public:
  using Error::Error;
};

// Malformed serialized input (wrong shape, missing keys, odd real form).
class FormatError : public Error {
public:
  using Error::Error;
};

// A nonzero argument was required (projection target, Birkhoff direction,
// profiled point) but a zero or numerically vanishing vector was supplied.
class DegenerateError : public Error {
public:
  using Error::Error;
};

// The zero map was passed where a nonzero map is required.
class ZeroMapError : public Error {
public:
  using Error::Error;
};

// The map's real Gram matrix is not a positive multiple of the identity,
// so no factorization gamma * isometry exists. Such a map cannot preserve
// orthogonality.
class NotScaledIsometry : public Error {
public:
  using Error::Error;
};

// A documented precondition of the called operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// Invalid synthesis parameters (non-orthonormal systems, bad sigma, ...).
class SpecError : public Error {
public:
  using Error::Error;
};

// |s| < 1 requires the codomain dimension to be at least twice the domain
// dimension; a mixed-type isometry cannot fit otherwise.
class InsufficientCodomain : public Error {
public:
  using Error::Error;
};

// For an isometry that preserves orthogonality, <T(iz)|T(z)> is purely
// imaginary at every nonzero z. A real part above tolerance is therefore
// direct evidence that the map does not preserve orthogonality.
class NotOrthogonalityPreservingEvidence : public Error {
public:
  NotOrthogonalityPreservingEvidence(const std::string& what, double re_alpha)
      : Error(what), re_alpha_(re_alpha) {}

  double re_alpha() const { return re_alpha_; }

private:
  double re_alpha_;
};

}  // namespace orthokit

#endif  // ORTHOKIT_ERRORS_HPP
