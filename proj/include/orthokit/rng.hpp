#ifndef ORTHOKIT_RNG_HPP
#define ORTHOKIT_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "orthokit/core.hpp"

namespace orthokit {

// Seeded source of Gaussian draws. Every randomized routine in the library
// takes an explicit seed and builds one of these, so results are
// reproducible within a build regardless of call order or threading.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double gaussian() { return normal_(engine_); }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  std::uint64_t integer() { return engine_(); }

  Complex cgaussian() { return Complex{gaussian(), gaussian()}; }

  ComplexVec gaussian_vec(std::size_t dim) {
    ComplexVec v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = cgaussian();
    return v;
  }

  CMatrix gaussian_matrix(std::size_t rows, std::size_t cols) {
    CMatrix m(rows, cols);
    for (Complex& z : m.data) z = cgaussian();
    return m;
  }

private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// FNV-1a, used to derive stable per-file seeds in batch mode.
inline std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace orthokit

#endif  // ORTHOKIT_RNG_HPP
