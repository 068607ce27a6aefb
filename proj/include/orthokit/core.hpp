#ifndef ORTHOKIT_CORE_HPP
#define ORTHOKIT_CORE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "orthokit/errors.hpp"

namespace orthokit {

using Complex = std::complex<double>;

inline constexpr Complex kImagUnit{0.0, 1.0};

// Element of C^m. The length is fixed at construction and must be >= 1.
class ComplexVec {
public:
  explicit ComplexVec(std::size_t dim) : entries_(check_dim(dim)) {}

  ComplexVec(std::initializer_list<Complex> entries)
      : entries_(entries.begin(), entries.end()) {
    check_dim(entries_.size());
  }

  explicit ComplexVec(std::vector<Complex> entries)
      : entries_(std::move(entries)) {
    check_dim(entries_.size());
  }

  std::size_t dim() const { return entries_.size(); }

  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }

  const std::vector<Complex>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

private:
  static std::size_t check_dim(std::size_t dim) {
    if (dim == 0) throw DimensionError("ComplexVec: dimension must be >= 1");
    return dim;
  }

  std::vector<Complex> entries_;
};

// Inner product, linear in the first slot and conjugate-linear in the second.
inline Complex inner(const ComplexVec& x, const ComplexVec& y) {
  if (x.dim() != y.dim())
    throw DimensionError("inner: dimensions differ (" +
                         std::to_string(x.dim()) + " vs " +
                         std::to_string(y.dim()) + ")");
  Complex acc{0.0, 0.0};
  for (std::size_t j = 0; j < x.dim(); ++j) acc += x[j] * std::conj(y[j]);
  return acc;
}

inline double norm_squared(const ComplexVec& x) {
  double acc = 0.0;
  for (const Complex& e : x) acc += std::norm(e);
  return acc;
}

inline double norm(const ComplexVec& x) { return std::sqrt(norm_squared(x)); }

inline ComplexVec operator+(const ComplexVec& x, const ComplexVec& y) {
  if (x.dim() != y.dim()) throw DimensionError("operator+: dimensions differ");
  ComplexVec out(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) out[j] = x[j] + y[j];
  return out;
}

inline ComplexVec operator-(const ComplexVec& x, const ComplexVec& y) {
  if (x.dim() != y.dim()) throw DimensionError("operator-: dimensions differ");
  ComplexVec out(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) out[j] = x[j] - y[j];
  return out;
}

inline ComplexVec operator*(const Complex& a, const ComplexVec& x) {
  ComplexVec out(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) out[j] = a * x[j];
  return out;
}

inline ComplexVec operator*(double a, const ComplexVec& x) {
  ComplexVec out(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) out[j] = a * x[j];
  return out;
}

inline ComplexVec operator-(const ComplexVec& x) { return -1.0 * x; }

// Multiplication by i, used everywhere the domain point iz appears.
inline ComplexVec times_i(const ComplexVec& x) { return kImagUnit * x; }

inline ComplexVec unit_vector(std::size_t dim, std::size_t j) {
  if (j >= dim) throw DimensionError("unit_vector: index out of range");
  ComplexVec e(dim);
  e[j] = Complex{1.0, 0.0};
  return e;
}

// Underlying real coordinates, interleaved (Re z_1, Im z_1, ..., Re z_m, Im z_m).
inline std::vector<double> real_coords(const ComplexVec& x) {
  std::vector<double> out(2 * x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) {
    out[2 * j] = x[j].real();
    out[2 * j + 1] = x[j].imag();
  }
  return out;
}

inline ComplexVec from_real_coords(const std::vector<double>& coords) {
  if (coords.size() % 2 != 0 || coords.empty())
    throw FormatError("from_real_coords: length must be even and positive");
  ComplexVec out(coords.size() / 2);
  for (std::size_t j = 0; j < out.dim(); ++j)
    out[j] = Complex{coords[2 * j], coords[2 * j + 1]};
  return out;
}

// Dense row-major complex matrix. Deliberately minimal; the library only
// needs construction, indexing and products on small matrices.
struct CMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> data;

  CMatrix() = default;
  CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Complex& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Complex& at(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.at(j, j) = Complex{1.0, 0.0};
    return m;
  }

  ComplexVec column(std::size_t c) const {
    ComplexVec out(rows);
    for (std::size_t r = 0; r < rows; ++r) out[r] = at(r, c);
    return out;
  }

  void set_column(std::size_t c, const ComplexVec& v) {
    for (std::size_t r = 0; r < rows; ++r) at(r, c) = v[r];
  }
};

// Dense row-major real matrix.
struct RMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  RMatrix() = default;
  RMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const double& at(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
};

// Real-linear map C^m -> C^n stored as A(x) = C x + D conj(x); C is the
// complex-linear part, D the anti-linear part. The split is unique.
class RealLinearMap {
public:
  RealLinearMap(CMatrix linear_part, CMatrix antilinear_part)
      : linear_(std::move(linear_part)), antilinear_(std::move(antilinear_part)) {
    if (linear_.rows == 0 || linear_.cols == 0)
      throw DimensionError("RealLinearMap: dimensions must be >= 1");
    if (linear_.rows != antilinear_.rows || linear_.cols != antilinear_.cols)
      throw DimensionError("RealLinearMap: parts have different shapes");
  }

  static RealLinearMap zero(std::size_t dim_h, std::size_t dim_k) {
    return RealLinearMap(CMatrix(dim_k, dim_h), CMatrix(dim_k, dim_h));
  }

  static RealLinearMap identity(std::size_t dim) {
    return RealLinearMap(CMatrix::identity(dim), CMatrix(dim, dim));
  }

  // Entrywise conjugation z -> conj(z).
  static RealLinearMap conjugation(std::size_t dim) {
    return RealLinearMap(CMatrix(dim, dim), CMatrix::identity(dim));
  }

  std::size_t dim_h() const { return linear_.cols; }
  std::size_t dim_k() const { return linear_.rows; }

  const CMatrix& linear_part() const { return linear_; }
  const CMatrix& antilinear_part() const { return antilinear_; }

  bool is_zero() const {
    auto all_zero = [](const CMatrix& m) {
      return std::all_of(m.data.begin(), m.data.end(), [](const Complex& z) {
        return z.real() == 0.0 && z.imag() == 0.0;
      });
    };
    return all_zero(linear_) && all_zero(antilinear_);
  }

private:
  CMatrix linear_;
  CMatrix antilinear_;
};

inline ComplexVec apply(const RealLinearMap& a, const ComplexVec& x) {
  if (x.dim() != a.dim_h())
    throw DimensionError("apply: vector dimension " + std::to_string(x.dim()) +
                         " does not match domain dimension " +
                         std::to_string(a.dim_h()));
  const CMatrix& c = a.linear_part();
  const CMatrix& d = a.antilinear_part();
  ComplexVec out(a.dim_k());
  for (std::size_t k = 0; k < a.dim_k(); ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < a.dim_h(); ++j)
      acc += c.at(k, j) * x[j] + d.at(k, j) * std::conj(x[j]);
    out[k] = acc;
  }
  return out;
}

// The 2n x 2m real matrix acting on interleaved coordinates. A complex
// entry C_kj = a+ib together with D_kj = p+iq occupies the 2x2 block
// [[a+p, q-b], [b+q, a-p]] at block position (k, j).
inline RMatrix real_form(const RealLinearMap& a) {
  const CMatrix& c = a.linear_part();
  const CMatrix& d = a.antilinear_part();
  RMatrix m(2 * a.dim_k(), 2 * a.dim_h());
  for (std::size_t k = 0; k < a.dim_k(); ++k) {
    for (std::size_t j = 0; j < a.dim_h(); ++j) {
      const double ca = c.at(k, j).real(), cb = c.at(k, j).imag();
      const double dp = d.at(k, j).real(), dq = d.at(k, j).imag();
      m.at(2 * k, 2 * j) = ca + dp;
      m.at(2 * k, 2 * j + 1) = dq - cb;
      m.at(2 * k + 1, 2 * j) = cb + dq;
      m.at(2 * k + 1, 2 * j + 1) = ca - dp;
    }
  }
  return m;
}

inline RealLinearMap from_real_form(const RMatrix& m) {
  if (m.rows == 0 || m.cols == 0 || m.rows % 2 != 0 || m.cols % 2 != 0)
    throw FormatError("from_real_form: shape must be 2n x 2m with n,m >= 1");
  const std::size_t n = m.rows / 2;
  const std::size_t mm = m.cols / 2;
  CMatrix c(n, mm), d(n, mm);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < mm; ++j) {
      const double b11 = m.at(2 * k, 2 * j);
      const double b12 = m.at(2 * k, 2 * j + 1);
      const double b21 = m.at(2 * k + 1, 2 * j);
      const double b22 = m.at(2 * k + 1, 2 * j + 1);
      c.at(k, j) = Complex{0.5 * (b11 + b22), 0.5 * (b21 - b12)};
      d.at(k, j) = Complex{0.5 * (b11 - b22), 0.5 * (b21 + b12)};
    }
  }
  return RealLinearMap(std::move(c), std::move(d));
}

inline RealLinearMap scale(double r, const RealLinearMap& a) {
  CMatrix c = a.linear_part();
  CMatrix d = a.antilinear_part();
  for (Complex& z : c.data) z *= r;
  for (Complex& z : d.data) z *= r;
  return RealLinearMap(std::move(c), std::move(d));
}

// Composition a after b: (a o b)(x) = a(b(x)).
inline RealLinearMap compose(const RealLinearMap& a, const RealLinearMap& b) {
  if (a.dim_h() != b.dim_k())
    throw DimensionError("compose: inner dimensions do not match");
  const std::size_t n = a.dim_k(), mid = a.dim_h(), m = b.dim_h();
  const CMatrix& ca = a.linear_part();
  const CMatrix& da = a.antilinear_part();
  const CMatrix& cb = b.linear_part();
  const CMatrix& db = b.antilinear_part();
  CMatrix c(n, m), d(n, m);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      Complex cacc{0.0, 0.0}, dacc{0.0, 0.0};
      for (std::size_t l = 0; l < mid; ++l) {
        cacc += ca.at(k, l) * cb.at(l, j) + da.at(k, l) * std::conj(db.at(l, j));
        dacc += ca.at(k, l) * db.at(l, j) + da.at(k, l) * std::conj(cb.at(l, j));
      }
      c.at(k, j) = cacc;
      d.at(k, j) = dacc;
    }
  }
  return RealLinearMap(std::move(c), std::move(d));
}

inline double max_entry_diff(const RealLinearMap& a, const RealLinearMap& b) {
  if (a.dim_h() != b.dim_h() || a.dim_k() != b.dim_k())
    throw DimensionError("max_entry_diff: shapes differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.linear_part().data.size(); ++i) {
    worst = std::max(worst,
                     std::abs(a.linear_part().data[i] - b.linear_part().data[i]));
    worst = std::max(
        worst, std::abs(a.antilinear_part().data[i] - b.antilinear_part().data[i]));
  }
  return worst;
}

}  // namespace orthokit

#endif  // ORTHOKIT_CORE_HPP
