#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "orthokit/core.hpp"
#include "orthokit/rng.hpp"

using namespace orthokit;

namespace {

// Dyadic rationals with short mantissas: all the arithmetic in the round
// trips below is then exact, so equality can be checked bit for bit.
double dyadic(Rng& rng) {
  const auto bits = rng.integer();
  const long k = static_cast<long>(bits % (1u << 21)) - (1 << 20);
  return static_cast<double>(k) / 1024.0;
}

RealLinearMap random_dyadic_map(std::size_t m, std::size_t n, Rng& rng) {
  CMatrix c(n, m), d(n, m);
  for (Complex& z : c.data) z = Complex{dyadic(rng), dyadic(rng)};
  for (Complex& z : d.data) z = Complex{dyadic(rng), dyadic(rng)};
  return RealLinearMap(std::move(c), std::move(d));
}

}  // namespace

TEST_CASE("inner product matches direct expansion", "[core]") {
  const Complex i{0.0, 1.0};
  CHECK(inner(ComplexVec{1.0, 0.0}, ComplexVec{0.0, 1.0}) == Complex{0.0, 0.0});
  CHECK(inner(ComplexVec{i, 0.0}, ComplexVec{1.0, 0.0}) == i);
  CHECK(inner(ComplexVec{Complex{1.0, 1.0}, 2.0}, ComplexVec{1.0, i}) ==
        Complex{1.0, -1.0});
}

TEST_CASE("inner product rejects mismatched dimensions", "[core]") {
  CHECK_THROWS_AS(inner(ComplexVec{1.0}, ComplexVec{1.0, 0.0}), DimensionError);
}

TEST_CASE("inner product is conjugate symmetric and real-bilinear", "[core]") {
  Rng rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    const ComplexVec x = rng.gaussian_vec(3);
    const ComplexVec y = rng.gaussian_vec(3);
    const ComplexVec z = rng.gaussian_vec(3);
    const double r = rng.gaussian();
    CHECK(std::abs(inner(x, y) - std::conj(inner(y, x))) < 1e-14);
    CHECK(std::abs(inner(x + z, y) - inner(x, y) - inner(z, y)) < 1e-13);
    CHECK(std::abs(inner(r * x, y) - r * inner(x, y)) < 1e-13);
    CHECK(std::abs(inner(x, r * y) - r * inner(x, y)) < 1e-13);

    // Re<x|y> is the Euclidean dot product of the real coordinates.
    const auto xr = real_coords(x);
    const auto yr = real_coords(y);
    double dot = 0.0;
    for (std::size_t j = 0; j < xr.size(); ++j) dot += xr[j] * yr[j];
    CHECK(std::abs(inner(x, y).real() - dot) < 1e-13);
  }
}

TEST_CASE("vector construction rejects dimension zero", "[core]") {
  CHECK_THROWS_AS(ComplexVec(0), DimensionError);
  CHECK_THROWS_AS(RealLinearMap(CMatrix(0, 0), CMatrix(0, 0)), DimensionError);
}

TEST_CASE("apply evaluates C x + D conj(x)", "[core]") {
  const Complex i{0.0, 1.0};
  const ComplexVec x{Complex{1.0, 1.0}, 0.0};

  const RealLinearMap ident = RealLinearMap::identity(2);
  CHECK(apply(ident, x)[0] == Complex{1.0, 1.0});
  CHECK(apply(ident, x)[1] == Complex{0.0, 0.0});

  const RealLinearMap conj2 = RealLinearMap::conjugation(2);
  CHECK(apply(conj2, x)[0] == Complex{1.0, -1.0});

  // (alpha, beta) -> (conj(alpha), beta) evaluated at (i, i).
  CMatrix c(2, 2), d(2, 2);
  c.at(1, 1) = 1.0;
  d.at(0, 0) = 1.0;
  const RealLinearMap half_conj(c, d);
  const ComplexVec out = apply(half_conj, ComplexVec{i, i});
  CHECK(out[0] == -i);
  CHECK(out[1] == i);

  CHECK_THROWS_AS(apply(ident, ComplexVec{1.0, 0.0, 0.0}), DimensionError);
}

TEST_CASE("real form of the basic one-dimensional maps", "[core]") {
  auto entry = [](const RealLinearMap& a, std::size_t r, std::size_t c) {
    return real_form(a).at(r, c);
  };
  const RealLinearMap ident = RealLinearMap::identity(1);
  CHECK(entry(ident, 0, 0) == 1.0);
  CHECK(entry(ident, 0, 1) == 0.0);
  CHECK(entry(ident, 1, 0) == 0.0);
  CHECK(entry(ident, 1, 1) == 1.0);

  const RealLinearMap conj1 = RealLinearMap::conjugation(1);
  CHECK(entry(conj1, 0, 0) == 1.0);
  CHECK(entry(conj1, 1, 1) == -1.0);
  CHECK(entry(conj1, 0, 1) == 0.0);

  CMatrix ci(1, 1);
  ci.at(0, 0) = Complex{0.0, 1.0};
  const RealLinearMap mult_i(ci, CMatrix(1, 1));
  CHECK(entry(mult_i, 0, 0) == 0.0);
  CHECK(entry(mult_i, 0, 1) == -1.0);
  CHECK(entry(mult_i, 1, 0) == 1.0);
  CHECK(entry(mult_i, 1, 1) == 0.0);
}

TEST_CASE("from_real_form inverts real_form on the basic maps", "[core]") {
  RMatrix ident(2, 2);
  ident.at(0, 0) = 1.0;
  ident.at(1, 1) = 1.0;
  RealLinearMap a = from_real_form(ident);
  CHECK(a.linear_part().at(0, 0) == 1.0);
  CHECK(a.antilinear_part().at(0, 0) == 0.0);

  RMatrix conj_m(2, 2);
  conj_m.at(0, 0) = 1.0;
  conj_m.at(1, 1) = -1.0;
  a = from_real_form(conj_m);
  CHECK(a.linear_part().at(0, 0) == 0.0);
  CHECK(a.antilinear_part().at(0, 0) == 1.0);

  RMatrix rot(2, 2);
  rot.at(0, 1) = -1.0;
  rot.at(1, 0) = 1.0;
  a = from_real_form(rot);
  CHECK(a.linear_part().at(0, 0) == Complex{0.0, 1.0});
  CHECK(a.antilinear_part().at(0, 0) == 0.0);

  RMatrix odd(3, 2);
  CHECK_THROWS_AS(from_real_form(odd), FormatError);
}

TEST_CASE("real form round trips are exact", "[core]") {
  Rng rng(202);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t m = 1 + rng.integer() % 4;
    const std::size_t n = 1 + rng.integer() % 4;
    const RealLinearMap a = random_dyadic_map(m, n, rng);

    const RMatrix mform = real_form(a);
    const RealLinearMap back = from_real_form(mform);
    CHECK(max_entry_diff(a, back) == 0.0);

    // real_form o from_real_form is the identity bit for bit.
    const RMatrix mform2 = real_form(back);
    REQUIRE(mform2.data.size() == mform.data.size());
    for (std::size_t i = 0; i < mform.data.size(); ++i)
      CHECK(mform.data[i] == mform2.data[i]);

    // apply(from_real_form(real_form(A)), x) equals apply(A, x) exactly.
    ComplexVec x(m);
    for (std::size_t j = 0; j < m; ++j) x[j] = Complex{dyadic(rng), dyadic(rng)};
    const ComplexVec lhs = apply(back, x);
    const ComplexVec rhs = apply(a, x);
    for (std::size_t j = 0; j < n; ++j) CHECK(lhs[j] == rhs[j]);
  }
}

TEST_CASE("real form reproduces the action in real coordinates", "[core]") {
  Rng rng(203);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t m = 1 + rng.integer() % 3;
    const std::size_t n = 1 + rng.integer() % 3;
    CMatrix c(n, m), d(n, m);
    for (Complex& z : c.data) z = rng.cgaussian();
    for (Complex& z : d.data) z = rng.cgaussian();
    const RealLinearMap a(c, d);
    const ComplexVec x = rng.gaussian_vec(m);

    const RMatrix mform = real_form(a);
    const auto xr = real_coords(x);
    const auto want = real_coords(apply(a, x));
    for (std::size_t r = 0; r < mform.rows; ++r) {
      double acc = 0.0;
      for (std::size_t cidx = 0; cidx < mform.cols; ++cidx)
        acc += mform.at(r, cidx) * xr[cidx];
      CHECK(std::abs(acc - want[r]) < 1e-12);
    }
  }
}

TEST_CASE("compose matches pointwise composition", "[core]") {
  Rng rng(204);
  for (int rep = 0; rep < 20; ++rep) {
    const RealLinearMap a = random_dyadic_map(3, 2, rng);
    const RealLinearMap b = random_dyadic_map(2, 3, rng);
    const RealLinearMap ab = compose(a, b);
    const ComplexVec x = rng.gaussian_vec(2);
    const ComplexVec direct = apply(a, apply(b, x));
    const ComplexVec composed = apply(ab, x);
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(std::abs(direct[j] - composed[j]) <
            1e-12 * (1.0 + std::abs(direct[j])));
  }
}
