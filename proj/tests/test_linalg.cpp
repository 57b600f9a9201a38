#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "ncmult/errors.hpp"
#include "ncmult/linalg.hpp"
#include "ncmult/random.hpp"
#include "support.hpp"

using namespace ncmult;
using testing::dft;
using testing::max_diff;

TEST_CASE("hermitian_eig: already diagonal") {
  const auto e = hermitian_eig(ComplexMatrix{{2.0, 0.0}, {0.0, -1.0}});
  CHECK(max_diff(e.eigenvalues, {-1.0, 2.0}) < 1e-15);
  // Eigenvectors are the swapped coordinate axes, up to phase.
  CHECK(std::abs(e.eigenvectors(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(e.eigenvectors(0, 1)) == doctest::Approx(1.0));
  CHECK(std::abs(e.eigenvectors(0, 0)) < 1e-15);
}

TEST_CASE("hermitian_eig: 2x2 swap") {
  const auto e = hermitian_eig(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
  CHECK(max_diff(e.eigenvalues, {-1.0, 1.0}) < 1e-14);
}

TEST_CASE("hermitian_eig: construct then decompose") {
  Rng rng = make_rng(7);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix v = random_unitary(rng, 3);
    const std::vector<double> d{1.0, 2.0, 3.0};
    const ComplexMatrix h = v * ComplexMatrix::diagonal(std::span<const double>(d)) * v.adjoint();
    const auto e = hermitian_eig(h);
    CHECK(max_diff(e.eigenvalues, d) < 1e-10);
    CHECK(unitarity_defect(e.eigenvectors) < 1e-12);
    const ComplexMatrix back =
        e.eigenvectors * ComplexMatrix::diagonal(std::span<const double>(e.eigenvalues)) * e.eigenvectors.adjoint();
    CHECK(distance(back, h) < 1e-12 * h.frobenius_norm());
  }
}

TEST_CASE("hermitian_eig: rejects non-Hermitian input") {
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), NotHermitian);
}

TEST_CASE("hermitian_eig: degenerate and larger spectra") {
  // DFT-conjugated diagonal with repeated eigenvalues; the DFT is built
  // independently of the library's random unitaries.
  const std::size_t n = 12;
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<double>(i / 3);
  const ComplexMatrix f = dft(n);
  const auto e = hermitian_eig(f * ComplexMatrix::diagonal(std::span<const double>(d)) * f.adjoint());
  CHECK(max_diff(e.eigenvalues, d) < 1e-12);
}

TEST_CASE("svd: examples") {
  CHECK(max_diff(svd(ComplexMatrix::identity(3)).sigma, {1.0, 1.0, 1.0}) < 1e-15);
  const auto s = svd(ComplexMatrix{{0.0, 2.0}, {0.0, 0.0}});
  CHECK(max_diff(s.sigma, {2.0, 0.0}) < 1e-15);
  CHECK(unitarity_defect(s.u) < 1e-14);
  CHECK(unitarity_defect(s.v) < 1e-14);
}

TEST_CASE("svd: agrees with the eigenvalues of A*A and reconstructs A") {
  Rng rng = make_rng(11);
  for (std::size_t n = 1; n <= 9; ++n) {
    const ComplexMatrix a = random_complex_matrix(rng, n);
    const auto s = svd(a);
    const auto e = hermitian_eig(a.adjoint() * a);
    std::vector<double> from_eig(n);
    for (std::size_t i = 0; i < n; ++i) from_eig[i] = std::sqrt(std::max(0.0, e.eigenvalues[n - 1 - i]));
    CHECK(max_diff(s.sigma, from_eig) < 1e-10 * std::max(1.0, s.sigma.front()));
    CHECK(std::is_sorted(s.sigma.rbegin(), s.sigma.rend()));
    const ComplexMatrix back = s.u * ComplexMatrix::diagonal(std::span<const double>(s.sigma)) * s.v.adjoint();
    CHECK(distance(back, a) < 1e-12 * a.frobenius_norm());
    CHECK(unitarity_defect(s.u) < 1e-12);
    CHECK(unitarity_defect(s.v) < 1e-12);
  }
}

TEST_CASE("svd: rank-deficient input") {
  Rng rng = make_rng(5);
  ComplexMatrix a = random_complex_matrix(rng, 6);
  // Project onto a two-dimensional range.
  ComplexMatrix p(6);
  p(0, 0) = p(1, 1) = 1.0;
  a = a * p * random_unitary(rng, 6);
  const auto s = svd(a);
  for (std::size_t i = 2; i < 6; ++i) CHECK(s.sigma[i] < 1e-12);
  CHECK(unitarity_defect(s.u) < 1e-12);
  const ComplexMatrix back = s.u * ComplexMatrix::diagonal(std::span<const double>(s.sigma)) * s.v.adjoint();
  CHECK(distance(back, a) < 1e-12 * a.frobenius_norm());
}

TEST_CASE("schatten_norm: examples") {
  const std::vector<double> d{3.0, 4.0};
  CHECK(schatten_norm(ComplexMatrix::diagonal(std::span<const double>(d)), 2.0, 1.0) == doctest::Approx(5.0));
  for (std::size_t n : {1U, 3U, 5U})
    for (double p : {1.0, 1.5, 2.0, 7.0})
      CHECK(schatten_norm(ComplexMatrix::identity(n), p, 1.0 / static_cast<double>(n)) ==
            doctest::Approx(1.0).epsilon(1e-14));
  CHECK(schatten_norm(ComplexMatrix::diagonal(std::span<const double>(d)), std::numeric_limits<double>::infinity()) ==
        doctest::Approx(4.0));
}

TEST_CASE("schatten_norm: equals the direct formula on singular values") {
  Rng rng = make_rng(3);
  for (int k = 0; k < 10; ++k) {
    const ComplexMatrix a = random_complex_matrix(rng, 5);
    const auto sigma = svd(a).sigma;
    for (double p : {1.0, 2.0, 4.0}) {
      double s = 0.0;
      for (double x : sigma) s += std::pow(x, p);
      CHECK(schatten_norm(a, p, 0.5) == doctest::Approx(std::pow(0.5 * s, 1.0 / p)).epsilon(1e-12));
    }
    // ||A||_2^2 = tr(A*A), with no decomposition at all on the right.
    CHECK(std::pow(schatten_norm(a, 2.0, 1.0), 2) == doctest::Approx((a.adjoint() * a).trace().real()).epsilon(1e-9));
  }
}

TEST_CASE("schatten_norm: rejects p < 1") {
  CHECK_THROWS_AS(schatten_norm(ComplexMatrix::identity(2), 0.5, 1.0), InvalidExponent);
}

TEST_CASE("schatten_norm: Hoelder inequality and unitary invariance") {
  Rng rng = make_rng(13);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 5);
    const double w = 1.0 / static_cast<double>(n);
    const ComplexMatrix x = random_complex_matrix(rng, n);
    const ComplexMatrix y = random_complex_matrix(rng, n);
    const ComplexMatrix u = random_unitary(rng, n);
    const ComplexMatrix v = random_unitary(rng, n);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const double q = p == 1.0 ? std::numeric_limits<double>::infinity() : p / (p - 1.0);
      const double lhs = std::abs(w * (x * y).trace());
      const double rhs = schatten_norm(x, p, w) * schatten_norm(y, q, w);
      CHECK(lhs <= rhs * (1.0 + 1e-9));
      CHECK(schatten_norm(u * x * v, p, w) == doctest::Approx(schatten_norm(x, p, w)).epsilon(1e-9));
    }
  }
}

TEST_CASE("polar_decompose: examples") {
  const ComplexMatrix a{{2.0, 1.0}, {1.0, 3.0}};
  const auto pd = polar_decompose(a);
  CHECK(distance(pd.w, ComplexMatrix::identity(2)) < 1e-12);
  CHECK(distance(pd.b, a) < 1e-12);

  const auto r = polar_decompose(ComplexMatrix{{0.0, 2.0}, {0.0, 0.0}});
  CHECK(distance(r.b, ComplexMatrix{{0.0, 0.0}, {0.0, 2.0}}) < 1e-14);
  CHECK(distance(r.w, ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}) < 1e-14);
}

TEST_CASE("polar_decompose: round trip, support and idempotence") {
  Rng rng = make_rng(17);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = random_complex_matrix(rng, 6);
    const auto pd = polar_decompose(a);
    CHECK(distance(pd.w * pd.b, a) < 1e-10);
    CHECK(unitarity_defect(pd.w) < 1e-10);
    CHECK(distance(pd.b, pd.b.adjoint()) < 1e-12);
    CHECK(hermitian_eig(pd.b).eigenvalues.front() > -1e-12);
    CHECK(distance(pd.w.adjoint() * pd.w, support_projection(pd.b)) < 1e-10);

    const auto again = polar_decompose(pd.w * pd.b);
    CHECK(distance(again.w, pd.w) < 1e-9);
    CHECK(distance(again.b, pd.b) < 1e-9);
  }
}

TEST_CASE("polar_decompose: partial isometry on a rank-deficient matrix") {
  Rng rng = make_rng(19);
  ComplexMatrix p(5);
  p(0, 0) = p(3, 3) = 1.0;
  const ComplexMatrix a = random_unitary(rng, 5) * p * random_complex_matrix(rng, 5);
  const auto pd = polar_decompose(a);
  CHECK(distance(pd.w * pd.b, a) < 1e-10);
  const ComplexMatrix s = support_projection(pd.b);
  CHECK(distance(pd.w.adjoint() * pd.w, s) < 1e-10);
  CHECK(s.trace().real() == doctest::Approx(2.0));
}

TEST_CASE("support_projection: examples and threshold") {
  CHECK(distance(support_projection(ComplexMatrix{{0.0, 0.0}, {0.0, 2.0}}), ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}) <
        1e-15);
  CHECK(support_projection(ComplexMatrix(3)).frobenius_norm() == 0.0);

  Rng rng = make_rng(23);
  const ComplexMatrix v = random_unitary(rng, 3);
  const std::vector<double> d{0.0, 1e-15, 3.0};
  const ComplexMatrix b = v * ComplexMatrix::diagonal(std::span<const double>(d)) * v.adjoint();
  const ComplexMatrix s = support_projection(b, 1e-9);
  CHECK(s.trace().real() == doctest::Approx(1.0));
  CHECK(distance(s * s, s) < 1e-12);
  CHECK(distance(s, s.adjoint()) < 1e-12);
}

TEST_CASE("support_projection: rejects indefinite input") {
  CHECK_THROWS_AS(support_projection(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}), NotPositive);
}

TEST_CASE("psd_pseudo_inverse inverts on the support") {
  const ComplexMatrix b{{0.0, 0.0}, {0.0, 4.0}};
  CHECK(distance(psd_pseudo_inverse(b), ComplexMatrix{{0.0, 0.0}, {0.0, 0.25}}) < 1e-15);
}

TEST_CASE("spectral_projections resolve the identity") {
  const ComplexMatrix f = dft(4);
  const std::vector<double> d{1.0, 1.0, 5.0, -2.0};
  const auto projections = spectral_projections(f * ComplexMatrix::diagonal(std::span<const double>(d)) * f.adjoint());
  REQUIRE(projections.size() == 3);
  ComplexMatrix sum(4);
  for (const auto& p : projections) {
    CHECK(distance(p * p, p) < 1e-12);
    sum += p;
  }
  CHECK(distance(sum, ComplexMatrix::identity(4)) < 1e-12);
}

TEST_CASE("ComplexMatrix: validation and algebra") {
  CHECK_THROWS_AS(ComplexMatrix(2, std::vector<cplx>(3)), DimMismatch);
  CHECK_THROWS_AS(ComplexMatrix(1, std::vector<cplx>{cplx(std::nan(""), 0.0)}), InvalidMatrix);
  CHECK_THROWS_AS(ComplexMatrix::identity(2) * ComplexMatrix::identity(3), DimMismatch);
  const ComplexMatrix a{{1.0, cplx(0.0, 2.0)}, {3.0, 4.0}};
  CHECK(a.adjoint().adjoint() == a);
  CHECK(a.adjoint()(0, 1) == cplx(3.0, 0.0));
  CHECK(a.adjoint()(1, 0) == cplx(0.0, -2.0));
  CHECK(hadamard(a, a)(0, 1) == cplx(-4.0, 0.0));
  CHECK(operator_norm(ComplexMatrix{{0.0, 2.0}, {0.0, 0.0}}) == doctest::Approx(2.0));
}
