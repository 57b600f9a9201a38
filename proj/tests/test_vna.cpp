#include <doctest.h>

#include <cmath>
#include <memory>

#include "ncmult/errors.hpp"
#include "ncmult/vna.hpp"
#include "support.hpp"

using namespace ncmult;
using testing::max_diff;

namespace {

GroupPtr group(const char* name) { return std::make_shared<const FiniteGroup>(builtin_group(name)); }

std::vector<cplx> to_vector(std::span<const cplx> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("regular representation") {
  const auto c2 = builtin_group("cyclic(2)");
  CHECK(regular_representation(c2, 1) == (ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}));
  for (const char* name : {"cyclic(5)", "symmetric(3)", "quaternion8", "dihedral(4)"}) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    CHECK(regular_representation(g, g.identity()) == ComplexMatrix::identity(g.order()));
    for (std::size_t s = 0; s < g.order(); ++s) {
      const ComplexMatrix ls = regular_representation(g, s);
      CHECK(unitarity_defect(ls) == 0.0);
      CHECK(ls.adjoint() == regular_representation(g, g.inv(s)));
      if (s != g.identity())
        for (std::size_t i = 0; i < g.order(); ++i) CHECK(ls(i, i) == cplx(0.0));
      for (std::size_t t = 0; t < g.order(); ++t)
        CHECK(ls * regular_representation(g, t) == regular_representation(g, g.mul(s, t)));
    }
  }
}

TEST_CASE("VN(G) membership is commutation with right translations") {
  const auto g = group("symmetric(3)");
  for (std::size_t s = 0; s < 6; ++s) {
    CHECK(in_group_algebra(*g, regular_representation(*g, s)));
    CHECK(regular_representation(*g, s) * right_regular_representation(*g, 2) ==
          right_regular_representation(*g, 2) * regular_representation(*g, s));
  }
  CHECK_FALSE(in_group_algebra(*g, ComplexMatrix::unit(6, 0, 0)));
}

TEST_CASE("plancherel trace") {
  const auto g = group("dihedral(4)");
  CHECK(plancherel_trace(GroupAlgebraElement::unit(g)) == cplx(1.0));
  for (std::size_t s = 1; s < g->order(); ++s) CHECK(plancherel_trace(GroupAlgebraElement::basis(g, s)) == cplx(0.0));
  Rng rng = make_rng(2);
  const auto x = random_element(g, rng);
  const cplx by_coeff = plancherel_trace(x);
  CHECK(by_coeff == x.coeffs()[g->identity()]);
  CHECK(std::abs(by_coeff - x.matrix().trace() / 8.0) < 1e-14);
}

TEST_CASE("coefficients round trip through the matrix") {
  const auto g = group("quaternion8");
  Rng rng = make_rng(4);
  const auto x = random_element(g, rng);
  CHECK(max_diff(vn_coefficients(*g, x.matrix()), to_vector(x.coeffs())) < 1e-14);
  const auto y = GroupAlgebraElement::from_matrix(g, x.matrix());
  CHECK(max_diff(to_vector(y.coeffs()), to_vector(x.coeffs())) < 1e-14);
}

TEST_CASE("group algebra operations match matrix operations") {
  const auto g = group("symmetric(3)");
  Rng rng = make_rng(6);
  const auto x = random_element(g, rng);
  const auto y = random_element(g, rng);
  CHECK(distance((x * y).matrix(), x.matrix() * y.matrix()) < 1e-12);
  CHECK(distance((x + y).matrix(), x.matrix() + y.matrix()) < 1e-14);
  CHECK(distance(x.adjoint().matrix(), x.matrix().adjoint()) < 1e-14);
  CHECK(distance((cplx(0.0, 2.0) * x).matrix(), x.matrix() * cplx(0.0, 2.0)) < 1e-14);
  CHECK_THROWS_AS(x + GroupAlgebraElement::unit(group("cyclic(6)")), GroupMismatch);
}

TEST_CASE("lp_norm examples") {
  const auto g = group("symmetric(3)");
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    CHECK(lp_norm(GroupAlgebraElement::unit(g), p) == doctest::Approx(1.0).epsilon(1e-14));
    for (std::size_t s = 0; s < 6; ++s)
      CHECK(lp_norm(GroupAlgebraElement::basis(g, s), p) == doctest::Approx(1.0).epsilon(1e-14));
  }
  // Gelfand transform of lambda(0) + lambda(1) on cyclic(2) is (2, 0).
  const auto c2 = group("cyclic(2)");
  const GroupAlgebraElement x(c2, {1.0, 1.0});
  CHECK(lp_norm(x, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(lp_norm(x, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(lp_norm(x, 0.9), InvalidExponent);
}

TEST_CASE("Plancherel isometry") {
  for (const char* name : {"cyclic(7)", "symmetric(3)", "quaternion8"}) {
    const auto g = group(name);
    Rng rng = make_rng(8);
    for (int k = 0; k < 10; ++k) {
      const auto x = random_element(g, rng);
      double l2 = 0.0;
      for (const auto& c : x.coeffs()) l2 += std::norm(c);
      CHECK(lp_norm(x, 2.0) == doctest::Approx(std::sqrt(l2)).epsilon(1e-9));
    }
  }
}

TEST_CASE("apply_fourier: examples") {
  const auto g = group("cyclic(4)");
  Rng rng = make_rng(10);
  const auto x = random_element(g, rng);
  const auto same = apply_fourier({g, std::vector<cplx>(4, 1.0)}, x);
  CHECK(max_diff(to_vector(same.coeffs()), to_vector(x.coeffs())) == 0.0);

  const auto chars = enumerate_characters(*g);
  for (const auto& psi : chars)
    for (std::size_t s = 0; s < 4; ++s) {
      const auto image = apply_fourier({g, psi.values}, GroupAlgebraElement::basis(g, s));
      CHECK(distance(image.matrix(), psi.values[s] * regular_representation(*g, s)) < 1e-15);
    }

  CHECK_THROWS_AS(apply_fourier({g, {1.0, 1.0}}, x), DimMismatch);
  CHECK_THROWS_AS(apply_fourier({group("cyclic(2)^2"), std::vector<cplx>(4, 1.0)}, x), GroupMismatch);
}

TEST_CASE("apply_fourier: L2 operator norm is the sup of the symbol") {
  const auto g = group("dihedral(4)");
  const std::vector<cplx> phi{0.5, cplx(0.0, -3.0), 1.0, 2.0, cplx(1.0, 1.0), 0.0, -1.0, 0.25};
  double best = 0.0;
  for (std::size_t s = 0; s < 8; ++s) {
    const auto b = GroupAlgebraElement::basis(g, s);
    best = std::max(best, lp_norm(apply_fourier({g, phi}, b), 2.0) / lp_norm(b, 2.0));
  }
  CHECK(best == doctest::Approx(3.0).epsilon(1e-12));
  Rng rng = make_rng(12);
  for (int k = 0; k < 20; ++k) {
    const auto x = random_element(g, rng);
    CHECK(lp_norm(apply_fourier({g, phi}, x), 2.0) <= 3.0 * lp_norm(x, 2.0) * (1.0 + 1e-12));
  }
}

TEST_CASE("apply_fourier: commuting multipliers compose pointwise") {
  const auto g = group("symmetric(3)");
  Rng rng = make_rng(14);
  const auto phi = random_complex_vector(rng, 6);
  const auto psi = random_complex_vector(rng, 6);
  std::vector<cplx> prod(6);
  for (std::size_t s = 0; s < 6; ++s) prod[s] = phi[s] * psi[s];
  const auto x = random_element(g, rng);
  const auto twice = apply_fourier({g, phi}, apply_fourier({g, psi}, x));
  const auto once = apply_fourier({g, prod}, x);
  CHECK(distance(twice.matrix(), once.matrix()) < 1e-13);
}

TEST_CASE("characters act isometrically on every L^p") {
  for (const char* name : {"cyclic(6)", "symmetric(3)", "quaternion8", "dihedral(4)"}) {
    CAPTURE(name);
    const auto g = group(name);
    Rng rng = make_rng(16);
    for (const auto& psi : enumerate_characters(*g))
      for (int k = 0; k < 3; ++k) {
        const auto x = random_element(g, rng);
        for (double p : {1.0, 1.5, 2.0, 3.0, 4.0})
          CHECK(lp_norm(apply_fourier({g, psi.values}, x), p) == doctest::Approx(lp_norm(x, p)).epsilon(1e-9));
      }
  }
}

TEST_CASE("random_projection_pair: cyclic(2) gives the Gelfand projections") {
  const auto g = group("cyclic(2)");
  const std::vector<cplx> plus{0.5, 0.5}, minus{0.5, -0.5};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto [p, q] = random_projection_pair(g, seed);
    const auto pc = to_vector(p.coeffs()), qc = to_vector(q.coeffs());
    const bool order_a = max_diff(pc, plus) < 1e-12 && max_diff(qc, minus) < 1e-12;
    const bool order_b = max_diff(pc, minus) < 1e-12 && max_diff(qc, plus) < 1e-12;
    CHECK((order_a || order_b));
  }
}

TEST_CASE("random_projection_pair: projections on symmetric(3)") {
  const auto g = group("symmetric(3)");
  const ComplexMatrix one = ComplexMatrix::identity(6);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto [p, q] = random_projection_pair(g, seed);
    const ComplexMatrix& pm = p.matrix();
    const ComplexMatrix& qm = q.matrix();
    CHECK(distance(pm * pm, pm) < 1e-9);
    CHECK(distance(pm, pm.adjoint()) < 1e-9);
    CHECK(distance(qm * qm, qm) < 1e-9);
    CHECK((pm * qm).frobenius_norm() < 1e-9);
    CHECK(distance(pm + qm, one) < 1e-9);
    CHECK(pm.frobenius_norm() > 0.5);
    CHECK(qm.frobenius_norm() > 0.5);
  }
}

TEST_CASE("random_projection_pair: trivial group") {
  const auto g = group("cyclic(1)");
  const auto [p0, q0] = random_projection_pair(g, 0);
  CHECK(p0.coeffs()[0] == cplx(1.0));
  CHECK(q0.coeffs()[0] == cplx(0.0));
  const auto [p1, q1] = random_projection_pair(g, 1);
  CHECK(p1.coeffs()[0] == cplx(0.0));
  CHECK(q1.coeffs()[0] == cplx(1.0));
}

TEST_CASE("random_disjoint_pair: disjoint, nonzero, inside VN(G)") {
  for (const char* name : {"symmetric(3)", "cyclic(6)"}) {
    CAPTURE(name);
    const auto g = group(name);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      const auto [a, b] = random_disjoint_pair(g, seed);
      const double scale = a.matrix().frobenius_norm() * b.matrix().frobenius_norm();
      CHECK(scale > 0.0);
      CHECK((a.matrix().adjoint() * b.matrix()).frobenius_norm() <= 1e-10 * scale);
      CHECK((a.matrix() * b.matrix().adjoint()).frobenius_norm() <= 1e-10 * scale);
      CHECK(in_group_algebra(*g, a.matrix()));
    }
  }
}

TEST_CASE("random_disjoint_pair: reproducible from the seed") {
  const auto g = group("quaternion8");
  const auto [a1, b1] = random_disjoint_pair(g, 42);
  const auto [a2, b2] = random_disjoint_pair(g, 42);
  CHECK(a1.matrix() == a2.matrix());
  CHECK(b1.matrix() == b2.matrix());
}

TEST_CASE("random_disjoint_pair: cyclic(2) Gelfand pair and trivial group") {
  const auto c2 = group("cyclic(2)");
  const GroupAlgebraElement a(c2, {1.0, 1.0}), b(c2, {1.0, -1.0});
  CHECK(is_disjoint(a.matrix(), b.matrix()));
  CHECK_THROWS_AS(random_disjoint_pair(group("cyclic(1)"), 0), ExhaustedRetries);
}

TEST_CASE("is_disjoint examples") {
  CHECK(is_disjoint(ComplexMatrix::unit(2, 0, 0), ComplexMatrix::unit(2, 1, 1)));
  CHECK_FALSE(is_disjoint(ComplexMatrix::unit(2, 0, 0), ComplexMatrix::unit(2, 0, 1)));
  CHECK(is_disjoint(ComplexMatrix(2), ComplexMatrix::unit(2, 0, 1)));
  CHECK_THROWS_AS(is_disjoint(ComplexMatrix(2), ComplexMatrix(3)), DimMismatch);
  CHECK(disjointness_violation(ComplexMatrix::unit(2, 0, 0), ComplexMatrix::unit(2, 0, 1)) == doctest::Approx(1.0));
}
