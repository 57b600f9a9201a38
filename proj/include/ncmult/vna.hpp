#pragma once

// The group von Neumann algebra VN(G) of a finite group, realised inside the
// |G| x |G| matrices by the left regular representation and equipped with the
// normalised (Plancherel) trace tau(lambda(f)) = f(e).

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ncmult/groups.hpp"
#include "ncmult/linalg.hpp"
#include "ncmult/random.hpp"

namespace ncmult {

/// Permutation matrix of left translation: lambda(s) e_t = e_{st}.
ComplexMatrix regular_representation(const FiniteGroup& g, std::size_t s);

/// Permutation matrix of right translation: rho(s) e_t = e_{t s^-1}.
ComplexMatrix right_regular_representation(const FiniteGroup& g, std::size_t s);

/// lambda(f) = sum_s f(s) lambda(s). The coefficient vector is authoritative;
/// the matrix is built once on construction.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement(GroupPtr group, std::vector<cplx> coeffs);

  static GroupAlgebraElement zero(GroupPtr group);
  static GroupAlgebraElement unit(GroupPtr group);
  static GroupAlgebraElement basis(GroupPtr group, std::size_t s);
  /// Coefficients f(s) = tau(lambda(s)* x). Exact for x in VN(G), the
  /// trace-orthogonal projection onto VN(G) otherwise.
  static GroupAlgebraElement from_matrix(GroupPtr group, const ComplexMatrix& x);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::span<const cplx> coeffs() const { return coeffs_; }
  const ComplexMatrix& matrix() const { return matrix_; }

  GroupAlgebraElement adjoint() const;

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  /// Convolution of coefficients.
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator*(cplx s, const GroupAlgebraElement& a);

 private:
  GroupPtr group_;
  std::vector<cplx> coeffs_;
  ComplexMatrix matrix_;
};

/// Coefficients of a |G| x |G| matrix in the basis lambda(s), i.e.
/// f(s) = (1/|G|) tr(lambda(s)* x).
std::vector<cplx> vn_coefficients(const FiniteGroup& g, const ComplexMatrix& x);

/// Realisation of sum_s f(s) lambda(s) as a matrix.
ComplexMatrix vn_matrix(const FiniteGroup& g, std::span<const cplx> f);

/// Membership in VN(G): x commutes with every right translation, within
/// tol * ||x||_F.
bool in_group_algebra(const FiniteGroup& g, const ComplexMatrix& x, double tol = 1e-8);

/// tau(x) = f(e).
cplx plancherel_trace(const GroupAlgebraElement& x);

/// ||x||_p = tau(|x|^p)^(1/p). Throws InvalidExponent for p < 1.
double lp_norm(const GroupAlgebraElement& x, double p);

struct FourierMultiplier {
  GroupPtr group;
  std::vector<cplx> symbol;
};

/// lambda(f) -> lambda(phi f). Throws GroupMismatch when x lives over a
/// different group, DimMismatch when the symbol length is wrong.
GroupAlgebraElement apply_fourier(const FourierMultiplier& m, const GroupAlgebraElement& x);

/// Random self-adjoint element of VN(G).
GroupAlgebraElement random_self_adjoint(const GroupPtr& group, Rng& rng);

/// Random element of VN(G) with complex Gaussian coefficients.
GroupAlgebraElement random_element(const GroupPtr& group, Rng& rng);

/// Orthogonal projections p, q in VN(G) with pq = 0 and p + q = 1, obtained by
/// cutting the spectrum of a random self-adjoint element at a gap. Throws
/// DegenerateSpectrum after 16 unsplittable draws (never for order 1, whose
/// only splits are (1, 0) and (0, 1)).
std::pair<GroupAlgebraElement, GroupAlgebraElement> random_projection_pair(const GroupPtr& group,
                                                                           std::uint64_t seed);

/// Nonzero a = p x r, b = q y s from two projection pairs; a*b = ab* = 0.
/// Throws ExhaustedRetries when no nonzero pair can be drawn (order 1).
std::pair<GroupAlgebraElement, GroupAlgebraElement> random_disjoint_pair(const GroupPtr& group,
                                                                         std::uint64_t seed);

/// a*b = ab* = 0 within tol * ||a||_F ||b||_F. Throws DimMismatch.
bool is_disjoint(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kDefaultTol);

/// max(||a*b||_F, ||ab*||_F) / (||a||_F ||b||_F); zero if either operand is 0.
double disjointness_violation(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace ncmult
