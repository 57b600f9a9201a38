#pragma once

// Linear maps on a finite-dimensional operator algebra, stored as the matrix
// of the map in a fixed basis of the algebra. Two algebras are supported: the
// full matrix algebra M_n (basis e_ij, row-major) and VN(G) (basis lambda(s)).

#include <functional>
#include <vector>

#include "ncmult/groups.hpp"
#include "ncmult/linalg.hpp"
#include "ncmult/random.hpp"
#include "ncmult/schur.hpp"
#include "ncmult/vna.hpp"

namespace ncmult {

class LinearMap {
 public:
  using Action = std::function<ComplexMatrix(const ComplexMatrix&)>;

  /// Map on M_n given pointwise; evaluated once on every matrix unit.
  static LinearMap on_matrices(std::size_t n, const Action& f);
  /// Map on VN(G) given pointwise; evaluated on every lambda(s) and the
  /// result projected back onto VN(G).
  static LinearMap on_group_algebra(GroupPtr group, const Action& f);
  /// Map with a given action matrix; column k holds the coordinates of the
  /// image of basis element k.
  static LinearMap from_action(std::size_t n, GroupPtr group, ComplexMatrix action);

  static LinearMap fourier(const FourierMultiplier& m);
  static LinearMap schur(const SchurSymbol& m);
  static LinearMap transpose(std::size_t n);
  static LinearMap identity_on_matrices(std::size_t n);

  /// Size of the matrices the algebra acts on (n, or |G|).
  std::size_t dim() const { return dim_; }
  std::size_t basis_size() const { return basis_.size(); }
  const ComplexMatrix& basis(std::size_t k) const { return basis_[k]; }
  const ComplexMatrix& action() const { return action_; }
  /// Null for the full matrix algebra.
  const GroupPtr& group() const { return group_; }
  bool on_group_algebra() const { return static_cast<bool>(group_); }
  /// tau = weight * tr; 1/|G| on VN(G), 1 on M_n.
  double trace_weight() const;

  std::vector<cplx> coordinates(const ComplexMatrix& x) const;
  ComplexMatrix from_coordinates(const std::vector<cplx>& c) const;
  ComplexMatrix apply(const ComplexMatrix& x) const;
  ComplexMatrix image_of_basis(std::size_t k) const;

  /// Random element of the algebra (Gaussian entries or coefficients).
  ComplexMatrix random_element(Rng& rng) const;

  /// Nonzero disjoint pair inside the algebra. On M_n the projections are
  /// unitary conjugates u e_S u* of coordinate splittings; on VN(G) they come
  /// from random_disjoint_pair. Throws ExhaustedRetries when the algebra has
  /// no such pair (dimension one).
  std::pair<ComplexMatrix, ComplexMatrix> random_disjoint_pair(std::uint64_t seed) const;

  /// Deterministic disjoint pairs: Fourier-conjugated diagonal units
  /// (F e_ii F*, F e_jj F*) on M_n, and (1 + lambda(s), 1 - lambda(s)) for
  /// each s of order two on VN(G).
  std::vector<std::pair<ComplexMatrix, ComplexMatrix>> probe_pairs() const;

 private:
  LinearMap(std::size_t dim, GroupPtr group, ComplexMatrix action);

  std::size_t dim_;
  GroupPtr group_;
  std::vector<ComplexMatrix> basis_;
  ComplexMatrix action_;
};

/// The Schur symbol of T if T multiplies every matrix unit by a scalar.
std::optional<SchurSymbol> schur_symbol_of(const LinearMap& t, double tol = kDefaultTol);

}  // namespace ncmult
