#pragma once

// Schur (Hadamard) multipliers on n x n matrices and the rank-one unimodular
// factorisation m_ij = c alpha_i beta_j that characterises the separating ones.

#include <optional>
#include <vector>

#include "ncmult/groups.hpp"
#include "ncmult/linalg.hpp"

namespace ncmult {

struct SchurSymbol {
  ComplexMatrix m;

  std::size_t dim() const { return m.dim(); }
};

struct RankOneCertificate {
  cplx c;
  std::vector<cplx> alpha;
  std::vector<cplx> beta;
};

/// [x_ij] -> [m_ij x_ij]. Throws DimMismatch.
ComplexMatrix schur_apply(const SchurSymbol& m, const ComplexMatrix& x);

/// c alpha_i beta_j as a matrix.
ComplexMatrix reconstruct(const RankOneCertificate& cert);

/// Factors m as c alpha_i beta_j with unimodular alpha, beta. Gauge:
/// alpha_0 = beta_0 = 1, c = m_00. Moduli must agree within tol * max|m_ij|
/// and the factorisation must reproduce m within the same bound; otherwise
/// there is no certificate. The zero symbol gives (0, 1, 1).
std::optional<RankOneCertificate> rank_one_unimodular_factor(const SchurSymbol& m,
                                                             double tol = kDefaultTol);

/// m(s, t) = phi(s^-1 t).
SchurSymbol herz_schur_symbol(const FiniteGroup& g, const std::vector<cplx>& phi);

/// Reads a character off a certificate of a Herz-Schur symbol:
/// psi(r) = beta(r t) / beta(t) at t = e, scaled by c' = c alpha(e) beta(e).
/// Absent unless psi is a character and c' psi(s^-1 t) reproduces the
/// certified symbol within tol * max(1, |c|).
std::optional<ScalarCharacterFit> recover_character(const FiniteGroup& g, const RankOneCertificate& cert,
                                                    double tol = kDefaultTol);

}  // namespace ncmult
