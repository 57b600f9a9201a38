#include "ncmult/schur.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ncmult/errors.hpp"

namespace ncmult {

ComplexMatrix schur_apply(const SchurSymbol& m, const ComplexMatrix& x) {
  if (m.dim() != x.dim())
    throw DimMismatch("Schur symbol of dim " + std::to_string(m.dim()) + " applied to matrix of dim " +
                      std::to_string(x.dim()));
  return hadamard(m.m, x);
}

ComplexMatrix reconstruct(const RankOneCertificate& cert) {
  const std::size_t n = cert.alpha.size();
  if (cert.beta.size() != n) throw DimMismatch("certificate vectors differ in length");
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = cert.c * cert.alpha[i] * cert.beta[j];
  return out;
}

std::optional<RankOneCertificate> rank_one_unimodular_factor(const SchurSymbol& sym, double tol) {
  const ComplexMatrix& m = sym.m;
  const std::size_t n = m.dim();
  if (n == 0) return std::nullopt;
  const double scale = m.max_abs();
  if (scale == 0.0) return RankOneCertificate{0.0, std::vector<cplx>(n, 1.0), std::vector<cplx>(n, 1.0)};

  const double bound = tol * scale;
  for (const auto& z : m.data())
    if (std::abs(std::abs(z) - scale) > bound) return std::nullopt;

  RankOneCertificate cert{m(0, 0), std::vector<cplx>(n), std::vector<cplx>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const cplx a = m(i, 0) / cert.c;
    const cplx b = m(0, i) / cert.c;
    cert.alpha[i] = a / std::abs(a);
    cert.beta[i] = b / std::abs(b);
  }
  cert.alpha[0] = cert.beta[0] = 1.0;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(m(i, j) - cert.c * cert.alpha[i] * cert.beta[j]) > bound) return std::nullopt;
  return cert;
}

SchurSymbol herz_schur_symbol(const FiniteGroup& g, const std::vector<cplx>& phi) {
  const std::size_t n = g.order();
  if (phi.size() != n)
    throw DimMismatch("symbol length " + std::to_string(phi.size()) + " differs from group order " +
                      std::to_string(n));
  SchurSymbol out{ComplexMatrix(n)};
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) out.m(s, t) = phi[g.mul(g.inv(s), t)];
  return out;
}

std::optional<ScalarCharacterFit> recover_character(const FiniteGroup& g, const RankOneCertificate& cert,
                                                    double tol) {
  const std::size_t n = g.order();
  if (cert.alpha.size() != n || cert.beta.size() != n)
    throw DimMismatch("certificate length differs from group order");
  const std::size_t e = g.identity();
  if (cert.c == cplx(0.0)) return ScalarCharacterFit{0.0, trivial_character(g)};
  if (std::abs(cert.beta[e]) == 0.0) return std::nullopt;

  Character psi;
  psi.values.resize(n);
  for (std::size_t r = 0; r < n; ++r) psi.values[r] = cert.beta[g.mul(r, e)] / cert.beta[e];
  if (character_residual(g, psi) > tol) return std::nullopt;

  const cplx c = cert.c * cert.alpha[e] * cert.beta[e];
  const double bound = tol * std::max(1.0, std::abs(cert.c));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const cplx certified = cert.c * cert.alpha[s] * cert.beta[t];
      if (std::abs(certified - c * psi.values[g.mul(g.inv(s), t)]) > bound) return std::nullopt;
    }
  return ScalarCharacterFit{c, std::move(psi)};
}

}  // namespace ncmult
