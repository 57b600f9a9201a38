#include "ncmult/linear_map.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ncmult/errors.hpp"

namespace ncmult {

LinearMap::LinearMap(std::size_t dim, GroupPtr group, ComplexMatrix action)
    : dim_(dim), group_(std::move(group)), action_(std::move(action)) {
  if (group_) {
    if (group_->order() != dim_) throw DimMismatch("group order differs from matrix dimension");
    for (std::size_t s = 0; s < dim_; ++s) basis_.push_back(regular_representation(*group_, s));
  } else {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) basis_.push_back(ComplexMatrix::unit(dim_, i, j));
  }
  if (action_.dim() != basis_.size())
    throw DimMismatch("action matrix of dim " + std::to_string(action_.dim()) + " for a basis of size " +
                      std::to_string(basis_.size()));
}

LinearMap LinearMap::from_action(std::size_t n, GroupPtr group, ComplexMatrix action) {
  return LinearMap(n, std::move(group), std::move(action));
}

LinearMap LinearMap::on_matrices(std::size_t n, const Action& f) {
  LinearMap t(n, nullptr, ComplexMatrix(n * n));
  for (std::size_t k = 0; k < t.basis_size(); ++k) {
    const auto c = t.coordinates(f(t.basis_[k]));
    for (std::size_t l = 0; l < c.size(); ++l) t.action_(l, k) = c[l];
  }
  return t;
}

LinearMap LinearMap::on_group_algebra(GroupPtr group, const Action& f) {
  const std::size_t n = group->order();
  LinearMap t(n, std::move(group), ComplexMatrix(n));
  for (std::size_t k = 0; k < t.basis_size(); ++k) {
    const auto c = t.coordinates(f(t.basis_[k]));
    for (std::size_t l = 0; l < c.size(); ++l) t.action_(l, k) = c[l];
  }
  return t;
}

LinearMap LinearMap::fourier(const FourierMultiplier& m) {
  if (!m.group) throw InvalidGroup("Fourier multiplier without a group");
  if (m.symbol.size() != m.group->order()) throw DimMismatch("symbol length differs from group order");
  return LinearMap(m.group->order(), m.group, ComplexMatrix::diagonal(std::span<const cplx>(m.symbol)));
}

LinearMap LinearMap::schur(const SchurSymbol& m) {
  return LinearMap(m.dim(), nullptr, ComplexMatrix::diagonal(m.m.data()));
}

LinearMap LinearMap::transpose(std::size_t n) {
  ComplexMatrix action(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) action(j * n + i, i * n + j) = 1.0;
  return LinearMap(n, nullptr, std::move(action));
}

LinearMap LinearMap::identity_on_matrices(std::size_t n) {
  return LinearMap(n, nullptr, ComplexMatrix::identity(n * n));
}

double LinearMap::trace_weight() const {
  return group_ ? 1.0 / static_cast<double>(group_->order()) : 1.0;
}

std::vector<cplx> LinearMap::coordinates(const ComplexMatrix& x) const {
  if (x.dim() != dim_) throw DimMismatch("operand dimension differs from the algebra");
  if (group_) return vn_coefficients(*group_, x);
  return {x.data().begin(), x.data().end()};
}

ComplexMatrix LinearMap::from_coordinates(const std::vector<cplx>& c) const {
  if (c.size() != basis_.size()) throw DimMismatch("coordinate vector has the wrong length");
  if (group_) return vn_matrix(*group_, c);
  return ComplexMatrix(dim_, c);
}

ComplexMatrix LinearMap::apply(const ComplexMatrix& x) const {
  const auto c = coordinates(x);
  const std::size_t m = c.size();
  std::vector<cplx> out(m, 0.0);
  for (std::size_t l = 0; l < m; ++l) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < m; ++k) acc += action_(l, k) * c[k];
    out[l] = acc;
  }
  return from_coordinates(out);
}

ComplexMatrix LinearMap::image_of_basis(std::size_t k) const {
  std::vector<cplx> c(basis_.size());
  for (std::size_t l = 0; l < c.size(); ++l) c[l] = action_(l, k);
  return from_coordinates(c);
}

ComplexMatrix LinearMap::random_element(Rng& rng) const {
  if (group_) return ncmult::random_element(group_, rng).matrix();
  return random_complex_matrix(rng, dim_);
}

namespace {

// u e_S u* and u e_{S^c} u* for a random unitary u and random proper subset S.
std::pair<ComplexMatrix, ComplexMatrix> random_coordinate_split(std::size_t n, Rng& rng) {
  const ComplexMatrix u = random_unitary(rng, n);
  std::vector<bool> in_s(n);
  std::bernoulli_distribution coin(0.5);
  std::size_t count = 0;
  do {
    count = 0;
    for (std::size_t i = 0; i < n; ++i) count += (in_s[i] = coin(rng)) ? 1 : 0;
  } while (count == 0 || count == n);

  ComplexMatrix p(n), q(n);
  for (std::size_t k = 0; k < n; ++k) {
    ComplexMatrix& target = in_s[k] ? p : q;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) target(i, j) += u(i, k) * std::conj(u(j, k));
  }
  return {std::move(p), std::move(q)};
}

}  // namespace

std::pair<ComplexMatrix, ComplexMatrix> LinearMap::random_disjoint_pair(std::uint64_t seed) const {
  if (group_) {
    auto [a, b] = ncmult::random_disjoint_pair(group_, seed);
    return {a.matrix(), b.matrix()};
  }
  if (dim_ < 2) throw ExhaustedRetries("a one-dimensional algebra has no nonzero disjoint pairs");

  constexpr int kAttempts = 64;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng = make_rng(seed, 0x2000U + static_cast<std::uint64_t>(attempt));
    const auto [p, q] = random_coordinate_split(dim_, rng);
    const auto [r, s] = random_coordinate_split(dim_, rng);
    const ComplexMatrix x = random_complex_matrix(rng, dim_);
    const ComplexMatrix y = random_complex_matrix(rng, dim_);
    ComplexMatrix a = p * x * r;
    ComplexMatrix b = q * y * s;
    if (a.frobenius_norm() < 1e-6 * x.frobenius_norm()) continue;
    if (b.frobenius_norm() < 1e-6 * y.frobenius_norm()) continue;
    if (!is_disjoint(a, b, 1e-10)) continue;
    return {std::move(a), std::move(b)};
  }
  throw ExhaustedRetries("no nonzero disjoint pair after " + std::to_string(kAttempts) + " attempts");
}

std::vector<std::pair<ComplexMatrix, ComplexMatrix>> LinearMap::probe_pairs() const {
  std::vector<std::pair<ComplexMatrix, ComplexMatrix>> out;
  if (group_) {
    const FiniteGroup& g = *group_;
    const ComplexMatrix one = ComplexMatrix::identity(dim_);
    for (std::size_t s = 0; s < g.order(); ++s) {
      if (s == g.identity() || g.mul(s, s) != g.identity()) continue;
      const ComplexMatrix l = regular_representation(g, s);
      out.emplace_back(one + l, one - l);
    }
    return out;
  }
  const std::size_t n = dim_;
  ComplexMatrix f(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      f(j, k) = std::polar(norm, 2.0 * std::numbers::pi * static_cast<double>(j * k % n) / static_cast<double>(n));
  // Exact Hadamard for n = 2.
  if (n == 2) f = ComplexMatrix{{norm, norm}, {norm, -norm}};
  const ComplexMatrix fa = f.adjoint();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.emplace_back(f * ComplexMatrix::unit(n, i, i) * fa, f * ComplexMatrix::unit(n, j, j) * fa);
  return out;
}

std::optional<SchurSymbol> schur_symbol_of(const LinearMap& t, double tol) {
  if (t.on_group_algebra()) return std::nullopt;
  const std::size_t n = t.dim();
  const double scale = std::max(1.0, t.action().max_abs());
  SchurSymbol out{ComplexMatrix(n)};
  for (std::size_t k = 0; k < t.basis_size(); ++k)
    for (std::size_t l = 0; l < t.basis_size(); ++l) {
      if (l == k) {
        out.m(k / n, k % n) = t.action()(k, k);
      } else if (std::abs(t.action()(l, k)) > tol * scale) {
        return std::nullopt;
      }
    }
  return out;
}

}  // namespace ncmult
