#include "ncmult/vna.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ncmult/errors.hpp"

namespace ncmult {

ComplexMatrix regular_representation(const FiniteGroup& g, std::size_t s) {
  ComplexMatrix m(g.order());
  for (std::size_t t = 0; t < g.order(); ++t) m(g.mul(s, t), t) = 1.0;
  return m;
}

ComplexMatrix right_regular_representation(const FiniteGroup& g, std::size_t s) {
  ComplexMatrix m(g.order());
  for (std::size_t t = 0; t < g.order(); ++t) m(g.mul(t, g.inv(s)), t) = 1.0;
  return m;
}

std::vector<cplx> vn_coefficients(const FiniteGroup& g, const ComplexMatrix& x) {
  const std::size_t n = g.order();
  if (x.dim() != n) throw DimMismatch("matrix dimension differs from group order");
  std::vector<cplx> f(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    cplx acc = 0.0;
    for (std::size_t t = 0; t < n; ++t) acc += x(g.mul(s, t), t);
    f[s] = acc / static_cast<double>(n);
  }
  return f;
}

ComplexMatrix vn_matrix(const FiniteGroup& g, std::span<const cplx> f) {
  const std::size_t n = g.order();
  if (f.size() != n) throw DimMismatch("coefficient length differs from group order");
  ComplexMatrix m(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (f[s] == cplx(0.0)) continue;
    for (std::size_t t = 0; t < n; ++t) m(g.mul(s, t), t) += f[s];
  }
  return m;
}

bool in_group_algebra(const FiniteGroup& g, const ComplexMatrix& x, double tol) {
  const std::size_t n = g.order();
  if (x.dim() != n) return false;
  const double bound = tol * x.frobenius_norm();
  // rho(s) permutes basis vectors by t -> t s^-1; x commutes with it iff
  // x(i s^-1, t s^-1) = x(i, t) for all i, t.
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t si = g.inv(s);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) err += std::norm(x(g.mul(i, si), g.mul(t, si)) - x(i, t));
    if (std::sqrt(err) > bound) return false;
  }
  return true;
}

GroupAlgebraElement::GroupAlgebraElement(GroupPtr group, std::vector<cplx> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (!group_) throw InvalidGroup("group algebra element without a group");
  matrix_ = vn_matrix(*group_, coeffs_);
}

GroupAlgebraElement GroupAlgebraElement::zero(GroupPtr group) {
  const std::size_t n = group->order();
  return {std::move(group), std::vector<cplx>(n, 0.0)};
}

GroupAlgebraElement GroupAlgebraElement::unit(GroupPtr group) {
  const std::size_t e = group->identity();
  return basis(std::move(group), e);
}

GroupAlgebraElement GroupAlgebraElement::basis(GroupPtr group, std::size_t s) {
  std::vector<cplx> f(group->order(), 0.0);
  f.at(s) = 1.0;
  return {std::move(group), std::move(f)};
}

GroupAlgebraElement GroupAlgebraElement::from_matrix(GroupPtr group, const ComplexMatrix& x) {
  auto f = vn_coefficients(*group, x);
  return {std::move(group), std::move(f)};
}

GroupAlgebraElement GroupAlgebraElement::adjoint() const {
  std::vector<cplx> f(coeffs_.size());
  for (std::size_t s = 0; s < f.size(); ++s) f[s] = std::conj(coeffs_[group_->inv(s)]);
  return {group_, std::move(f)};
}

namespace {

void require_same_group(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.group_ptr() != b.group_ptr() && !(a.group() == b.group()))
    throw GroupMismatch("operands live over different groups");
}

}  // namespace

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same_group(a, b);
  std::vector<cplx> f(a.coeffs_.size());
  for (std::size_t s = 0; s < f.size(); ++s) f[s] = a.coeffs_[s] + b.coeffs_[s];
  return {a.group_, std::move(f)};
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same_group(a, b);
  std::vector<cplx> f(a.coeffs_.size());
  for (std::size_t s = 0; s < f.size(); ++s) f[s] = a.coeffs_[s] - b.coeffs_[s];
  return {a.group_, std::move(f)};
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same_group(a, b);
  const FiniteGroup& g = a.group();
  std::vector<cplx> f(g.order(), 0.0);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (a.coeffs_[s] == cplx(0.0)) continue;
    for (std::size_t t = 0; t < g.order(); ++t) f[g.mul(s, t)] += a.coeffs_[s] * b.coeffs_[t];
  }
  return {a.group_, std::move(f)};
}

GroupAlgebraElement operator*(cplx s, const GroupAlgebraElement& a) {
  std::vector<cplx> f(a.coeffs_);
  for (auto& z : f) z *= s;
  return {a.group_, std::move(f)};
}

cplx plancherel_trace(const GroupAlgebraElement& x) { return x.coeffs()[x.group().identity()]; }

double lp_norm(const GroupAlgebraElement& x, double p) {
  return schatten_norm(x.matrix(), p, 1.0 / static_cast<double>(x.group().order()));
}

GroupAlgebraElement apply_fourier(const FourierMultiplier& m, const GroupAlgebraElement& x) {
  if (!m.group || (m.group != x.group_ptr() && !(*m.group == x.group())))
    throw GroupMismatch("Fourier multiplier and element live over different groups");
  if (m.symbol.size() != x.group().order())
    throw DimMismatch("symbol length " + std::to_string(m.symbol.size()) + " differs from group order");
  std::vector<cplx> f(x.coeffs().begin(), x.coeffs().end());
  for (std::size_t s = 0; s < f.size(); ++s) f[s] *= m.symbol[s];
  return {x.group_ptr(), std::move(f)};
}

GroupAlgebraElement random_self_adjoint(const GroupPtr& group, Rng& rng) {
  const auto g = random_complex_vector(rng, group->order());
  std::vector<cplx> f(g.size());
  for (std::size_t s = 0; s < f.size(); ++s) f[s] = 0.5 * (g[s] + std::conj(g[group->inv(s)]));
  return {group, std::move(f)};
}

GroupAlgebraElement random_element(const GroupPtr& group, Rng& rng) {
  return {group, random_complex_vector(rng, group->order())};
}

std::pair<GroupAlgebraElement, GroupAlgebraElement> random_projection_pair(const GroupPtr& group,
                                                                           std::uint64_t seed) {
  const std::size_t n = group->order();
  if (n == 1) {
    auto one = GroupAlgebraElement::unit(group);
    auto nil = GroupAlgebraElement::zero(group);
    if (seed % 2 == 0) return {std::move(one), std::move(nil)};
    return {std::move(nil), std::move(one)};
  }

  constexpr int kAttempts = 16;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(attempt));
    const auto h = random_self_adjoint(group, rng);
    const auto e = hermitian_eig(h.matrix(), 1e-8);
    double radius = 0.0;
    for (double x : e.eigenvalues) radius = std::max(radius, std::abs(x));

    std::vector<std::size_t> cuts;  // cut between eigenvalues k-1 and k
    for (std::size_t k = 1; k < n; ++k)
      if (e.eigenvalues[k] - e.eigenvalues[k - 1] > 1e-6 * radius) cuts.push_back(k);
    if (cuts.empty()) continue;

    std::uniform_int_distribution<std::size_t> pick(0, cuts.size() - 1);
    const std::size_t cut = cuts[pick(rng)];
    ComplexMatrix p(n);
    for (std::size_t k = 0; k < cut; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          p(i, j) += e.eigenvectors(i, k) * std::conj(e.eigenvectors(j, k));

    // Back to coefficients; this also removes rounding drift out of VN(G).
    auto pe = GroupAlgebraElement::from_matrix(group, p);
    auto qe = GroupAlgebraElement::unit(group) - pe;
    return {std::move(pe), std::move(qe)};
  }
  throw DegenerateSpectrum("could not split the spectrum of a random self-adjoint element in " +
                           std::to_string(kAttempts) + " attempts");
}

std::pair<GroupAlgebraElement, GroupAlgebraElement> random_disjoint_pair(const GroupPtr& group,
                                                                         std::uint64_t seed) {
  if (group->order() < 2) throw ExhaustedRetries("a one-dimensional algebra has no nonzero disjoint pairs");

  constexpr int kAttempts = 64;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng = make_rng(seed, 0x1000U + static_cast<std::uint64_t>(attempt));
    const std::uint64_t s1 = rng();
    const std::uint64_t s2 = rng();
    const auto [p, q] = random_projection_pair(group, s1);
    const auto [r, s] = random_projection_pair(group, s2);
    const auto x = random_element(group, rng);
    const auto y = random_element(group, rng);
    auto a = p * x * r;
    auto b = q * y * s;
    if (a.matrix().frobenius_norm() < 1e-6 * x.matrix().frobenius_norm()) continue;
    if (b.matrix().frobenius_norm() < 1e-6 * y.matrix().frobenius_norm()) continue;
    if (!is_disjoint(a.matrix(), b.matrix(), 1e-10)) continue;
    return {std::move(a), std::move(b)};
  }
  throw ExhaustedRetries("no nonzero disjoint pair after " + std::to_string(kAttempts) + " attempts");
}

double disjointness_violation(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimMismatch("disjointness test on matrices of different dimensions");
  const double scale = a.frobenius_norm() * b.frobenius_norm();
  if (scale == 0.0) return 0.0;
  const double left = (a.adjoint() * b).frobenius_norm();
  const double right = (a * b.adjoint()).frobenius_norm();
  return std::max(left, right) / scale;
}

bool is_disjoint(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return disjointness_violation(a, b) <= tol;
}

}  // namespace ncmult
