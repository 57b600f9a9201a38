#include "ncmult/classify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ncmult/errors.hpp"
#include "ncmult/vna.hpp"

namespace ncmult {

const char* to_string(Status s) {
  switch (s) {
    case Status::separating: return "separating";
    case Status::not_separating: return "not-separating";
    case Status::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

void check_options(const SamplingOptions& opts) {
  if (opts.trials < 1) throw InvalidTrials("trials must be >= 1, got " + std::to_string(opts.trials));
  if (!(opts.p >= 1.0)) throw InvalidExponent("p must be >= 1, got " + std::to_string(opts.p));
}

// sqrt(tau(x* x)) with the algebra's trace.
double l2_norm(const LinearMap& t, const ComplexMatrix& x) {
  return x.frobenius_norm() * std::sqrt(t.trace_weight());
}

// Returns a witness if T does not keep (a, b) disjoint.
std::optional<Witness> check_pair(const LinearMap& t, const ComplexMatrix& a, const ComplexMatrix& b,
                                  const SamplingOptions& opts) {
  ComplexMatrix ta = t.apply(a);
  ComplexMatrix tb = t.apply(b);
  const double violation = disjointness_violation(ta, tb);
  if (violation <= opts.tol) return std::nullopt;
  Witness w;
  w.pair_violation = disjointness_violation(a, b);
  w.image_violation = violation;
  const double weight = t.trace_weight();
  w.lp_norms = {schatten_norm(a, opts.p, weight), schatten_norm(b, opts.p, weight),
                schatten_norm(ta, opts.p, weight), schatten_norm(tb, opts.p, weight)};
  w.a = a;
  w.b = b;
  w.image_a = std::move(ta);
  w.image_b = std::move(tb);
  return w;
}

}  // namespace

Verdict separating_test(const LinearMap& t, const SamplingOptions& opts) {
  check_options(opts);
  Verdict v;
  v.p = opts.p;
  v.seed = opts.seed;
  v.status = Status::separating;

  const auto probes = t.probe_pairs();
  for (std::size_t k = 0; k < probes.size(); ++k) {
    ++v.probes;
    if (auto w = check_pair(t, probes[k].first, probes[k].second, opts)) {
      w->probe = true;
      w->index = k;
      v.status = Status::not_separating;
      v.witness = std::move(w);
      return v;
    }
  }

  for (int k = 0; k < opts.trials; ++k) {
    const std::uint64_t pair_seed = make_rng(opts.seed, static_cast<std::uint64_t>(k))();
    std::pair<ComplexMatrix, ComplexMatrix> pair;
    try {
      pair = t.random_disjoint_pair(pair_seed);
    } catch (const ExhaustedRetries&) {
      v.note = "algebra has no nonzero disjoint pairs";
      break;
    }
    ++v.trials;
    if (auto w = check_pair(t, pair.first, pair.second, opts)) {
      w->index = static_cast<std::size_t>(k);
      w->pair_seed = pair_seed;
      v.status = Status::not_separating;
      v.witness = std::move(w);
      return v;
    }
  }
  return v;
}

IsometryResult isometry_test(const LinearMap& t, const SamplingOptions& opts) {
  check_options(opts);
  IsometryResult r;
  const double weight = t.trace_weight();
  for (int k = 0; k < opts.trials; ++k) {
    Rng rng = make_rng(opts.seed ^ 0x150U, static_cast<std::uint64_t>(k));
    const ComplexMatrix x = t.random_element(rng);
    const double nx = schatten_norm(x, opts.p, weight);
    if (nx == 0.0) continue;
    const double ntx = schatten_norm(t.apply(x), opts.p, weight);
    r.max_deviation = std::max(r.max_deviation, std::abs(ntx - nx) / nx);
  }
  r.isometric = r.max_deviation <= opts.tol;
  return r;
}

double YeadonResiduals::max() const {
  return std::max({reconstruction, support, jordan, star, commutation});
}

YeadonTriple yeadon_candidate(const LinearMap& t) {
  const std::size_t n = t.dim();
  const std::size_t nb = t.basis_size();
  const ComplexMatrix one = ComplexMatrix::identity(n);

  // T(1) = w B J(1) = w B, so the polar decomposition of T(1) fixes (w, B).
  const ComplexMatrix t1 = t.apply(one);
  auto polar = polar_decompose(t1, 1e-9);
  ComplexMatrix b_plus = psd_pseudo_inverse(polar.b, 1e-9);
  const ComplexMatrix left = b_plus * polar.w.adjoint();

  ComplexMatrix action(nb);
  std::vector<ComplexMatrix> images(nb);  // T(b_k)
  std::vector<ComplexMatrix> jb(nb);      // J(b_k)
  for (std::size_t k = 0; k < nb; ++k) {
    images[k] = t.image_of_basis(k);
    const auto c = t.coordinates(left * images[k]);
    for (std::size_t l = 0; l < nb; ++l) action(l, k) = c[l];
  }
  LinearMap j = LinearMap::from_action(n, t.group(), std::move(action));
  for (std::size_t k = 0; k < nb; ++k) jb[k] = j.image_of_basis(k);

  YeadonResiduals r;
  const ComplexMatrix wb = polar.w * polar.b;
  std::vector<double> bnorm(nb);
  for (std::size_t k = 0; k < nb; ++k) bnorm[k] = l2_norm(t, t.basis(k));
  const double b_scale = std::max(1.0, operator_norm(polar.b));

  for (std::size_t k = 0; k < nb; ++k)
    r.reconstruction = std::max(r.reconstruction, l2_norm(t, images[k] - wb * jb[k]) / (bnorm[k] * b_scale));

  const ComplexMatrix wstar_w = polar.w.adjoint() * polar.w;
  const ComplexMatrix s_b = support_projection(polar.b, 1e-9);
  r.support = std::max(l2_norm(t, wstar_w - j.apply(one)), l2_norm(t, wstar_w - s_b));

  for (std::size_t k = 0; k < nb; ++k) {
    const ComplexMatrix j_of_adjoint = j.apply(t.basis(k).adjoint());
    r.star = std::max(r.star, l2_norm(t, j_of_adjoint - jb[k].adjoint()) / bnorm[k]);
  }

  // Polarised Jordan identity on all basis pairs characterises J(a^2) = J(a)^2.
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t k = i; k < nb; ++k) {
      const ComplexMatrix sym = t.basis(i) * t.basis(k) + t.basis(k) * t.basis(i);
      const ComplexMatrix lhs = j.apply(sym);
      const ComplexMatrix rhs = jb[i] * jb[k] + jb[k] * jb[i];
      r.jordan = std::max(r.jordan, l2_norm(t, lhs - rhs) / (bnorm[i] * bnorm[k]));
    }

  for (const auto& proj : spectral_projections(polar.b, 1e-8))
    for (std::size_t k = 0; k < nb; ++k)
      r.commutation = std::max(r.commutation, l2_norm(t, proj * jb[k] - jb[k] * proj) / bnorm[k]);

  return YeadonTriple{std::move(polar.w), std::move(polar.b), std::move(j), r};
}

YeadonTriple yeadon_extract(const LinearMap& t, double tol) {
  auto y = yeadon_candidate(t);
  const auto& r = y.residuals;
  auto fail = [](const char* what, double value) {
    throw NotSeparating(std::string("Yeadon triple invalid: ") + what + " residual " + std::to_string(value));
  };
  if (r.reconstruction > tol) fail("reconstruction", r.reconstruction);
  if (r.support > tol) fail("support", r.support);
  if (r.star > tol) fail("adjoint", r.star);
  if (r.jordan > tol) fail("Jordan", r.jordan);
  if (r.commutation > tol) fail("commutation", r.commutation);
  return y;
}

LinearMap compose_from_triple(const YeadonTriple& y) {
  const ComplexMatrix wb = y.w * y.b;
  auto f = [&](const ComplexMatrix& a) { return wb * y.j.apply(a); };
  if (y.j.group()) return LinearMap::on_group_algebra(y.j.group(), f);
  return LinearMap::on_matrices(y.j.dim(), f);
}

PositiveDefiniteResult positive_definite_test(const FiniteGroup& g, const std::vector<cplx>& phi, double tol) {
  const ComplexMatrix m = herz_schur_symbol(g, phi).m;
  const double norm = m.frobenius_norm();
  PositiveDefiniteResult r;
  r.hermitian = distance(m, m.adjoint()) <= tol * norm;
  const ComplexMatrix h = r.hermitian ? m : (m + m.adjoint()) * cplx(0.5);
  const auto e = hermitian_eig(h, std::max(tol, 1e-8));
  double scale = 0.0;
  for (double x : e.eigenvalues) scale = std::max(scale, std::abs(x));
  r.min_eigenvalue = e.eigenvalues.front();
  r.positive = r.hermitian && r.min_eigenvalue >= -tol * scale;
  return r;
}

namespace {

// Shared tail of both classifiers: a certificate is cross-checked by the
// sampler (and by the isometry sampler when |c| = 1); without one, only a
// witness decides.
Verdict finish_verdict(const LinearMap& t, std::optional<Certificate> cert, cplx c,
                       const SamplingOptions& opts) {
  Verdict v = separating_test(t, opts);
  if (!cert) {
    if (v.status != Status::not_separating) {
      v.status = Status::inconclusive;
      v.note = "no certificate and no witness found";
    }
    return v;
  }
  v.certificate = std::move(cert);
  if (v.status == Status::not_separating) {
    v.status = Status::inconclusive;
    v.note = "certificate contradicted by a sampled witness";
    return v;
  }
  v.status = Status::separating;
  if (std::abs(std::abs(c) - 1.0) <= opts.tol) {
    const auto iso = isometry_test(t, opts);
    v.max_deviation = iso.max_deviation;
    if (!iso.isometric) {
      v.status = Status::inconclusive;
      v.note = "unimodular certificate but isometry sampling failed";
    }
  }
  return v;
}

}  // namespace

Verdict classify_fourier(const GroupPtr& g, const std::vector<cplx>& phi, const SamplingOptions& opts) {
  auto fit = fit_scalar_character(*g, phi, opts.tol);
  const cplx c = fit ? fit->c : cplx(0.0);
  std::optional<Certificate> cert;
  if (fit) cert = std::move(*fit);
  return finish_verdict(LinearMap::fourier(FourierMultiplier{g, phi}), std::move(cert), c, opts);
}

Verdict classify_schur(const SchurSymbol& m, const SamplingOptions& opts) {
  auto factor = rank_one_unimodular_factor(m, opts.tol);
  const cplx c = factor ? factor->c : cplx(0.0);
  std::optional<Certificate> cert;
  if (factor) cert = std::move(*factor);
  return finish_verdict(LinearMap::schur(m), std::move(cert), c, opts);
}

}  // namespace ncmult
