#include "ncmult/linalg.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ncmult/errors.hpp"

namespace ncmult {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_)
    throw DimMismatch("matrix of dim " + std::to_string(dim_) + " needs " +
                      std::to_string(dim_ * dim_) + " entries, got " + std::to_string(data_.size()));
  if (!is_finite()) throw InvalidMatrix("matrix has non-finite entries");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimMismatch("initializer rows must form a square matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t dim, std::size_t i, std::size_t j) {
  ComplexMatrix m(dim);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::is_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw DimMismatch("matrix sum of different dimensions");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw DimMismatch("matrix difference of different dimensions");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw DimMismatch("matrix product of different dimensions");
  const std::size_t n = a.dim_;
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      const cplx* brow = &b.data_[k * n];
      cplx* crow = &c.data_[i * n];
      for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  return c;
}

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimMismatch("Hadamard product of different dimensions");
  ComplexMatrix c(a.dim());
  for (std::size_t k = 0; k < a.data().size(); ++k) c.data()[k] = a.data()[k] * b.data()[k];
  return c;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).frobenius_norm(); }

ComplexMatrix gram(const ComplexMatrix& a) { return a.adjoint() * a; }

double unitarity_defect(const ComplexMatrix& a) {
  return distance(gram(a), ComplexMatrix::identity(a.dim()));
}

namespace {

// Parameters of the unitary R acting on coordinates (p, q):
//   R e_p = c e_p - s conj(phase) e_q,  R e_q = s e_p + c conj(phase) e_q,
// chosen so that R* [[a, g], [conj g, b]] R is diagonal.
struct Rotation {
  double c;
  double s;
  cplx phase;  // g / |g|
};

// |z| without the overflow guard of hypot; operands here are well scaled.
double modulus(cplx z) { return std::sqrt(std::norm(z)); }

Rotation jacobi_rotation(double a, double b, cplx g) {
  const double r = modulus(g);
  const double zeta = (b - a) / (2.0 * r);
  double t;
  if (std::abs(zeta) > 1e150) {
    t = 0.5 / zeta;
  } else {
    t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return {c, t * c, g / r};
}

// Column-major scratch storage: the rotations below touch whole columns, which
// are then contiguous.
class ColumnStore {
 public:
  explicit ColumnStore(const ComplexMatrix& m) : n_(m.dim()), d_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) d_[j * n_ + i] = m(i, j);
  }

  cplx* col(std::size_t j) { return d_.data() + j * n_; }
  const cplx* col(std::size_t j) const { return d_.data() + j * n_; }
  cplx& at(std::size_t i, std::size_t j) { return d_[j * n_ + i]; }

  ComplexMatrix to_matrix(const std::vector<std::size_t>& order) const {
    ComplexMatrix out(n_);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < n_; ++i) out(i, j) = d_[order[j] * n_ + i];
    return out;
  }

 private:
  std::size_t n_;
  std::vector<cplx> d_;
};

// (x, y) <- (c x - s conj(phase) y, s x + c conj(phase) y), i.e. M <- M R on two columns.
void rotate_pair(cplx* x, cplx* y, std::size_t n, const Rotation& rot) {
  const cplx pc = std::conj(rot.phase);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx xp = x[k];
    const cplx yq = pc * y[k];
    x[k] = rot.c * xp - rot.s * yq;
    y[k] = rot.s * xp + rot.c * yq;
  }
}

double norm2(const cplx* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += std::norm(x[k]);
  return s;
}

// x* y
cplx inner(const cplx* x, const cplx* y, std::size_t n) {
  cplx s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += std::conj(x[k]) * y[k];
  return s;
}

std::vector<std::size_t> argsort(const std::vector<double>& v, bool ascending) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return ascending ? v[i] < v[j] : v[i] > v[j];
  });
  return idx;
}

ComplexMatrix permute_columns(const ComplexMatrix& m, const std::vector<std::size_t>& order) {
  ComplexMatrix out(m.dim());
  for (std::size_t j = 0; j < order.size(); ++j)
    for (std::size_t i = 0; i < m.dim(); ++i) out(i, j) = m(i, order[j]);
  return out;
}

// Replace the columns not flagged in `valid` by an orthonormal completion of
// the flagged ones.
void complete_orthonormal(ComplexMatrix& u, std::vector<bool> valid) {
  const std::size_t n = u.dim();
  for (std::size_t j = 0; j < n; ++j) {
    if (valid[j]) continue;
    std::vector<cplx> best;
    double best_norm = -1.0;
    for (std::size_t e = 0; e < n; ++e) {
      std::vector<cplx> v(n, 0.0);
      v[e] = 1.0;
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t k = 0; k < n; ++k) {
          if (!valid[k]) continue;
          cplx proj = 0.0;
          for (std::size_t i = 0; i < n; ++i) proj += std::conj(u(i, k)) * v[i];
          for (std::size_t i = 0; i < n; ++i) v[i] -= proj * u(i, k);
        }
      double nv = 0.0;
      for (const auto& z : v) nv += std::norm(z);
      if (nv > best_norm) {
        best_norm = nv;
        best = std::move(v);
      }
    }
    const double scale = 1.0 / std::sqrt(best_norm);
    for (std::size_t i = 0; i < n; ++i) u(i, j) = best[i] * scale;
    valid[j] = true;
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& h, double tol) {
  const std::size_t n = h.dim();
  const double norm = h.frobenius_norm();
  const double skew = distance(h, h.adjoint());
  if (skew > tol * norm)
    throw NotHermitian("hermitian_eig: ||H - H*||_F = " + std::to_string(skew) +
                       " exceeds tolerance");

  ColumnStore a((h + h.adjoint()) * cplx(0.5));
  ColumnStore v(ComplexMatrix::identity(n));
  const double threshold = DBL_EPSILON * norm / static_cast<double>(std::max<std::size_t>(n, 1));

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx g = a.at(p, q);
        if (g == cplx(0.0) || modulus(g) <= threshold) continue;
        const double app = a.at(p, p).real(), aqq = a.at(q, q).real(), r = modulus(g);
        const Rotation rot = jacobi_rotation(app, aqq, g);
        // A <- R* A R: rotate the two columns, then mirror them into the rows.
        rotate_pair(a.col(p), a.col(q), n, rot);
        for (std::size_t k = 0; k < n; ++k) {
          a.at(p, k) = std::conj(a.at(k, p));
          a.at(q, k) = std::conj(a.at(k, q));
        }
        const double cs = rot.c * rot.s;
        a.at(p, p) = rot.c * rot.c * app - 2.0 * cs * r + rot.s * rot.s * aqq;
        a.at(q, q) = rot.s * rot.s * app + 2.0 * cs * r + rot.c * rot.c * aqq;
        a.at(p, q) = a.at(q, p) = 0.0;
        rotate_pair(v.col(p), v.col(q), n, rot);
        rotated = true;
      }
    converged = !rotated;
  }
  if (!converged) throw NoConvergence("hermitian_eig: no convergence after " +
                                      std::to_string(kMaxSweeps) + " sweeps");

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a.at(i, i).real();
  const auto order = argsort(ev, true);
  EigenDecomposition out;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = ev[order[i]];
  out.eigenvectors = v.to_matrix(order);
  return out;
}

SingularValueDecomposition svd(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ColumnStore w(a);
  ColumnStore v(ComplexMatrix::identity(n));
  std::vector<double> col2(n);
  const double rot_tol = DBL_EPSILON * static_cast<double>(std::max<std::size_t>(n, 1));
  // Columns below this squared norm hold only rounding noise; rotating them
  // against each other can cycle without ever converging.
  const double frob = a.frobenius_norm();
  const double noise2 = rot_tol * rot_tol * frob * frob;

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    bool rotated = false;
    // Squared column norms are refreshed every sweep and updated in closed
    // form after each rotation in between.
    for (std::size_t j = 0; j < n; ++j) col2[j] = norm2(w.col(j), n);
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = col2[p];
        const double beta = col2[q];
        if (std::min(alpha, beta) <= noise2) continue;
        const cplx g = inner(w.col(p), w.col(q), n);
        if (g == cplx(0.0) || modulus(g) <= rot_tol * std::sqrt(alpha * beta)) continue;
        const Rotation rot = jacobi_rotation(alpha, beta, g);
        rotate_pair(w.col(p), w.col(q), n, rot);
        rotate_pair(v.col(p), v.col(q), n, rot);
        const double cs = rot.c * rot.s, r = modulus(g);
        col2[p] = std::max(0.0, rot.c * rot.c * alpha - 2.0 * cs * r + rot.s * rot.s * beta);
        col2[q] = std::max(0.0, rot.s * rot.s * alpha + 2.0 * cs * r + rot.c * rot.c * beta);
        rotated = true;
      }
    converged = !rotated;
  }
  if (!converged)
    throw NoConvergence("svd: no convergence after " + std::to_string(kMaxSweeps) + " sweeps");

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(norm2(w.col(j), n));
  const double smax = n ? *std::max_element(sigma.begin(), sigma.end()) : 0.0;
  const double null_thr = smax * DBL_EPSILON * static_cast<double>(n);

  ComplexMatrix u(n);
  std::vector<bool> valid(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (smax == 0.0 || sigma[j] <= null_thr) continue;
    for (std::size_t i = 0; i < n; ++i) u(i, j) = w.at(i, j) / sigma[j];
    valid[j] = true;
  }
  complete_orthonormal(u, valid);

  const auto order = argsort(sigma, false);
  SingularValueDecomposition out;
  out.sigma.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.sigma[i] = sigma[order[i]];
  out.u = permute_columns(u, order);
  out.v = v.to_matrix(order);
  return out;
}

double schatten_norm_from_sigma(std::span<const double> sigma, double p, double trace_weight) {
  if (!(p >= 1.0)) throw InvalidExponent("Schatten exponent must satisfy p >= 1, got " + std::to_string(p));
  if (!(trace_weight > 0.0)) throw std::invalid_argument("trace weight must be positive");
  if (std::isinf(p)) return sigma.empty() ? 0.0 : *std::max_element(sigma.begin(), sigma.end());
  const double smax = sigma.empty() ? 0.0 : *std::max_element(sigma.begin(), sigma.end());
  if (smax == 0.0) return 0.0;
  // Factor out the largest value so sigma^p cannot overflow.
  double s = 0.0;
  for (double x : sigma) s += std::pow(x / smax, p);
  return smax * std::pow(trace_weight * s, 1.0 / p);
}

double schatten_norm(const ComplexMatrix& a, double p, double trace_weight) {
  if (!(p >= 1.0)) throw InvalidExponent("Schatten exponent must satisfy p >= 1, got " + std::to_string(p));
  if (!(trace_weight > 0.0)) throw std::invalid_argument("trace weight must be positive");
  const auto sigma = svd(a).sigma;
  return schatten_norm_from_sigma(sigma, p, trace_weight);
}

PolarDecomposition polar_decompose(const ComplexMatrix& a, double tol) {
  const std::size_t n = a.dim();
  const auto d = svd(a);
  const double smax = n ? d.sigma.front() : 0.0;
  PolarDecomposition out{ComplexMatrix(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    if (smax == 0.0 || d.sigma[k] <= tol * smax) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        out.w(i, j) += d.u(i, k) * std::conj(d.v(j, k));
        out.b(i, j) += d.sigma[k] * d.v(i, k) * std::conj(d.v(j, k));
      }
  }
  return out;
}

namespace {

EigenDecomposition psd_eig(const ComplexMatrix& b, double tol, const char* who) {
  EigenDecomposition e;
  try {
    e = hermitian_eig(b, std::max(tol, 1e-12));
  } catch (const NotHermitian&) {
    throw NotPositive(std::string(who) + ": operand is not Hermitian");
  }
  double scale = 0.0;
  for (double x : e.eigenvalues) scale = std::max(scale, std::abs(x));
  if (!e.eigenvalues.empty() && e.eigenvalues.front() < -tol * scale)
    throw NotPositive(std::string(who) + ": negative eigenvalue " + std::to_string(e.eigenvalues.front()));
  return e;
}

}  // namespace

ComplexMatrix support_projection(const ComplexMatrix& b, double tol) {
  const auto e = psd_eig(b, tol, "support_projection");
  const std::size_t n = b.dim();
  double scale = 0.0;
  for (double x : e.eigenvalues) scale = std::max(scale, std::abs(x));
  ComplexMatrix p(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (scale == 0.0 || e.eigenvalues[k] <= tol * scale) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        p(i, j) += e.eigenvectors(i, k) * std::conj(e.eigenvectors(j, k));
  }
  return p;
}

ComplexMatrix psd_pseudo_inverse(const ComplexMatrix& b, double tol) {
  const auto e = psd_eig(b, tol, "psd_pseudo_inverse");
  const std::size_t n = b.dim();
  double scale = 0.0;
  for (double x : e.eigenvalues) scale = std::max(scale, std::abs(x));
  ComplexMatrix p(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (scale == 0.0 || e.eigenvalues[k] <= tol * scale) continue;
    const double inv = 1.0 / e.eigenvalues[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        p(i, j) += inv * e.eigenvectors(i, k) * std::conj(e.eigenvectors(j, k));
  }
  return p;
}

std::vector<ComplexMatrix> spectral_projections(const ComplexMatrix& h, double cluster_tol) {
  const auto e = hermitian_eig(h, 1e-8);
  const std::size_t n = h.dim();
  double scale = 0.0;
  for (double x : e.eigenvalues) scale = std::max(scale, std::abs(x));
  const double gap = cluster_tol * std::max(scale, std::numeric_limits<double>::min());

  std::vector<ComplexMatrix> out;
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && e.eigenvalues[end] - e.eigenvalues[end - 1] <= gap) ++end;
    ComplexMatrix p(n);
    for (std::size_t k = start; k < end; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          p(i, j) += e.eigenvectors(i, k) * std::conj(e.eigenvectors(j, k));
    out.push_back(std::move(p));
    start = end;
  }
  return out;
}

double operator_norm(const ComplexMatrix& a) {
  if (a.empty()) return 0.0;
  return svd(a).sigma.front();
}

}  // namespace ncmult
