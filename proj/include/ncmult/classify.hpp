#pragma once

// Decision procedures for separating maps.
//
// Refutation is by sampling: a disjoint pair whose images are not disjoint is
// a witness, and a witness is proof. Confirmation is only ever by algebraic
// certificate (a scalar multiple of a character for Fourier multipliers, a
// rank-one unimodular factorisation for Schur multipliers). Sampling that finds
// nothing never upgrades a verdict to "separating" on its own.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ncmult/groups.hpp"
#include "ncmult/linalg.hpp"
#include "ncmult/linear_map.hpp"
#include "ncmult/schur.hpp"

namespace ncmult {

enum class Status { separating, not_separating, inconclusive };

const char* to_string(Status s);

struct SamplingOptions {
  double p = 2.0;
  int trials = 200;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
};

/// A disjoint pair (a, b) whose images are not disjoint.
struct Witness {
  ComplexMatrix a;
  ComplexMatrix b;
  ComplexMatrix image_a;
  ComplexMatrix image_b;
  double pair_violation = 0.0;   // disjointness_violation(a, b)
  double image_violation = 0.0;  // disjointness_violation(T a, T b)
  /// L^p norms of a, b, T(a), T(b) at the verdict's exponent.
  std::array<double, 4> lp_norms{};
  bool probe = false;             // from the deterministic probe family
  std::size_t index = 0;          // probe index or random trial index
  std::uint64_t pair_seed = 0;    // seed handed to the pair generator (random trials)
};

using Certificate = std::variant<ScalarCharacterFit, RankOneCertificate>;

struct Verdict {
  Status status = Status::inconclusive;
  std::optional<Witness> witness;
  std::optional<Certificate> certificate;
  int trials = 0;      // random trials run
  int probes = 0;      // deterministic probe pairs run
  double p = 2.0;
  std::uint64_t seed = 0;
  std::optional<double> max_deviation;  // isometry deviation, when measured
  std::string note;
};

/// Probe pairs first, then `trials` random disjoint pairs; stops at the first
/// pair whose images violate disjointness by more than tol. Throws
/// InvalidTrials for trials < 1 and InvalidExponent for p < 1.
Verdict separating_test(const LinearMap& t, const SamplingOptions& opts);

struct IsometryResult {
  bool isometric = false;
  double max_deviation = 0.0;  // max |‖T x‖_p - ‖x‖_p| / ‖x‖_p over samples
};

/// Sampled necessary check for ‖T x‖_p = ‖x‖_p; not a certificate.
IsometryResult isometry_test(const LinearMap& t, const SamplingOptions& opts);

struct YeadonResiduals {
  double reconstruction = 0.0;  // T(a) - w B J(a) over the basis
  double support = 0.0;         // w*w against J(1) and s(B)
  double jordan = 0.0;          // J(ab + ba) - J(a)J(b) - J(b)J(a) over basis pairs
  double star = 0.0;            // J(a*) - J(a)*
  double commutation = 0.0;     // spectral projections of B against J(a)

  double max() const;
};

struct YeadonTriple {
  ComplexMatrix w;
  ComplexMatrix b;
  LinearMap j;
  YeadonResiduals residuals;
};

/// Builds (w, B, J) from the polar decomposition T(1) = wB and
/// J(a) = B^+ w* T(a), and measures every residual. Singular values below
/// 1e-9 ||B|| count as zero. Never throws on bad residuals; see yeadon_extract.
YeadonTriple yeadon_candidate(const LinearMap& t);

/// yeadon_candidate, throwing NotSeparating when any residual exceeds tol.
YeadonTriple yeadon_extract(const LinearMap& t, double tol = kDefaultTol);

/// The map a -> w B J(a).
LinearMap compose_from_triple(const YeadonTriple& y);

struct PositiveDefiniteResult {
  bool positive = false;
  double min_eigenvalue = 0.0;
  bool hermitian = true;  // whether [phi(s^-1 t)] was Hermitian
};

/// Positive-definiteness of phi through the matrix [phi(s^-1 t)]. A matrix
/// that is not Hermitian is not positive; min_eigenvalue is then that of its
/// Hermitian part.
PositiveDefiniteResult positive_definite_test(const FiniteGroup& g, const std::vector<cplx>& phi,
                                              double tol = kDefaultTol);

Verdict classify_fourier(const GroupPtr& g, const std::vector<cplx>& phi, const SamplingOptions& opts);

Verdict classify_schur(const SchurSymbol& m, const SamplingOptions& opts);

}  // namespace ncmult
