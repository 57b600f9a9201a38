#pragma once

// Seeded random sources. Every generator is a pure function of its seed so
// trial k of a run can be replayed from (seed, k) alone.

#include <cstdint>
#include <random>
#include <vector>

#include "ncmult/linalg.hpp"

namespace ncmult {

using Rng = std::mt19937_64;

/// Generator for stream `index` of a run seeded with `seed`.
Rng make_rng(std::uint64_t seed, std::uint64_t index = 0);

/// Standard complex Gaussian (real and imaginary parts N(0, 1/2)).
cplx complex_gaussian(Rng& rng);

std::vector<cplx> random_complex_vector(Rng& rng, std::size_t n);

/// Uniformly random phases on the unit circle.
std::vector<cplx> random_unimodular_vector(Rng& rng, std::size_t n);

ComplexMatrix random_complex_matrix(Rng& rng, std::size_t n);

/// Haar-distributed unitary (Gram-Schmidt of a Gaussian matrix with the
/// diagonal phase fixed).
ComplexMatrix random_unitary(Rng& rng, std::size_t n);

}  // namespace ncmult
