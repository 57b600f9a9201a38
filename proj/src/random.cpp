#include "ncmult/random.hpp"

#include <cmath>
#include <numbers>

namespace ncmult {

namespace {

// SplitMix64 finaliser; decorrelates neighbouring (seed, index) pairs.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t index) { return Rng(mix(mix(seed) ^ index)); }

cplx complex_gaussian(Rng& rng) {
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  const double re = nd(rng);
  const double im = nd(rng);
  return {re, im};
}

std::vector<cplx> random_complex_vector(Rng& rng, std::size_t n) {
  std::vector<cplx> v(n);
  for (auto& z : v) z = complex_gaussian(rng);
  return v;
}

std::vector<cplx> random_unimodular_vector(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> ud(0.0, 2.0 * std::numbers::pi);
  std::vector<cplx> v(n);
  for (auto& z : v) z = std::polar(1.0, ud(rng));
  return v;
}

ComplexMatrix random_complex_matrix(Rng& rng, std::size_t n) {
  ComplexMatrix m(n);
  for (auto& z : m.data()) z = complex_gaussian(rng);
  return m;
}

ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  ComplexMatrix q = random_complex_matrix(rng, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < j; ++k) {
        cplx proj = 0.0;
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
      }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

}  // namespace ncmult
