#pragma once

// Finite groups given by their Cayley table, and their one-dimensional
// unitary characters.

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncmult/linalg.hpp"

namespace ncmult {

/// Largest order for which associativity is checked on construction and for
/// which characters are enumerated.
inline constexpr std::size_t kMaxEnumeratedOrder = 64;

class FiniteGroup {
 public:
  /// Validates the table (Latin square, two-sided identity, associativity for
  /// order <= kMaxEnumeratedOrder) and derives identity and inverses. Throws
  /// InvalidGroup on any violation. Empty names are replaced by indices.
  FiniteGroup(std::vector<std::vector<std::size_t>> mul, std::vector<std::string> names = {},
              std::string label = {});

  std::size_t order() const { return order_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * order_ + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t identity() const { return identity_; }
  const std::string& name(std::size_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Human-readable description, e.g. "symmetric(3)" for builtins.
  const std::string& label() const { return label_; }

  std::size_t element_order(std::size_t a) const;
  bool is_abelian() const;
  std::vector<std::vector<std::size_t>> table() const;

  /// Groups are compared structurally (identical Cayley tables).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.mul_ == b.mul_; }

 private:
  std::size_t order_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
  std::size_t identity_ = 0;
  std::vector<std::string> names_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Unimodular homomorphism G -> T, stored by its values in element order.
struct Character {
  std::vector<cplx> values;
};

struct ScalarCharacterFit {
  cplx c;
  Character psi;
};

FiniteGroup cyclic_group(std::size_t n);
/// Symmetries of the regular n-gon, order 2n. Elements s^f r^k.
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup quaternion_group();
/// All permutations of {0..n-1} in lexicographic order, n <= 5.
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Parses names like "cyclic(4)", "dihedral(4)", "quaternion8",
/// "symmetric(3)", powers "cyclic(2)^2" and products "cyclic(2) x symmetric(3)".
/// Throws UnknownFamily.
FiniteGroup builtin_group(std::string_view name);

/// Smallest subgroup containing the given elements, sorted.
std::vector<std::size_t> generated_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& gens);

/// [G, G], sorted element indices.
std::vector<std::size_t> commutator_subgroup(const FiniteGroup& g);

/// Every character of G, the trivial one first. Throws GroupTooLarge for
/// order > kMaxEnumeratedOrder.
std::vector<Character> enumerate_characters(const FiniteGroup& g);

Character trivial_character(const FiniteGroup& g);

/// Largest violation of the character invariants: | |chi(s)| - 1 |,
/// |chi(st) - chi(s) chi(t)| and |chi(e) - 1|.
double character_residual(const FiniteGroup& g, const Character& chi);

/// phi = c psi for some character psi, with c = phi(e). Mismatch is measured
/// as max_s |phi(s) - c psi(s)| against tol * max(1, max_s |phi(s)|).
/// The zero symbol fits (0, trivial).
std::optional<ScalarCharacterFit> fit_scalar_character(const FiniteGroup& g,
                                                       const std::vector<cplx>& phi,
                                                       double tol = kDefaultTol);

}  // namespace ncmult
