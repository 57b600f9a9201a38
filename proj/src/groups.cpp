#include "ncmult/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <string>

#include "ncmult/errors.hpp"

namespace ncmult {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> mul, std::vector<std::string> names,
                         std::string label)
    : order_(mul.size()), names_(std::move(names)), label_(std::move(label)) {
  const std::size_t n = order_;
  if (n == 0) throw InvalidGroup("group must have at least one element");
  mul_.reserve(n * n);
  for (const auto& row : mul) {
    if (row.size() != n) throw InvalidGroup("Cayley table must be square");
    for (std::size_t x : row) {
      if (x >= n) throw InvalidGroup("Cayley table entry out of range: " + std::to_string(x));
      mul_.push_back(x);
    }
  }
  // Latin square: every row and column is a permutation.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t r = mul_[i * n + j];
      const std::size_t c = mul_[j * n + i];
      if (row_seen[r] || col_seen[c]) throw InvalidGroup("Cayley table is not a Latin square");
      row_seen[r] = col_seen[c] = true;
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = mul_[e * n + x] == x && mul_[x * n + e] == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidGroup("Cayley table has no two-sided identity");

  inv_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = 0;
    while (mul_[x * n + y] != identity_) ++y;  // exists by the Latin property
    if (mul_[y * n + x] != identity_) throw InvalidGroup("left and right inverses differ");
    inv_[x] = y;
  }

  if (n <= kMaxEnumeratedOrder) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = mul_[a * n + b];
        for (std::size_t c = 0; c < n; ++c)
          if (mul_[ab * n + c] != mul_[a * n + mul_[b * n + c]])
            throw InvalidGroup("Cayley table is not associative at (" + std::to_string(a) + ", " +
                               std::to_string(b) + ", " + std::to_string(c) + ")");
      }
  }

  if (names_.empty()) {
    names_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names_.push_back(std::to_string(i));
  } else if (names_.size() != n) {
    throw InvalidGroup("expected " + std::to_string(n) + " element names, got " +
                       std::to_string(names_.size()));
  }
  if (label_.empty()) label_ = "group(" + std::to_string(n) + ")";
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<std::size_t>> FiniteGroup::table() const {
  std::vector<std::vector<std::size_t>> t(order_);
  for (std::size_t i = 0; i < order_; ++i)
    t[i].assign(mul_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                mul_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
  return t;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw UnknownFamily("cyclic(0) is not a group");
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(mul), std::move(names), "cyclic(" + std::to_string(n) + ")");
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw UnknownFamily("dihedral(0) is not a group");
  // Index f*n + k stands for s^f r^k; r^k s = s r^-k.
  const std::size_t order = 2 * n;
  std::vector<std::vector<std::size_t>> mul(order, std::vector<std::size_t>(order));
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t f1 = x / n, k1 = x % n;
    names[x] = (f1 ? std::string("s") : std::string()) +
               (k1 ? (f1 ? " " : "") + std::string("r^") + std::to_string(k1) : (f1 ? "" : "e"));
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t f2 = y / n, k2 = y % n;
      const std::size_t k = (f2 ? (n - k1) % n : k1) + k2;
      mul[x][y] = ((f1 + f2) % 2) * n + k % n;
    }
  }
  return FiniteGroup(std::move(mul), std::move(names), "dihedral(" + std::to_string(n) + ")");
}

FiniteGroup quaternion_group() {
  // Index 2*u + sign, u in {1, i, j, k}, sign bit 1 meaning negative.
  // unit_mul[u][v] = (w, sign) with u v = (+/-) w.
  static constexpr int unit_mul[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  static const char* unit_names[4] = {"1", "i", "j", "k"};
  std::vector<std::vector<std::size_t>> mul(8, std::vector<std::size_t>(8));
  std::vector<std::string> names(8);
  for (std::size_t x = 0; x < 8; ++x) {
    const std::size_t u = x / 2, su = x % 2;
    names[x] = (su ? "-" : "") + std::string(unit_names[u]);
    for (std::size_t y = 0; y < 8; ++y) {
      const std::size_t v = y / 2, sv = y % 2;
      const auto& r = unit_mul[u][v];
      mul[x][y] = 2 * static_cast<std::size_t>(r[0]) + ((su + sv + static_cast<std::size_t>(r[1])) % 2);
    }
  }
  return FiniteGroup(std::move(mul), std::move(names), "quaternion8");
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) throw UnknownFamily("symmetric(n) is supported for 1 <= n <= 5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t order = perms.size();
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<std::size_t>> mul(order, std::vector<std::size_t>(order));
  std::vector<std::string> names(order);
  std::vector<std::size_t> q(n);
  for (std::size_t a = 0; a < order; ++a) {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) s += (i ? " " : "") + std::to_string(perms[a][i]);
    names[a] = s + "]";
    // (a b)(x) = a(b(x))
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < n; ++i) q[i] = perms[a][perms[b][i]];
      mul[a][b] = index_of(q);
    }
  }
  return FiniteGroup(std::move(mul), std::move(names), "symmetric(" + std::to_string(n) + ")");
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    names[x] = "(" + g.name(x / nh) + "," + h.name(x % nh) + ")";
    for (std::size_t y = 0; y < n; ++y)
      mul[x][y] = g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh);
  }
  return FiniteGroup(std::move(mul), std::move(names), g.label() + " x " + h.label());
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(static_cast<char>(std::tolower(ch)));
  return out;
}

std::size_t parse_count(const std::string& digits, std::string_view context) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
    throw UnknownFamily("bad integer in group name: " + std::string(context));
  return std::stoul(digits);
}

FiniteGroup parse_factor(const std::string& factor) {
  std::string base = factor;
  std::size_t power = 1;
  const auto caret = factor.rfind('^');
  const auto close = factor.rfind(')');
  if (caret != std::string::npos && (close == std::string::npos || caret > close)) {
    base = factor.substr(0, caret);
    power = parse_count(factor.substr(caret + 1), factor);
    if (power == 0) throw UnknownFamily("zero power in group name: " + factor);
  }

  auto make = [&]() -> FiniteGroup {
    if (base == "quaternion8" || base == "q8") return quaternion_group();
    const auto open = base.find('(');
    if (base.empty() || open == std::string::npos || base.back() != ')') throw UnknownFamily("unknown group family: " + base);
    const std::string family = base.substr(0, open);
    const std::size_t n = parse_count(base.substr(open + 1, base.size() - open - 2), base);
    if (family == "cyclic") return cyclic_group(n);
    if (family == "dihedral") return dihedral_group(n);
    if (family == "symmetric") return symmetric_group(n);
    throw UnknownFamily("unknown group family: " + family);
  };
  FiniteGroup g = make();
  FiniteGroup out = g;
  for (std::size_t k = 1; k < power; ++k) out = direct_product(out, g);
  return out;
}

}  // namespace

FiniteGroup builtin_group(std::string_view name) {
  const std::string s = strip(name);
  if (s.empty()) throw UnknownFamily("empty group name");
  std::vector<std::string> factors;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == 'x' || ch == '*')) {
      factors.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  factors.push_back(cur);
  if (depth != 0) throw UnknownFamily("unbalanced parentheses in group name: " + s);

  FiniteGroup g = parse_factor(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, parse_factor(factors[i]));
  return g;
}

std::vector<std::size_t> generated_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::deque<std::size_t> queue{g.identity()};
  in[g.identity()] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t s : gens) {
      const std::size_t y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<std::size_t> commutator_subgroup(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> commutators;
  for (std::size_t s = 0; s < g.order(); ++s)
    for (std::size_t t = 0; t < g.order(); ++t) {
      const std::size_t c = g.mul(g.mul(s, t), g.mul(g.inv(s), g.inv(t)));
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  return generated_subgroup(g, commutators);
}

Character trivial_character(const FiniteGroup& g) { return Character{std::vector<cplx>(g.order(), 1.0)}; }

namespace {

// exp(2 pi i k / e), exact on the quarter turns.
cplx root_of_unity(std::size_t k, std::size_t e) {
  k %= e;
  if ((4 * k) % e == 0) {
    switch ((4 * k) / e) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(e));
}

// Extends the exponent assignment over <gens[0..depth]> by breadth-first
// search on the Cayley graph. Returns false on the first inconsistency.
bool propagate(const FiniteGroup& g, const std::vector<std::size_t>& gens,
               const std::vector<std::size_t>& exps, std::size_t count, std::size_t e,
               std::vector<std::ptrdiff_t>& val) {
  std::fill(val.begin(), val.end(), -1);
  val[g.identity()] = 0;
  std::deque<std::size_t> queue{g.identity()};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t y = g.mul(x, gens[i]);
      const auto v = static_cast<std::ptrdiff_t>((static_cast<std::size_t>(val[x]) + exps[i]) % e);
      if (val[y] < 0) {
        val[y] = v;
        queue.push_back(y);
      } else if (val[y] != v) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Character> enumerate_characters(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > kMaxEnumeratedOrder)
    throw GroupTooLarge("character enumeration supports order <= " + std::to_string(kMaxEnumeratedOrder) +
                        ", got " + std::to_string(n));

  const auto comm = commutator_subgroup(g);
  std::vector<bool> in_comm(n, false);
  for (std::size_t x : comm) in_comm[x] = true;

  // Exponent of G/[G,G]: lcm of the coset orders.
  std::size_t e = 1;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t k = 1;
    for (std::size_t y = x; !in_comm[y]; y = g.mul(y, x)) ++k;
    e = std::lcm(e, k);
  }

  std::vector<std::size_t> gens;
  {
    std::vector<bool> covered(n, false);
    covered[g.identity()] = true;
    for (std::size_t x = 0; x < n; ++x) {
      if (covered[x]) continue;
      gens.push_back(x);
      for (std::size_t y : generated_subgroup(g, gens)) covered[y] = true;
    }
  }

  std::vector<Character> out;
  std::vector<std::size_t> exps(gens.size(), 0);
  std::vector<std::ptrdiff_t> val(n, -1);

  // Depth-first over exponent assignments, pruning as soon as the partial
  // assignment is inconsistent on the subgroup it generates.
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      if (!propagate(g, gens, exps, depth, e, val)) return;
      Character chi;
      chi.values.resize(n);
      for (std::size_t x = 0; x < n; ++x) chi.values[x] = root_of_unity(static_cast<std::size_t>(val[x]), e);
      out.push_back(std::move(chi));
      return;
    }
    for (std::size_t k = 0; k < e; ++k) {
      exps[depth] = k;
      if (propagate(g, gens, exps, depth + 1, e, val)) self(self, depth + 1);
    }
  };
  search(search, 0);
  return out;
}

double character_residual(const FiniteGroup& g, const Character& chi) {
  if (chi.values.size() != g.order()) throw DimMismatch("character length differs from group order");
  double r = std::abs(chi.values[g.identity()] - 1.0);
  for (std::size_t s = 0; s < g.order(); ++s) {
    r = std::max(r, std::abs(std::abs(chi.values[s]) - 1.0));
    for (std::size_t t = 0; t < g.order(); ++t)
      r = std::max(r, std::abs(chi.values[g.mul(s, t)] - chi.values[s] * chi.values[t]));
  }
  return r;
}

std::optional<ScalarCharacterFit> fit_scalar_character(const FiniteGroup& g, const std::vector<cplx>& phi,
                                                       double tol) {
  if (phi.size() != g.order())
    throw DimMismatch("symbol length " + std::to_string(phi.size()) + " differs from group order " +
                      std::to_string(g.order()));
  double scale = 0.0;
  for (const auto& z : phi) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) return ScalarCharacterFit{0.0, trivial_character(g)};

  const double bound = tol * std::max(1.0, scale);
  const cplx c = phi[g.identity()];
  for (auto& psi : enumerate_characters(g)) {
    double err = 0.0;
    for (std::size_t s = 0; s < g.order() && err <= bound; ++s) err = std::max(err, std::abs(phi[s] - c * psi.values[s]));
    if (err <= bound) return ScalarCharacterFit{c, std::move(psi)};
  }
  return std::nullopt;
}

}  // namespace ncmult
