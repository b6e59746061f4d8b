#include "odg/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "odg/errors.hpp"
#include "odg/numtheory.hpp"

namespace odg {

namespace {

void check_cap(std::int64_t order, std::int64_t max_order, const std::string& what) {
  if (order > max_order) {
    throw cap_exceeded(what + ": order " + std::to_string(order) +
                       " exceeds cap " + std::to_string(max_order));
  }
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, int identity,
                         std::vector<std::string> labels, std::string spec)
    : identity_(identity), labels_(std::move(labels)), spec_(std::move(spec)) {
  n_ = static_cast<int>(table.size());
  if (n_ < 1) throw std::invalid_argument("group table must be non-empty");
  if (identity_ < 0 || identity_ >= n_)
    throw std::invalid_argument("identity index out of range");
  if (static_cast<int>(labels_.size()) != n_)
    throw std::invalid_argument("label count must equal group order");

  table_.resize(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(table[i].size()) != n_)
      throw std::invalid_argument("group table must be square");
    for (int j = 0; j < n_; ++j) {
      const int v = table[i][j];
      if (v < 0 || v >= n_) throw std::invalid_argument("table entry out of range");
      table_[static_cast<std::size_t>(i) * n_ + j] = v;
    }
  }

  // Identity law.
  for (int j = 0; j < n_; ++j) {
    if (mul(identity_, j) != j || mul(j, identity_) != j)
      throw std::invalid_argument("identity law fails");
  }

  // Each row and column must be a permutation (Latin square).
  std::vector<char> seen(n_);
  for (int i = 0; i < n_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n_; ++j) seen[mul(i, j)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::invalid_argument("row is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n_; ++j) seen[mul(j, i)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::invalid_argument("column is not a permutation");
  }

  // Associativity: exhaustive up to 512 elements, fixed-seed sampling above.
  auto assoc_at = [&](int a, int b, int c) {
    return mul(mul(a, b), c) == mul(a, mul(b, c));
  };
  if (n_ <= 512) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (!assoc_at(a, b, c)) throw std::invalid_argument("associativity fails");
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    for (int t = 0; t < 1'000'000; ++t) {
      if (!assoc_at(pick(rng), pick(rng), pick(rng)))
        throw std::invalid_argument("associativity fails");
    }
  }

  inverse_.assign(n_, -1);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (mul(i, j) == identity_) {
        if (mul(j, i) != identity_)
          throw std::invalid_argument("inverse is not two-sided");
        inverse_[i] = j;
        break;
      }
    }
    if (inverse_[i] < 0) throw std::invalid_argument("element has no inverse");
  }
}

// ---- Constructors ----------------------------------------------------

FiniteGroup cyclic_group(std::int64_t n, std::int64_t max_order) {
  if (n < 1) throw std::invalid_argument("cyclic_group requires n >= 1");
  check_cap(n, max_order, "cyclic_group");
  const int m = static_cast<int>(n);
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = std::to_string(i);
    for (int j = 0; j < m; ++j) table[i][j] = (i + j) % m;
  }
  return FiniteGroup(std::move(table), 0, std::move(labels), "Z:" + std::to_string(n));
}

FiniteGroup dihedral_group(std::int64_t n, std::int64_t max_order) {
  if (n < 3) throw std::invalid_argument("dihedral_group requires n >= 3");
  check_cap(2 * n, max_order, "dihedral_group");
  const int m = static_cast<int>(n);
  // Elements 0..n-1 are rotations a^i, n..2n-1 are reflections a^i b.
  // Relations a^n = b^2 = (ab)^2 = e, so b a^j = a^-j b.
  auto compose = [m](int x, int y) {
    const bool xr = x >= m, yr = y >= m;
    const int i = xr ? x - m : x, j = yr ? y - m : y;
    if (!xr && !yr) return (i + j) % m;
    if (!xr && yr) return (i + j) % m + m;
    if (xr && !yr) return ((i - j) % m + m) % m + m;
    return ((i - j) % m + m) % m;
  };
  std::vector<std::vector<int>> table(2 * m, std::vector<int>(2 * m));
  for (int x = 0; x < 2 * m; ++x)
    for (int y = 0; y < 2 * m; ++y) table[x][y] = compose(x, y);
  std::vector<std::string> labels(2 * m);
  for (int i = 0; i < m; ++i) {
    labels[i] = i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i));
    labels[m + i] =
        i == 0 ? "b" : (i == 1 ? "a b" : "a^" + std::to_string(i) + " b");
  }
  return FiniteGroup(std::move(table), 0, std::move(labels), "D:" + std::to_string(n));
}

FiniteGroup units_group(std::int64_t n, std::int64_t max_order) {
  if (n < 1) throw std::invalid_argument("units_group requires n >= 1");
  check_cap(euler_phi(n), max_order, "units_group");
  std::vector<std::int64_t> residues;
  for (std::int64_t x = 0; x < n; ++x) {
    if (std::gcd(x, n) == 1) residues.push_back(x);
  }
  if (n == 1) residues = {0};
  const int m = static_cast<int>(residues.size());
  std::map<std::int64_t, int> index;
  for (int i = 0; i < m; ++i) index[residues[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = std::to_string(residues[i]);
    for (int j = 0; j < m; ++j) table[i][j] = index.at(residues[i] * residues[j] % n);
  }
  const int e = n == 1 ? 0 : index.at(1);
  return FiniteGroup(std::move(table), e, std::move(labels), "U:" + std::to_string(n));
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_even_permutation(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

std::string cycle_label(const std::vector<int>& p) {
  std::string out;
  std::vector<char> seen(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

FiniteGroup permutation_group(std::vector<std::vector<int>> perms, std::string spec,
                              std::int64_t max_order) {
  check_cap(static_cast<std::int64_t>(perms.size()), max_order, spec);
  const int m = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  std::vector<int> composed(perms[0].size());
  for (int i = 0; i < m; ++i) {
    labels[i] = cycle_label(perms[i]);
    for (int j = 0; j < m; ++j) {
      // Apply j first, then i.
      for (std::size_t x = 0; x < composed.size(); ++x)
        composed[x] = perms[i][static_cast<std::size_t>(perms[j][x])];
      table[i][j] = index.at(composed);
    }
  }
  std::vector<int> id(perms[0].size());
  std::iota(id.begin(), id.end(), 0);
  return FiniteGroup(std::move(table), index.at(id), std::move(labels), std::move(spec));
}

}  // namespace

FiniteGroup symmetric_group(int n, std::int64_t max_order) {
  if (n < 1 || n > 6) throw std::invalid_argument("symmetric_group requires 1 <= n <= 6");
  return permutation_group(all_permutations(n), "S:" + std::to_string(n), max_order);
}

FiniteGroup alternating_group(int n, std::int64_t max_order) {
  if (n < 3 || n > 6) throw std::invalid_argument("alternating_group requires 3 <= n <= 6");
  std::vector<std::vector<int>> evens;
  for (auto& p : all_permutations(n)) {
    if (is_even_permutation(p)) evens.push_back(std::move(p));
  }
  return permutation_group(std::move(evens), "A:" + std::to_string(n), max_order);
}

FiniteGroup elementary_abelian(std::int64_t p, int k, std::int64_t max_order) {
  if (!is_prime(p)) throw std::invalid_argument("elementary_abelian requires prime p");
  if (k < 1) throw std::invalid_argument("elementary_abelian requires k >= 1");
  std::int64_t size = 1;
  for (int i = 0; i < k; ++i) {
    size *= p;
    check_cap(size, max_order, "elementary_abelian");
  }
  const int m = static_cast<int>(size);
  auto digits = [&](int x) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = static_cast<int>(x % p);
      x = static_cast<int>(x / p);
    }
    return d;
  };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int x = 0; x < m; ++x) {
    const auto dx = digits(x);
    std::string label = "(";
    for (int i = 0; i < k; ++i) {
      if (i) label += ',';
      label += std::to_string(dx[i]);
    }
    labels[x] = label + ")";
    for (int y = 0; y < m; ++y) {
      const auto dy = digits(y);
      int z = 0;
      std::int64_t weight = 1;
      for (int i = 0; i < k; ++i) {
        z += static_cast<int>(((dx[i] + dy[i]) % p) * weight);
        weight *= p;
      }
      table[x][y] = z;
    }
  }
  return FiniteGroup(std::move(table), 0, std::move(labels),
                     "EA:" + std::to_string(p) + "^" + std::to_string(k));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::int64_t max_order) {
  const std::int64_t size = std::int64_t(g.order()) * h.order();
  check_cap(size, max_order, "direct_product");
  const int m = static_cast<int>(size), hn = h.order();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int x = 0; x < m; ++x) {
    const int xa = x / hn, xb = x % hn;
    labels[x] = "(" + g.label(xa) + "," + h.label(xb) + ")";
    for (int y = 0; y < m; ++y) {
      const int ya = y / hn, yb = y % hn;
      table[x][y] = g.mul(xa, ya) * hn + h.mul(xb, yb);
    }
  }
  return FiniteGroup(std::move(table), g.identity() * hn + h.identity(),
                     std::move(labels), g.spec() + "x" + h.spec());
}

// ---- Element orders --------------------------------------------------

std::int64_t element_order(const FiniteGroup& g, int x) {
  if (x < 0 || x >= g.order()) throw std::invalid_argument("element index out of range");
  std::int64_t m = 1;
  int y = x;
  while (y != g.identity()) {
    y = g.mul(y, x);
    ++m;
  }
  return m;
}

OrderPartition order_partition(const FiniteGroup& g) {
  OrderPartition part;
  for (int x = 0; x < g.order(); ++x) part.classes[element_order(g, x)].push_back(x);
  return part;
}

std::int64_t exponent(const FiniteGroup& g) {
  std::int64_t m = 1;
  for (int x = 0; x < g.order(); ++x) m = std::lcm(m, element_order(g, x));
  return m;
}

// ---- Structural predicates -------------------------------------------

bool is_abelian(const FiniteGroup& g) {
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.mul(i, j) != g.mul(j, i)) return false;
  return true;
}

bool is_cyclic_algebraic(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    if (element_order(g, x) == g.order()) return true;
  return false;
}

bool is_elementary_abelian(const FiniteGroup& g) {
  if (!is_abelian(g)) return false;
  return g.order() == 1 || is_prime(exponent(g));
}

bool all_nonidentity_prime_order(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x) {
    const std::int64_t d = element_order(g, x);
    if (d != 1 && !is_prime(d)) return false;
  }
  return true;
}

std::optional<std::int64_t> is_p_group(const FiniteGroup& g) {
  const auto factors = factorize(g.order());
  if (factors.size() != 1) return std::nullopt;
  return factors[0].prime;
}

// ---- Subgroups ---------------------------------------------------------

bool Subgroup::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> reached{g.identity()};
  in[g.identity()] = 1;
  for (int s : generators) {
    if (s < 0 || s >= g.order()) throw std::invalid_argument("generator out of range");
    if (!in[s]) {
      in[s] = 1;
      reached.push_back(s);
    }
  }
  // Orbit of the identity under right multiplication by generators; in a
  // finite group this is exactly the generated subgroup.
  for (std::size_t i = 0; i < reached.size(); ++i) {
    for (int s : generators) {
      const int y = g.mul(reached[i], s);
      if (!in[y]) {
        in[y] = 1;
        reached.push_back(y);
      }
    }
  }
  std::sort(reached.begin(), reached.end());
  return Subgroup{&g, std::move(reached)};
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::set<int> comms;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      comms.insert(g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b)));
  return subgroup_closure(g, std::vector<int>(comms.begin(), comms.end()));
}

namespace {

bool is_power_of(std::int64_t n, std::int64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::int64_t sylow_order(std::int64_t n, std::int64_t p) {
  std::int64_t pa = 1;
  while (n % p == 0) {
    n /= p;
    pa *= p;
  }
  return pa;
}

std::vector<int> normalizer(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> out;
  for (int y = 0; y < g.order(); ++y) {
    bool ok = true;
    for (int x : h.members) {
      if (!h.contains(g.conjugate(y, x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(y);
  }
  return out;
}

}  // namespace

Subgroup sylow_subgroup(const FiniteGroup& g, std::int64_t p) {
  if (!is_prime(p) || g.order() % p != 0)
    throw std::invalid_argument("sylow_subgroup requires a prime dividing |G|");
  const std::int64_t target = sylow_order(g.order(), p);

  // Seed with an element of order exactly p (exists by Cauchy's theorem).
  int seed = -1;
  for (int x = 0; x < g.order() && seed < 0; ++x) {
    const std::int64_t d = element_order(g, x);
    if (d % p == 0) {
      seed = x;
      for (std::int64_t i = 1; i < d / p; ++i) seed = g.mul(seed, x);
    }
  }
  Subgroup sub = subgroup_closure(g, {seed});

  // Grow by adjoining p-power-order elements of the normalizer; each step
  // yields a strictly larger p-subgroup until the full Sylow order is hit.
  while (sub.size() < target) {
    int next = -1;
    for (int y : normalizer(g, sub)) {
      if (!sub.contains(y) && is_power_of(element_order(g, y), p)) {
        next = y;
        break;
      }
    }
    if (next < 0) throw std::logic_error("sylow extension stalled");
    std::vector<int> gens = sub.members;
    gens.push_back(next);
    sub = subgroup_closure(g, gens);
  }
  return sub;
}

Subgroup p_core(const FiniteGroup& g, std::int64_t p) {
  const Subgroup sylow = sylow_subgroup(g, p);
  std::vector<char> core(g.order(), 0);
  for (int x : sylow.members) core[x] = 1;
  for (int y = 0; y < g.order(); ++y) {
    std::vector<char> conj(g.order(), 0);
    for (int x : sylow.members) conj[g.conjugate(y, x)] = 1;
    for (int x = 0; x < g.order(); ++x) core[x] = core[x] && conj[x];
  }
  std::vector<int> members;
  for (int x = 0; x < g.order(); ++x)
    if (core[x]) members.push_back(x);
  return Subgroup{&g, std::move(members)};
}

Subgroup fitting_subgroup(const FiniteGroup& g) {
  std::vector<int> gens;
  for (const auto& [p, e] : factorize(g.order())) {
    (void)e;
    const Subgroup core = p_core(g, p);
    gens.insert(gens.end(), core.members.begin(), core.members.end());
  }
  return subgroup_closure(g, gens);
}

bool is_nilpotent(const FiniteGroup& g) {
  for (const auto& [p, e] : factorize(g.order())) {
    (void)e;
    if (!is_normal(sylow_subgroup(g, p))) return false;
  }
  return true;
}

bool is_normal(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  for (int y = 0; y < g.order(); ++y)
    for (int x : h.members)
      if (!h.contains(g.conjugate(y, x))) return false;
  return true;
}

FiniteGroup subgroup_as_group(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  const int m = h.size();
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < m; ++i) index[h.members[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = g.label(h.members[i]);
    for (int j = 0; j < m; ++j) {
      const int z = index[g.mul(h.members[i], h.members[j])];
      if (z < 0) throw std::invalid_argument("member set is not closed");
      table[i][j] = z;
    }
  }
  return FiniteGroup(std::move(table), index[g.identity()], std::move(labels),
                     "sub" + std::to_string(m) + "(" + g.spec() + ")");
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int max_order_for_enumeration) {
  if (g.order() > max_order_for_enumeration)
    throw cap_exceeded("all_subgroups: group too large for exhaustive enumeration");
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  const Subgroup trivial = subgroup_closure(g, {});
  seen.insert(trivial.members);
  queue.push_back(trivial.members);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::vector<int> current = queue[i];
    for (int x = 0; x < g.order(); ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      std::vector<int> gens = current;
      gens.push_back(x);
      auto bigger = subgroup_closure(g, gens);
      if (seen.insert(bigger.members).second) queue.push_back(std::move(bigger.members));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& members : seen) out.push_back(Subgroup{&g, members});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

}  // namespace odg
