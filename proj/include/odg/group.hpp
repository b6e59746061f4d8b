#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace odg {

// Default cap on group order for all constructors; configurable per call
// (the CLI exposes it as --max-order).
inline constexpr std::int64_t kDefaultMaxOrder = 512;

// A finite group stored as an explicit multiplication table. Immutable after
// construction; the constructor validates the full group axioms
// (associativity exhaustively up to 512 elements, by fixed-seed sampling
// above that).
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<int>> table, int identity,
              std::vector<std::string> labels, std::string spec);

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int i, int j) const { return table_[static_cast<std::size_t>(i) * n_ + j]; }
  int inverse(int i) const { return inverse_[i]; }
  // x conjugated by g, i.e. g x g^-1.
  int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& spec() const { return spec_; }

 private:
  int n_;
  std::vector<int> table_;  // row-major n x n
  int identity_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  std::string spec_;
};

// ---- Constructors ----------------------------------------------------

FiniteGroup cyclic_group(std::int64_t n, std::int64_t max_order = kDefaultMaxOrder);
FiniteGroup dihedral_group(std::int64_t n, std::int64_t max_order = kDefaultMaxOrder);
FiniteGroup units_group(std::int64_t n, std::int64_t max_order = kDefaultMaxOrder);
FiniteGroup symmetric_group(int n, std::int64_t max_order = kDefaultMaxOrder);
FiniteGroup alternating_group(int n, std::int64_t max_order = kDefaultMaxOrder);
FiniteGroup elementary_abelian(std::int64_t p, int k,
                               std::int64_t max_order = kDefaultMaxOrder);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::int64_t max_order = kDefaultMaxOrder);

// ---- Element orders --------------------------------------------------

// Least m >= 1 with x^m = identity.
std::int64_t element_order(const FiniteGroup& g, int x);

// Elements grouped by order; only realized orders appear as keys.
struct OrderPartition {
  std::map<std::int64_t, std::vector<int>> classes;
};

OrderPartition order_partition(const FiniteGroup& g);

// lcm of all element orders.
std::int64_t exponent(const FiniteGroup& g);

// ---- Structural predicates -------------------------------------------

bool is_abelian(const FiniteGroup& g);
// True iff some element has order |G|.
bool is_cyclic_algebraic(const FiniteGroup& g);
// Abelian with prime exponent (the trivial group counts).
bool is_elementary_abelian(const FiniteGroup& g);
bool all_nonidentity_prime_order(const FiniteGroup& g);
// The prime p when |G| = p^k with k >= 1, nullopt otherwise.
std::optional<std::int64_t> is_p_group(const FiniteGroup& g);

// ---- Subgroups ---------------------------------------------------------

// A subgroup of `parent`, stored as the sorted set of its element indices.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
};

// Subgroup generated by the given elements (the trivial subgroup for none).
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators);

Subgroup commutator_subgroup(const FiniteGroup& g);

// One Sylow p-subgroup, built by greedy normalizer extension. Requires p | |G|.
Subgroup sylow_subgroup(const FiniteGroup& g, std::int64_t p);

// Intersection of all conjugates of a Sylow p-subgroup. Requires p | |G|.
Subgroup p_core(const FiniteGroup& g, std::int64_t p);

// Subgroup generated by the p-cores over all primes dividing |G|.
Subgroup fitting_subgroup(const FiniteGroup& g);

// True iff every Sylow subgroup is normal.
bool is_nilpotent(const FiniteGroup& g);

bool is_normal(const Subgroup& h);

// Materialize a subgroup as a standalone group (reindexed table).
FiniteGroup subgroup_as_group(const Subgroup& h);

// Every subgroup of g, ordered by size then members. Exhaustive search;
// guarded to |G| <= max_order_for_enumeration.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g,
                                    int max_order_for_enumeration = 24);

}  // namespace odg
