#pragma once

#include <cstdint>
#include <vector>

#include "odg/graph.hpp"
#include "odg/group.hpp"

namespace odg {

// The divisors of n ordered by divisibility: a bounded lattice with bottom 1
// and top n.
struct DivisorLattice {
  std::int64_t n = 1;
  std::vector<std::int64_t> elements;  // ascending, first 1, last n

  // a <= b in the lattice, i.e. a | b. Both must be divisors of n.
  bool leq(std::int64_t a, std::int64_t b) const { return b % a == 0; }
};

DivisorLattice divisor_lattice(std::int64_t n);

// OD(G): one vertex per group element; distinct vertices of different orders
// are adjacent iff one order divides the other. Vertices are annotated with
// the element label and its order.
struct ODGraph {
  Graph graph{0};
  OrderPartition partition;
};

ODGraph od_graph(const FiniteGroup& g);

// G_n: one vertex per divisor of n, distinct comparable divisors adjacent.
Graph comparability_graph(std::int64_t n);

// E(G_n): blow-up of G_n replacing divisor d by phi(d) independent copies;
// n vertices in total.
Graph extended_graph(std::int64_t n);

// ((p1-1)K_1 * (p1-1)(p2-1)K_1 * (p2-1)K_1) * K_1 as a sequential join.
Graph theorem5_shape(std::int64_t p1, std::int64_t p2);

// Six outer independent blocks G_1,G_12,G_2,G_23,G_3,G_13 joined in a cycle
// of block joins, everything joined to G_123, then to K_1.
Graph theorem7_shape(std::int64_t p1, std::int64_t p2, std::int64_t p3);

// The two graph-side equivalents of cyclicity:
//   extended_matches:  E(G_|G|) isomorphic to OD(G)
//   reduced_matches:   G_|G| isomorphic to R(OD(G))
struct CyclicEquivalence {
  bool extended_matches = false;
  bool reduced_matches = false;
};

CyclicEquivalence is_cyclic_via_od(const FiniteGroup& g);

}  // namespace odg
