#include "odg/odgraph.hpp"

#include <stdexcept>

#include "odg/numtheory.hpp"

namespace odg {

DivisorLattice divisor_lattice(std::int64_t n) {
  return DivisorLattice{n, divisors(n)};
}

ODGraph od_graph(const FiniteGroup& g) {
  ODGraph od;
  od.partition = order_partition(g);
  od.graph = Graph(g.order());

  std::vector<VertexInfo> info(g.order());
  std::vector<std::int64_t> order_of(g.order());
  for (const auto& [d, members] : od.partition.classes) {
    for (int v : members) {
      order_of[v] = d;
      info[v] = {g.label(v), d};
    }
  }
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const std::int64_t a = order_of[u], b = order_of[v];
      if (a != b && (b % a == 0 || a % b == 0)) od.graph.add_edge(u, v);
    }
  }
  od.graph.set_annotations(std::move(info));
  return od;
}

Graph comparability_graph(std::int64_t n) {
  const DivisorLattice lattice = divisor_lattice(n);
  const int k = static_cast<int>(lattice.elements.size());
  Graph g(k);
  std::vector<VertexInfo> info(k);
  for (int i = 0; i < k; ++i) {
    info[i] = {std::to_string(lattice.elements[i]), lattice.elements[i]};
    for (int j = i + 1; j < k; ++j) {
      if (lattice.leq(lattice.elements[i], lattice.elements[j])) g.add_edge(i, j);
    }
  }
  g.set_annotations(std::move(info));
  return g;
}

Graph extended_graph(std::int64_t n) {
  const auto divs = divisors(n);
  std::vector<std::int64_t> multiplicity;
  std::vector<int> offset;
  int total = 0;
  for (std::int64_t d : divs) {
    offset.push_back(total);
    multiplicity.push_back(euler_phi(d));
    total += static_cast<int>(multiplicity.back());
  }
  if (total != n) throw std::logic_error("phi does not sum to n");

  Graph g(total);
  std::vector<VertexInfo> info(total);
  for (std::size_t i = 0; i < divs.size(); ++i) {
    for (int c = 0; c < multiplicity[i]; ++c)
      info[offset[i] + c] = {std::to_string(divs[i]), divs[i]};
    for (std::size_t j = i + 1; j < divs.size(); ++j) {
      if (divs[j] % divs[i] != 0) continue;
      for (int a = 0; a < multiplicity[i]; ++a)
        for (int b = 0; b < multiplicity[j]; ++b)
          g.add_edge(offset[i] + a, offset[j] + b);
    }
  }
  g.set_annotations(std::move(info));
  return g;
}

Graph theorem5_shape(std::int64_t p1, std::int64_t p2) {
  if (!is_prime(p1) || !is_prime(p2) || p1 == p2)
    throw std::invalid_argument("theorem5_shape requires distinct primes");
  const int a = static_cast<int>(p1 - 1);
  const int b = static_cast<int>(p2 - 1);
  const Graph chain = sequential_join(
      {independent_set(a), independent_set(a * b), independent_set(b)});
  return join(chain, independent_set(1));
}

Graph theorem7_shape(std::int64_t p1, std::int64_t p2, std::int64_t p3) {
  if (!is_prime(p1) || !is_prime(p2) || !is_prime(p3) || p1 == p2 || p1 == p3 ||
      p2 == p3)
    throw std::invalid_argument("theorem7_shape requires distinct primes");
  const int s1 = static_cast<int>(p1 - 1);
  const int s2 = static_cast<int>(p2 - 1);
  const int s3 = static_cast<int>(p3 - 1);
  // Outer blocks in cyclic order; each block participates in two joins.
  const std::vector<int> sizes{s1, s1 * s2, s2, s2 * s3, s3, s1 * s3};
  std::vector<int> offset(6);
  int total = 0;
  for (int i = 0; i < 6; ++i) {
    offset[i] = total;
    total += sizes[i];
  }
  const int g123 = total;              // block of size s1*s2*s3
  const int k1 = total + s1 * s2 * s3;  // final K_1
  Graph g(k1 + 1);
  auto join_blocks = [&](int i, int j) {
    for (int a = 0; a < sizes[i]; ++a)
      for (int b = 0; b < sizes[j]; ++b) g.add_edge(offset[i] + a, offset[j] + b);
  };
  for (int i = 0; i < 6; ++i) join_blocks(i, (i + 1) % 6);
  for (int v = 0; v < g123; ++v)
    for (int c = 0; c < s1 * s2 * s3; ++c) g.add_edge(v, g123 + c);
  for (int v = 0; v < k1; ++v) g.add_edge(v, k1);
  return g;
}

CyclicEquivalence is_cyclic_via_od(const FiniteGroup& g) {
  const ODGraph od = od_graph(g);
  CyclicEquivalence eq;
  eq.extended_matches =
      twin_quotient_isomorphism(extended_graph(g.order()), od.graph).has_value();
  eq.reduced_matches =
      is_isomorphic(comparability_graph(g.order()), reduced_graph(od.graph));
  return eq;
}

}  // namespace odg
