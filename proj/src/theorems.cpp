#include "odg/theorems.hpp"

#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

#include "odg/numtheory.hpp"
#include "odg/odgraph.hpp"

namespace odg {

std::vector<TheoremId> all_theorem_ids() {
  return {TheoremId::R2i, TheoremId::R2ii, TheoremId::R2iii, TheoremId::R2iv,
          TheoremId::T9,  TheoremId::C13,  TheoremId::C11,   TheoremId::C12,
          TheoremId::C10, TheoremId::T4,   TheoremId::T2,    TheoremId::C3,
          TheoremId::C6,  TheoremId::T5,   TheoremId::T7,    TheoremId::T8};
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::R2i: return "R2i";
    case TheoremId::R2ii: return "R2ii";
    case TheoremId::R2iii: return "R2iii";
    case TheoremId::R2iv: return "R2iv";
    case TheoremId::T9: return "T9";
    case TheoremId::C13: return "C13";
    case TheoremId::C11: return "C11";
    case TheoremId::C12: return "C12";
    case TheoremId::C10: return "C10";
    case TheoremId::T4: return "T4";
    case TheoremId::T2: return "T2";
    case TheoremId::C3: return "C3";
    case TheoremId::C6: return "C6";
    case TheoremId::T5: return "T5";
    case TheoremId::T7: return "T7";
    case TheoremId::T8: return "T8";
  }
  return "?";
}

std::optional<TheoremId> theorem_id_from_string(const std::string& name) {
  for (TheoremId id : all_theorem_ids()) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::string theorem_summary(TheoremId id) {
  switch (id) {
    case TheoremId::R2i: return "OD(G) is simple and order classes are independent";
    case TheoremId::R2ii: return "OD(G) is connected with diameter 2 when |G| > 2";
    case TheoremId::R2iii: return "OD(G) is never a cycle for |G| >= 3";
    case TheoremId::R2iv:
      return "order class sizes are multiples of phi(d); OD(G) never complete for |G| > 2";
    case TheoremId::T9: return "OD(G) is a star iff every non-identity order is prime";
    case TheoremId::C13: return "for abelian G: OD(G) is a star iff G is elementary abelian";
    case TheoremId::C11: return "OD(U(Z_n)) is a star S_phi(n) iff n divides 24";
    case TheoremId::C12: return "OD(Z_n) is a star iff n is prime";
    case TheoremId::C10: return "star witnesses carry the stated Fitting/commutator data";
    case TheoremId::T4: return "OD(D_n) is a star S_2n iff n is prime";
    case TheoremId::T2: return "OD of a p-group is complete multipartite";
    case TheoremId::C3: return "OD(Z_p^n) is complete (n+1)-partite with phi-sized parts";
    case TheoremId::C6: return "chi(OD(Z_p^n)) = n+1";
    case TheoremId::T5: return "OD(Z_p1p2) matches the sequential-join shape";
    case TheoremId::T7: return "OD(Z_p1p2p3) matches the cyclic-join shape";
    case TheoremId::T8: return "cyclic iff E(G_n) ~ OD(G) iff G_n ~ R(OD(G))";
  }
  return "";
}

namespace {

class Runner {
 public:
  explicit Runner(TheoremId id) { report_.theorem = id; }

  void record(const std::string& descriptor, bool ok, const std::string& expected,
              const std::string& got) {
    ++report_.cases_run;
    if (!ok) report_.failures.push_back({descriptor, expected, got});
  }

  void check(const std::string& descriptor, bool condition, const std::string& claim) {
    record(descriptor, condition, claim, condition ? claim : "violated: " + claim);
  }

  VerificationReport finish(std::chrono::steady_clock::time_point start) {
    report_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return std::move(report_);
  }

 private:
  VerificationReport report_;
};

std::string bool_word(bool b) { return b ? "true" : "false"; }

// A star on at least two vertices. The one-vertex graph is a degenerate star
// by convention, which the prime-index sweeps (C12, T4) must not count.
bool is_nondegenerate_star(const Graph& g) {
  return g.vertex_count() >= 2 && is_star(g).has_value();
}

std::string sizes_to_string(const std::vector<int>& sizes) {
  std::string out = "[";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sizes[i]);
  }
  return out + "]";
}

}  // namespace

bool t9_case_holds(const FiniteGroup& g, const Graph& od) {
  return is_star(od).has_value() == all_nonidentity_prime_order(g);
}

bool r2ii_case_holds(const FiniteGroup& g, const Graph& od) {
  if (!is_connected(od)) return false;
  const int expected = g.order() == 1 ? 0 : (g.order() == 2 ? 1 : 2);
  return diameter(od) == expected;
}

std::vector<FiniteGroup> build_corpus(const CorpusBounds& bounds) {
  std::vector<FiniteGroup> corpus;
  std::set<std::string> seen;
  auto add = [&](FiniteGroup g) {
    if (seen.insert(g.spec()).second) corpus.push_back(std::move(g));
  };
  for (std::int64_t n = 1; n <= bounds.max_cyclic; ++n)
    add(cyclic_group(n, bounds.max_order));
  for (std::int64_t n = 3; n <= bounds.max_dihedral; ++n)
    add(dihedral_group(n, bounds.max_order));
  for (std::int64_t n = 1; n <= bounds.max_units; ++n)
    add(units_group(n, bounds.max_order));
  for (std::int64_t p : {2, 3, 5, 7}) {
    std::int64_t size = p;
    for (int k = 1; size <= bounds.max_elementary_abelian; ++k, size *= p)
      add(elementary_abelian(p, k, bounds.max_order));
  }
  for (int n = 3; n <= 5; ++n) add(symmetric_group(n, bounds.max_order));
  for (int n = 4; n <= 5; ++n) add(alternating_group(n, bounds.max_order));
  add(direct_product(cyclic_group(2), cyclic_group(4), bounds.max_order));
  add(direct_product(cyclic_group(3), cyclic_group(3), bounds.max_order));
  return corpus;
}

namespace {

VerificationReport verify_corpus_claim(TheoremId id,
                                       const std::vector<FiniteGroup>& corpus) {
  const auto start = std::chrono::steady_clock::now();
  Runner run(id);
  for (const FiniteGroup& g : corpus) {
    const ODGraph od = od_graph(g);
    switch (id) {
      case TheoremId::R2i: {
        bool simple = true;
        for (int v = 0; v < od.graph.vertex_count() && simple; ++v)
          simple = !od.graph.adjacent(v, v);
        bool independent = true;
        for (const auto& [d, members] : od.partition.classes) {
          (void)d;
          for (std::size_t i = 0; i < members.size() && independent; ++i)
            for (std::size_t j = i + 1; j < members.size() && independent; ++j)
              independent = !od.graph.adjacent(members[i], members[j]);
        }
        run.check(g.spec(), simple && independent,
                  "simple graph with independent order classes");
        break;
      }
      case TheoremId::R2ii:
        run.check(g.spec(), r2ii_case_holds(g, od.graph),
                  "connected with diameter " +
                      std::to_string(g.order() == 1 ? 0 : (g.order() == 2 ? 1 : 2)));
        break;
      case TheoremId::R2iii:
        if (g.order() < 3) break;
        run.check(g.spec(), !is_cycle_graph(od.graph), "not a cycle graph");
        break;
      case TheoremId::R2iv: {
        bool multiples = true;
        for (const auto& [d, members] : od.partition.classes)
          multiples = multiples && (static_cast<std::int64_t>(members.size()) %
                                        euler_phi(d) ==
                                    0);
        const bool not_complete = g.order() <= 2 || !is_complete(od.graph);
        run.check(g.spec(), multiples && not_complete,
                  "class sizes multiples of phi(d); not complete when |G| > 2");
        break;
      }
      case TheoremId::T9: {
        const bool star = is_star(od.graph).has_value();
        const bool primes = all_nonidentity_prime_order(g);
        run.record(g.spec(), star == primes,
                   "star == all-prime-orders (" + bool_word(primes) + ")",
                   "star=" + bool_word(star));
        break;
      }
      case TheoremId::C13: {
        if (!is_abelian(g)) break;
        const bool star = is_star(od.graph).has_value();
        const bool elem = is_elementary_abelian(g);
        run.record(g.spec(), star == elem,
                   "star == elementary-abelian (" + bool_word(elem) + ")",
                   "star=" + bool_word(star));
        break;
      }
      case TheoremId::T2: {
        if (!is_p_group(g)) break;
        run.check(g.spec(), complete_multipartite_parts(od.graph).has_value(),
                  "complete multipartite");
        break;
      }
      case TheoremId::T8: {
        const bool cyclic = is_cyclic_algebraic(g);
        const CyclicEquivalence eq = is_cyclic_via_od(g);
        const bool ok =
            cyclic == eq.extended_matches && cyclic == eq.reduced_matches;
        run.record(g.spec(), ok, "all three predicates " + bool_word(cyclic),
                   "cyclic=" + bool_word(cyclic) +
                       " extended=" + bool_word(eq.extended_matches) +
                       " reduced=" + bool_word(eq.reduced_matches));
        break;
      }
      default:
        throw std::logic_error("not a corpus claim");
    }
  }
  return run.finish(start);
}

VerificationReport verify_c11(const CorpusBounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  Runner run(TheoremId::C11);
  for (std::int64_t n = 1; n <= bounds.sweep_max_n; ++n) {
    const FiniteGroup u = units_group(n, bounds.max_order);
    const ODGraph od = od_graph(u);
    const bool star = is_star(od.graph).has_value();
    const bool expected = 24 % n == 0;
    const bool size_ok = !star || od.graph.vertex_count() == euler_phi(n);
    run.record("U:" + std::to_string(n), star == expected && size_ok,
               "star=" + bool_word(expected) + " on phi(n) vertices",
               "star=" + bool_word(star) + " vertices=" +
                   std::to_string(od.graph.vertex_count()));
  }
  return run.finish(start);
}

VerificationReport verify_c12(const CorpusBounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  Runner run(TheoremId::C12);
  for (std::int64_t n = 1; n <= bounds.sweep_max_n; ++n) {
    const ODGraph od = od_graph(cyclic_group(n, bounds.max_order));
    const bool star = is_nondegenerate_star(od.graph);
    const bool expected = is_prime(n);
    run.record("Z:" + std::to_string(n), star == expected,
               "star=" + bool_word(expected), "star=" + bool_word(star));
  }
  return run.finish(start);
}

VerificationReport verify_t4(const CorpusBounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  Runner run(TheoremId::T4);
  for (std::int64_t n = 3; n <= bounds.t4_max_n; ++n) {
    const ODGraph od = od_graph(dihedral_group(n, bounds.max_order));
    const bool star = is_star(od.graph).has_value();
    const bool expected = is_prime(n);
    const bool size_ok = !star || od.graph.vertex_count() == 2 * n;
    run.record("D:" + std::to_string(n), star == expected && size_ok,
               "star=" + bool_word(expected) + " on 2n vertices",
               "star=" + bool_word(star) + " vertices=" +
                   std::to_string(od.graph.vertex_count()));
  }
  return run.finish(start);
}

// The (p, max exponent) sweep shared by C3 and C6.
const std::vector<std::pair<std::int64_t, int>> kPrimePowerSweeps = {
    {2, 6}, {3, 4}, {5, 3}, {7, 2}};

VerificationReport verify_c3(const CorpusBounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  Runner run(TheoremId::C3);
  for (const auto& [p, kmax] : kPrimePowerSweeps) {
    std::int64_t size = 1;
    for (int k = 1; k <= kmax; ++k) {
      size *= p;
      const ODGraph od = od_graph(cyclic_group(size, bounds.max_order));
      const auto report = complete_multipartite_parts(od.graph);
      std::vector<int> expected_sizes;
      std::int64_t d = 1;
      for (int i = 0; i <= k; ++i, d *= p)
        expected_sizes.push_back(static_cast<int>(euler_phi(d)));
      std::sort(expected_sizes.begin(), expected_sizes.end());
      const bool ok = report.has_value() && report->part_sizes == expected_sizes;
      run.record("Z:" + std::to_string(size), ok,
                 "complete " + std::to_string(k + 1) + "-partite, parts " +
                     sizes_to_string(expected_sizes),
                 report ? "parts " + sizes_to_string(report->part_sizes)
                        : "not complete multipartite");
    }
  }
  return run.finish(start);
}

VerificationReport verify_c6(const CorpusBounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  Runner run(TheoremId::C6);
  for (const auto& [p, kmax] : kPrimePowerSweeps) {
    std::int64_t size = 1;
    for (int k = 1; k <= kmax; ++k) {
      size *= p;
      const ODGraph od = od_graph(cyclic_group(size, bounds.max_order));
      const int chi = chromatic_number(od.graph);
      run.record("Z:" + std::to_string(size), chi == k + 1,
                 "chi=" + std::to_string(k + 1), "chi=" + std::to_string(chi));
    }
  }
  return run.finish(start);
}

VerificationReport verify_t5(const CorpusBounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  Runner run(TheoremId::T5);
  for (std::int64_t p1 = 2; p1 <= bounds.t5_max_prime; ++p1) {
    if (!is_prime(p1)) continue;
    for (std::int64_t p2 = p1 + 1; p2 <= bounds.t5_max_prime; ++p2) {
      if (!is_prime(p2) || p1 * p2 > bounds.t5_max_product) continue;
      const Graph shape = theorem5_shape(p1, p2);
      const ODGraph od = od_graph(cyclic_group(p1 * p2, bounds.max_order));
      run.check("T5(" + std::to_string(p1) + "," + std::to_string(p2) + ")",
                is_isomorphic(shape, od.graph),
                "shape isomorphic to OD(Z_" + std::to_string(p1 * p2) + ")");
    }
  }
  return run.finish(start);
}

VerificationReport verify_t7(const CorpusBounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  Runner run(TheoremId::T7);
  for (std::int64_t p1 = 2; p1 <= bounds.t7_max_product; ++p1) {
    if (!is_prime(p1)) continue;
    for (std::int64_t p2 = p1 + 1; p1 * p2 <= bounds.t7_max_product; ++p2) {
      if (!is_prime(p2)) continue;
      for (std::int64_t p3 = p2 + 1; p1 * p2 * p3 <= bounds.t7_max_product; ++p3) {
        if (!is_prime(p3)) continue;
        const Graph shape = theorem7_shape(p1, p2, p3);
        const ODGraph od =
            od_graph(cyclic_group(p1 * p2 * p3, bounds.max_order));
        run.check("T7(" + std::to_string(p1) + "," + std::to_string(p2) + "," +
                      std::to_string(p3) + ")",
                  is_isomorphic(shape, od.graph),
                  "shape isomorphic to OD(Z_" + std::to_string(p1 * p2 * p3) + ")");
      }
    }
  }
  return run.finish(start);
}

}  // namespace

VerificationReport verify_c10_witnesses() {
  const auto start = std::chrono::steady_clock::now();
  Runner run(TheoremId::C10);

  // Case 1: every elementary abelian group gives a star.
  for (std::int64_t p : {2, 3, 5, 7}) {
    std::int64_t size = p;
    for (int k = 1; size <= 64; ++k, size *= p) {
      const FiniteGroup g = elementary_abelian(p, k);
      run.check(g.spec(), is_star(od_graph(g).graph).has_value(),
                "star (p-group of exponent p)");
    }
  }

  // Case 2(c): A_4, |G| = 2^2 * 3, |F(G)| = |G'| = 4.
  {
    const FiniteGroup g = alternating_group(4);
    const bool star = is_star(od_graph(g).graph).has_value();
    const int f = fitting_subgroup(g).size();
    const int c = commutator_subgroup(g).size();
    const bool factors = factorize(g.order()) == Factorization{{2, 2}, {3, 1}};
    run.record(g.spec(), star && f == 4 && c == 4 && factors,
               "star, |F|=4, |G'|=4, |G|=2^2*3",
               "star=" + std::string(star ? "true" : "false") + " |F|=" +
                   std::to_string(f) + " |G'|=" + std::to_string(c));
  }

  // Case 2(d): D_3 and D_5, |G| = 2p, |F| = |G'| = p, F elementary abelian.
  for (std::int64_t p : {3, 5}) {
    const FiniteGroup g = dihedral_group(p);
    const bool star = is_star(od_graph(g).graph).has_value();
    const Subgroup f = fitting_subgroup(g);
    const int c = commutator_subgroup(g).size();
    const bool f_elem = is_elementary_abelian(subgroup_as_group(f));
    run.record(g.spec(),
               star && f.size() == p && c == p && f_elem,
               "star, |F|=|G'|=" + std::to_string(p) + ", F elementary abelian",
               "star=" + std::string(star ? "true" : "false") + " |F|=" +
                   std::to_string(f.size()) + " |G'|=" + std::to_string(c) +
                   " F_elem=" + std::string(f_elem ? "true" : "false"));
  }

  // Case 3: A_5 gives a star on 60 vertices.
  {
    const FiniteGroup g = alternating_group(5);
    const Graph od = od_graph(g).graph;
    run.check(g.spec(), is_star(od).has_value() && od.vertex_count() == 60,
              "star on 60 vertices");
  }

  // Non-witnesses must not produce stars.
  {
    const FiniteGroup z4 = cyclic_group(4);
    run.check(z4.spec(), !is_star(od_graph(z4).graph).has_value(), "not a star");
    const FiniteGroup d4 = dihedral_group(4);
    run.check(d4.spec(), !is_star(od_graph(d4).graph).has_value(), "not a star");
    const FiniteGroup z6 = cyclic_group(6);
    run.check(z6.spec(), !is_star(od_graph(z6).graph).has_value(), "not a star");
  }

  return run.finish(start);
}

VerificationReport verify(TheoremId id, const std::vector<FiniteGroup>& corpus,
                          const CorpusBounds& bounds) {
  switch (id) {
    case TheoremId::R2i:
    case TheoremId::R2ii:
    case TheoremId::R2iii:
    case TheoremId::R2iv:
    case TheoremId::T9:
    case TheoremId::C13:
    case TheoremId::T2:
    case TheoremId::T8:
      return verify_corpus_claim(id, corpus);
    case TheoremId::C11: return verify_c11(bounds);
    case TheoremId::C12: return verify_c12(bounds);
    case TheoremId::T4: return verify_t4(bounds);
    case TheoremId::C3: return verify_c3(bounds);
    case TheoremId::C6: return verify_c6(bounds);
    case TheoremId::T5: return verify_t5(bounds);
    case TheoremId::T7: return verify_t7(bounds);
    case TheoremId::C10: return verify_c10_witnesses();
  }
  throw std::logic_error("unknown theorem id");
}

VerificationReport verify(TheoremId id, const CorpusBounds& bounds) {
  switch (id) {
    case TheoremId::R2i:
    case TheoremId::R2ii:
    case TheoremId::R2iii:
    case TheoremId::R2iv:
    case TheoremId::T9:
    case TheoremId::C13:
    case TheoremId::T2:
    case TheoremId::T8:
      return verify(id, build_corpus(bounds), bounds);
    default:
      return verify(id, {}, bounds);
  }
}

std::vector<VerificationReport> verify_all(const CorpusBounds& bounds) {
  const std::vector<FiniteGroup> corpus = build_corpus(bounds);
  std::vector<VerificationReport> reports;
  for (TheoremId id : all_theorem_ids()) reports.push_back(verify(id, corpus, bounds));
  return reports;
}

std::string report_text(const VerificationReport& report) {
  std::ostringstream out;
  out << to_string(report.theorem) << ": " << (report.passed() ? "PASS" : "FAIL")
      << " cases=" << report.cases_run << " failures=" << report.failures.size()
      << " elapsed_ms=" << report.elapsed_ms << "\n";
  for (const CaseFailure& f : report.failures) {
    out << to_string(report.theorem) << " FAIL case=" << f.case_descriptor
        << " expected=\"" << f.expected << "\" got=\"" << f.got << "\"\n";
  }
  return out.str();
}

}  // namespace odg
