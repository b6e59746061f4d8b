#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "odg/graph.hpp"
#include "odg/group.hpp"

namespace odg {

// Identifiers of the verifiable claims. R2i..R2iv are the basic OD-graph
// invariants; the rest name star characterizations, multipartite structure,
// coloring, join shapes and the cyclicity equivalence.
enum class TheoremId {
  R2i, R2ii, R2iii, R2iv,
  T9, C13, C11, C12, C10, T4,
  T2, C3, C6,
  T5, T7, T8,
};

std::vector<TheoremId> all_theorem_ids();
std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_id_from_string(const std::string& name);
// One-line description of what the check asserts.
std::string theorem_summary(TheoremId id);

struct CaseFailure {
  std::string case_descriptor;  // reconstructible spec string
  std::string expected;
  std::string got;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::R2i;
  std::int64_t cases_run = 0;
  std::vector<CaseFailure> failures;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

// Corpus and sweep limits. Defaults match the library's desk-scale targets.
struct CorpusBounds {
  std::int64_t max_cyclic = 60;
  std::int64_t max_dihedral = 20;
  std::int64_t max_units = 60;
  std::int64_t max_elementary_abelian = 64;
  std::int64_t sweep_max_n = 200;  // C11 / C12 ranges
  std::int64_t t4_max_n = 50;
  std::int64_t t5_max_prime = 73;
  std::int64_t t5_max_product = 150;
  std::int64_t t7_max_product = 105;
  std::int64_t max_order = kDefaultMaxOrder;
};

// Deterministic group corpus: cyclic, dihedral, unit, elementary abelian
// groups up to the bounds, the small symmetric/alternating groups, and a
// couple of direct products. Deduplicated by spec string.
std::vector<FiniteGroup> build_corpus(const CorpusBounds& bounds = {});

VerificationReport verify(TheoremId id, const CorpusBounds& bounds = {});
VerificationReport verify(TheoremId id, const std::vector<FiniteGroup>& corpus,
                          const CorpusBounds& bounds);
std::vector<VerificationReport> verify_all(const CorpusBounds& bounds = {});

// Star + Fitting/commutator conditions on the fixed witness groups
// (elementary abelians, A_4, D_3, D_5, A_5) and non-witnesses (Z_4, D_4, Z_6).
VerificationReport verify_c10_witnesses();

// Per-case claim checks, exposed so tests can probe the suite's sensitivity
// against tampered inputs.
bool t9_case_holds(const FiniteGroup& g, const Graph& od);
bool r2ii_case_holds(const FiniteGroup& g, const Graph& od);

// Line-oriented report rendering: "<id>: PASS|FAIL cases=..." plus one line
// per failure.
std::string report_text(const VerificationReport& report);

}  // namespace odg
