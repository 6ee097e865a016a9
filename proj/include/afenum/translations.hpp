#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "afenum/framework.hpp"

namespace afenum {

/// Role of a target vertex produced by a translation.
enum class VertexRole {
  Original,   // v_i: copy of source vertex i
  LoopGuard,  // l1, l2, l3: directed 3-cycle, l1 attacks former self-loopers
  Duplicate,  // w_i: twin of a source vertex lying on a 2-cycle
};

/// Source/target pair with the bookkeeping the extension map ψ needs.
///
/// Source vertex i is always target vertex i. Guards and duplicates are
/// appended after the originals.
struct TranslationWitness {
  Framework source;
  Framework target;
  std::vector<VertexRole> role;    // per target vertex
  std::vector<Vertex> origin;      // per target vertex: source index, or -1 for guards
  std::vector<Vertex> duplicate;   // per source vertex: target index of w_i, or -1
  bool loop_guards_added = false;
};

enum class LooplessMode {
  OnlyIfLoops,  // leave loop-free inputs untouched
  Always,       // add l1,l2,l3 unconditionally
};

/// Replace each self-loop (v,v) by an attack l1 -> v from a guard 3-cycle.
TranslationWitness loopless_translate(const Framework& af, LooplessMode mode = LooplessMode::OnlyIfLoops);

/// Oriented translation: every vertex on a 2-cycle gets a twin w_i, each
/// 2-cycle becomes a 4-cycle, other arcs fan out over existing copies. The
/// loopless step runs first according to `mode`.
TranslationWitness oriented_translate(const Framework& af, LooplessMode mode = LooplessMode::OnlyIfLoops);

// ψ(S) = S ∪ {w_i : i ∈ S, w_i exists}. Defined on every source set.
Extension apply_psi(const TranslationWitness& w, const Extension& s);
// ψ⁻¹. Throws ConsistencyError when v_i and w_i disagree or a guard is present.
Extension invert_psi(const TranslationWitness& w, const Extension& t);

/// CNF formula over variables 1..variables. Literal +i is z_i, -i is ¬z_i.
struct CnfFormula {
  int variables = 0;
  std::vector<std::vector<int>> clauses;

  // Throws InputError on an empty clause or out-of-range literal.
  void validate() const;
};

CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& cnf);

/// Extended translation of a CNF: vertices phi, c1..c(m+n) (original clauses
/// then the tautologies z_i ∨ ¬z_i), z1..zn, nz1..nzn, A0, A1, A2 in that order.
Framework extended_translate(const CnfFormula& cnf);

// Number of satisfying assignments, by enumeration. Test/benchmark helper.
std::size_t count_models(const CnfFormula& cnf);

}  // namespace afenum
