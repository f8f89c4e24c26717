#ifndef DEAK_SEMANTICS_HPP
#define DEAK_SEMANTICS_HPP

// Finite Kripke models, product update, satisfaction for the dynamic
// epistemic fragment, a bounded brute-force validity oracle, and the
// relation-level adjoint operators.

#include "deak/syntax.hpp"

namespace deak {

struct SemanticsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KripkeModel {
  std::vector<std::string> worlds;  // names; indices are positions
  // agent name -> relation over world indices
  std::map<std::string, std::set<std::pair<int, int>>> rels;
  // atom -> set of world indices
  std::map<std::string, std::set<int>> val;

  int world_index(const std::string& name) const;
};

// Text format mirrors the action-declaration block:
//   model { worlds: u v; val p: u; rel a: u->u, u->v; }
KripkeModel parse_model(const std::string& text);
std::string render_model(const KripkeModel& m);

// Product update M^alpha: worlds are pairs (w, j) with w satisfying the
// precondition of action state j.
struct UpdatedModel {
  KripkeModel model;
  // new world index -> (original world index, action state)
  std::vector<std::pair<int, std::string>> origin;

  int index_of(int w, const std::string& state) const;
};

UpdatedModel update(const KripkeModel& m, const ActionStructure& act,
                    const Declarations& decls);

// Pointwise satisfaction. Adjoint modalities and the co-implications are not
// Kripke-interpretable pointwise and raise unsupported-connective.
bool satisfies(const KripkeModel& m, int w, const FormulaPtr& f,
               const Declarations& decls);

struct Bounds {
  int max_worlds = 3;
  std::vector<std::string> atoms = {"p", "q"};
  std::vector<std::string> agents = {"a"};
};

// Declarations for the default announcement pool: agent a plus single-state
// public announcements of p, q and T (actions ann_p, ann_q, ann_top).
Declarations announcement_pool();

struct ValidityResult {
  bool valid = true;
  KripkeModel counterexample;  // meaningful iff !valid
  int world = -1;
  long long models_checked = 0;
};

// Enumerates every model within the bounds in canonical order (world count
// ascending; valuation bitmasks per atom, then relation bitmasks per agent,
// rightmost component fastest) and reports the first world of the first
// model where the antecedent holds but the consequent fails.
ValidityResult valid_bounded(const FormulaPtr& ante, const FormulaPtr& succ,
                             const Bounds& b, const Declarations& decls);

// The same verdict restricted to a single model.
ValidityResult valid_on_model(const KripkeModel& m, const FormulaPtr& ante,
                              const FormulaPtr& succ,
                              const Declarations& decls);

// ---------------------------------------------------------------------------
// Relation-level operators for R subset of X x Y (carriers 0..n-1)

using Rel = std::set<std::pair<int, int>>;
using Subset = std::set<int>;

Subset rel_dia(const Rel& r, const Subset& u);                // P(Y) -> P(X)
Subset rel_box(const Rel& r, const Subset& u, int nx);        // P(Y) -> P(X)
Subset rel_conv_dia(const Rel& r, const Subset& v);           // P(X) -> P(Y)
Subset rel_conv_box(const Rel& r, const Subset& v, int ny);   // P(X) -> P(Y)

// <R>U subset V  iff  U subset conv-[R]V
bool adjunction_dia(const Rel& r, const Subset& u, const Subset& v, int ny);
// conv-<R>V subset U  iff  V subset [R]U
bool adjunction_conv_dia(const Rel& r, const Subset& v, const Subset& u,
                         int nx);

// [Dom(R) x Dom(R)] intersected with the diagonal is contained in R;R^-1.
bool comp_fact(const Rel& r);

}  // namespace deak

#endif  // DEAK_SEMANTICS_HPP
