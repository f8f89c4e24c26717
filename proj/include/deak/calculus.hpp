#ifndef DEAK_CALCULUS_HPP
#define DEAK_CALCULUS_HPP

// Inference-rule schemas with metavariables, the two bundled rule sets,
// instantiation and matching.

#include <functional>
#include <optional>

#include "deak/syntax.hpp"

namespace deak {

// Sort-respecting metavariable binding. Structure metavariables are SVar
// nodes, formula metavariables FVar nodes; agent and action metavariables are
// labels whose name/base begins with '?'.
struct Assignment {
  std::map<std::string, StructurePtr> svars;
  std::map<std::string, FormulaPtr> fvars;
  std::map<std::string, Agent> avars;
  std::map<std::string, ActionLabel> dvars;

  // Deferred Pre(alpha)-pattern constraints collected during matching:
  // (action metavariable, formula the precondition must equal). Resolved by
  // enumerating declared action variants once structural matching is done.
  std::vector<std::pair<std::string, FormulaPtr>> pre_pending;

  bool bind(const std::string& v, const StructurePtr& s);
  bool bind(const std::string& v, const FormulaPtr& f);
  bool bind_agent(const std::string& v, const Agent& a);
  bool bind_action(const std::string& v, const ActionLabel& l);
};

enum class RuleFamily {
  Axiom,
  Structural,
  DisplayPostulate,
  OperationalLeft,
  OperationalRight,
};

// Extra, non-pattern behaviour of a handful of rules.
enum class SpecialForm {
  None,
  AtomAxiom,   // Gamma p |- Delta p with proxy strings Gamma, Delta
  SwapOutL,    // one premise per beta; conclusion succedent is n copies of Y
  SwapOutR,
  LegacySwapOutL,
  LegacySwapOutR,
};

// A side condition "alpha agent beta" restricting an action metavariable.
struct BetaCondition {
  std::string alpha_var;  // bound action metavariable
  std::string agent_var;  // bound agent metavariable
  std::string beta_var;   // action metavariable ranging over successors
};

struct RuleSchema {
  std::string name;
  std::vector<Sequent> premises;  // for per-beta rules: the premise template
  Sequent conclusion;
  RuleFamily family = RuleFamily::Structural;
  bool invertible = false;     // double-line rule (a "_rev" twin is bundled)
  bool display_move = false;   // usable by the display-search engine
  SpecialForm special = SpecialForm::None;
  std::vector<BetaCondition> beta_conditions;
  std::vector<Path> principal;  // principal occurrences in the conclusion
  // Concrete formula-valued pattern parts that occur parametrically in both
  // premises and conclusion (the legacy Pre(alpha) side condition).
  std::vector<FormulaPtr> restricted;
  // Extra admissibility predicate on complete assignments (e.g. Id requires
  // an atomic formula).
  std::function<bool(const Assignment&, const Declarations&)> guard;
};

// A concrete rule application.
struct Inference {
  std::vector<Sequent> premises;
  Sequent conclusion;
};

struct Calculus {
  std::string name;
  bool classical = true;
  std::vector<RuleSchema> rules;

  const RuleSchema* find(const std::string& name) const;
  std::vector<const RuleSchema*> axioms() const;
};

// The full bundled rule set (with the Grishin rules iff `classical`).
Calculus builtin_deak_prime(const Declarations& decls, bool classical = true);
// The older rule set: shared core plus the Pre(alpha)-side-condition rules
// (old_reduce, old_swap-in, old_swap-out, reverse) and without the
// 1_alpha/Phi_alpha apparatus.
Calculus builtin_deak_legacy(const Declarations& decls, bool classical = true);

// --------------------------------------------------------------------------
// Matching and instantiation

struct InstantiateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instantiate a structure/formula pattern under an assignment. PreOf nodes
// resolve to the precondition formula of the bound action variant.
FormulaPtr instantiate(const FormulaPtr& pat, const Assignment& asg,
                       const Declarations& decls);
StructurePtr instantiate(const StructurePtr& pat, const Assignment& asg,
                         const Declarations& decls);
Sequent instantiate(const Sequent& pat, const Assignment& asg,
                    const Declarations& decls);

// Instantiate a whole rule. For per-beta rules the premise template expands
// to one premise per successor, in sorted state order.
Inference instantiate(const RuleSchema& rule, const Assignment& asg,
                      const Declarations& decls);

// Syntactic matching of a pattern against a concrete term, extending `asg`.
// Returns false (leaving asg in an unspecified state) on mismatch; callers
// back-tracking should copy the assignment first.
bool match(const StructurePtr& pat, const StructurePtr& concrete,
           Assignment& asg, const Declarations& decls);
bool match(const FormulaPtr& pat, const FormulaPtr& concrete, Assignment& asg,
           const Declarations& decls);
bool match(const Sequent& pat, const Sequent& concrete, Assignment& asg,
           const Declarations& decls);

// All assignments whose instantiation has conclusion `concl`, deterministic
// order. Metavariables occurring only in premises (e.g. the Cut formula) are
// left unbound.
std::vector<Assignment> match_rule(const RuleSchema& rule,
                                   const Sequent& concl,
                                   const Declarations& decls);

// Like match_rule, but additionally requires the instantiated premises to
// equal `premise_concls` (in order); used by the proof checker. Returns all
// total assignments, deterministic order.
std::vector<Assignment> match_inference(
    const RuleSchema& rule, const Sequent& concl,
    const std::vector<Sequent>& premise_concls, const Declarations& decls);

// --------------------------------------------------------------------------
// Congruence bookkeeping

// For a checked application of `rule`, the premise occurrences congruent to
// the conclusion occurrence `p` (a formula leaf of the instantiated
// conclusion). Principal occurrences have no congruent ancestors.
std::vector<std::pair<int, Path>> congruent_occurrences(
    const RuleSchema& rule, const Assignment& asg, const Declarations& decls,
    const Path& p);

// Is `p` a principal occurrence of this application's conclusion?
bool is_principal(const RuleSchema& rule, const Assignment& asg,
                  const Declarations& decls, const Sequent& concl,
                  const Path& p);

// Principal occurrence paths of a concrete conclusion (resolves the atom
// axiom's instance-dependent principals).
std::vector<Path> principal_paths(const RuleSchema& rule,
                                  const Assignment& asg,
                                  const Declarations& decls,
                                  const Sequent& concl);

}  // namespace deak

#endif  // DEAK_CALCULUS_HPP
