#ifndef DEAK_SYNTAX_HPP
#define DEAK_SYNTAX_HPP

// Term algebra for the display calculus: formulas, structures, sequents,
// occurrence paths, polarity, contextual translation, and substitution.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace deak {

// ---------------------------------------------------------------------------
// Labels

struct Agent {
  std::string name;
  auto operator<=>(const Agent&) const = default;
};

// A variant of an action structure: (base action, designated state).
struct ActionLabel {
  std::string base;
  std::string state;
  auto operator<=>(const ActionLabel&) const = default;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Finite pointed action model: states, designated state, per-agent relation,
// and a precondition formula per state.
struct ActionStructure {
  std::string base;
  std::vector<std::string> states;  // sorted, unique
  std::string designated;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> rels;
  std::map<std::string, FormulaPtr> pre;

  // The label of the variant designated at `state`.
  ActionLabel variant(const std::string& state) const { return {base, state}; }
  ActionLabel label() const { return {base, designated}; }
};

// Declared agents and actions; parsing and rule matching are relative to one.
struct Declarations {
  std::vector<Agent> agents;
  std::map<std::string, ActionStructure> actions;

  bool has_agent(const std::string& n) const;
  const ActionStructure* find_action(const std::string& n) const;
  // Precondition of the designated state of the variant `l`.
  FormulaPtr pre_of(const ActionLabel& l) const;
  // All beta with `alpha agent beta`, i.e. variants reachable from the
  // designated state of `alpha` via the agent relation; sorted by state id.
  std::vector<ActionLabel> successors(const ActionLabel& alpha,
                                      const Agent& a) const;
  // Every declared variant (each action x each state), deterministic order.
  std::vector<ActionLabel> all_variants() const;
};

// Metavariable convention: names beginning with '?' denote pattern variables
// (in Agent/ActionLabel.base); formulas and structures have dedicated kinds.
bool is_metavar_name(const std::string& n);

// ---------------------------------------------------------------------------
// Formulas

enum class FK {
  Atom, Top, Bot, One,
  And, Or, Imp, LImp, CoImp, LCoImp,
  Dia, Box, AdjDia, AdjBox,
  DDia, DBox, AdjDDia, AdjDBox,
  FVar,   // formula metavariable (patterns only)
  PreOf,  // precondition accessor Pre(alpha) (legacy rule patterns only)
};

struct Formula {
  FK kind{};
  std::string name;   // Atom, FVar
  Agent agent;        // agent modalities
  ActionLabel act;    // One, action modalities, PreOf
  FormulaPtr lhs, rhs;
};

FormulaPtr fAtom(std::string name);
FormulaPtr fTop();
FormulaPtr fBot();
FormulaPtr fOne(ActionLabel l);
FormulaPtr fAnd(FormulaPtr a, FormulaPtr b);
FormulaPtr fOr(FormulaPtr a, FormulaPtr b);
FormulaPtr fImp(FormulaPtr a, FormulaPtr b);
FormulaPtr fLImp(FormulaPtr a, FormulaPtr b);
FormulaPtr fCoImp(FormulaPtr a, FormulaPtr b);
FormulaPtr fLCoImp(FormulaPtr a, FormulaPtr b);
FormulaPtr fDia(Agent a, FormulaPtr f);
FormulaPtr fBox(Agent a, FormulaPtr f);
FormulaPtr fAdjDia(Agent a, FormulaPtr f);
FormulaPtr fAdjBox(Agent a, FormulaPtr f);
FormulaPtr fDDia(ActionLabel l, FormulaPtr f);
FormulaPtr fDBox(ActionLabel l, FormulaPtr f);
FormulaPtr fAdjDDia(ActionLabel l, FormulaPtr f);
FormulaPtr fAdjDBox(ActionLabel l, FormulaPtr f);
FormulaPtr fVar(std::string name);
FormulaPtr fPreOf(ActionLabel l);

bool is_unary(FK k);
bool is_binary(FK k);

int cmp(const Formula& a, const Formula& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

struct FormulaLess {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const;
};
using FormulaSet = std::set<FormulaPtr, FormulaLess>;

// Number of connective/atom nodes; the complexity measure for cut formulas.
int size_of(const FormulaPtr& f);

// Reflexive-transitive closure of the immediate-subformula relation.
// Purely syntactic: One(alpha) and atoms are leaves.
FormulaSet subformulas(const FormulaPtr& f);

// Replace every occurrence of atom `name` by `repl`.
FormulaPtr subst_atom(const FormulaPtr& f, const std::string& name,
                      const FormulaPtr& repl);

// ---------------------------------------------------------------------------
// Structures

enum class SK {
  Fm, I, Semi, Gt, Lt,
  Prox, AdjProx, DProx, AdjDProx,
  Phi,
  SVar,  // structure metavariable (patterns only)
};

struct Structure;
using StructurePtr = std::shared_ptr<const Structure>;

struct Structure {
  SK kind{};
  FormulaPtr fm;      // Fm
  Agent agent;        // Prox, AdjProx
  ActionLabel act;    // DProx, AdjDProx, Phi
  std::string name;   // SVar
  StructurePtr lhs, rhs;
};

StructurePtr sFm(FormulaPtr f);
StructurePtr sI();
StructurePtr sSemi(StructurePtr a, StructurePtr b);
StructurePtr sGt(StructurePtr a, StructurePtr b);
StructurePtr sLt(StructurePtr a, StructurePtr b);
StructurePtr sProx(Agent a, StructurePtr s);
StructurePtr sAdjProx(Agent a, StructurePtr s);
StructurePtr sDProx(ActionLabel l, StructurePtr s);
StructurePtr sAdjDProx(ActionLabel l, StructurePtr s);
StructurePtr sPhi(ActionLabel l);
StructurePtr sVar(std::string name);

int cmp(const Structure& a, const Structure& b);
bool equal(const StructurePtr& a, const StructurePtr& b);
int size_of(const StructurePtr& s);

struct Sequent {
  StructurePtr ante, succ;
};

int cmp(const Sequent& a, const Sequent& b);
bool equal(const Sequent& a, const Sequent& b);

// ---------------------------------------------------------------------------
// Occurrence paths and polarity

// A path addresses a node of a sequent: first the side of the turnstile,
// then child selectors (0 = left/only child, 1 = right child).
struct Path {
  enum Side { Ante = 0, Succ = 1 };
  int side = Ante;
  std::vector<int> steps;

  auto operator<=>(const Path&) const = default;
  Path child(int i) const;
};

std::string to_string(const Path& p);

enum class Polarity { Precedent, Succedent };

struct InvalidPath : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Node addressed by `p` (must end at a structure node, not inside a formula).
StructurePtr at(const Sequent& seq, const Path& p);
StructurePtr at(const StructurePtr& s, const std::vector<int>& steps,
                size_t from = 0);

// Precedent/succedent position of the addressed occurrence. Purely a function
// of the selectors: the antecedent root is precedent, the succedent root is
// succedent; Semi and unary proxies preserve; the left child of Gt and the
// right child of Lt flip.
Polarity polarity_of(const Sequent& seq, const Path& p);

// All paths to structure nodes (every node, or formula leaves only).
std::vector<Path> all_structure_paths(const Sequent& seq);
std::vector<Path> formula_leaf_paths(const Sequent& seq);

// ---------------------------------------------------------------------------
// Contextual translation (structural connectives into logical ones)

struct PhiInSuccedent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// I -> Top/Bot, Semi -> And/Or, Gt -> CoImp/Imp, Lt -> LCoImp/LImp,
// proxies -> diamonds/boxes, Phi (precedent only) -> One.
FormulaPtr translate(const StructurePtr& s, Polarity pol);
// Convenience: translate both sides of a sequent (ante precedent, succ
// succedent).
FormulaPtr translate_ante(const Sequent& seq);
FormulaPtr translate_succ(const Sequent& seq);

// ---------------------------------------------------------------------------
// Substitution of formula leaves

struct NonFormulaTarget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Replace exactly the addressed Fm leaves (all of which must hold the same
// formula) by `repl`. Paths are relative to `s` (no turnstile side step).
StructurePtr substitute(const StructurePtr& s,
                        const std::set<std::vector<int>>& occs,
                        const StructurePtr& repl);

// Substitute at sequent paths; each path must address an Fm leaf.
Sequent substitute(const Sequent& seq, const std::set<Path>& occs,
                   const StructurePtr& repl);

}  // namespace deak

#endif  // DEAK_SYNTAX_HPP
