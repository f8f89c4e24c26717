#ifndef DEAK_PROOFS_HPP
#define DEAK_PROOFS_HPP

// Proof trees, the checker, history trees of formula occurrences, and the
// bounded display-search engine.

#include "deak/calculus.hpp"

namespace deak {

struct ProofTree;
using ProofTreePtr = std::shared_ptr<ProofTree>;

struct ProofTree {
  std::string rule;
  Sequent conclusion;
  std::vector<ProofTreePtr> children;
  // Filled in by check(); the matched schema assignment for this node.
  std::optional<Assignment> assignment;
};

ProofTreePtr mk_proof(std::string rule, Sequent concl,
                      std::vector<ProofTreePtr> children = {});
ProofTreePtr clone_proof(const ProofTree& p);
int proof_size(const ProofTree& p);

// --------------------------------------------------------------------------
// Checking

struct CheckReport {
  bool ok = true;
  int node_count = 0;
  std::string node_path;  // "/", "/0/1", ... — child indices from the root
  std::string reason;
  bool ambiguous = false;  // multiple assignments matched somewhere

  // "OK <node-count>" or "FAIL <node-path> <reason>".
  std::string to_text() const;
};

// Verify every node against the calculus, storing assignments in the tree.
// Stops at the first failing node (pre-order).
CheckReport check(ProofTree& proof, const Calculus& calc,
                  const Declarations& decls);

bool is_cut_free(const ProofTree& proof);
// Every formula leaf of every sequent is a subformula of some formula of the
// root sequent.
bool subformula_property(const ProofTree& proof);

// --------------------------------------------------------------------------
// History trees

enum class LeafKind {
  IntroducedParametric,
  PrincipalDisplayed,
  PrincipalUndisplayedAxiom,
};

struct HistoryNode {
  const ProofTree* node = nullptr;  // proof node owning the occurrence
  Path occ;                         // path in node->conclusion
  std::vector<HistoryNode> children;
  std::optional<LeafKind> leaf;     // set iff children is empty
};

// Follow congruence upward from a formula-leaf occurrence of the root
// sequent. Requires a checked proof.
HistoryNode history_tree(const ProofTree& proof, const Path& occ,
                         const Calculus& calc, const Declarations& decls);

// --------------------------------------------------------------------------
// Display engine

struct NotDisplayable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DisplayResult {
  // Derivation fragment: conclusion is the input sequent, the topmost node is
  // a "Hyp" placeholder whose conclusion is `displayed`. All intermediate
  // rules are display moves.
  ProofTreePtr derivation;
  Sequent displayed;
  Polarity side;  // Precedent: target is the whole antecedent; else succedent
};

// Exhibit the substructure at `p` alone on one side using display moves only.
// Breadth-first, depth bound 64, shortest witness (ties by rule-name order).
DisplayResult display_at(const Sequent& seq, const Path& p,
                         const Calculus& calc, const Declarations& decls);

}  // namespace deak

#endif  // DEAK_PROOFS_HPP
