#include "deak/proofs.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace deak {

ProofTreePtr mk_proof(std::string rule, Sequent concl,
                      std::vector<ProofTreePtr> children) {
  auto p = std::make_shared<ProofTree>();
  p->rule = std::move(rule);
  p->conclusion = std::move(concl);
  p->children = std::move(children);
  return p;
}

ProofTreePtr clone_proof(const ProofTree& p) {
  auto q = std::make_shared<ProofTree>();
  q->rule = p.rule;
  q->conclusion = p.conclusion;
  q->assignment = p.assignment;
  for (const auto& c : p.children) q->children.push_back(clone_proof(*c));
  return q;
}

int proof_size(const ProofTree& p) {
  int n = 1;
  for (const auto& c : p.children) n += proof_size(*c);
  return n;
}

// ---------------------------------------------------------------------------
// Checking

std::string CheckReport::to_text() const {
  if (ok) return "OK " + std::to_string(node_count);
  return "FAIL " + node_path + " " + reason;
}

namespace {

bool check_node(ProofTree& node, const Calculus& calc,
                const Declarations& decls, const std::string& path,
                CheckReport& rep) {
  ++rep.node_count;
  const RuleSchema* rule = calc.find(node.rule);
  if (!rule) {
    rep.ok = false;
    rep.node_path = path;
    rep.reason = "unknown-rule " + node.rule;
    return false;
  }
  std::vector<Sequent> premise_concls;
  for (const auto& c : node.children) premise_concls.push_back(c->conclusion);
  auto asgs = match_inference(*rule, node.conclusion, premise_concls, decls);
  if (asgs.empty()) {
    rep.ok = false;
    rep.node_path = path;
    bool fixed_arity = rule->special == SpecialForm::None ||
                       rule->special == SpecialForm::AtomAxiom;
    if (fixed_arity && rule->premises.size() != node.children.size())
      rep.reason = "arity-mismatch";
    else if (!match_rule(*rule, node.conclusion, decls).empty() &&
             !node.children.empty())
      rep.reason = "premise-mismatch";
    else
      rep.reason = "no-matching-assignment";
    return false;
  }
  if (asgs.size() > 1) rep.ambiguous = true;
  node.assignment = asgs.front();
  for (size_t i = 0; i < node.children.size(); ++i) {
    if (!check_node(*node.children[i], calc, decls,
                    path + "/" + std::to_string(i), rep))
      return false;
  }
  return true;
}

}  // namespace

CheckReport check(ProofTree& proof, const Calculus& calc,
                  const Declarations& decls) {
  CheckReport rep;
  check_node(proof, calc, decls, "/", rep);
  return rep;
}

bool is_cut_free(const ProofTree& proof) {
  if (proof.rule == "Cut") return false;
  for (const auto& c : proof.children)
    if (!is_cut_free(*c)) return false;
  return true;
}

namespace {

void collect_leaf_formulas(const StructurePtr& s, std::vector<FormulaPtr>& out) {
  if (s->kind == SK::Fm) {
    out.push_back(s->fm);
    return;
  }
  if (s->lhs) collect_leaf_formulas(s->lhs, out);
  if (s->rhs) collect_leaf_formulas(s->rhs, out);
}

bool node_subformulas_ok(const ProofTree& p, const FormulaSet& allowed) {
  std::vector<FormulaPtr> leaves;
  collect_leaf_formulas(p.conclusion.ante, leaves);
  collect_leaf_formulas(p.conclusion.succ, leaves);
  for (const auto& f : leaves)
    if (!allowed.count(f)) return false;
  for (const auto& c : p.children)
    if (!node_subformulas_ok(*c, allowed)) return false;
  return true;
}

}  // namespace

bool subformula_property(const ProofTree& proof) {
  std::vector<FormulaPtr> roots;
  collect_leaf_formulas(proof.conclusion.ante, roots);
  collect_leaf_formulas(proof.conclusion.succ, roots);
  FormulaSet allowed;
  for (const auto& f : roots) {
    auto subs = subformulas(f);
    allowed.insert(subs.begin(), subs.end());
  }
  return node_subformulas_ok(proof, allowed);
}

// ---------------------------------------------------------------------------
// History trees

namespace {

HistoryNode build_history(const ProofTree& node, const Path& occ,
                          const Calculus& calc, const Declarations& decls) {
  HistoryNode h;
  h.node = &node;
  h.occ = occ;
  const RuleSchema* rule = calc.find(node.rule);
  if (!rule || !node.assignment)
    throw std::logic_error("history_tree requires a checked proof");
  for (const auto& [i, q] :
       congruent_occurrences(*rule, *node.assignment, decls, occ)) {
    h.children.push_back(
        build_history(*node.children.at(static_cast<size_t>(i)), q, calc,
                      decls));
  }
  if (h.children.empty()) {
    bool principal =
        is_principal(*rule, *node.assignment, decls, node.conclusion, occ);
    if (!principal)
      h.leaf = LeafKind::IntroducedParametric;
    else if (occ.steps.empty())
      h.leaf = LeafKind::PrincipalDisplayed;
    else
      h.leaf = LeafKind::PrincipalUndisplayedAxiom;
  }
  return h;
}

}  // namespace

HistoryNode history_tree(const ProofTree& proof, const Path& occ,
                         const Calculus& calc, const Declarations& decls) {
  StructurePtr target = at(proof.conclusion, occ);
  if (target->kind != SK::Fm)
    throw InvalidPath("occurrence-not-formula: " + to_string(occ));
  return build_history(proof, occ, calc, decls);
}

// ---------------------------------------------------------------------------
// Display engine

namespace {

// Stable textual key for BFS visited-set membership.
std::string seq_key(const Sequent& s, const Path& p);

void key_structure(const StructurePtr& s, std::string& out) {
  out += std::to_string(static_cast<int>(s->kind));
  out += '(';
  switch (s->kind) {
    case SK::Fm: {
      // Pointer identity is not stable; use a size+cmp-free encoding via
      // recursive serialization of the formula.
      std::function<void(const FormulaPtr&)> kf = [&](const FormulaPtr& f) {
        if (!f) return;
        out += std::to_string(static_cast<int>(f->kind)) + f->name +
               f->agent.name + f->act.base + f->act.state + "[";
        kf(f->lhs);
        out += "|";
        kf(f->rhs);
        out += "]";
      };
      kf(s->fm);
      break;
    }
    case SK::SVar: out += s->name; break;
    case SK::Prox: case SK::AdjProx: out += s->agent.name; break;
    case SK::DProx: case SK::AdjDProx: case SK::Phi:
      out += s->act.base + "@" + s->act.state;
      break;
    default: break;
  }
  if (s->lhs) key_structure(s->lhs, out);
  out += ',';
  if (s->rhs) key_structure(s->rhs, out);
  out += ')';
}

std::string seq_key(const Sequent& s, const Path& p) {
  std::string out;
  key_structure(s.ante, out);
  out += "|-";
  key_structure(s.succ, out);
  out += "@" + to_string(p);
  return out;
}

}  // namespace

DisplayResult display_at(const Sequent& seq, const Path& p,
                         const Calculus& calc, const Declarations& decls) {
  // Validate the path and determine the display side.
  (void)at(seq, p);
  Polarity side = polarity_of(seq, p);

  std::vector<const RuleSchema*> moves;
  for (const auto& r : calc.rules)
    if (r.display_move) moves.push_back(&r);
  std::sort(moves.begin(), moves.end(),
            [](const RuleSchema* a, const RuleSchema* b) {
              return a->name < b->name;
            });

  struct Node {
    Sequent seq;
    Path p;
    int parent = -1;
    std::string rule;  // edge label: rule whose conclusion is parent's seq
    int depth = 0;
  };
  std::vector<Node> nodes{{seq, p, -1, "", 0}};
  std::set<std::string> visited{seq_key(seq, p)};
  std::deque<int> queue{0};

  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (nodes[cur].p.steps.empty()) {
      // Reconstruct the chain bottom-up.
      ProofTreePtr frag = mk_proof("Hyp", nodes[cur].seq);
      Sequent displayed = nodes[cur].seq;
      int i = cur;
      while (nodes[i].parent >= 0) {
        frag = mk_proof(nodes[i].rule, nodes[nodes[i].parent].seq, {frag});
        i = nodes[i].parent;
      }
      return {frag, displayed, side};
    }
    if (nodes[cur].depth >= 64) continue;
    for (const RuleSchema* r : moves) {
      for (const auto& asg : match_rule(*r, nodes[cur].seq, decls)) {
        auto occs = congruent_occurrences(*r, asg, decls, nodes[cur].p);
        if (occs.empty()) continue;  // move would tear the target apart
        Inference inf;
        try {
          inf = instantiate(*r, asg, decls);
        } catch (const InstantiateError&) {
          continue;
        }
        const auto& [pi, q] = occs.front();
        if (pi != 0 || inf.premises.size() != 1) continue;
        std::string key = seq_key(inf.premises[0], q);
        if (!visited.insert(key).second) continue;
        nodes.push_back({inf.premises[0], q, cur, r->name,
                         nodes[cur].depth + 1});
        queue.push_back(static_cast<int>(nodes.size()) - 1);
      }
    }
  }
  throw NotDisplayable("not-displayable: " + to_string(p));
}

}  // namespace deak
