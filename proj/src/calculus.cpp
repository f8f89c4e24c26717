#include "deak/calculus.hpp"

#include <algorithm>

namespace deak {

// ---------------------------------------------------------------------------
// Assignment

bool Assignment::bind(const std::string& v, const StructurePtr& s) {
  auto [it, fresh] = svars.emplace(v, s);
  return fresh || equal(it->second, s);
}

bool Assignment::bind(const std::string& v, const FormulaPtr& f) {
  auto [it, fresh] = fvars.emplace(v, f);
  return fresh || equal(it->second, f);
}

bool Assignment::bind_agent(const std::string& v, const Agent& a) {
  auto [it, fresh] = avars.emplace(v, a);
  return fresh || it->second == a;
}

bool Assignment::bind_action(const std::string& v, const ActionLabel& l) {
  auto [it, fresh] = dvars.emplace(v, l);
  return fresh || it->second == l;
}

// ---------------------------------------------------------------------------
// Calculus lookup

const RuleSchema* Calculus::find(const std::string& n) const {
  for (const auto& r : rules)
    if (r.name == n) return &r;
  return nullptr;
}

std::vector<const RuleSchema*> Calculus::axioms() const {
  std::vector<const RuleSchema*> out;
  for (const auto& r : rules)
    if (r.family == RuleFamily::Axiom) out.push_back(&r);
  return out;
}

// ---------------------------------------------------------------------------
// Instantiation

static Agent inst(const Agent& a, const Assignment& asg) {
  if (!is_metavar_name(a.name)) return a;
  auto it = asg.avars.find(a.name);
  if (it == asg.avars.end())
    throw InstantiateError("unbound agent metavariable " + a.name);
  return it->second;
}

static ActionLabel inst(const ActionLabel& l, const Assignment& asg) {
  if (!is_metavar_name(l.base)) return l;
  auto it = asg.dvars.find(l.base);
  if (it == asg.dvars.end())
    throw InstantiateError("unbound action metavariable " + l.base);
  return it->second;
}

FormulaPtr instantiate(const FormulaPtr& pat, const Assignment& asg,
                       const Declarations& decls) {
  if (!pat) return pat;
  switch (pat->kind) {
    case FK::FVar: {
      auto it = asg.fvars.find(pat->name);
      if (it == asg.fvars.end())
        throw InstantiateError("unbound formula metavariable " + pat->name);
      return it->second;
    }
    case FK::PreOf:
      return decls.pre_of(inst(pat->act, asg));
    case FK::One:
      return fOne(inst(pat->act, asg));
    case FK::Dia: case FK::Box: case FK::AdjDia: case FK::AdjBox: {
      auto body = instantiate(pat->lhs, asg, decls);
      Agent a = inst(pat->agent, asg);
      switch (pat->kind) {
        case FK::Dia: return fDia(a, body);
        case FK::Box: return fBox(a, body);
        case FK::AdjDia: return fAdjDia(a, body);
        default: return fAdjBox(a, body);
      }
    }
    case FK::DDia: case FK::DBox: case FK::AdjDDia: case FK::AdjDBox: {
      auto body = instantiate(pat->lhs, asg, decls);
      ActionLabel l = inst(pat->act, asg);
      switch (pat->kind) {
        case FK::DDia: return fDDia(l, body);
        case FK::DBox: return fDBox(l, body);
        case FK::AdjDDia: return fAdjDDia(l, body);
        default: return fAdjDBox(l, body);
      }
    }
    default:
      if (!pat->lhs && !pat->rhs) return pat;
      {
        auto f = std::make_shared<Formula>(*pat);
        auto* m = const_cast<Formula*>(f.get());
        m->lhs = instantiate(pat->lhs, asg, decls);
        m->rhs = instantiate(pat->rhs, asg, decls);
        return f;
      }
  }
}

StructurePtr instantiate(const StructurePtr& pat, const Assignment& asg,
                         const Declarations& decls) {
  switch (pat->kind) {
    case SK::SVar: {
      auto it = asg.svars.find(pat->name);
      if (it == asg.svars.end())
        throw InstantiateError("unbound structure metavariable " + pat->name);
      return it->second;
    }
    case SK::Fm:
      return sFm(instantiate(pat->fm, asg, decls));
    case SK::I:
      return pat;
    case SK::Semi:
      return sSemi(instantiate(pat->lhs, asg, decls),
                   instantiate(pat->rhs, asg, decls));
    case SK::Gt:
      return sGt(instantiate(pat->lhs, asg, decls),
                 instantiate(pat->rhs, asg, decls));
    case SK::Lt:
      return sLt(instantiate(pat->lhs, asg, decls),
                 instantiate(pat->rhs, asg, decls));
    case SK::Prox:
      return sProx(inst(pat->agent, asg), instantiate(pat->lhs, asg, decls));
    case SK::AdjProx:
      return sAdjProx(inst(pat->agent, asg), instantiate(pat->lhs, asg, decls));
    case SK::DProx:
      return sDProx(inst(pat->act, asg), instantiate(pat->lhs, asg, decls));
    case SK::AdjDProx:
      return sAdjDProx(inst(pat->act, asg),
                       instantiate(pat->lhs, asg, decls));
    case SK::Phi:
      return sPhi(inst(pat->act, asg));
  }
  throw std::logic_error("unreachable");
}

Sequent instantiate(const Sequent& pat, const Assignment& asg,
                    const Declarations& decls) {
  return {instantiate(pat.ante, asg, decls),
          instantiate(pat.succ, asg, decls)};
}

// Left-nested string (...(Y ; Y) ; ... ; Y) with n occurrences.
static StructurePtr semi_string(const StructurePtr& y, int n) {
  StructurePtr out = y;
  for (int i = 1; i < n; ++i) out = sSemi(out, y);
  return out;
}

static bool is_swap_out(SpecialForm f) {
  return f == SpecialForm::SwapOutL || f == SpecialForm::SwapOutR ||
         f == SpecialForm::LegacySwapOutL || f == SpecialForm::LegacySwapOutR;
}

// Successors for the (already bound) alpha/agent of a per-beta rule.
static std::vector<ActionLabel> rule_successors(const RuleSchema& rule,
                                                const Assignment& asg,
                                                const Declarations& decls) {
  const BetaCondition& bc = rule.beta_conditions.at(0);
  ActionLabel alpha = asg.dvars.at(bc.alpha_var);
  Agent a = asg.avars.at(bc.agent_var);
  return decls.successors(alpha, a);
}

Inference instantiate(const RuleSchema& rule, const Assignment& asg,
                      const Declarations& decls) {
  Inference inf;
  if (rule.special == SpecialForm::AtomAxiom) {
    inf.conclusion = {asg.svars.at("Gamma"), asg.svars.at("Delta")};
    return inf;
  }
  if (is_swap_out(rule.special)) {
    const BetaCondition& bc = rule.beta_conditions.at(0);
    auto betas = rule_successors(rule, asg, decls);
    if (betas.empty())
      throw InstantiateError(rule.name + ": no successor actions");
    for (const auto& b : betas) {
      Assignment a2 = asg;
      a2.dvars[bc.beta_var] = b;
      inf.premises.push_back(instantiate(rule.premises.at(0), a2, decls));
    }
    // The conclusion template's Y stands for n juxtaposed copies.
    int n = static_cast<int>(betas.size());
    StructurePtr y = asg.svars.at("Y");
    Assignment a2 = asg;
    a2.svars["Y"] = semi_string(y, n);
    inf.conclusion = instantiate(rule.conclusion, a2, decls);
    return inf;
  }
  for (const auto& p : rule.premises)
    inf.premises.push_back(instantiate(p, asg, decls));
  inf.conclusion = instantiate(rule.conclusion, asg, decls);
  return inf;
}

// ---------------------------------------------------------------------------
// Matching

bool match(const FormulaPtr& pat, const FormulaPtr& concrete, Assignment& asg,
           const Declarations& decls) {
  if (!pat || !concrete) return pat == concrete;
  if (pat->kind == FK::FVar) return asg.bind(pat->name, concrete);
  if (pat->kind == FK::PreOf) {
    // Defer: the action metavariable may not be bound yet.
    if (!is_metavar_name(pat->act.base)) {
      return equal(decls.pre_of(pat->act), concrete);
    }
    auto it = asg.dvars.find(pat->act.base);
    if (it != asg.dvars.end()) return equal(decls.pre_of(it->second), concrete);
    asg.pre_pending.emplace_back(pat->act.base, concrete);
    return true;
  }
  if (pat->kind != concrete->kind) return false;
  switch (pat->kind) {
    case FK::Atom:
      return pat->name == concrete->name;
    case FK::Top: case FK::Bot:
      return true;
    case FK::One:
      if (is_metavar_name(pat->act.base))
        return asg.bind_action(pat->act.base, concrete->act);
      return pat->act == concrete->act;
    default:
      break;
  }
  if (is_unary(pat->kind)) {
    bool agent_side = pat->kind == FK::Dia || pat->kind == FK::Box ||
                      pat->kind == FK::AdjDia || pat->kind == FK::AdjBox;
    if (agent_side) {
      if (is_metavar_name(pat->agent.name)) {
        if (!asg.bind_agent(pat->agent.name, concrete->agent)) return false;
      } else if (pat->agent != concrete->agent) {
        return false;
      }
    } else {
      if (is_metavar_name(pat->act.base)) {
        if (!asg.bind_action(pat->act.base, concrete->act)) return false;
      } else if (pat->act != concrete->act) {
        return false;
      }
    }
    return match(pat->lhs, concrete->lhs, asg, decls);
  }
  return match(pat->lhs, concrete->lhs, asg, decls) &&
         match(pat->rhs, concrete->rhs, asg, decls);
}

bool match(const StructurePtr& pat, const StructurePtr& concrete,
           Assignment& asg, const Declarations& decls) {
  if (pat->kind == SK::SVar) return asg.bind(pat->name, concrete);
  if (pat->kind != concrete->kind) return false;
  switch (pat->kind) {
    case SK::Fm:
      return match(pat->fm, concrete->fm, asg, decls);
    case SK::I:
      return true;
    case SK::Semi: case SK::Gt: case SK::Lt:
      return match(pat->lhs, concrete->lhs, asg, decls) &&
             match(pat->rhs, concrete->rhs, asg, decls);
    case SK::Prox: case SK::AdjProx:
      if (is_metavar_name(pat->agent.name)) {
        if (!asg.bind_agent(pat->agent.name, concrete->agent)) return false;
      } else if (pat->agent != concrete->agent) {
        return false;
      }
      return match(pat->lhs, concrete->lhs, asg, decls);
    case SK::DProx: case SK::AdjDProx:
      if (is_metavar_name(pat->act.base)) {
        if (!asg.bind_action(pat->act.base, concrete->act)) return false;
      } else if (pat->act != concrete->act) {
        return false;
      }
      return match(pat->lhs, concrete->lhs, asg, decls);
    case SK::Phi:
      if (is_metavar_name(pat->act.base))
        return asg.bind_action(pat->act.base, concrete->act);
      return pat->act == concrete->act;
    case SK::SVar:
      break;
  }
  throw std::logic_error("unreachable");
}

bool match(const Sequent& pat, const Sequent& concrete, Assignment& asg,
           const Declarations& decls) {
  return match(pat.ante, concrete.ante, asg, decls) &&
         match(pat.succ, concrete.succ, asg, decls);
}

// Resolve deferred Pre(alpha) constraints by enumeration, branching where the
// action metavariable is still unbound. Deterministic: declared-variant order.
static std::vector<Assignment> resolve_pending(const Assignment& asg,
                                               const Declarations& decls) {
  std::vector<Assignment> frontier{asg};
  frontier.front().pre_pending.clear();
  for (const auto& [var, f] : asg.pre_pending) {
    std::vector<Assignment> next;
    for (auto& a : frontier) {
      auto it = a.dvars.find(var);
      if (it != a.dvars.end()) {
        if (equal(decls.pre_of(it->second), f)) next.push_back(a);
        continue;
      }
      for (const auto& v : decls.all_variants()) {
        if (!equal(decls.pre_of(v), f)) continue;
        Assignment a2 = a;
        a2.dvars[var] = v;
        next.push_back(a2);
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

static bool beta_conditions_hold(const RuleSchema& rule, const Assignment& asg,
                                 const Declarations& decls,
                                 bool require_beta_bound) {
  for (const auto& bc : rule.beta_conditions) {
    auto ai = asg.dvars.find(bc.alpha_var);
    auto gi = asg.avars.find(bc.agent_var);
    auto bi = asg.dvars.find(bc.beta_var);
    if (ai == asg.dvars.end() || gi == asg.avars.end()) return false;
    auto succs = decls.successors(ai->second, gi->second);
    if (bi == asg.dvars.end())
      return !require_beta_bound && !succs.empty();
    if (std::find(succs.begin(), succs.end(), bi->second) == succs.end())
      return false;
  }
  return true;
}

// Decompose a left-nested Semi string into its n leaves; returns false if the
// structure does not split into exactly n equal parts.
static bool split_semi_string(const StructurePtr& s, int n,
                              StructurePtr& leaf) {
  std::vector<StructurePtr> leaves;
  StructurePtr cur = s;
  for (int i = 0; i < n - 1; ++i) {
    if (cur->kind != SK::Semi) return false;
    leaves.push_back(cur->rhs);
    cur = cur->lhs;
  }
  leaves.push_back(cur);
  for (const auto& l : leaves)
    if (!equal(l, leaves.front())) return false;
  leaf = leaves.front();
  return true;
}

// Match a conclusion against the atom axiom: both sides are strings of action
// proxies over the same atomic formula.
static std::optional<Assignment> match_atom_axiom(const Sequent& concl) {
  auto peel = [](StructurePtr s) -> FormulaPtr {
    while (s->kind == SK::DProx || s->kind == SK::AdjDProx) s = s->lhs;
    if (s->kind == SK::Fm && s->fm->kind == FK::Atom) return s->fm;
    return nullptr;
  };
  FormulaPtr pa = peel(concl.ante), ps = peel(concl.succ);
  if (!pa || !ps || !equal(pa, ps)) return std::nullopt;
  Assignment asg;
  asg.svars["Gamma"] = concl.ante;
  asg.svars["Delta"] = concl.succ;
  asg.fvars["p"] = pa;
  return asg;
}

// Conclusion-only matching (handles the special forms).
static std::vector<Assignment> conclusion_matches(const RuleSchema& rule,
                                                  const Sequent& concl,
                                                  const Declarations& decls) {
  if (rule.special == SpecialForm::AtomAxiom) {
    if (auto a = match_atom_axiom(concl)) return {*a};
    return {};
  }
  if (is_swap_out(rule.special)) {
    // Match the non-copied side, then split the copied side.
    bool copies_on_succ = rule.special == SpecialForm::SwapOutL ||
                          rule.special == SpecialForm::LegacySwapOutL;
    Assignment asg;
    const StructurePtr& fixed_pat =
        copies_on_succ ? rule.conclusion.ante : rule.conclusion.succ;
    const StructurePtr& fixed_con =
        copies_on_succ ? concl.ante : concl.succ;
    if (!match(fixed_pat, fixed_con, asg, decls)) return {};
    std::vector<Assignment> out;
    for (auto& a : resolve_pending(asg, decls)) {
      if (!beta_conditions_hold(rule, a, decls, false)) continue;
      auto betas = rule_successors(rule, a, decls);
      if (betas.empty()) continue;
      StructurePtr y;
      const StructurePtr& copied =
          copies_on_succ ? concl.succ : concl.ante;
      if (!split_semi_string(copied, static_cast<int>(betas.size()), y))
        continue;
      if (!a.bind("Y", y)) continue;
      out.push_back(a);
    }
    return out;
  }
  Assignment asg;
  if (!match(rule.conclusion, concl, asg, decls)) return {};
  std::vector<Assignment> out;
  for (auto& a : resolve_pending(asg, decls))
    if (beta_conditions_hold(rule, a, decls, true)) out.push_back(a);
  return out;
}

std::vector<Assignment> match_rule(const RuleSchema& rule, const Sequent& concl,
                                   const Declarations& decls) {
  std::vector<Assignment> out;
  for (auto& a : conclusion_matches(rule, concl, decls)) {
    if (rule.guard && !rule.guard(a, decls)) continue;
    out.push_back(a);
  }
  return out;
}

std::vector<Assignment> match_inference(
    const RuleSchema& rule, const Sequent& concl,
    const std::vector<Sequent>& premise_concls, const Declarations& decls) {
  std::vector<Assignment> result;
  for (auto& base : conclusion_matches(rule, concl, decls)) {
    // Expand the premise pattern list.
    std::vector<Sequent> pats;
    std::vector<std::string> beta_binds;  // per-premise beta binding, if any
    if (is_swap_out(rule.special)) {
      auto betas = rule_successors(rule, base, decls);
      if (betas.size() != premise_concls.size()) continue;
      const BetaCondition& bc = rule.beta_conditions.at(0);
      for (size_t i = 0; i < betas.size(); ++i) {
        pats.push_back(rule.premises.at(0));
        beta_binds.push_back(bc.beta_var + "#" + betas[i].base + "@" +
                             betas[i].state);
      }
      std::vector<Assignment> frontier{base};
      for (size_t i = 0; i < pats.size(); ++i) {
        std::vector<Assignment> next;
        for (auto& a : frontier) {
          Assignment a2 = a;
          a2.dvars[bc.beta_var] = betas[i];
          if (!match(pats[i], premise_concls[i], a2, decls)) continue;
          for (auto& r : resolve_pending(a2, decls)) next.push_back(r);
        }
        frontier = std::move(next);
      }
      for (auto& a : frontier) {
        // Scrub the per-premise beta binding; it is not part of the rule's
        // assignment proper.
        a.dvars.erase(bc.beta_var);
        if (rule.guard && !rule.guard(a, decls)) continue;
        result.push_back(a);
      }
      continue;
    }
    if (rule.premises.size() != premise_concls.size()) continue;
    std::vector<Assignment> frontier{base};
    for (size_t i = 0; i < rule.premises.size(); ++i) {
      std::vector<Assignment> next;
      for (auto& a : frontier) {
        Assignment a2 = a;
        if (!match(rule.premises[i], premise_concls[i], a2, decls)) continue;
        for (auto& r : resolve_pending(a2, decls)) next.push_back(r);
      }
      frontier = std::move(next);
    }
    for (auto& a : frontier) {
      if (!beta_conditions_hold(rule, a, decls, true)) continue;
      if (rule.guard && !rule.guard(a, decls)) continue;
      result.push_back(a);
    }
  }
  // Deduplicate (identical assignments can arise via different branches).
  std::vector<Assignment> dedup;
  auto same = [](const Assignment& a, const Assignment& b) {
    if (a.svars.size() != b.svars.size() || a.fvars.size() != b.fvars.size() ||
        a.avars != b.avars || a.dvars != b.dvars)
      return false;
    for (const auto& [k, v] : a.svars) {
      auto it = b.svars.find(k);
      if (it == b.svars.end() || !equal(it->second, v)) return false;
    }
    for (const auto& [k, v] : a.fvars) {
      auto it = b.fvars.find(k);
      if (it == b.fvars.end() || !equal(it->second, v)) return false;
    }
    return true;
  };
  for (auto& a : result) {
    bool dup = false;
    for (auto& d : dedup)
      if (same(a, d)) { dup = true; break; }
    if (!dup) dedup.push_back(a);
  }
  return dedup;
}

// ---------------------------------------------------------------------------
// Congruence

// Occurrence paths of the metavariable `name` (structure or formula sort) in
// a pattern structure.
static void collect_var_paths(const StructurePtr& pat, const std::string& name,
                              bool formula_sort, Path here,
                              std::vector<Path>& out) {
  if (!formula_sort && pat->kind == SK::SVar && pat->name == name) {
    out.push_back(here);
    return;
  }
  if (formula_sort && pat->kind == SK::Fm && pat->fm->kind == FK::FVar &&
      pat->fm->name == name) {
    out.push_back(here);
    return;
  }
  if (pat->lhs) collect_var_paths(pat->lhs, name, formula_sort, here.child(0), out);
  if (pat->rhs) collect_var_paths(pat->rhs, name, formula_sort, here.child(1), out);
}

static std::vector<Path> var_paths(const Sequent& pat, const std::string& name,
                                   bool formula_sort) {
  std::vector<Path> out;
  collect_var_paths(pat.ante, name, formula_sort, Path{Path::Ante, {}}, out);
  collect_var_paths(pat.succ, name, formula_sort, Path{Path::Succ, {}}, out);
  return out;
}

static Path extend(Path q, const std::vector<int>& suffix, size_t from) {
  for (size_t i = from; i < suffix.size(); ++i) q.steps.push_back(suffix[i]);
  return q;
}

// Path prefixes of the n copies in a left-nested Semi string (copy 0 first).
static std::vector<std::vector<int>> copy_prefixes(int n) {
  std::vector<std::vector<int>> out(n);
  for (int i = 0; i < n; ++i) {
    // Copy i sits under (n-1-i) left steps, then a right step unless i == 0.
    std::vector<int> p(static_cast<size_t>(n - 1 - i), 0);
    if (i > 0) p.push_back(1);
    out[i] = p;
  }
  return out;
}

std::vector<std::pair<int, Path>> congruent_occurrences(
    const RuleSchema& rule, const Assignment& asg, const Declarations& decls,
    const Path& p) {
  std::vector<std::pair<int, Path>> out;
  if (rule.special == SpecialForm::AtomAxiom) return out;

  if (is_swap_out(rule.special)) {
    auto betas = rule_successors(rule, asg, decls);
    int n = static_cast<int>(betas.size());
    bool copies_on_succ = rule.special == SpecialForm::SwapOutL ||
                          rule.special == SpecialForm::LegacySwapOutL;
    bool in_copies = (p.side == Path::Succ) == copies_on_succ;
    if (in_copies) {
      // Identify which copy the path enters, then map into that premise's Y.
      auto prefixes = copy_prefixes(n);
      for (int i = 0; i < n; ++i) {
        const auto& pre = prefixes[i];
        if (p.steps.size() < pre.size() ||
            !std::equal(pre.begin(), pre.end(), p.steps.begin()))
          continue;
        auto ys = var_paths(rule.premises.at(0), "Y", false);
        for (const auto& q : ys)
          out.emplace_back(i, extend(q, p.steps, pre.size()));
        return out;
      }
      return out;  // inside the Semi skeleton itself: no formula leaf here
    }
    // Fixed side: descend the stored conclusion template.
    const Sequent& cpat = rule.conclusion;
    StructurePtr pat = p.side == Path::Ante ? cpat.ante : cpat.succ;
    size_t i = 0;
    while (i < p.steps.size() && pat->kind != SK::SVar) {
      pat = p.steps[i] == 0 ? pat->lhs : pat->rhs;
      ++i;
      if (!pat) return out;
    }
    if (pat->kind != SK::SVar) return out;
    for (int j = 0; j < n; ++j)
      for (const auto& q : var_paths(rule.premises.at(0), pat->name, false))
        out.emplace_back(j, extend(q, p.steps, i));
    return out;
  }

  const Sequent& cpat = rule.conclusion;
  StructurePtr pat = p.side == Path::Ante ? cpat.ante : cpat.succ;
  size_t i = 0;
  while (i < p.steps.size() && pat->kind != SK::SVar && pat->kind != SK::Fm) {
    pat = p.steps[i] == 0 ? pat->lhs : pat->rhs;
    ++i;
    if (!pat) return out;
  }
  if (pat->kind == SK::SVar) {
    for (size_t j = 0; j < rule.premises.size(); ++j)
      for (const auto& q : var_paths(rule.premises[j], pat->name, false))
        out.emplace_back(static_cast<int>(j), extend(q, p.steps, i));
    return out;
  }
  if (pat->kind == SK::Fm && i == p.steps.size() &&
      pat->fm->kind == FK::FVar) {
    for (size_t j = 0; j < rule.premises.size(); ++j)
      for (const auto& q : var_paths(rule.premises[j], pat->fm->name, true))
        out.emplace_back(static_cast<int>(j), q);
    return out;
  }
  // Concrete pattern region (principal, or an introduced constant):
  // no congruent premise occurrences.
  return out;
}

std::vector<Path> principal_paths(const RuleSchema& rule,
                                  const Assignment& asg,
                                  const Declarations& decls,
                                  const Sequent& concl) {
  (void)asg;
  (void)decls;
  if (rule.special == SpecialForm::AtomAxiom) {
    std::vector<Path> out;
    auto descend = [&](StructurePtr s, Path p) {
      while (s->kind == SK::DProx || s->kind == SK::AdjDProx) {
        p = p.child(0);
        s = s->lhs;
      }
      out.push_back(p);
    };
    descend(concl.ante, Path{Path::Ante, {}});
    descend(concl.succ, Path{Path::Succ, {}});
    return out;
  }
  return rule.principal;
}

bool is_principal(const RuleSchema& rule, const Assignment& asg,
                  const Declarations& decls, const Sequent& concl,
                  const Path& p) {
  auto pp = principal_paths(rule, asg, decls, concl);
  return std::find(pp.begin(), pp.end(), p) != pp.end();
}

// ---------------------------------------------------------------------------
// Bundled rule sets

namespace {

StructurePtr X() { return sVar("X"); }
StructurePtr Y() { return sVar("Y"); }
StructurePtr Z() { return sVar("Z"); }
StructurePtr W() { return sVar("W"); }
StructurePtr fmA() { return sFm(fVar("A")); }
StructurePtr fmB() { return sFm(fVar("B")); }
FormulaPtr A() { return fVar("A"); }
FormulaPtr B() { return fVar("B"); }
Agent qa() { return Agent{"?a"}; }
ActionLabel qal() { return ActionLabel{"?alpha", ""}; }
ActionLabel qbe() { return ActionLabel{"?beta", ""}; }

Path pAnte() { return Path{Path::Ante, {}}; }
Path pSucc() { return Path{Path::Succ, {}}; }

struct Builder {
  std::vector<RuleSchema> rules;

  RuleSchema& add(std::string name, std::vector<Sequent> prems, Sequent concl,
                  RuleFamily fam) {
    RuleSchema r;
    r.name = std::move(name);
    r.premises = std::move(prems);
    r.conclusion = std::move(concl);
    r.family = fam;
    if (fam == RuleFamily::OperationalLeft) r.principal = {pAnte()};
    if (fam == RuleFamily::OperationalRight) r.principal = {pSucc()};
    rules.push_back(std::move(r));
    return rules.back();
  }

  RuleSchema& axiom(std::string name, Sequent concl,
                    std::vector<Path> principal) {
    RuleSchema& r = add(std::move(name), {}, std::move(concl),
                        RuleFamily::Axiom);
    r.principal = std::move(principal);
    return r;
  }

  RuleSchema& inv(std::string name, Sequent prem, Sequent concl,
                  RuleFamily fam, bool display = false) {
    RuleSchema& r = add(std::move(name), {prem}, concl, fam);
    r.invertible = true;
    r.display_move = display;
    return r;
  }

  // Emit "_rev" twins for the invertible rules.
  void finalize() {
    std::vector<RuleSchema> rev;
    for (const auto& r : rules) {
      if (!r.invertible) continue;
      RuleSchema t;
      t.name = r.name + "_rev";
      t.premises = {r.conclusion};
      t.conclusion = r.premises.at(0);
      t.family = r.family;
      t.display_move = r.display_move;
      rev.push_back(std::move(t));
    }
    for (auto& r : rev) rules.push_back(std::move(r));
  }
};

void add_shared_core(Builder& b, bool classical) {
  // Axioms and cut.
  {
    RuleSchema& id = b.axiom("Id", {sFm(fVar("p")), sFm(fVar("p"))},
                             {pAnte(), pSucc()});
    id.guard = [](const Assignment& a, const Declarations&) {
      auto it = a.fvars.find("p");
      return it != a.fvars.end() && it->second->kind == FK::Atom;
    };
  }
  {
    RuleSchema& at = b.axiom("atom", {X(), Y()}, {});
    at.special = SpecialForm::AtomAxiom;
  }
  b.add("Cut", {{X(), fmA()}, {fmA(), Y()}}, {X(), Y()}, RuleFamily::Structural);

  // I-rules (invertible; usable as display moves for substructures beside I).
  b.inv("I1_L", {X(), Y()}, {sI(), sLt(Y(), X())}, RuleFamily::Structural, false);
  b.inv("I1_R", {X(), Y()}, {sLt(X(), Y()), sI()}, RuleFamily::Structural, false);
  b.inv("I2_L", {X(), Y()}, {sI(), sGt(X(), Y())}, RuleFamily::Structural, false);
  b.inv("I2_R", {X(), Y()}, {sGt(Y(), X()), sI()}, RuleFamily::Structural, false);

  // Weakening.
  b.add("IW_L", {{sI(), X()}}, {Y(), X()}, RuleFamily::Structural);
  b.add("IW_R", {{X(), sI()}}, {X(), Y()}, RuleFamily::Structural);
  b.add("W1_L", {{X(), Z()}}, {Y(), sLt(Z(), X())}, RuleFamily::Structural);
  b.add("W1_R", {{X(), Z()}}, {sLt(X(), Z()), Y()}, RuleFamily::Structural);
  b.add("W2_L", {{X(), Z()}}, {Y(), sGt(X(), Z())}, RuleFamily::Structural);
  b.add("W2_R", {{X(), Z()}}, {sGt(Z(), X()), Y()}, RuleFamily::Structural);

  // Contraction, exchange, associativity.
  b.add("C_L", {{sSemi(X(), X()), Y()}}, {X(), Y()}, RuleFamily::Structural);
  b.add("C_R", {{Y(), sSemi(X(), X())}}, {Y(), X()}, RuleFamily::Structural);
  b.add("E_L", {{sSemi(Y(), X()), Z()}}, {sSemi(X(), Y()), Z()},
        RuleFamily::Structural);
  b.add("E_R", {{Z(), sSemi(X(), Y())}}, {Z(), sSemi(Y(), X())},
        RuleFamily::Structural);
  b.add("A_L", {{sSemi(X(), sSemi(Y(), Z())), W()}},
        {sSemi(sSemi(X(), Y()), Z()), W()}, RuleFamily::Structural);
  b.add("A_R", {{W(), sSemi(sSemi(Z(), Y()), X())}},
        {W(), sSemi(Z(), sSemi(Y(), X()))}, RuleFamily::Structural);

  // Display postulates for ; with < and >.
  b.inv("disp1", {sSemi(X(), Y()), Z()}, {X(), sLt(Z(), Y())},
        RuleFamily::DisplayPostulate, true);
  b.inv("disp2", {Z(), sSemi(X(), Y())}, {sLt(Z(), Y()), X()},
        RuleFamily::DisplayPostulate, true);
  b.inv("disp3", {sSemi(X(), Y()), Z()}, {Y(), sGt(X(), Z())},
        RuleFamily::DisplayPostulate, true);
  b.inv("disp4", {Z(), sSemi(X(), Y())}, {sGt(X(), Z()), Y()},
        RuleFamily::DisplayPostulate, true);

  if (classical) {
    b.inv("gri_L", {sGt(X(), sSemi(Y(), Z())), W()},
          {sSemi(sGt(X(), Y()), Z()), W()}, RuleFamily::Structural);
    b.inv("gri_R", {W(), sGt(X(), sSemi(Y(), Z()))},
          {W(), sSemi(sGt(X(), Y()), Z())}, RuleFamily::Structural);
  }

  // Operational rules, propositional base.
  b.axiom("bot_L", {sFm(fBot()), sI()}, {pAnte()});
  b.add("bot_R", {{X(), sI()}}, {X(), sFm(fBot())}, RuleFamily::OperationalRight);
  b.add("top_L", {{sI(), X()}}, {sFm(fTop()), X()}, RuleFamily::OperationalLeft);
  b.axiom("top_R", {sI(), sFm(fTop())}, {pSucc()});
  b.add("and_L", {{sSemi(fmA(), fmB()), Z()}}, {sFm(fAnd(A(), B())), Z()},
        RuleFamily::OperationalLeft);
  b.add("and_R", {{X(), fmA()}, {Y(), fmB()}},
        {sSemi(X(), Y()), sFm(fAnd(A(), B()))}, RuleFamily::OperationalRight);
  b.add("or_L", {{fmA(), X()}, {fmB(), Y()}},
        {sFm(fOr(A(), B())), sSemi(X(), Y())}, RuleFamily::OperationalLeft);
  b.add("or_R", {{Z(), sSemi(fmA(), fmB())}}, {Z(), sFm(fOr(A(), B()))},
        RuleFamily::OperationalRight);
  b.add("limp_L", {{fmB(), Y()}, {X(), fmA()}},
        {sFm(fLImp(B(), A())), sLt(Y(), X())}, RuleFamily::OperationalLeft);
  b.add("limp_R", {{Z(), sLt(fmB(), fmA())}}, {Z(), sFm(fLImp(B(), A()))},
        RuleFamily::OperationalRight);
  b.add("lcoimp_L", {{sLt(fmB(), fmA()), Z()}}, {sFm(fLCoImp(B(), A())), Z()},
        RuleFamily::OperationalLeft);
  b.add("lcoimp_R", {{Y(), fmB()}, {fmA(), X()}},
        {sLt(Y(), X()), sFm(fLCoImp(B(), A()))}, RuleFamily::OperationalRight);
  b.add("imp_L", {{X(), fmA()}, {fmB(), Y()}},
        {sFm(fImp(A(), B())), sGt(X(), Y())}, RuleFamily::OperationalLeft);
  b.add("imp_R", {{Z(), sGt(fmA(), fmB())}}, {Z(), sFm(fImp(A(), B()))},
        RuleFamily::OperationalRight);
  b.add("coimp_L", {{sGt(fmA(), fmB()), Z()}}, {sFm(fCoImp(A(), B())), Z()},
        RuleFamily::OperationalLeft);
  b.add("coimp_R", {{fmA(), X()}, {Y(), fmB()}},
        {sGt(X(), Y()), sFm(fCoImp(A(), B()))}, RuleFamily::OperationalRight);

  // Epistemic structural rules.
  auto pr = [](StructurePtr s) { return sProx(qa(), std::move(s)); };
  auto apr = [](StructurePtr s) { return sAdjProx(qa(), std::move(s)); };
  b.add("nec_a_L", {{sI(), X()}}, {pr(sI()), X()}, RuleFamily::Structural);
  b.add("nec_a_R", {{X(), sI()}}, {X(), pr(sI())}, RuleFamily::Structural);
  b.add("adj_nec_a_L", {{sI(), X()}}, {apr(sI()), X()}, RuleFamily::Structural);
  b.add("adj_nec_a_R", {{X(), sI()}}, {X(), apr(sI())}, RuleFamily::Structural);
  b.add("fs_a_L", {{sGt(pr(Y()), pr(Z())), X()}}, {pr(sGt(Y(), Z())), X()},
        RuleFamily::Structural);
  b.add("fs_a_R", {{Y(), sGt(pr(X()), pr(Z()))}}, {Y(), pr(sGt(X(), Z()))},
        RuleFamily::Structural);
  b.add("mon_a_L", {{sSemi(pr(X()), pr(Y())), Z()}}, {pr(sSemi(X(), Y())), Z()},
        RuleFamily::Structural);
  b.add("mon_a_R", {{Z(), sSemi(pr(Y()), pr(X()))}}, {Z(), pr(sSemi(Y(), X()))},
        RuleFamily::Structural);
  b.add("adj_fs_a_L", {{sGt(apr(Y()), apr(X())), Z()}},
        {apr(sGt(Y(), X())), Z()}, RuleFamily::Structural);
  b.add("adj_fs_a_R", {{Y(), sGt(apr(X()), apr(Z()))}},
        {Y(), apr(sGt(X(), Z()))}, RuleFamily::Structural);
  b.add("adj_mon_a_L", {{sSemi(apr(X()), apr(Y())), Z()}},
        {apr(sSemi(X(), Y())), Z()}, RuleFamily::Structural);
  b.add("adj_mon_a_R", {{Z(), sSemi(apr(Y()), apr(X()))}},
        {Z(), apr(sSemi(Y(), X()))}, RuleFamily::Structural);
  b.add("conj_a1", {{pr(sSemi(X(), apr(Y()))), Z()}},
        {sSemi(pr(X()), Y()), Z()}, RuleFamily::Structural);
  b.add("conj_a2", {{X(), pr(sSemi(Y(), apr(Z())))}},
        {X(), sSemi(pr(Y()), Z())}, RuleFamily::Structural);
  b.add("conj_a3", {{apr(sSemi(X(), pr(Y()))), Z()}},
        {sSemi(apr(X()), Y()), Z()}, RuleFamily::Structural);
  b.add("conj_a4", {{X(), apr(sSemi(Y(), pr(Z())))}},
        {X(), sSemi(apr(Y()), Z())}, RuleFamily::Structural);
  b.inv("disp_a1", {pr(X()), Y()}, {X(), apr(Y())},
        RuleFamily::DisplayPostulate, true);
  b.inv("disp_a2", {X(), pr(Y())}, {apr(X()), Y()},
        RuleFamily::DisplayPostulate, true);

  // Epistemic operational rules.
  b.add("dia_L", {{pr(fmA()), X()}}, {sFm(fDia(qa(), A())), X()},
        RuleFamily::OperationalLeft);
  b.add("dia_R", {{X(), fmA()}}, {pr(X()), sFm(fDia(qa(), A()))},
        RuleFamily::OperationalRight);
  b.add("box_L", {{fmA(), X()}}, {sFm(fBox(qa(), A())), pr(X())},
        RuleFamily::OperationalLeft);
  b.add("box_R", {{X(), pr(fmA())}}, {X(), sFm(fBox(qa(), A()))},
        RuleFamily::OperationalRight);
  b.add("adj_dia_L", {{apr(fmA()), X()}}, {sFm(fAdjDia(qa(), A())), X()},
        RuleFamily::OperationalLeft);
  b.add("adj_dia_R", {{X(), fmA()}}, {apr(X()), sFm(fAdjDia(qa(), A()))},
        RuleFamily::OperationalRight);
  b.add("adj_box_L", {{fmA(), X()}}, {sFm(fAdjBox(qa(), A())), apr(X())},
        RuleFamily::OperationalLeft);
  b.add("adj_box_R", {{X(), apr(fmA())}}, {X(), sFm(fAdjBox(qa(), A()))},
        RuleFamily::OperationalRight);

  // Dynamic structural rules (same shapes with action proxies).
  auto dp = [](StructurePtr s) { return sDProx(qal(), std::move(s)); };
  auto adp = [](StructurePtr s) { return sAdjDProx(qal(), std::move(s)); };
  b.add("nec_d_L", {{sI(), X()}}, {dp(sI()), X()}, RuleFamily::Structural);
  b.add("nec_d_R", {{X(), sI()}}, {X(), dp(sI())}, RuleFamily::Structural);
  b.add("adj_nec_d_L", {{sI(), X()}}, {adp(sI()), X()}, RuleFamily::Structural);
  b.add("adj_nec_d_R", {{X(), sI()}}, {X(), adp(sI())}, RuleFamily::Structural);
  b.add("fs_d_L", {{sGt(dp(Y()), dp(Z())), X()}}, {dp(sGt(Y(), Z())), X()},
        RuleFamily::Structural);
  b.add("fs_d_R", {{Y(), sGt(dp(X()), dp(Z()))}}, {Y(), dp(sGt(X(), Z()))},
        RuleFamily::Structural);
  b.add("mon_d_L", {{sSemi(dp(X()), dp(Y())), Z()}}, {dp(sSemi(X(), Y())), Z()},
        RuleFamily::Structural);
  b.add("mon_d_R", {{Z(), sSemi(dp(Y()), dp(X()))}}, {Z(), dp(sSemi(Y(), X()))},
        RuleFamily::Structural);
  b.add("adj_fs_d_L", {{sGt(adp(Y()), adp(X())), Z()}},
        {adp(sGt(Y(), X())), Z()}, RuleFamily::Structural);
  b.add("adj_fs_d_R", {{Y(), sGt(adp(X()), adp(Z()))}},
        {Y(), adp(sGt(X(), Z()))}, RuleFamily::Structural);
  b.add("adj_mon_d_L", {{sSemi(adp(X()), adp(Y())), Z()}},
        {adp(sSemi(X(), Y())), Z()}, RuleFamily::Structural);
  b.add("adj_mon_d_R", {{Z(), sSemi(adp(Y()), adp(X()))}},
        {Z(), adp(sSemi(Y(), X()))}, RuleFamily::Structural);
  b.inv("disp_d1", {dp(X()), Y()}, {X(), adp(Y())},
        RuleFamily::DisplayPostulate, true);
  b.inv("disp_d2", {X(), dp(Y())}, {adp(X()), Y()},
        RuleFamily::DisplayPostulate, true);
}

void add_prime_rules(Builder& b) {
  auto pr = [](StructurePtr s) { return sProx(qa(), std::move(s)); };
  auto dp = [](StructurePtr s) { return sDProx(qal(), std::move(s)); };
  auto adp = [](StructurePtr s) { return sAdjDProx(qal(), std::move(s)); };
  auto dq = [](StructurePtr s) { return sDProx(qbe(), std::move(s)); };
  auto phi = [] { return sPhi(qal()); };

  b.add("balance", {{X(), Y()}}, {dp(X()), dp(Y())}, RuleFamily::Structural);
  b.add("comp_L", {{dp(adp(X())), Y()}}, {sSemi(phi(), X()), Y()},
        RuleFamily::Structural);
  b.add("comp_R", {{X(), dp(adp(Y()))}}, {X(), sGt(phi(), Y())},
        RuleFamily::Structural);
  b.add("reduce_L", {{sSemi(phi(), dp(X())), Y()}}, {dp(X()), Y()},
        RuleFamily::Structural);
  b.add("reduce_R", {{Y(), sGt(phi(), dp(X()))}}, {Y(), dp(X())},
        RuleFamily::Structural);

  {
    RuleSchema& r = b.add("swap-in_L", {{dp(pr(X())), Y()}},
                          {sSemi(phi(), pr(dq(X()))), Y()},
                          RuleFamily::Structural);
    r.beta_conditions = {{"?alpha", "?a", "?beta"}};
  }
  {
    RuleSchema& r = b.add("swap-in_R", {{Y(), dp(pr(X()))}},
                          {Y(), sGt(phi(), pr(dq(X())))},
                          RuleFamily::Structural);
    r.beta_conditions = {{"?alpha", "?a", "?beta"}};
  }
  {
    RuleSchema& r = b.add("swap-out_L", {{pr(dq(X())), Y()}},
                          {dp(pr(X())), Y()}, RuleFamily::Structural);
    r.special = SpecialForm::SwapOutL;
    r.beta_conditions = {{"?alpha", "?a", "?beta"}};
  }
  {
    RuleSchema& r = b.add("swap-out_R", {{Y(), pr(dq(X()))}},
                          {Y(), dp(pr(X()))}, RuleFamily::Structural);
    r.special = SpecialForm::SwapOutR;
    r.beta_conditions = {{"?alpha", "?a", "?beta"}};
  }

  // Dynamic operational rules.
  b.add("ddia_L", {{dp(fmA()), X()}}, {sFm(fDDia(qal(), A())), X()},
        RuleFamily::OperationalLeft);
  b.add("ddia_R", {{X(), fmA()}}, {dp(X()), sFm(fDDia(qal(), A()))},
        RuleFamily::OperationalRight);
  b.add("dbox_L", {{fmA(), X()}}, {sFm(fDBox(qal(), A())), dp(X())},
        RuleFamily::OperationalLeft);
  b.add("dbox_R", {{X(), dp(fmA())}}, {X(), sFm(fDBox(qal(), A()))},
        RuleFamily::OperationalRight);
  b.add("adj_ddia_L", {{adp(fmA()), X()}}, {sFm(fAdjDDia(qal(), A())), X()},
        RuleFamily::OperationalLeft);
  b.add("adj_ddia_R", {{X(), fmA()}}, {adp(X()), sFm(fAdjDDia(qal(), A()))},
        RuleFamily::OperationalRight);
  b.add("adj_dbox_L", {{fmA(), X()}}, {sFm(fAdjDBox(qal(), A())), adp(X())},
        RuleFamily::OperationalLeft);
  b.add("adj_dbox_R", {{X(), adp(fmA())}}, {X(), sFm(fAdjDBox(qal(), A()))},
        RuleFamily::OperationalRight);
  b.add("one_L", {{phi(), X()}}, {sFm(fOne(qal())), X()},
        RuleFamily::OperationalLeft);
  b.axiom("one_R", {phi(), sFm(fOne(qal()))}, {pSucc()});
}

void add_legacy_rules(Builder& b) {
  auto pr = [](StructurePtr s) { return sProx(qa(), std::move(s)); };
  auto dp = [](StructurePtr s) { return sDProx(qal(), std::move(s)); };
  auto dq = [](StructurePtr s) { return sDProx(qbe(), std::move(s)); };
  auto pre = [] { return sFm(fPreOf(qal())); };

  {
    RuleSchema& r = b.add("old_reduce_L", {{sSemi(pre(), dp(fmA())), X()}},
                          {dp(fmA()), X()}, RuleFamily::Structural);
    (void)r;
  }
  b.add("old_reduce_R", {{X(), sGt(pre(), dp(fmA()))}}, {X(), dp(fmA())},
        RuleFamily::Structural);
  {
    RuleSchema& r = b.add("old_swap-in_L", {{sSemi(pre(), dp(pr(X()))), Y()}},
                          {sSemi(pre(), pr(dq(X()))), Y()},
                          RuleFamily::Structural);
    r.beta_conditions = {{"?alpha", "?a", "?beta"}};
    r.restricted = {fPreOf(qal())};
  }
  {
    RuleSchema& r = b.add("old_swap-in_R", {{Y(), sGt(pre(), dp(pr(X())))}},
                          {Y(), sGt(pre(), pr(dq(X())))},
                          RuleFamily::Structural);
    r.beta_conditions = {{"?alpha", "?a", "?beta"}};
    r.restricted = {fPreOf(qal())};
  }
  {
    RuleSchema& r = b.add("old_swap-out_L", {{sSemi(pre(), pr(dq(X()))), Y()}},
                          {sSemi(pre(), dp(pr(X()))), Y()},
                          RuleFamily::Structural);
    r.special = SpecialForm::LegacySwapOutL;
    r.beta_conditions = {{"?alpha", "?a", "?beta"}};
    r.restricted = {fPreOf(qal())};
  }
  {
    RuleSchema& r = b.add("old_swap-out_R", {{Y(), sGt(pre(), pr(dq(X())))}},
                          {Y(), sGt(pre(), dp(pr(X())))},
                          RuleFamily::Structural);
    r.special = SpecialForm::LegacySwapOutR;
    r.beta_conditions = {{"?alpha", "?a", "?beta"}};
    r.restricted = {fPreOf(qal())};
  }
  {
    RuleSchema& r = b.add("reverse_L", {{sSemi(pre(), dp(fmA())), X()}},
                          {sSemi(pre(), sFm(fDBox(qal(), A()))), X()},
                          RuleFamily::OperationalLeft);
    r.principal = {Path{Path::Ante, {1}}};
    r.restricted = {fPreOf(qal())};
  }
  {
    RuleSchema& r = b.add("reverse_R", {{X(), sGt(pre(), dp(fmA()))}},
                          {X(), sGt(pre(), sFm(fDDia(qal(), A())))},
                          RuleFamily::OperationalRight);
    r.principal = {Path{Path::Succ, {1}}};
    r.restricted = {fPreOf(qal())};
  }
}

}  // namespace

Calculus builtin_deak_prime(const Declarations& decls, bool classical) {
  (void)decls;
  Builder b;
  add_shared_core(b, classical);
  add_prime_rules(b);
  b.finalize();
  Calculus c;
  c.name = "deak-prime";
  c.classical = classical;
  c.rules = std::move(b.rules);
  return c;
}

Calculus builtin_deak_legacy(const Declarations& decls, bool classical) {
  (void)decls;
  Builder b;
  add_shared_core(b, classical);
  b.add("balance", {{sVar("X"), sVar("Y")}},
        {sDProx(ActionLabel{"?alpha", ""}, sVar("X")),
         sDProx(ActionLabel{"?alpha", ""}, sVar("Y"))},
        RuleFamily::Structural);
  add_legacy_rules(b);
  b.finalize();
  Calculus c;
  c.name = "deak-legacy";
  c.classical = classical;
  c.rules = std::move(b.rules);
  return c;
}

}  // namespace deak
