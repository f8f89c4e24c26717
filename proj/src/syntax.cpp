#include "deak/syntax.hpp"

#include <algorithm>

namespace deak {

// ---------------------------------------------------------------------------
// Declarations

bool Declarations::has_agent(const std::string& n) const {
  return std::any_of(agents.begin(), agents.end(),
                     [&](const Agent& a) { return a.name == n; });
}

const ActionStructure* Declarations::find_action(const std::string& n) const {
  auto it = actions.find(n);
  return it == actions.end() ? nullptr : &it->second;
}

FormulaPtr Declarations::pre_of(const ActionLabel& l) const {
  const ActionStructure* a = find_action(l.base);
  if (!a) throw std::runtime_error("unknown action: " + l.base);
  auto it = a->pre.find(l.state);
  if (it == a->pre.end())
    throw std::runtime_error("unknown action state: " + l.base + "@" + l.state);
  return it->second;
}

std::vector<ActionLabel> Declarations::successors(const ActionLabel& alpha,
                                                  const Agent& a) const {
  const ActionStructure* as = find_action(alpha.base);
  if (!as) throw std::runtime_error("unknown action: " + alpha.base);
  std::vector<std::string> states;
  auto it = as->rels.find(a.name);
  if (it != as->rels.end())
    for (const auto& [i, j] : it->second)
      if (i == alpha.state) states.push_back(j);
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  std::vector<ActionLabel> out;
  for (const auto& s : states) out.push_back({alpha.base, s});
  return out;
}

std::vector<ActionLabel> Declarations::all_variants() const {
  std::vector<ActionLabel> out;
  for (const auto& [name, as] : actions)
    for (const auto& s : as.states) out.push_back({name, s});
  return out;
}

bool is_metavar_name(const std::string& n) {
  return !n.empty() && n[0] == '?';
}

// ---------------------------------------------------------------------------
// Formula constructors

static FormulaPtr mk(FK k, std::string name, Agent ag, ActionLabel act,
                     FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  auto* m = const_cast<Formula*>(f.get());
  m->kind = k;
  m->name = std::move(name);
  m->agent = std::move(ag);
  m->act = std::move(act);
  m->lhs = std::move(l);
  m->rhs = std::move(r);
  return f;
}

FormulaPtr fAtom(std::string n) { return mk(FK::Atom, std::move(n), {}, {}, nullptr, nullptr); }
FormulaPtr fTop() { return mk(FK::Top, {}, {}, {}, nullptr, nullptr); }
FormulaPtr fBot() { return mk(FK::Bot, {}, {}, {}, nullptr, nullptr); }
FormulaPtr fOne(ActionLabel l) { return mk(FK::One, {}, {}, std::move(l), nullptr, nullptr); }
FormulaPtr fAnd(FormulaPtr a, FormulaPtr b) { return mk(FK::And, {}, {}, {}, std::move(a), std::move(b)); }
FormulaPtr fOr(FormulaPtr a, FormulaPtr b) { return mk(FK::Or, {}, {}, {}, std::move(a), std::move(b)); }
FormulaPtr fImp(FormulaPtr a, FormulaPtr b) { return mk(FK::Imp, {}, {}, {}, std::move(a), std::move(b)); }
FormulaPtr fLImp(FormulaPtr a, FormulaPtr b) { return mk(FK::LImp, {}, {}, {}, std::move(a), std::move(b)); }
FormulaPtr fCoImp(FormulaPtr a, FormulaPtr b) { return mk(FK::CoImp, {}, {}, {}, std::move(a), std::move(b)); }
FormulaPtr fLCoImp(FormulaPtr a, FormulaPtr b) { return mk(FK::LCoImp, {}, {}, {}, std::move(a), std::move(b)); }
FormulaPtr fDia(Agent a, FormulaPtr f) { return mk(FK::Dia, {}, std::move(a), {}, std::move(f), nullptr); }
FormulaPtr fBox(Agent a, FormulaPtr f) { return mk(FK::Box, {}, std::move(a), {}, std::move(f), nullptr); }
FormulaPtr fAdjDia(Agent a, FormulaPtr f) { return mk(FK::AdjDia, {}, std::move(a), {}, std::move(f), nullptr); }
FormulaPtr fAdjBox(Agent a, FormulaPtr f) { return mk(FK::AdjBox, {}, std::move(a), {}, std::move(f), nullptr); }
FormulaPtr fDDia(ActionLabel l, FormulaPtr f) { return mk(FK::DDia, {}, {}, std::move(l), std::move(f), nullptr); }
FormulaPtr fDBox(ActionLabel l, FormulaPtr f) { return mk(FK::DBox, {}, {}, std::move(l), std::move(f), nullptr); }
FormulaPtr fAdjDDia(ActionLabel l, FormulaPtr f) { return mk(FK::AdjDDia, {}, {}, std::move(l), std::move(f), nullptr); }
FormulaPtr fAdjDBox(ActionLabel l, FormulaPtr f) { return mk(FK::AdjDBox, {}, {}, std::move(l), std::move(f), nullptr); }
FormulaPtr fVar(std::string n) { return mk(FK::FVar, std::move(n), {}, {}, nullptr, nullptr); }
FormulaPtr fPreOf(ActionLabel l) { return mk(FK::PreOf, {}, {}, std::move(l), nullptr, nullptr); }

bool is_unary(FK k) {
  switch (k) {
    case FK::Dia: case FK::Box: case FK::AdjDia: case FK::AdjBox:
    case FK::DDia: case FK::DBox: case FK::AdjDDia: case FK::AdjDBox:
      return true;
    default:
      return false;
  }
}

bool is_binary(FK k) {
  switch (k) {
    case FK::And: case FK::Or: case FK::Imp: case FK::LImp:
    case FK::CoImp: case FK::LCoImp:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Comparison

template <typename T>
static int cmp3(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

int cmp(const Formula& a, const Formula& b) {
  if (int c = cmp3(static_cast<int>(a.kind), static_cast<int>(b.kind))) return c;
  if (int c = cmp3(a.name, b.name)) return c;
  if (int c = cmp3(a.agent, b.agent)) return c;
  if (int c = cmp3(a.act, b.act)) return c;
  if (a.lhs || b.lhs) {
    if (!a.lhs) return -1;
    if (!b.lhs) return 1;
    if (int c = cmp(*a.lhs, *b.lhs)) return c;
  }
  if (a.rhs || b.rhs) {
    if (!a.rhs) return -1;
    if (!b.rhs) return 1;
    if (int c = cmp(*a.rhs, *b.rhs)) return c;
  }
  return 0;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return cmp(*a, *b) == 0;
}

bool FormulaLess::operator()(const FormulaPtr& a, const FormulaPtr& b) const {
  return cmp(*a, *b) < 0;
}

int size_of(const FormulaPtr& f) {
  if (!f) return 0;
  return 1 + size_of(f->lhs) + size_of(f->rhs);
}

static void collect_subformulas(const FormulaPtr& f, FormulaSet& out) {
  if (!f) return;
  if (!out.insert(f).second) return;
  collect_subformulas(f->lhs, out);
  collect_subformulas(f->rhs, out);
}

FormulaSet subformulas(const FormulaPtr& f) {
  FormulaSet out;
  collect_subformulas(f, out);
  return out;
}

FormulaPtr subst_atom(const FormulaPtr& f, const std::string& name,
                      const FormulaPtr& repl) {
  if (!f) return f;
  if (f->kind == FK::Atom && f->name == name) return repl;
  if (!f->lhs && !f->rhs) return f;
  return mk(f->kind, f->name, f->agent, f->act,
            subst_atom(f->lhs, name, repl), subst_atom(f->rhs, name, repl));
}

// ---------------------------------------------------------------------------
// Structure constructors

static StructurePtr smk(SK k, FormulaPtr fm, Agent ag, ActionLabel act,
                        std::string name, StructurePtr l, StructurePtr r) {
  auto s = std::make_shared<Structure>();
  auto* m = const_cast<Structure*>(s.get());
  m->kind = k;
  m->fm = std::move(fm);
  m->agent = std::move(ag);
  m->act = std::move(act);
  m->name = std::move(name);
  m->lhs = std::move(l);
  m->rhs = std::move(r);
  return s;
}

StructurePtr sFm(FormulaPtr f) { return smk(SK::Fm, std::move(f), {}, {}, {}, nullptr, nullptr); }
StructurePtr sI() { return smk(SK::I, nullptr, {}, {}, {}, nullptr, nullptr); }
StructurePtr sSemi(StructurePtr a, StructurePtr b) { return smk(SK::Semi, nullptr, {}, {}, {}, std::move(a), std::move(b)); }
StructurePtr sGt(StructurePtr a, StructurePtr b) { return smk(SK::Gt, nullptr, {}, {}, {}, std::move(a), std::move(b)); }
StructurePtr sLt(StructurePtr a, StructurePtr b) { return smk(SK::Lt, nullptr, {}, {}, {}, std::move(a), std::move(b)); }
StructurePtr sProx(Agent a, StructurePtr s) { return smk(SK::Prox, nullptr, std::move(a), {}, {}, std::move(s), nullptr); }
StructurePtr sAdjProx(Agent a, StructurePtr s) { return smk(SK::AdjProx, nullptr, std::move(a), {}, {}, std::move(s), nullptr); }
StructurePtr sDProx(ActionLabel l, StructurePtr s) { return smk(SK::DProx, nullptr, {}, std::move(l), {}, std::move(s), nullptr); }
StructurePtr sAdjDProx(ActionLabel l, StructurePtr s) { return smk(SK::AdjDProx, nullptr, {}, std::move(l), {}, std::move(s), nullptr); }
StructurePtr sPhi(ActionLabel l) { return smk(SK::Phi, nullptr, {}, std::move(l), {}, nullptr, nullptr); }
StructurePtr sVar(std::string n) { return smk(SK::SVar, nullptr, {}, {}, std::move(n), nullptr, nullptr); }

int cmp(const Structure& a, const Structure& b) {
  if (int c = cmp3(static_cast<int>(a.kind), static_cast<int>(b.kind))) return c;
  if (int c = cmp3(a.name, b.name)) return c;
  if (int c = cmp3(a.agent, b.agent)) return c;
  if (int c = cmp3(a.act, b.act)) return c;
  if (a.fm || b.fm) {
    if (!a.fm) return -1;
    if (!b.fm) return 1;
    if (int c = cmp(*a.fm, *b.fm)) return c;
  }
  if (a.lhs || b.lhs) {
    if (!a.lhs) return -1;
    if (!b.lhs) return 1;
    if (int c = cmp(*a.lhs, *b.lhs)) return c;
  }
  if (a.rhs || b.rhs) {
    if (!a.rhs) return -1;
    if (!b.rhs) return 1;
    if (int c = cmp(*a.rhs, *b.rhs)) return c;
  }
  return 0;
}

bool equal(const StructurePtr& a, const StructurePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return cmp(*a, *b) == 0;
}

int size_of(const StructurePtr& s) {
  if (!s) return 0;
  return 1 + size_of(s->lhs) + size_of(s->rhs) + (s->fm ? size_of(s->fm) : 0);
}

int cmp(const Sequent& a, const Sequent& b) {
  if (int c = cmp(*a.ante, *b.ante)) return c;
  return cmp(*a.succ, *b.succ);
}

bool equal(const Sequent& a, const Sequent& b) { return cmp(a, b) == 0; }

// ---------------------------------------------------------------------------
// Paths and polarity

Path Path::child(int i) const {
  Path p = *this;
  p.steps.push_back(i);
  return p;
}

std::string to_string(const Path& p) {
  std::string out = p.side == Path::Ante ? "ante" : "succ";
  for (int s : p.steps) out += "." + std::to_string(s);
  return out;
}

StructurePtr at(const StructurePtr& s, const std::vector<int>& steps,
                size_t from) {
  StructurePtr cur = s;
  for (size_t i = from; i < steps.size(); ++i) {
    if (!cur) throw InvalidPath("path runs past a leaf");
    switch (steps[i]) {
      case 0: cur = cur->lhs; break;
      case 1: cur = cur->rhs; break;
      default: throw InvalidPath("bad child selector");
    }
  }
  if (!cur) throw InvalidPath("path runs past a leaf");
  return cur;
}

StructurePtr at(const Sequent& seq, const Path& p) {
  return at(p.side == Path::Ante ? seq.ante : seq.succ, p.steps);
}

Polarity polarity_of(const Sequent& seq, const Path& p) {
  Polarity pol =
      p.side == Path::Ante ? Polarity::Precedent : Polarity::Succedent;
  StructurePtr cur = p.side == Path::Ante ? seq.ante : seq.succ;
  for (int step : p.steps) {
    if (!cur) throw InvalidPath("path runs past a leaf");
    bool flip = (cur->kind == SK::Gt && step == 0) ||
                (cur->kind == SK::Lt && step == 1);
    switch (step) {
      case 0: cur = cur->lhs; break;
      case 1: cur = cur->rhs; break;
      default: throw InvalidPath("bad child selector");
    }
    if (!cur) throw InvalidPath("path runs past a leaf");
    if (flip)
      pol = pol == Polarity::Precedent ? Polarity::Succedent
                                       : Polarity::Precedent;
  }
  return pol;
}

static void collect_paths(const StructurePtr& s, Path p, bool leaves_only,
                          std::vector<Path>& out) {
  if (!s) return;
  if (!leaves_only || s->kind == SK::Fm) out.push_back(p);
  if (s->lhs) collect_paths(s->lhs, p.child(0), leaves_only, out);
  if (s->rhs) collect_paths(s->rhs, p.child(1), leaves_only, out);
}

std::vector<Path> all_structure_paths(const Sequent& seq) {
  std::vector<Path> out;
  collect_paths(seq.ante, Path{Path::Ante, {}}, false, out);
  collect_paths(seq.succ, Path{Path::Succ, {}}, false, out);
  return out;
}

std::vector<Path> formula_leaf_paths(const Sequent& seq) {
  std::vector<Path> out;
  collect_paths(seq.ante, Path{Path::Ante, {}}, true, out);
  collect_paths(seq.succ, Path{Path::Succ, {}}, true, out);
  return out;
}

// ---------------------------------------------------------------------------
// Translation

static Polarity flip(Polarity p) {
  return p == Polarity::Precedent ? Polarity::Succedent : Polarity::Precedent;
}

FormulaPtr translate(const StructurePtr& s, Polarity pol) {
  bool prec = pol == Polarity::Precedent;
  switch (s->kind) {
    case SK::Fm:
      return s->fm;
    case SK::I:
      return prec ? fTop() : fBot();
    case SK::Semi:
      return prec ? fAnd(translate(s->lhs, pol), translate(s->rhs, pol))
                  : fOr(translate(s->lhs, pol), translate(s->rhs, pol));
    case SK::Gt:
      // Left child flips.
      return prec ? fCoImp(translate(s->lhs, flip(pol)), translate(s->rhs, pol))
                  : fImp(translate(s->lhs, flip(pol)), translate(s->rhs, pol));
    case SK::Lt:
      // Right child flips.
      return prec
                 ? fLCoImp(translate(s->lhs, pol), translate(s->rhs, flip(pol)))
                 : fLImp(translate(s->lhs, pol), translate(s->rhs, flip(pol)));
    case SK::Prox:
      return prec ? fDia(s->agent, translate(s->lhs, pol))
                  : fBox(s->agent, translate(s->lhs, pol));
    case SK::AdjProx:
      return prec ? fAdjDia(s->agent, translate(s->lhs, pol))
                  : fAdjBox(s->agent, translate(s->lhs, pol));
    case SK::DProx:
      return prec ? fDDia(s->act, translate(s->lhs, pol))
                  : fDBox(s->act, translate(s->lhs, pol));
    case SK::AdjDProx:
      return prec ? fAdjDDia(s->act, translate(s->lhs, pol))
                  : fAdjDBox(s->act, translate(s->lhs, pol));
    case SK::Phi:
      if (!prec) throw PhiInSuccedent("Phi has no succedent reading");
      return fOne(s->act);
    case SK::SVar:
      throw std::runtime_error("cannot translate a structure metavariable");
  }
  throw std::logic_error("unreachable");
}

FormulaPtr translate_ante(const Sequent& seq) {
  return translate(seq.ante, Polarity::Precedent);
}

FormulaPtr translate_succ(const Sequent& seq) {
  return translate(seq.succ, Polarity::Succedent);
}

// ---------------------------------------------------------------------------
// Substitution

static StructurePtr subst_rec(const StructurePtr& s,
                              const std::set<std::vector<int>>& occs,
                              const StructurePtr& repl, std::vector<int>& here,
                              const FormulaPtr*& seen) {
  if (occs.count(here)) {
    if (s->kind != SK::Fm)
      throw NonFormulaTarget("substitution target is not a formula leaf");
    if (seen && !equal(*seen, s->fm))
      throw NonFormulaTarget("targeted leaves hold different formulas");
    seen = &s->fm;
    return repl;
  }
  StructurePtr nl = s->lhs, nr = s->rhs;
  if (s->lhs) {
    here.push_back(0);
    nl = subst_rec(s->lhs, occs, repl, here, seen);
    here.pop_back();
  }
  if (s->rhs) {
    here.push_back(1);
    nr = subst_rec(s->rhs, occs, repl, here, seen);
    here.pop_back();
  }
  if (nl == s->lhs && nr == s->rhs) return s;
  return smk(s->kind, s->fm, s->agent, s->act, s->name, nl, nr);
}

StructurePtr substitute(const StructurePtr& s,
                        const std::set<std::vector<int>>& occs,
                        const StructurePtr& repl) {
  // Validate the paths first so invalid ones fail even when unordered.
  for (const auto& o : occs) at(s, o);
  std::vector<int> here;
  const FormulaPtr* seen = nullptr;
  return subst_rec(s, occs, repl, here, seen);
}

Sequent substitute(const Sequent& seq, const std::set<Path>& occs,
                   const StructurePtr& repl) {
  std::set<std::vector<int>> ante_occs, succ_occs;
  for (const auto& p : occs)
    (p.side == Path::Ante ? ante_occs : succ_occs).insert(p.steps);
  Sequent out = seq;
  if (!ante_occs.empty()) out.ante = substitute(seq.ante, ante_occs, repl);
  if (!succ_occs.empty()) out.succ = substitute(seq.succ, succ_occs, repl);
  return out;
}

}  // namespace deak
