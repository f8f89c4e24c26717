#include "deak/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace deak {

int KripkeModel::world_index(const std::string& name) const {
  for (size_t i = 0; i < worlds.size(); ++i)
    if (worlds[i] == name) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------------------
// Model text format

namespace {

std::vector<std::string> model_tokens(const std::string& text) {
  std::vector<std::string> out;
  size_t i = 0;
  auto issep = [](char c) {
    return c == '{' || c == '}' || c == ';' || c == ':' || c == ',';
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (issep(c)) {
      out.push_back(std::string(1, c));
      ++i;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back("->");
      i += 2;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      out.push_back(text.substr(i, j - i));
      i = j;
    } else {
      throw SemanticsError("model text: unexpected character '" +
                           std::string(1, c) + "'");
    }
  }
  return out;
}

}  // namespace

KripkeModel parse_model(const std::string& text) {
  std::vector<std::string> toks = model_tokens(text);
  size_t i = 0;
  auto peek = [&]() -> const std::string& {
    static const std::string end;
    return i < toks.size() ? toks[i] : end;
  };
  auto next = [&]() -> std::string {
    if (i >= toks.size()) throw SemanticsError("model text: unexpected end");
    return toks[i++];
  };
  auto expect = [&](const std::string& t) {
    if (next() != t) throw SemanticsError("model text: expected '" + t + "'");
  };
  expect("model");
  expect("{");
  KripkeModel m;
  auto world_of = [&](const std::string& n) {
    int w = m.world_index(n);
    if (w < 0) throw SemanticsError("model text: unknown world " + n);
    return w;
  };
  while (peek() != "}") {
    std::string section = next();
    if (section == "worlds") {
      expect(":");
      while (peek() != ";") m.worlds.push_back(next());
      expect(";");
    } else if (section == "val") {
      std::string atom = next();
      expect(":");
      auto& s = m.val[atom];
      while (peek() != ";") s.insert(world_of(next()));
      expect(";");
    } else if (section == "rel") {
      std::string agent = next();
      expect(":");
      auto& r = m.rels[agent];
      while (peek() != ";") {
        int a = world_of(next());
        expect("->");
        int b = world_of(next());
        r.insert({a, b});
        if (peek() == ",") next();
      }
      expect(";");
    } else {
      throw SemanticsError("model text: unknown section " + section);
    }
  }
  expect("}");
  return m;
}

std::string render_model(const KripkeModel& m) {
  std::ostringstream out;
  out << "model { worlds:";
  for (const auto& w : m.worlds) out << " " << w;
  out << ";";
  for (const auto& [atom, set] : m.val) {
    out << " val " << atom << ":";
    for (int w : set) out << " " << m.worlds.at(w);
    out << ";";
  }
  for (const auto& [agent, rel] : m.rels) {
    out << " rel " << agent << ":";
    bool first = true;
    for (const auto& [a, b] : rel) {
      out << (first ? " " : ", ") << m.worlds.at(a) << "->" << m.worlds.at(b);
      first = false;
    }
    out << ";";
  }
  out << " }";
  return out.str();
}

// ---------------------------------------------------------------------------
// Product update and satisfaction

int UpdatedModel::index_of(int w, const std::string& state) const {
  for (size_t i = 0; i < origin.size(); ++i)
    if (origin[i].first == w && origin[i].second == state)
      return static_cast<int>(i);
  return -1;
}

UpdatedModel update(const KripkeModel& m, const ActionStructure& act,
                    const Declarations& decls) {
  UpdatedModel up;
  for (int w = 0; w < static_cast<int>(m.worlds.size()); ++w) {
    for (const auto& j : act.states) {
      if (satisfies(m, w, act.pre.at(j), decls)) {
        up.origin.emplace_back(w, j);
        up.model.worlds.push_back(m.worlds[w] + "_" + j);
      }
    }
  }
  for (const auto& [atom, set] : m.val) {
    auto& s = up.model.val[atom];
    for (size_t i = 0; i < up.origin.size(); ++i)
      if (set.count(up.origin[i].first)) s.insert(static_cast<int>(i));
  }
  for (const auto& [agent, rel] : m.rels) {
    auto& r = up.model.rels[agent];
    auto arel = act.rels.find(agent);
    for (size_t i = 0; i < up.origin.size(); ++i) {
      for (size_t j = 0; j < up.origin.size(); ++j) {
        if (!rel.count({up.origin[i].first, up.origin[j].first})) continue;
        bool act_step = false;
        if (arel != act.rels.end())
          for (const auto& [s1, s2] : arel->second)
            if (s1 == up.origin[i].second && s2 == up.origin[j].second)
              act_step = true;
        if (act_step)
          r.insert({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  return up;
}

namespace {

// Resolve the action variant a dynamic modality refers to.
std::pair<const ActionStructure*, std::string> resolve_variant(
    const ActionLabel& l, const Declarations& decls) {
  const ActionStructure* act = decls.find_action(l.base);
  if (!act) throw SemanticsError("unknown action " + l.base);
  std::string state = l.state.empty() ? act->designated : l.state;
  if (!act->pre.count(state))
    throw SemanticsError("unknown action state " + l.base + "@" + state);
  return {act, state};
}

}  // namespace

bool satisfies(const KripkeModel& m, int w, const FormulaPtr& f,
               const Declarations& decls) {
  switch (f->kind) {
    case FK::Atom: {
      auto it = m.val.find(f->name);
      return it != m.val.end() && it->second.count(w) > 0;
    }
    case FK::Top:
      return true;
    case FK::Bot:
      return false;
    case FK::And:
      return satisfies(m, w, f->lhs, decls) && satisfies(m, w, f->rhs, decls);
    case FK::Or:
      return satisfies(m, w, f->lhs, decls) || satisfies(m, w, f->rhs, decls);
    case FK::Imp:
      return !satisfies(m, w, f->lhs, decls) ||
             satisfies(m, w, f->rhs, decls);
    case FK::Dia:
    case FK::Box: {
      auto it = m.rels.find(f->agent.name);
      bool box = f->kind == FK::Box;
      if (it == m.rels.end()) return box;
      for (const auto& [a, b] : it->second) {
        if (a != w) continue;
        bool sub = satisfies(m, b, f->lhs, decls);
        if (box && !sub) return false;
        if (!box && sub) return true;
      }
      return box;
    }
    case FK::One:
    case FK::PreOf: {
      auto [act, state] = resolve_variant(f->act, decls);
      return satisfies(m, w, act->pre.at(state), decls);
    }
    case FK::DDia:
    case FK::DBox: {
      auto [act, state] = resolve_variant(f->act, decls);
      bool pre = satisfies(m, w, act->pre.at(state), decls);
      bool box = f->kind == FK::DBox;
      if (!pre) return box;
      UpdatedModel up = update(m, *act, decls);
      int idx = up.index_of(w, state);
      if (idx < 0)
        throw SemanticsError("internal: updated world missing");
      return satisfies(up.model, idx, f->lhs, decls);
    }
    case FK::LImp:
    case FK::CoImp:
    case FK::LCoImp:
    case FK::AdjDia:
    case FK::AdjBox:
    case FK::AdjDDia:
    case FK::AdjDBox:
      throw SemanticsError("unsupported-connective");
    case FK::FVar:
      throw SemanticsError("unsupported-connective: formula metavariable");
  }
  throw SemanticsError("unsupported-connective");
}

// ---------------------------------------------------------------------------
// Bounded validity oracle

Declarations announcement_pool() {
  Declarations d;
  d.agents = {Agent{"a"}};
  auto announce = [&](const std::string& name, FormulaPtr pre) {
    ActionStructure act;
    act.base = name;
    act.states = {"k"};
    act.designated = "k";
    act.rels["a"] = {{"k", "k"}};
    act.pre["k"] = std::move(pre);
    d.actions.emplace(name, std::move(act));
  };
  announce("ann_p", fAtom("p"));
  announce("ann_q", fAtom("q"));
  announce("ann_top", fTop());
  return d;
}

ValidityResult valid_on_model(const KripkeModel& m, const FormulaPtr& ante,
                              const FormulaPtr& succ,
                              const Declarations& decls) {
  ValidityResult res;
  res.models_checked = 1;
  for (int w = 0; w < static_cast<int>(m.worlds.size()); ++w) {
    if (satisfies(m, w, ante, decls) && !satisfies(m, w, succ, decls)) {
      res.valid = false;
      res.counterexample = m;
      res.world = w;
      return res;
    }
  }
  return res;
}

ValidityResult valid_bounded(const FormulaPtr& ante, const FormulaPtr& succ,
                             const Bounds& b, const Declarations& decls) {
  ValidityResult res;
  for (int n = 1; n <= b.max_worlds; ++n) {
    KripkeModel m;
    for (int w = 0; w < n; ++w) m.worlds.push_back(std::to_string(w));
    // Canonical enumeration: (val bitmask per atom, rel bitmask per agent),
    // rightmost component incremented fastest.
    size_t k = b.atoms.size() + b.agents.size();
    std::vector<unsigned long long> masks(k, 0);
    std::vector<unsigned long long> limits(k);
    for (size_t i = 0; i < b.atoms.size(); ++i)
      limits[i] = 1ULL << n;
    for (size_t i = 0; i < b.agents.size(); ++i)
      limits[b.atoms.size() + i] = 1ULL << (n * n);
    for (;;) {
      m.val.clear();
      m.rels.clear();
      for (size_t i = 0; i < b.atoms.size(); ++i) {
        auto& s = m.val[b.atoms[i]];
        for (int w = 0; w < n; ++w)
          if (masks[i] >> w & 1) s.insert(w);
      }
      for (size_t i = 0; i < b.agents.size(); ++i) {
        auto& r = m.rels[b.agents[i]];
        unsigned long long mask = masks[b.atoms.size() + i];
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if (mask >> (x * n + y) & 1) r.insert({x, y});
      }
      ++res.models_checked;
      for (int w = 0; w < n; ++w) {
        if (satisfies(m, w, ante, decls) && !satisfies(m, w, succ, decls)) {
          res.valid = false;
          res.counterexample = m;
          res.world = w;
          return res;
        }
      }
      // Advance the mask vector lexicographically.
      size_t i = k;
      while (i-- > 0) {
        if (++masks[i] < limits[i]) break;
        masks[i] = 0;
        if (i == 0) goto next_size;
      }
    }
  next_size:;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Relation-level operators

Subset rel_dia(const Rel& r, const Subset& u) {
  Subset out;
  for (const auto& [x, y] : r)
    if (u.count(y)) out.insert(x);
  return out;
}

Subset rel_box(const Rel& r, const Subset& u, int nx) {
  Subset out;
  for (int x = 0; x < nx; ++x) {
    bool all = true;
    for (const auto& [a, y] : r)
      if (a == x && !u.count(y)) all = false;
    if (all) out.insert(x);
  }
  return out;
}

Subset rel_conv_dia(const Rel& r, const Subset& v) {
  Subset out;
  for (const auto& [x, y] : r)
    if (v.count(x)) out.insert(y);
  return out;
}

Subset rel_conv_box(const Rel& r, const Subset& v, int ny) {
  Subset out;
  for (int y = 0; y < ny; ++y) {
    bool all = true;
    for (const auto& [x, b] : r)
      if (b == y && !v.count(x)) all = false;
    if (all) out.insert(y);
  }
  return out;
}

namespace {
bool subset_of(const Subset& a, const Subset& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
}  // namespace

bool adjunction_dia(const Rel& r, const Subset& u, const Subset& v, int ny) {
  return subset_of(rel_dia(r, u), v) == subset_of(u, rel_conv_box(r, v, ny));
}

bool adjunction_conv_dia(const Rel& r, const Subset& v, const Subset& u,
                         int nx) {
  return subset_of(rel_conv_dia(r, v), u) == subset_of(v, rel_box(r, u, nx));
}

bool comp_fact(const Rel& r) {
  Subset dom;
  for (const auto& [x, y] : r) dom.insert(x);
  Rel comp;  // R ; R^-1
  for (const auto& [x1, y1] : r)
    for (const auto& [x2, y2] : r)
      if (y1 == y2) comp.insert({x1, x2});
  for (int x : dom)
    if (!comp.count({x, x})) return false;
  return true;
}

}  // namespace deak
