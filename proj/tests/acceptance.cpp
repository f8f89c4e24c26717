// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "deak/corpus.hpp"
#include "deak/cutelim.hpp"
#include "deak/semantics.hpp"

using namespace deak;

namespace {

int g_failures = 0;

void run(int n, const std::string& title,
         const std::function<bool(std::string&)>& body,
         double time_limit_s) {
  std::string detail;
  bool ok = false;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  if (secs > time_limit_s) {
    ok = false;
    std::ostringstream ss;
    ss << detail << (detail.empty() ? "" : "; ") << "took " << secs
       << "s (limit " << time_limit_s << "s)";
    detail = ss.str();
  }
  std::printf("%s %2d %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", n,
              title.c_str(), secs, detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!ok) ++g_failures;
}

bool has_tag(const CorpusEntry& e, const std::string& tag) {
  for (const auto& t : e.file.tags)
    if (t == tag) return true;
  return false;
}

bool verdict_ok(const LintReport& rep, const std::string& cond,
                std::string& detail) {
  const Verdict* v = rep.find(cond);
  if (!v) {
    detail += cond + " missing; ";
    return false;
  }
  if (v->state == Verdict::Fail) {
    detail += cond + " FAIL; ";
    return false;
  }
  return true;
}

FormulaPtr fNot(FormulaPtr f) { return fImp(std::move(f), fBot()); }

Rel random_rel(std::mt19937& rng, int nx, int ny) {
  Rel r;
  std::bernoulli_distribution coin(0.5);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      if (coin(rng)) r.insert({x, y});
  return r;
}

Subset random_subset(std::mt19937& rng, int n) {
  Subset s;
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < n; ++i)
    if (coin(rng)) s.insert(i);
  return s;
}

KripkeModel random_model(std::mt19937& rng, const Bounds& b) {
  KripkeModel m;
  std::uniform_int_distribution<int> nw(1, b.max_worlds);
  int n = nw(rng);
  for (int i = 0; i < n; ++i) m.worlds.push_back("w" + std::to_string(i));
  std::bernoulli_distribution coin(0.5);
  for (const auto& atom : b.atoms)
    for (int i = 0; i < n; ++i)
      if (coin(rng)) m.val[atom].insert(i);
  for (const auto& ag : b.agents)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (coin(rng)) m.rels[ag].insert({i, j});
  return m;
}

}  // namespace

int main() {
  // 1. Every bundled derivation checks under the primary calculus.
  run(1, "corpus verifies",
      [](std::string& detail) {
        VerifyReport rep = verify_all(CalculusKind::Prime);
        if (rep.failures != 0) detail = rep.to_text();
        return rep.failures == 0;
      },
      5.0);

  // 2. Primary rule set: every closure condition passes; segregation is the
  // lone informational failure, witnessed by the atom axiom.
  run(2, "lint primary rule set",
      [](std::string& detail) {
        Declarations decls = announcement_pool();
        LintReport rep = lint(builtin_deak_prime(decls), decls);
        bool ok = true;
        for (const char* c : {"C1", "C2", "C3", "C4", "C5'", "C5''", "C6",
                              "C7", "C8", "C8'"})
          ok &= verdict_ok(rep, c, detail);
        const Verdict* seg = rep.find("segregation");
        if (!seg || seg->state != Verdict::Fail || seg->witnesses.empty() ||
            seg->witnesses.front().first != "atom") {
          detail += "segregation witness not atom; ";
          ok = false;
        }
        return ok && rep.quasi_proper();
      },
      1.0);

  // 3. Legacy rule set: C1 fails on the reduce rules and the swap-in rules
  // carry a restricted parameter.
  run(3, "lint legacy rule set",
      [](std::string& detail) {
        Declarations decls = announcement_pool();
        LintReport rep = lint(builtin_deak_legacy(decls), decls);
        bool ok = true;
        const Verdict* c1 = rep.find("C1");
        if (!c1 || c1->state != Verdict::Fail || c1->witnesses.empty() ||
            c1->witnesses.front().first.find("reduce") == std::string::npos) {
          detail += "C1 witness not a reduce rule; ";
          ok = false;
        }
        bool swap_in = false;
        for (const char* c : {"C6", "C7"}) {
          const Verdict* v = rep.find(c);
          if (v && v->state == Verdict::Fail)
            for (const auto& [rule, why] : v->witnesses)
              swap_in |= rule.find("swap-in") != std::string::npos &&
                         why.find("restricted") != std::string::npos;
        }
        if (!swap_in) {
          detail += "no restricted-parameter failure on swap-in; ";
          ok = false;
        }
        if (rep.quasi_proper()) {
          detail += "legacy unexpectedly quasi-proper; ";
          ok = false;
        }
        return ok;
      },
      1.0);

  // 4. Composing the two halves of every completeness pair with a cut on the
  // lemma midpoint, elimination yields a checking, cut-free proof of the same
  // end sequent with the subformula property.
  run(4, "cut elimination on completeness pairs",
      [](std::string& detail) {
        bool ok = true;
        int pairs = 0;
        for (const auto& e : corpus_list()) {
          if (!has_tag(e, "completeness")) continue;
          if (e.file.items.size() != 2) {
            detail += e.id + ": not a pair; ";
            ok = false;
            continue;
          }
          ++pairs;
          Calculus calc = builtin_deak_prime(e.file.decls);
          Sequent concl{e.file.items[0].expect.ante,
                        e.file.items[1].expect.succ};
          ProofTreePtr cut = mk_proof(
              "Cut", concl,
              {clone_proof(*e.file.items[0].proof),
               clone_proof(*e.file.items[1].proof)});
          CheckReport pre = check(*cut, calc, e.file.decls);
          if (!pre.ok) {
            detail += e.id + ": composed cut " + pre.to_text() + "; ";
            ok = false;
            continue;
          }
          EliminateResult res = eliminate(*cut, calc, e.file.decls, 100000);
          if (!res.complete) {
            detail += e.id + ": fuel exhausted; ";
            ok = false;
            continue;
          }
          CheckReport post = check(*res.proof, calc, e.file.decls);
          if (!post.ok || !is_cut_free(*res.proof) ||
              !equal(res.proof->conclusion, concl) ||
              !subformula_property(*res.proof)) {
            detail += e.id + ": bad eliminated proof (" + post.to_text() +
                      "); ";
            ok = false;
          }
        }
        if (pairs < 16) {
          detail += "only " + std::to_string(pairs) + " pairs; ";
          ok = false;
        }
        return ok;
      },
      30.0);

  // 5. The four interaction axioms are valid up to the default bounds over
  // the announcement pool, in both directions.
  run(5, "interaction axioms valid up to bound",
      [](std::string& detail) {
        Declarations decls = announcement_pool();
        Bounds b;
        FormulaPtr A = fAtom("p"), B = fAtom("q");
        bool ok = true;
        for (const auto& [id, act] : decls.actions) {
          ActionLabel al = act.label();
          FormulaPtr one = fOne(al);
          std::vector<std::pair<FormulaPtr, FormulaPtr>> axioms = {
              {fDDia(al, fAtom("p")), fAnd(one, fAtom("p"))},
              {fDDia(al, fNot(A)), fAnd(one, fNot(fDDia(al, A)))},
              {fDDia(al, fOr(A, B)), fOr(fDDia(al, A), fDDia(al, B))},
          };
          for (const auto& ag : decls.agents) {
            auto succs = decls.successors(al, ag);
            FormulaPtr disj = fBot();
            for (auto it = succs.rbegin(); it != succs.rend(); ++it)
              disj = equal(disj, fBot()) ? fDia(ag, fDDia(*it, A))
                                         : fOr(fDia(ag, fDDia(*it, A)), disj);
            axioms.push_back({fDDia(al, fDia(ag, A)), fAnd(one, disj)});
          }
          int i = 0;
          for (const auto& [lhs, rhs] : axioms) {
            ++i;
            for (int dir = 0; dir < 2; ++dir) {
              ValidityResult vr =
                  dir == 0 ? valid_bounded(lhs, rhs, b, decls)
                           : valid_bounded(rhs, lhs, b, decls);
              if (!vr.valid) {
                detail += "axiom " + std::to_string(i) + " on " + id +
                          (dir == 0 ? " fwd" : " bwd") + " invalid; ";
                ok = false;
              }
            }
          }
        }
        return ok;
      },
      60.0);

  // 6. The worked two-world model: knowledge of p fails everywhere, but after
  // announcing r it holds exactly at u, which refutes the sequent against q.
  run(6, "worked counterexample model",
      [](std::string& detail) {
        KripkeModel m = parse_model(
            "model { worlds: u v; val p: u; val q: v; val r: u; "
            "rel a: u->u, u->v, v->u, v->v; }");
        Declarations decls = announcement_pool();
        ActionStructure ann_r;
        ann_r.base = "ann_r";
        ann_r.states = {"k"};
        ann_r.designated = "k";
        ann_r.rels["a"] = {{"k", "k"}};
        ann_r.pre["k"] = fAtom("r");
        decls.actions.emplace("ann_r", ann_r);
        ActionLabel al = ann_r.label();
        FormulaPtr boxp = fBox(Agent{"a"}, fAtom("p"));
        FormulaPtr diaboxp = fDDia(al, boxp);
        bool ok = true;
        // [a]p holds nowhere.
        for (int w = 0; w < 2; ++w)
          if (satisfies(m, w, boxp, decls)) {
            detail += "[a]p holds at " + m.worlds[w] + "; ";
            ok = false;
          }
        // <ann_r>[a]p holds exactly at u.
        if (!satisfies(m, m.world_index("u"), diaboxp, decls)) {
          detail += "<ann_r>[a]p fails at u; ";
          ok = false;
        }
        if (satisfies(m, m.world_index("v"), diaboxp, decls)) {
          detail += "<ann_r>[a]p holds at v; ";
          ok = false;
        }
        ValidityResult vr = valid_on_model(m, diaboxp, fAtom("q"), decls);
        if (vr.valid || vr.world != m.world_index("u")) {
          detail += "counterexample not at u; ";
          ok = false;
        }
        return ok;
      },
      5.0);

  // 7. Display property over every corpus end-sequent: each substructure can
  // be displayed, on the side given by its polarity.
  run(7, "display property over corpus end-sequents",
      [](std::string& detail) {
        bool ok = true;
        for (const auto& e : corpus_list()) {
          Calculus calc = builtin_deak_prime(e.file.decls);
          for (const auto& item : e.file.items) {
            for (const Path& p : all_structure_paths(item.expect)) {
              try {
                DisplayResult dr =
                    display_at(item.expect, p, calc, e.file.decls);
                Polarity pol = polarity_of(item.expect, p);
                if (dr.side != pol) {
                  detail += e.id + ": side mismatch at " + to_string(p) + "; ";
                  ok = false;
                }
                const StructurePtr& shown = dr.side == Polarity::Precedent
                                                ? dr.displayed.ante
                                                : dr.displayed.succ;
                if (!equal(shown, at(item.expect, p))) {
                  detail += e.id + ": wrong structure at " + to_string(p) +
                            "; ";
                  ok = false;
                }
              } catch (const NotDisplayable&) {
                detail += e.id + ": not displayable at " + to_string(p) + "; ";
                ok = false;
              }
            }
          }
        }
        return ok;
      },
      5.0);

  // 8. The two relation-level adjunctions, exhaustively on small carriers and
  // on random larger instances.
  run(8, "relation adjunctions",
      [](std::string& detail) {
        bool ok = true;
        for (int nx = 1; nx <= 3 && ok; ++nx)
          for (int ny = 1; ny <= 3 && ok; ++ny) {
            int rbits = nx * ny;
            for (int rm = 0; rm < (1 << rbits) && ok; ++rm) {
              Rel r;
              for (int i = 0; i < rbits; ++i)
                if (rm & (1 << i)) r.insert({i / ny, i % ny});
              for (int um = 0; um < (1 << ny) && ok; ++um) {
                Subset u;
                for (int i = 0; i < ny; ++i)
                  if (um & (1 << i)) u.insert(i);
                for (int vm = 0; vm < (1 << nx) && ok; ++vm) {
                  Subset v;
                  for (int i = 0; i < nx; ++i)
                    if (vm & (1 << i)) v.insert(i);
                  if (!adjunction_dia(r, u, v, ny) ||
                      !adjunction_conv_dia(r, v, u, nx)) {
                    detail += "exhaustive failure nx=" + std::to_string(nx) +
                              " ny=" + std::to_string(ny) + "; ";
                    ok = false;
                  }
                }
              }
            }
          }
        std::mt19937 rng(20260823);
        std::uniform_int_distribution<int> dim(1, 6);
        for (int t = 0; t < 1000 && ok; ++t) {
          int nx = dim(rng), ny = dim(rng);
          Rel r = random_rel(rng, nx, ny);
          Subset u = random_subset(rng, ny), v = random_subset(rng, nx);
          if (!adjunction_dia(r, u, v, ny) ||
              !adjunction_conv_dia(r, v, u, nx)) {
            detail += "random failure at trial " + std::to_string(t) + "; ";
            ok = false;
          }
        }
        return ok;
      },
      30.0);

  // 9. Domain-diagonal inclusion into R;R^-1, exhaustively.
  run(9, "composition fact",
      [](std::string& detail) {
        for (int n = 1; n <= 4; ++n) {
          int bits = n * n;
          for (long long rm = 0; rm < (1LL << bits); ++rm) {
            Rel r;
            for (int i = 0; i < bits; ++i)
              if (rm & (1LL << i)) r.insert({i / n, i % n});
            if (!comp_fact(r)) {
              detail = "failure at n=" + std::to_string(n);
              return false;
            }
          }
        }
        return true;
      },
      30.0);

  // 10. Product update never changes atom valuations.
  run(10, "update preserves atoms",
      [](std::string& detail) {
        Declarations decls = announcement_pool();
        std::vector<const ActionStructure*> pool;
        for (const auto& [id, act] : decls.actions) pool.push_back(&act);
        Bounds b;
        std::mt19937 rng(42);
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        for (int t = 0; t < 1000; ++t) {
          KripkeModel m = random_model(rng, b);
          const ActionStructure& act = *pool[pick(rng)];
          UpdatedModel um = update(m, act, decls);
          for (size_t nw = 0; nw < um.origin.size(); ++nw) {
            int w = um.origin[nw].first;
            for (const auto& atom : b.atoms) {
              bool before = m.val.count(atom) &&
                            m.val.at(atom).count(w);
              bool after = um.model.val.count(atom) &&
                           um.model.val.at(atom).count(static_cast<int>(nw));
              if (before != after) {
                detail = "trial " + std::to_string(t) + " atom " + atom;
                return false;
              }
            }
          }
        }
        return true;
      },
      30.0);

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
