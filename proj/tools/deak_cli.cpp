// Command-line front end: proof checking, cut elimination, calculus linting,
// bounded model checking, and corpus access.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "deak/corpus.hpp"
#include "deak/cutelim.hpp"
#include "deak/semantics.hpp"

using namespace deak;

namespace {

constexpr int kOk = 0;        // success
constexpr int kFailure = 1;   // check / lint / validity failure
constexpr int kUsage = 2;     // usage or parse error
constexpr int kFuel = 3;      // fuel exhausted

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string calculus = "deak-prime";
  std::string classical = "on";
};

bool make_calc(const Options& o, const Declarations& decls, Calculus& out) {
  bool cl = o.classical == "on";
  if (o.calculus == "deak-prime")
    out = builtin_deak_prime(decls, cl);
  else if (o.calculus == "deak-legacy")
    out = builtin_deak_legacy(decls, cl);
  else
    return false;
  return true;
}

int cmd_check(const std::string& decls_path, const std::string& proof_path,
              const Options& opts) {
  Declarations decls = parse_declarations(read_file(decls_path));
  ProofTreePtr proof = parse_proof(read_file(proof_path), decls);
  Calculus calc;
  if (!make_calc(opts, decls, calc)) {
    std::cerr << "unknown calculus: " << opts.calculus << "\n";
    return kUsage;
  }
  CheckReport rep = check(*proof, calc, decls);
  std::cout << rep.to_text() << "\n";
  return rep.ok ? kOk : kFailure;
}

int cmd_eliminate(const std::string& decls_path, const std::string& proof_path,
                  int fuel, const std::string& out_path, const Options& opts) {
  std::string proof_text = read_file(proof_path);
  Declarations decls = parse_declarations(read_file(decls_path));
  ProofTreePtr proof = parse_proof(proof_text, decls);
  Calculus calc;
  if (!make_calc(opts, decls, calc)) {
    std::cerr << "unknown calculus: " << opts.calculus << "\n";
    return kUsage;
  }
  CheckReport pre = check(*proof, calc, decls);
  if (!pre.ok) {
    std::cout << pre.to_text() << "\n";
    return kFailure;
  }

  std::string out_text;
  int cuts = 0, maxc = 0;
  if (is_cut_free(*proof)) {
    out_text = proof_text;  // nothing to do; preserve the input bytes
  } else {
    EliminateResult res = eliminate(*proof, calc, decls, fuel);
    if (!res.complete) {
      std::cerr << "fuel exhausted after " << fuel << " nodes\n";
      return kFuel;
    }
    cuts = res.cuts_eliminated;
    maxc = res.max_complexity;
    out_text = render(*res.proof, &decls) + "\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return kUsage;
    }
    out << out_text;
  } else {
    std::cout << out_text;
  }
  std::cout << "cuts eliminated: " << cuts << "\n"
            << "max complexity: " << maxc << "\n"
            << "output size: " << out_text.size() << "\n";
  return kOk;
}

int cmd_lint(const Options& opts) {
  Declarations decls = announcement_pool();
  Calculus calc;
  if (!make_calc(opts, decls, calc)) {
    std::cerr << "unknown calculus: " << opts.calculus << "\n";
    return kUsage;
  }
  LintReport rep = lint(calc, decls);
  std::cout << rep.to_text() << "\n";
  return rep.quasi_proper() ? kOk : kFailure;
}

FormulaPtr fNot(FormulaPtr f) { return fImp(std::move(f), fBot()); }

FormulaPtr big_or(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return fBot();
  FormulaPtr out = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) out = fOr(*it, out);
  return out;
}

// The interaction axiom schemas, instantiated with A := p and B := q.
struct AxiomInstance {
  std::string name;
  FormulaPtr lhs, rhs;
};

std::vector<AxiomInstance> axiom_instances(const Declarations& decls) {
  std::vector<AxiomInstance> out;
  FormulaPtr A = fAtom("p"), B = fAtom("q");
  for (const auto& [id, act] : decls.actions) {
    ActionLabel al = act.label();
    FormulaPtr one = fOne(al);
    out.push_back({"(1) <" + id + ">", fDDia(al, fAtom("p")),
                   fAnd(one, fAtom("p"))});
    out.push_back({"(2) <" + id + ">", fDDia(al, fNot(A)),
                   fAnd(one, fNot(fDDia(al, A)))});
    out.push_back({"(3) <" + id + ">", fDDia(al, fOr(A, B)),
                   fOr(fDDia(al, A), fDDia(al, B))});
    for (const auto& ag : decls.agents) {
      std::vector<FormulaPtr> disj;
      for (const auto& beta : decls.successors(al, ag))
        disj.push_back(fDia(ag, fDDia(beta, A)));
      out.push_back({"(4) <" + id + "><" + ag.name + ">",
                     fDDia(al, fDia(ag, A)), fAnd(one, big_or(disj))});
    }
  }
  return out;
}

int cmd_mc(const std::string& decls_path, const std::string& seq_text,
           bool axioms, int worlds, const std::vector<std::string>& atoms) {
  Declarations decls = decls_path.empty() ? announcement_pool()
                                          : parse_declarations(
                                                read_file(decls_path));
  Bounds b;
  b.max_worlds = worlds;
  if (!atoms.empty()) b.atoms = atoms;
  b.agents.clear();
  for (const auto& a : decls.agents) b.agents.push_back(a.name);
  if (b.agents.empty()) b.agents = {"a"};

  auto report = [&](const std::string& label, const FormulaPtr& ante,
                    const FormulaPtr& succ) {
    ValidityResult vr = valid_bounded(ante, succ, b, decls);
    if (vr.valid) {
      std::cout << label << " VALID (" << vr.models_checked
                << " models checked)\n";
      return true;
    }
    std::cout << label << " INVALID\n"
              << "counterexample: " << render_model(vr.counterexample)
              << " at world " << vr.counterexample.worlds[vr.world] << "\n";
    return false;
  };

  bool all_ok = true;
  if (axioms) {
    for (const auto& ax : axiom_instances(decls)) {
      all_ok &= report("axiom " + ax.name + " forward:", ax.lhs, ax.rhs);
      all_ok &= report("axiom " + ax.name + " backward:", ax.rhs, ax.lhs);
    }
  } else {
    Sequent seq = parse_sequent(seq_text, decls);
    all_ok = report("sequent:", translate_ante(seq), translate_succ(seq));
  }
  return all_ok ? kOk : kFailure;
}

int cmd_corpus(bool verify, bool list, const std::string& show_id) {
  if (verify) {
    VerifyReport rep = verify_all(CalculusKind::Prime);
    std::cout << rep.to_text();
    return rep.failures == 0 ? kOk : kFailure;
  }
  if (list) {
    for (const auto& e : corpus_list()) std::cout << e.id << "\n";
    return kOk;
  }
  const CorpusEntry* entry = nullptr;
  try {
    entry = &corpus_get(show_id);
  } catch (const CorpusError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  const Declarations& d = entry->file.decls;
  std::string decl_text = render_declarations(d);
  if (!decl_text.empty()) std::cout << decl_text;
  if (!entry->file.tags.empty()) {
    std::cout << "tags:";
    for (const auto& t : entry->file.tags) std::cout << " " << t;
    std::cout << ";\n";
  }
  for (const auto& item : entry->file.items) {
    std::cout << "expect: " << render(item.expect, &d) << "\n"
              << render(*item.proof, &d) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"display-calculus proof kernel for epistemic actions"};
  app.require_subcommand(1);

  Options opts;
  std::string decls_path, proof_path, out_path, seq_text, show_id;
  int fuel = 100000;
  if (const char* env = std::getenv("DEAK_FUEL")) fuel = std::atoi(env);
  int worlds = 3;
  std::vector<std::string> atoms;
  bool mc_axioms = false, co_verify = false, co_list = false;

  auto add_calc_flags = [&](CLI::App* c) {
    c->add_option("--calculus", opts.calculus,
                  "rule set: deak-prime or deak-legacy");
    c->add_option("--classical", opts.classical,
                  "Grishin rules: on or off")
        ->check(CLI::IsMember({"on", "off"}));
  };

  CLI::App* c_check = app.add_subcommand("check", "check a proof file");
  c_check->add_option("decls", decls_path, "declarations file")->required();
  c_check->add_option("proof", proof_path, "proof file")->required();
  add_calc_flags(c_check);

  CLI::App* c_elim =
      app.add_subcommand("eliminate", "rewrite a proof to a cut-free one");
  c_elim->add_option("decls", decls_path, "declarations file")->required();
  c_elim->add_option("proof", proof_path, "proof file")->required();
  c_elim->add_option("--fuel", fuel, "node budget");
  c_elim->add_option("--out", out_path, "output file (default stdout)");
  add_calc_flags(c_elim);

  CLI::App* c_lint =
      app.add_subcommand("lint", "audit the rule set against the conditions");
  add_calc_flags(c_lint);

  CLI::App* c_mc = app.add_subcommand("mc", "bounded validity oracle");
  c_mc->add_option("decls", decls_path,
                   "declarations file (default announcement pool)");
  auto* seq_opt = c_mc->add_option("--seq", seq_text, "sequent to check");
  auto* ax_opt =
      c_mc->add_flag("--axioms", mc_axioms, "check the interaction axioms");
  seq_opt->excludes(ax_opt);
  c_mc->add_option("--worlds", worlds, "maximum world count");
  c_mc->add_option("--atoms", atoms, "atom names")->delimiter(',');

  CLI::App* c_corpus = app.add_subcommand("corpus", "bundled derivations");
  auto* v_opt = c_corpus->add_flag("--verify", co_verify, "check every entry");
  auto* l_opt = c_corpus->add_flag("--list", co_list, "print entry ids");
  auto* s_opt = c_corpus->add_option("--show", show_id, "print one entry");
  v_opt->excludes(l_opt)->excludes(s_opt);
  l_opt->excludes(s_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c_check->parsed()) return cmd_check(decls_path, proof_path, opts);
    if (c_elim->parsed())
      return cmd_eliminate(decls_path, proof_path, fuel, out_path, opts);
    if (c_lint->parsed()) return cmd_lint(opts);
    if (c_mc->parsed()) {
      if (!mc_axioms && seq_text.empty()) {
        std::cerr << "mc requires --seq or --axioms\n";
        return kUsage;
      }
      return cmd_mc(decls_path, seq_text, mc_axioms, worlds, atoms);
    }
    if (c_corpus->parsed()) {
      if (!co_verify && !co_list && show_id.empty()) {
        std::cerr << "corpus requires --verify, --list, or --show\n";
        return kUsage;
      }
      return cmd_corpus(co_verify, co_list, show_id);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CutElimError& e) {
    std::cerr << "cut elimination error: " << e.what() << "\n";
    return kFuel;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
