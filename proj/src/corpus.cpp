#include "deak/corpus.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "deak/proofs.hpp"

namespace fs = std::filesystem;

namespace deak {

#ifndef DEAK_CORPUS_DIR
#define DEAK_CORPUS_DIR ""
#endif

std::string corpus_dir() {
  if (const char* env = std::getenv("DEAK_CORPUS_DIR")) return env;
  return DEAK_CORPUS_DIR;
}

static std::vector<CorpusEntry> load_dir(const std::string& dir) {
  std::vector<CorpusEntry> out;
  if (!fs::is_directory(dir))
    throw CorpusError("corpus directory not found: " + dir);
  for (const auto& de : fs::directory_iterator(dir)) {
    if (!de.is_regular_file() || de.path().extension() != ".txt") continue;
    std::ifstream in(de.path());
    std::stringstream buf;
    buf << in.rdbuf();
    CorpusEntry e;
    e.id = de.path().stem().string();
    try {
      e.file = parse_corpus_file(buf.str());
    } catch (const ParseError& ex) {
      throw CorpusError(e.id + ": " + ex.what());
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) {
              return a.id < b.id;
            });
  return out;
}

const std::vector<CorpusEntry>& corpus_list() {
  // Keyed by directory so tests may repoint the environment variable.
  static std::map<std::string, std::vector<CorpusEntry>> cache;
  std::string dir = corpus_dir();
  auto it = cache.find(dir);
  if (it == cache.end()) it = cache.emplace(dir, load_dir(dir)).first;
  return it->second;
}

const CorpusEntry& corpus_get(const std::string& id) {
  for (const CorpusEntry& e : corpus_list())
    if (e.id == id) return e;
  throw CorpusError("unknown corpus id: " + id);
}

Calculus make_calculus(CalculusKind kind, const Declarations& decls,
                       bool classical) {
  return kind == CalculusKind::Prime ? builtin_deak_prime(decls, classical)
                                     : builtin_deak_legacy(decls, classical);
}

VerifyReport verify_all(CalculusKind kind, bool classical) {
  VerifyReport rep;
  for (const CorpusEntry& e : corpus_list()) {
    Calculus calc = make_calculus(kind, e.file.decls, classical);
    for (size_t i = 0; i < e.file.items.size(); ++i) {
      const auto& item = e.file.items[i];
      VerifyReport::Row row;
      row.id = e.id;
      row.item = static_cast<int>(i);
      ProofTreePtr proof = clone_proof(*item.proof);
      CheckReport cr = check(*proof, calc, e.file.decls);
      if (!cr.ok) {
        row.ok = false;
        row.reason = cr.to_text();
      } else if (!equal(proof->conclusion, item.expect)) {
        row.ok = false;
        row.reason = "conclusion differs from expected end sequent";
      } else if (!is_cut_free(*proof)) {
        row.ok = false;
        row.reason = "proof uses Cut";
      } else if (!subformula_property(*proof)) {
        row.ok = false;
        row.reason = "subformula property violated";
      }
      if (!row.ok) ++rep.failures;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

std::string VerifyReport::to_text() const {
  std::string out;
  for (const Row& r : rows) {
    out += r.id + "[" + std::to_string(r.item) + "] ";
    out += r.ok ? "OK" : "FAIL " + r.reason;
    out += "\n";
  }
  return out;
}

}  // namespace deak
