#ifndef DEAK_CORPUS_HPP
#define DEAK_CORPUS_HPP

// Named example derivations shipped as data files: loading, lookup, and
// batch verification against a chosen calculus.

#include "deak/parser.hpp"

namespace deak {

struct CorpusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CorpusEntry {
  std::string id;  // file stem
  CorpusFile file;
};

// Data directory: the DEAK_CORPUS_DIR environment variable if set, otherwise
// the compiled-in default.
std::string corpus_dir();

// All entries from the data directory, sorted by id. Loaded once per
// directory; parse failures raise CorpusError.
const std::vector<CorpusEntry>& corpus_list();
const CorpusEntry& corpus_get(const std::string& id);  // throws on unknown id

enum class CalculusKind { Prime, Legacy };
Calculus make_calculus(CalculusKind kind, const Declarations& decls,
                       bool classical = true);

struct VerifyReport {
  struct Row {
    std::string id;
    int item = 0;  // index within the entry's file
    bool ok = true;
    std::string reason;  // empty when ok
  };
  std::vector<Row> rows;
  int failures = 0;

  // One line per item: "<id>[<item>] OK" or "<id>[<item>] FAIL <reason>".
  std::string to_text() const;
};

// Check every item of every entry: the proof must check under the calculus,
// conclude its expected end sequent, be cut-free, and satisfy the subformula
// property.
VerifyReport verify_all(CalculusKind kind, bool classical = true);

}  // namespace deak

#endif  // DEAK_CORPUS_HPP
