#pragma once

#include "gralab/classify.hpp"

namespace gralab {

// Per (theorem, structure) verification record. `instances_checked` counts
// the quantified tuples examined, `hypothesis_passing` those whose hypothesis
// held (the conclusion was then evaluated), `undetermined` those whose
// hypothesis could not be settled by a bounded check. A violation means the
// hypothesis held and the conclusion failed.
struct TheoremReport {
  std::string theorem_id;
  std::string structure;
  uint64_t instances_checked = 0;
  uint64_t hypothesis_passing = 0;
  uint64_t undetermined = 0;
  std::vector<Json> violations;
  std::vector<Json> undetermined_cases;
  Json notes;

  Json to_json() const;
};

const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);

struct VerifyOptions {
  uint32_t u_cover_bound = 3;
  // Complete the u-module check exhaustively when the lattice is at most this
  // large (the effective bound is then the lattice size).
  uint32_t u_exhaustive_limit = 16;
  uint64_t product_cap = 4096;  // build M x M instances up to this size
};

TheoremReport verify_theorem(StructCtx& ctx, const std::string& theorem_id,
                             const VerifyOptions& opt = {});

struct SuiteResult {
  // One report per (structure, theorem), structures in corpus order.
  std::vector<TheoremReport> reports;
  uint64_t total_violations() const;
  // theorem id -> total hypothesis-passing instances across the corpus
  std::map<std::string, uint64_t> adequacy() const;
};

struct CorpusEntry {
  std::string name;
  std::shared_ptr<StructCtx> ctx;
};

SuiteResult run_corpus(std::vector<CorpusEntry>& corpus,
                       const std::vector<std::string>& suite,
                       const VerifyOptions& opt = {}, uint32_t workers = 1);

struct SearchResult {
  bool found = false;       // else: bounds exhausted, existence undecided
  Json instance;            // structure name + submodule generators
  uint64_t examined = 0;
};

// Lexicographically first (family order, lattice order) submodule where
// `holds` holds and `fails` fails.
SearchResult search_separating_example(std::vector<CorpusEntry>& family, Pred holds,
                                       Pred fails);

}  // namespace gralab
