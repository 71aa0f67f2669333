#pragma once

#include <filesystem>

#include "gralab/context.hpp"

namespace gralab {

// Parsed structure description. `canonical` is the normalized semantic JSON
// (sorted keys, defaults expanded) and `digest` its FNV-1a 64 hash, so the
// digest changes exactly when the structure changes.
struct StructureConfig {
  std::string name;
  Json canonical;
  std::string digest;

  std::shared_ptr<StructCtx> build() const;
  std::vector<std::string> submodule_names() const;
  // Closes the named generator list inside the built module.
  Substructure named_submodule(const StructCtx& ctx, const std::string& name) const;
};

StructureConfig parse_structure_config(const Json& j);
StructureConfig load_structure_config(const std::filesystem::path& path);

// Every *.json in the directory, sorted by filename.
std::vector<StructureConfig> load_corpus_dir(const std::filesystem::path& dir);

// A search family: {"structures": ["path", ...]} with paths relative to the
// family file, or {"configs": [{...}, ...]} inline.
std::vector<StructureConfig> load_family(const std::filesystem::path& path);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace gralab
