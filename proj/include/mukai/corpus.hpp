#pragma once

// Bundled example inputs, each stored as the JSON document its file format
// would contain.

#include <string>
#include <vector>

#include "mukai/io.hpp"

namespace mukai {

struct CorpusEntry {
  std::string name;
  std::string kind;  // "fan", "spherical" or "cone"
  std::string description;
  Json document;
};

/// Entries in a fixed order.
const std::vector<CorpusEntry>& corpus();

/// nullptr when absent.
const CorpusEntry* find_corpus_entry(const std::string& name);

FanSource explicit_source(const Fan& f);

}  // namespace mukai
