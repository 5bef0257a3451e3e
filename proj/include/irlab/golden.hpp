#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "irlab/report.hpp"

namespace irlab {

/// Bundled example corpus keyed by file stem.
struct Corpus {
  std::string dir;
  std::map<std::string, Problem> members;

  const Problem& at(const std::string& name) const;
};

/// Loads every *.json file of `dir`. Throws InputError naming the first bad
/// file.
Corpus load_corpus(const std::string& dir);

struct GoldenOutcome {
  bool pass = false;
  std::string detail;
};

struct GoldenCase {
  std::string id;
  std::vector<std::string> tags;
  std::string title;
  /// Wall-clock limit in seconds; 0 for none.
  double budget = 0;
  std::function<GoldenOutcome(const Corpus&, std::uint64_t seed)> run;
};

struct GoldenResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

const std::vector<GoldenCase>& golden_cases();

/// Whether `filter` (empty matches all) is a substring of the id or a tag.
bool golden_selected(const GoldenCase& c, const std::string& filter);

/// Runs the selected cases in order. A case that throws fails with the
/// message; one that exceeds its budget fails as well.
std::vector<GoldenResult> run_golden(const Corpus& corpus, std::uint64_t seed, const std::string& filter,
                                     const std::function<void(const GoldenResult&)>& on_result = {});

/// Corpus directory baked in at build time.
std::string default_corpus_dir();

}  // namespace irlab
