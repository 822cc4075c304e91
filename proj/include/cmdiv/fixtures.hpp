#pragma once

// Tab-separated table of example curves with their expected verdicts.
// Columns: label, variant, coefficient_or_disc, conductor, n,
// expected_structure, expected_cyclotomic. Lines starting with '#' and blank
// lines are skipped.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cmdiv/classifier.hpp"

namespace cmdiv {

struct FixtureRecord {
  std::string label;
  CurveInput curve;
  std::int64_t n;
  std::string expected_structure;  // same spelling as ClassificationResult::structure_code
  bool expected_cyclotomic;

  bool expected_abelian() const { return !expected_structure.empty() && expected_structure.front() == '['; }
};

// Throws InvalidInput naming the offending line.
std::vector<FixtureRecord> parse_fixtures(std::string_view text);
std::vector<FixtureRecord> load_fixtures(const std::filesystem::path& path);

// The table in data/fixtures.tsv, compiled in.
std::string_view builtin_fixture_text();
std::vector<FixtureRecord> builtin_fixtures();

}  // namespace cmdiv
