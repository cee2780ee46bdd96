#pragma once

#include <string>
#include <vector>

#include "centstab/json_io.hpp"

namespace centstab {

// One verification case: a concrete instance of one of the checked
// statements, with enough numbers attached to diagnose a failure.
struct VerifyCase {
  std::string id;
  std::string paper_statement;
  std::vector<long long> dimensions;
  std::vector<int> homology;
  bool pass = false;
  std::string detail;  // filled on failure or refusal
};

struct VerifyOptions {
  Field field = Field::rationals();
  int max_n = 5;
  int max_k = 3;
  int max_m = 9;
  std::string filter;  // case-id glob; empty matches everything
};

// Suites: "chain", "resolution", "restriction", "duality", "dimpoly",
// or "all".  Cases run independently (in parallel when OpenMP is on) and
// the result order is fixed by construction.  Suites that decompose
// representations refuse non-semisimple fields up front with
// SemisimplicityError.
std::vector<VerifyCase> run_suite(const std::string& suite, const VerifyOptions& opt);

bool all_passed(const std::vector<VerifyCase>& cases);

// Report document: {schema, type, suite, field, cases: [{id,
// paper_statement, dimensions, homology, pass}], pass}.
Json report_to_json(const std::string& suite, const VerifyOptions& opt,
                    const std::vector<VerifyCase>& cases);

// Simple glob with * and ? used for --filter.
bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace centstab
