#pragma once

#include "kron/cache.hpp"

#include <string>
#include <vector>

namespace kron {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // one-line summary, includes computed values on failure
    double seconds = 0;
};

struct VerifyOptions {
    bool long_mode = false;  // run the long tails (full Example 9.1(a) sequence)
    bool progress = false;
    std::string cache_dir;   // empty disables caching
};

struct VerifyStats {
    size_t coeff_hits = 0, coeff_misses = 0;
    size_t char_hits = 0, char_misses = 0;
};

/// Runs the published-result verification suite; one result per criterion.
std::vector<CriterionResult> verify_paper(const VerifyOptions& opts,
                                          VerifyStats* stats = nullptr);

/// True when every criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace kron
