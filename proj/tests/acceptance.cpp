// Acceptance driver: runs every published-result criterion and prints one
// PASS/FAIL line each. Exit status is nonzero when any criterion fails.
// Pass --long to include the long sequence tails.

#include "kron/verify.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    kron::VerifyOptions opts;
    opts.cache_dir = kron::cache_dir_from_env();
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--long") == 0) opts.long_mode = true;
        if (std::strcmp(argv[i], "--progress") == 0) opts.progress = true;
    }
    auto results = kron::verify_paper(opts);
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name
                  << " [" << r.detail << "] (" << r.seconds << "s)\n";
    }
    bool ok = kron::all_passed(results);
    std::cout << (ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
    return ok ? 0 : 3;
}
