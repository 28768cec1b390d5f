#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "braid3/words.hpp"

namespace braid3 {

struct CliConfig {
    std::string command; // parse | normalize | syllables | bounds | entropy |
                         // enumerate | audit | glue
    std::string word;       // braid word (s1/s2/d alphabet)
    std::string pure_word;  // free word (a1/a2 alphabet)
    std::string boundary = "tr";
    long long max_degree = 6;
    bool check = false;
    bool json = false;
    std::uint64_t seed = 20240809;
    double tolerance = 1e-12;
    double grid_step = 1.0 / 360;
    int samples = 2000;
    int m_max = 5;
    std::string out_file; // empty = stdout
};

/// Every cyclically reduced rotation class of total degree <= max_degree,
/// one canonical representative each, sorted by degree then lexicographically.
std::vector<CyclicFreeWord> enumerate_words(long long max_degree);

/// Execute one CLI command. Returns the process exit code:
/// 0 success / all checks pass, 1 a check failed, 2 usage or parse error.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

} // namespace braid3
