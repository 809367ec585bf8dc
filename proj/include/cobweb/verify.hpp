#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cobweb/seq.hpp"

namespace cobweb {

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Non-canonical checks document known ambiguities; they never fail a suite.
    bool canonical = true;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    /// Free-form diff listings and tables.
    std::string report;

    bool passed() const;
};

/// Sequences every cross-check runs on: naturals, fibonacci, gaussian:2.
std::vector<FSequence> reference_sequences();

SuiteResult verify_fnomials();
SuiteResult verify_zeta_equivalence(const FSequence& seq, std::size_t vertex_count);
SuiteResult verify_mobius(const FSequence& seq, std::size_t vertex_count, int krot_levels = 7);
SuiteResult verify_partition_suite(const FSequence& seq, int n_max = 7,
                                   std::uint64_t cap = 100'000'000);
SuiteResult verify_clue_examples(int n_max = 12);
SuiteResult verify_bell_identity(int n_max = 10);

/// Everything above on the reference sequences.
std::vector<SuiteResult> verify_all();

/// Summary table: one line per check, then the report body.
std::string format_suite(const SuiteResult& suite);

} // namespace cobweb
