#pragma once
// Cross-checks the closed-form cover answers against the rewriting-engine
// oracle: single checks, the v-variant invariance property, and the fuzzer.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "seifcov/abelian.hpp"
#include "seifcov/covers.hpp"
#include "seifcov/rs.hpp"

namespace seifcov {

struct VerifyReport {
    SeifertInvariants input;
    Z2Hom phi;
    CoverCase cc{CoverTag::FiberCase};
    SeifertInvariants predicted;
    H1Invariants predicted_h1, oracle_h1;
    bool valid_ok = false;  // predicted symbol passes validate
    bool h1_ok = false;
    bool chi_ok = false;
    std::optional<bool> euler_ok;  // only when the doubling/halving law applies
    bool pass = false;
    std::string detail;
};

// Fibers sorted lexicographically; used only for equality of predictions.
SeifertInvariants canonical_fibers(SeifertInvariants inv);
bool same_symbol(const SeifertInvariants& a, const SeifertInvariants& b);

// Check an arbitrary prediction against the oracle (fault-injection entry).
// The predicted H1 always comes from the predicted symbol's own presentation.
VerifyReport verify_against(const SeifertInvariants& inv, const Z2Hom& phi,
                            const SeifertInvariants& predicted);

VerifyReport verify_cover(const SeifertInvariants& inv, const Z2Hom& phi);

// For each valid phi with phi(h) = 0 and m > 0 (grouped over its 2^{g'}
// v-variants, all of which remain valid): one report whose pass flag says the
// variants agreed on the predicted symbol and on the oracle H1.
std::vector<VerifyReport> killvj_check(const SeifertInvariants& inv);

struct FuzzConfig {
    uint64_t count = 500;
    uint64_t seed = 1;
    long long max_n = 4;
    long long max_abs_e = 3;
    long long max_g = 3;  // raised to the type's floor when below it
    long long max_abs_a = 9;
    long long max_abs_b = 9;
};

struct FuzzFailure {
    std::string symbol, phi, stage, expected, got;
};

struct FuzzSummary {
    uint64_t cases = 0, epimorphisms = 0;
    std::vector<FuzzFailure> failures;
    std::map<std::string, uint64_t> coverage;     // "CoverTag/type" -> count
    std::map<std::string, uint64_t> type_counts;  // type -> corpus appearances
};

// Valid by construction: coprime pairs by rejection, genus at the type floor
// or above. Deterministic given the engine state.
SeifertInvariants random_invariants(std::mt19937_64& rng, const FuzzConfig& cfg);

// Runs verify_cover on every epimorphism of every generated symbol.
FuzzSummary fuzz(const FuzzConfig& cfg);

}  // namespace seifcov
