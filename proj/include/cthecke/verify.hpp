#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cthecke/composition.hpp"

namespace cthecke {

// What a verification run covers: either every straight shape of size up to
// max_n, or one explicit (possibly skew) shape.
struct VerifyScope {
    int max_n = 5;
    std::optional<SkewShape> shape;
    std::uint64_t seed = 0;
};

struct CheckFailure {
    std::string where;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    long long checks = 0;
    std::vector<CheckFailure> failures;
    nlohmann::json extra;  // suite-specific records (certificates, counts, ...)
    bool passed() const { return failures.empty(); }
};

// Commutant dimensions of every class in scope. Straight classes must have
// dimension one; skew classes report their dimension and are flagged
// expected-decomposable instead of failing.
SuiteReport verify_endo(const VerifyScope& scope);

// Order-theoretic structure: class/interval isomorphism, graded lattice,
// decomposition counts, the support criterion, the annihilator construction
// and the seeded rank-inequality samples.
SuiteReport verify_poset(const VerifyScope& scope);

// The dominance drop on every labeled cover edge, with shape agreement at
// all other restriction depths.
SuiteReport verify_dominance(const VerifyScope& scope);

// Characteristic-map identities: the Schur refinement against the
// standard-Young-tableau oracle and per-shape consistency of the class
// characteristics.
SuiteReport verify_qsym(const VerifyScope& scope);

// Run the named suites ("endo", "poset", "dominance", "qsym" or "all") and
// assemble the versioned JSON report. Output is deterministic for fixed
// scope and seed; wall-clock timings are attached only on request since they
// would break byte-identity.
nlohmann::json run_verification(const VerifyScope& scope, const std::vector<std::string>& suites,
                                bool include_timings);

bool report_passed(const nlohmann::json& report);

}  // namespace cthecke
