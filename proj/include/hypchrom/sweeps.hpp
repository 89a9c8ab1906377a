#pragma once

// Seeded instance sweeps over the analysis checks. Each sweep returns one
// `ok` line per check id that passed on every instance and one `FAIL` line
// per failing instance.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hypchrom/analysis.hpp"

namespace hypchrom {

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr const char* kSeedEnvironmentVariable = "HYPCHROM_SEED";

/// kDefaultSeed unless HYPCHROM_SEED holds a decimal integer.
std::uint64_t default_seed();

class Tally {
public:
    explicit Tally(std::uint64_t seed) : seed_(seed) {}
    void add(const CheckResult& c);
    void add(const Report& r);
    /// Counted observation that never fails the sweep.
    void note(const std::string& id, bool hit);
    Report finish() const;

private:
    struct Entry {
        std::size_t instances = 0;
        std::size_t hits = 0;
        bool is_note = false;
        std::vector<CheckResult> failures;
    };
    Entry& entry(const std::string& id);

    std::uint64_t seed_;
    std::vector<std::string> order_;
    std::map<std::string, Entry> entries_;
};

/// Apex identity on every labeled graph with n <= 5 and 100 random graphs on 6 or 7 vertices.
Report sweep_apex_identity(std::uint64_t seed);
/// Negative integer roots for K_2..K_7 apexes, real-root censuses for apexes of
/// paths, cycles and complete graphs, and the root-1 multiplicity law on 100 random graphs.
Report sweep_apex_roots(std::uint64_t seed);
/// Tutte identity on every multigraph sequence with n <= 3, m <= 5 and 200 random (n <= 5, m <= 8).
Report sweep_tutte_identity(std::uint64_t seed);
/// Orientation counts against Tutte evaluations on the same multigraphs.
Report sweep_orientations(std::uint64_t seed);
/// λ² factor: the fixture plus 500 random connected hypergraphs.
Report sweep_lambda_squared(std::uint64_t seed);
/// (λ-1)² factor decisions, separation sums, the contracted family value and
/// attachment invariance.
Report sweep_lambda_minus1_squared(std::uint64_t seed);
/// Apex vertex recursion, per-edge rules, the +K1 shift and addition/identification.
Report sweep_recursions(std::uint64_t seed);
/// Coefficient gap on 100 hypergraphs with minimum edge size 3; alternation
/// and log-concavity on 100 random graphs.
Report sweep_patterns(std::uint64_t seed);
/// Deletion-contraction, interpolation, partition sums, Whitney expansion and
/// the level recursion agree on the fixtures and 200 random hypergraphs.
Report sweep_oracles(std::uint64_t seed);

}  // namespace hypchrom
