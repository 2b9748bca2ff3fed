#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "model.hpp"

namespace ric::verify {

// Deterministic 64-bit generator (splitmix64). Every draw set is a pure
// function of the seed, so any reported failure is reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent stream for draw index i under the same seed.
    static SplitMix64 split(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mixer(seed ^ (0x2545f4914f6cdd1dULL * (index + 1)));
        mixer.next();
        return mixer;
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

// Parameter draw ranges for the oracle suite:
//   J in [0, 5], omega in [0.1, 5], tau in [0.01, 20], beta in [0, 10].
ModelParams draw_params(SplitMix64& gen, bool equal_beta);
QubitState draw_state(SplitMix64& gen, bool with_coherence);

struct Failure {
    std::string check;
    std::string params;
    double residual;

    /// Machine-readable `FAIL <check> <params> <residual>` line.
    std::string line() const;
};

struct Options {
    std::uint64_t seed = 7;
    long trials = 1000;
};

struct Report {
    long checks_run = 0;
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }
};

/// Runs the full oracle suite over a seeded random draw set: one engine
/// collision against the closed-form recursion and coherence multiplier,
/// the q2 = 0 theorem (half the draws with unequal temperatures), the
/// energy-balance ledger, closed-form versus trace-definition heat and
/// work, and the tau^5 truncation scaling of both series expansions.
Report run(const Options& options);

}  // namespace ric::verify
