#pragma once

#include "prufer/io.hpp"

#include <cstdint>

namespace prufer {

/// Deterministic generator (splitmix64) so reports replay byte-identically
/// for a given seed, independent of the standard library's distributions.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// uniform in [lo, hi]
    int range(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(int num, int den) { return range(1, den) <= num; }
};

DomainPresentation random_hlocal_presentation(Rng& rng, int max_slots);
DomainPresentation random_shared_presentation(Rng& rng);
Cut random_cut(Rng& rng, const ValueGroup& g, int quad_d, bool integral_only);
GlobalIdeal random_ideal(Rng& rng, const DomainPresentation& d, bool integral_only);

struct CheckResult {
    std::string name;
    bool pass = true;
    long cases = 0;
    std::string detail;          // failure description
    std::string counterexample;  // shrunk presentation + ideal dump
};

struct RunReport {
    std::string suite;
    std::uint64_t seed = 0;
    long requested_cases = 0;
    int truncation = 8;
    int bound = 6;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    long cases = 200;
    int truncation = 8;
    int bound = 6;
    bool include_timings = true;
};

/// suite: local | hlocal | semistar | examples | all
RunReport run_suite(const std::string& suite, const SuiteOptions& opts);

Json report_json(const RunReport& r, bool include_timings);

}  // namespace prufer
