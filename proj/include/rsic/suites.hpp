#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsic/model.hpp"
#include "rsic/report.hpp"

namespace rsic {

/// Outcome of one property suite. On failure, `counterexample` holds the first
/// failing instance; rerunning the suite with the same seed reproduces it.
struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::optional<Instance> counterexample;
    std::string counterexampleNote;
    Json details = Json::object();
};

struct SuiteOptions {
    std::uint64_t trials = 500;
    std::uint64_t seed = 7;
    std::int64_t maxJobs = 0;  // 0: suite default
    std::size_t n = 200;       // recurrence length
    std::vector<std::int64_t> ks{2, 4, 8};
    std::vector<std::int64_t> ls{2, 4, 10};
    bool includeGgu = true;
};

/// Seed of trial `index` in a suite seeded with `seed`.
[[nodiscard]] std::uint64_t trialSeed(std::uint64_t seed, std::uint64_t index);

/// NextFit per-time bound on random unit-duration instances (default <= 40 jobs).
[[nodiscard]] SuiteResult runNextFitPerTimeSuite(const SuiteOptions& options);
/// FirstFit <= 2 OPT and the C/D/E aggregate inequalities, duration 2, arrivals {0,1}
/// (default <= 8 jobs, sizes on a 1/12 grid).
[[nodiscard]] SuiteResult runStrictFirstFitSuite(const SuiteOptions& options);
/// Weight-function checks on GGU-extended (k = 6, t = 1/2) plus random uniform-server
/// instances cycling t over {1/28, 1/4, 1/2, 3/4} (default <= 8 jobs).
[[nodiscard]] SuiteResult runWeightSuite(const SuiteOptions& options);
/// Layer inequalities and the utilization identity on long-uniform instances.
[[nodiscard]] SuiteResult runLayerSuite(const SuiteOptions& options);
/// Multiplier sequences versus the closed form.
[[nodiscard]] SuiteResult runRecurrenceSuite(const SuiteOptions& options);

/// Suite by CLI name: nextfit-2t, strict-ff-2, weights, layers, recurrence.
[[nodiscard]] SuiteResult runSuite(std::string_view name, const SuiteOptions& options);

[[nodiscard]] Json toJson(const SuiteResult& result);

}  // namespace rsic
