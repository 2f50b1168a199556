#include "rsic/suites.hpp"

#include <stdexcept>

#include "rsic/algorithms.hpp"
#include "rsic/analysis.hpp"
#include "rsic/generators.hpp"
#include "rsic/optimal.hpp"

namespace rsic {

namespace {

void recordFailure(SuiteResult& result, const Instance& instance, std::string note) {
    ++result.failures;
    result.pass = false;
    if (!result.counterexample) {
        result.counterexample = instance;
        result.counterexampleNote = std::move(note);
    }
}

std::string describeFailed(const std::vector<InequalityCheck>& checks) {
    for (const auto& c : checks) {
        if (!c.holds) return c.name + " fails: " + c.lhs.str() + " " + c.relation + " " + c.rhs.str();
    }
    return {};
}

}  // namespace

std::uint64_t trialSeed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over (seed, index)
    std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index + 1;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SuiteResult runNextFitPerTimeSuite(const SuiteOptions& options) {
    const std::int64_t maxJobs = options.maxJobs > 0 ? options.maxJobs : 40;
    SuiteResult result;
    result.suite = "nextfit-2t";
    result.seed = options.seed;
    std::uint64_t timesChecked = 0;
    for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
        const std::uint64_t s = trialSeed(options.seed, trial);
        const std::int64_t n = 1 + static_cast<std::int64_t>(s % static_cast<std::uint64_t>(maxJobs));
        const Instance instance = randomEqualDuration(n, Rational(1), Rational(1, 6), Rational(6), s, 10);
        const auto nf = nextFit(instance);
        const auto checks = nextFitPerTimeChecks(nf);
        timesChecked += checks.size();
        ++result.trials;
        for (const auto& c : checks) {
            if (!c.pass) {
                recordFailure(result, instance,
                              "trial " + std::to_string(trial) + ": at t = " + c.t.str() + " NextFit has " +
                                  std::to_string(c.active) + " active servers, 2*ceil(X) = " +
                                  std::to_string(2 * c.ceilBound));
                break;
            }
        }
    }
    result.details = {{"seed", options.seed}, {"maxJobs", maxJobs}, {"eventTimesChecked", timesChecked}};
    return result;
}

SuiteResult runStrictFirstFitSuite(const SuiteOptions& options) {
    const std::int64_t maxJobs = options.maxJobs > 0 ? options.maxJobs : 8;
    SuiteResult result;
    result.suite = "strict-ff-2";
    result.seed = options.seed;
    Rational worst;
    std::uint64_t aggregateChecks = 0;
    for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
        const std::uint64_t s = trialSeed(options.seed, trial);
        const std::int64_t n = 1 + static_cast<std::int64_t>(s % static_cast<std::uint64_t>(maxJobs));
        // Duration 1 with arrivals {0, 1/2}, rescaled to duration 2 with arrivals {0, 1}.
        const Instance instance = scaleTimes(randomTwoArrival(n, Rational(1, 2), s, 12), Rational(2));
        const auto ff = firstFit(instance);
        const auto opt = bruteForceOpt(instance, static_cast<std::size_t>(maxJobs));
        const Rational ffCost = cost(ff.schedule);
        worst = max(worst, ffCost / opt.bestCost);
        ++result.trials;
        if (ffCost > opt.bestCost * 2) {
            recordFailure(result, instance,
                          "trial " + std::to_string(trial) + ": FirstFit " + ffCost.str() + " > 2 * OPT " +
                              opt.bestCost.str());
            continue;
        }
        const auto checks = strictCaseInequalities(serverTypePartition(ff), ff.schedule);
        aggregateChecks += checks.size();
        const std::string failed = describeFailed(checks);
        if (!failed.empty()) recordFailure(result, instance, "trial " + std::to_string(trial) + ": " + failed);
    }
    result.details = {{"seed", options.seed},
                      {"maxJobs", maxJobs},
                      {"worstRatio", toJson(worst)},
                      {"aggregateChecks", aggregateChecks}};
    return result;
}

SuiteResult runWeightSuite(const SuiteOptions& options) {
    const std::int64_t maxJobs = options.maxJobs > 0 ? options.maxJobs : 8;
    SuiteResult result;
    result.suite = "weights";
    result.seed = options.seed;
    Json cases = Json::array();

    auto judge = [&](const WeightReport& report, const Instance& instance, const std::string& label) {
        ++result.trials;
        std::string why;
        if (report.ffViolations.size() > report.ignoredBudget) {
            why = std::to_string(report.ffViolations.size()) + " FirstFit servers below 1+t";
        } else if (!report.optChecksPass()) {
            why = "an OPT server exceeds 168/131 (1+t) d(S)";
        } else if (!report.conservationHolds()) {
            why = "weight totals differ";
        } else if (report.epsViolations.size() > report.ignoredBudget) {
            why = std::to_string(report.epsViolations.size()) + " eps-condition violations";
        }
        if (!why.empty()) recordFailure(result, instance, label + ": " + why);
    };

    if (options.includeGgu) {
        const auto ggu = gguExtended(6, Rational(1, 2));
        const auto ff = firstFit(ggu.instance);
        const auto report = verifyWeights(ff, ggu.certificate, Rational(1, 2));
        judge(report, *ggu.instance, "ggu k=6 t=1/2");
        cases.push_back({{"case", "ggu k=6 t=1/2"},
                         {"ffViolations", report.ffViolations.size()},
                         {"optServers", report.optServerChecks.size()},
                         {"pass", report.passes()}});
    }

    const Rational ts[] = {Rational(1, 28), Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    std::uint64_t maxViolations = 0;
    for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
        const Rational& t = ts[trial % 4];
        const Instance instance = randomUniformServers(maxJobs, t, trialSeed(options.seed, trial), 12);
        const auto ff = firstFit(instance);
        const auto opt = bruteForceOpt(instance, static_cast<std::size_t>(maxJobs));
        const auto report = verifyWeights(ff, opt.bestSchedule, t);
        maxViolations = std::max<std::uint64_t>(maxViolations, report.ffViolations.size());
        judge(report, instance, "trial " + std::to_string(trial) + " t=" + t.str());
    }
    result.details = {{"seed", options.seed},
                      {"maxJobs", maxJobs},
                      {"maxFfViolations", maxViolations},
                      {"fixedCases", std::move(cases)}};
    return result;
}

SuiteResult runLayerSuite(const SuiteOptions& options) {
    SuiteResult result;
    result.suite = "layers";
    result.seed = options.seed;
    Json cases = Json::array();
    for (std::int64_t k : options.ks) {
        for (std::int64_t l : options.ls) {
            const Instance instance = longUniform(k, l);
            const auto ff = firstFit(instance);
            const auto profile = layerProfile(ff, k, l);
            auto checks = layerInequalities(profile);
            const auto ratio = utilRatioBound(ff, k, l);
            checks.push_back(checkEqual("util/FirstFit = 2/3 + 1/(k(l+2))", ratio.ratio,
                                        Rational(2, 3) + Rational(1, k * (l + 2))));
            checks.push_back(checkGreater("util/FirstFit > 2/3 - 2/(3k) - 2/(3(l+2))", ratio.ratio, ratio.bound));
            ++result.trials;
            const std::string failed = describeFailed(checks);
            if (!failed.empty()) {
                recordFailure(result, instance, "k=" + std::to_string(k) + " l=" + std::to_string(l) + ": " + failed);
            }
            cases.push_back({{"k", k}, {"l", l}, {"ratio", toJson(ratio.ratio)}, {"bound", toJson(ratio.bound)},
                             {"pass", failed.empty()}});
        }
    }
    result.details = {{"cases", std::move(cases)}};
    return result;
}

SuiteResult runRecurrenceSuite(const SuiteOptions& options) {
    SuiteResult result;
    result.suite = "recurrence";
    result.seed = options.seed;
    const auto seq = multiplierSequences(options.n);
    result.trials = options.n + 1;
    std::optional<std::size_t> firstMismatch;
    for (std::size_t i = 0; i <= options.n; ++i) {
        if (seq.gPartial[i] != seq.gRecurrence[i] || seq.gRecurrence[i] != seq.gClosed[i]) {
            ++result.failures;
            if (!firstMismatch) firstMismatch = i;
        }
    }
    result.pass = result.failures == 0;
    result.details = {{"n", options.n}, {"g_n", toJson(seq.gClosed.back())}};
    if (firstMismatch) result.details["firstMismatch"] = *firstMismatch;
    return result;
}

SuiteResult runSuite(std::string_view name, const SuiteOptions& options) {
    if (name == "nextfit-2t") return runNextFitPerTimeSuite(options);
    if (name == "strict-ff-2") return runStrictFirstFitSuite(options);
    if (name == "weights") return runWeightSuite(options);
    if (name == "layers") return runLayerSuite(options);
    if (name == "recurrence") return runRecurrenceSuite(options);
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

Json toJson(const SuiteResult& result) {
    Json j{{"suite", result.suite},
           {"pass", result.pass},
           {"seed", result.seed},
           {"trials", result.trials},
           {"failures", result.failures},
           {"details", result.details}};
    if (result.counterexample) j["counterexample"] = result.counterexampleNote;
    return j;
}

}  // namespace rsic
