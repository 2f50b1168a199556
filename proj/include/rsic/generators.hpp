#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rsic/model.hpp"

namespace rsic {

enum class Family { gguExtended, longUniform, nfNemesis, randomTwoArrival, randomEqualDuration };

[[nodiscard]] std::string_view familyName(Family family);
/// Accepts "ggu", "long-uniform", "nf-nemesis", "random-two-arrival", "random-equal-duration".
[[nodiscard]] Family parseFamily(std::string_view name);

struct GeneratorParams {
    std::int64_t k = 6;
    std::int64_t l = 4;
    std::int64_t n = 8;
    std::int64_t nemesisN = 3;
    Rational t{1, 2};
    std::optional<Rational> delta;
    std::uint64_t seed = 1;
    std::int64_t sizeGrid = 12;
    Rational duration{1};
    Rational startGrid{1, 4};
    Rational horizon{8};
};

struct GeneratorSpec {
    Family family = Family::gguExtended;
    GeneratorParams params;
};

struct GeneratedInstance {
    Instance instance;
    std::optional<Schedule> certificate;
};

/// Dispatch on spec.family.
[[nodiscard]] GeneratedInstance generate(const GeneratorSpec& spec);

/// Index layout of a GGU-extended instance, in emission order.
struct GguLayout {
    std::size_t k = 0;
    [[nodiscard]] std::size_t phase1Begin() const { return 0; }
    [[nodiscard]] std::size_t phase2Begin() const { return 10 * k; }
    [[nodiscard]] std::size_t phase3Begin() const { return 20 * k; }
    [[nodiscard]] std::size_t lateBegin() const { return 30 * k; }
    [[nodiscard]] std::size_t total() const { return 47 * k; }
    /// Job j (0-based, 0..9) of group i (0-based) in phase 1 or 2.
    [[nodiscard]] std::size_t phase1(std::size_t group, std::size_t job) const { return 10 * group + job; }
    [[nodiscard]] std::size_t phase2(std::size_t group, std::size_t job) const { return 10 * (k + group) + job; }
};

struct GguInstance {
    std::shared_ptr<const Instance> instance;
    Schedule certificate;
    GguLayout layout;
    Rational delta;
};

/// 18^-k / 1000.
[[nodiscard]] Rational defaultGguDelta(std::int64_t k);

/// Garey-Graham-Ullman nemesis at time 0 (three phases, sizes around 1/6, 1/3, 1/2)
/// followed at time t by 2k jobs of 1/12, 5k of 1/6 and 10k of 1/4; all durations 1.
/// Also returns the cross-paired packing of cost 27k/2 + 1.
/// Requires k > 0 a multiple of 6, 0 < t < 1, 0 < delta < 18^-k / 100.
[[nodiscard]] GguInstance gguExtended(std::int64_t k, const Rational& t, std::optional<Rational> delta = {});

/// Duration-2 jobs: k of size 2/3 at time 0, k of 1/3 at odd times, k of 1/3 + 1/(k l)
/// at even times up to l. Requires k >= 2 and l even and positive.
[[nodiscard]] Instance longUniform(std::int64_t k, std::int64_t l);

/// 2N pairs (1/2, 1/(2N)) at time 0, duration 1: NextFit needs 2N servers, OPT N+1.
[[nodiscard]] Instance nfNemesis(std::int64_t n);

/// n duration-1 jobs starting at 0 or t, sizes uniform on {1/D, ..., D/D}; sorted by start.
[[nodiscard]] Instance randomTwoArrival(std::int64_t n, const Rational& t, std::uint64_t seed, std::int64_t sizeGrid);

/// n jobs of the given duration, starts uniform on the grid {0, g, 2g, ...} below horizon,
/// sizes on {1/D, ..., D/D}; sorted by start.
[[nodiscard]] Instance randomEqualDuration(std::int64_t n, const Rational& duration, const Rational& startGrid,
                                           const Rational& horizon, std::uint64_t seed, std::int64_t sizeGrid);

/// Like randomTwoArrival with 2 <= size <= maxJobs, drawn until every FirstFit server
/// spans [0, 1+t]. Throws std::runtime_error if no such instance appears within the attempt cap.
[[nodiscard]] Instance randomUniformServers(std::int64_t maxJobs, const Rational& t, std::uint64_t seed,
                                            std::int64_t sizeGrid);

}  // namespace rsic
