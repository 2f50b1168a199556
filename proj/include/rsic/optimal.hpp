#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "rsic/model.hpp"

namespace rsic {

struct LowerBounds {
    Rational utilBound;
    Rational spanBound;

    [[nodiscard]] Rational best() const { return max(utilBound, spanBound); }
};

struct OptResult {
    Schedule bestSchedule;
    Rational bestCost;
    std::uint64_t partitionsExamined = 0;  // complete feasible partitions reached
    std::uint64_t nodesVisited = 0;
    LowerBounds lowerBoundsUsed;
};

inline constexpr std::size_t kDefaultBruteForceLimit = 10;

/// Exact OPT by enumerating set partitions as restricted-growth strings.
///
/// Groups are rejected as soon as an assignment breaks capacity; a branch is cut
/// when the accumulated rental plus a per-segment ceil(active mass) deficit cannot
/// beat the incumbent. Identical jobs take non-decreasing block labels, which only
/// removes relabelings of the same partition. Among minimal partitions the returned
/// one is the lexicographically first restricted-growth string.
///
/// Throws std::invalid_argument when the instance has more than maxJobs jobs.
[[nodiscard]] OptResult bruteForceOpt(std::shared_ptr<const Instance> instance,
                                      std::size_t maxJobs = kDefaultBruteForceLimit);
[[nodiscard]] OptResult bruteForceOpt(const Instance& instance, std::size_t maxJobs = kDefaultBruteForceLimit);

/// (utilization, span); their max lower-bounds OPT.
[[nodiscard]] LowerBounds lowerBounds(const Instance& instance);

/// ceil(X(t-1, t]), a lower bound on OPT(t) when every job has duration 1.
/// Throws std::invalid_argument if some job has another duration.
[[nodiscard]] std::int64_t activeCeilBound(const Instance& instance, const Rational& t);

class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Checks that `claimed` is a complete feasible schedule of `instance` and returns
/// its cost, an upper bound on OPT. Throws CertificateError on the first violation.
[[nodiscard]] Rational verifyCertificate(const Instance& instance, const Schedule& claimed);

}  // namespace rsic
