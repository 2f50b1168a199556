#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsic/algorithms.hpp"
#include "rsic/model.hpp"

namespace rsic {

/// A checked relation between two exact values.
struct InequalityCheck {
    std::string name;
    Rational lhs;
    std::string relation;  // ">", "<", "<=", "="
    Rational rhs;
    bool holds = false;
};

[[nodiscard]] InequalityCheck checkGreater(std::string name, Rational lhs, Rational rhs);
[[nodiscard]] InequalityCheck checkLess(std::string name, Rational lhs, Rational rhs);
[[nodiscard]] InequalityCheck checkAtMost(std::string name, Rational lhs, Rational rhs);
[[nodiscard]] InequalityCheck checkEqual(std::string name, Rational lhs, Rational rhs);

// ---------------------------------------------------------------------------
// Weight functions for two arrival times {0, t}, duration-1 jobs.

/// Weight of a time-0 item: (156 + 156t)/131 * x, plus (12 + 12t)/131 when x > 1/2.
/// Domain: 0 < x <= 1 and 1/28 <= t < 1; throws std::domain_error outside it.
[[nodiscard]] Rational weightW1(const Rational& x, const Rational& t);
/// Weight of a time-t item: 168/131 * (1 + t) * x. Same domain as weightW1.
[[nodiscard]] Rational weightW2(const Rational& x, const Rational& t);
/// 168/131 * (1 + t).
[[nodiscard]] Rational weightRatio(const Rational& t);

enum class ServerType { I, IIa, IIb, IIc, IIIa, IIIb, IIIc, belowThreshold };
[[nodiscard]] std::string_view serverTypeName(ServerType type);

struct ServerTypeInfo {
    std::size_t serverId = 0;
    Rational x0;      // load at time 0
    Rational xTotal;  // total load X(B)
    std::size_t itemsAtZero = 0;
    ServerType type = ServerType::belowThreshold;
    std::optional<Rational> eps1;
    std::optional<Rational> eps2;
};

/// Row of the server-type table matching (x(B,0), X(B), items at time 0).
[[nodiscard]] ServerType classifyLoads(const Rational& x0, const Rational& xTotal, std::size_t itemsAtZero);
/// Fills type and eps1/eps2 from x0, xTotal and itemsAtZero.
[[nodiscard]] ServerTypeInfo describeServer(std::size_t serverId, const Rational& x0, const Rational& xTotal,
                                            std::size_t itemsAtZero);

/// Classifies every FirstFit server. Requires duration-1 jobs arriving at 0 or t
/// and every server rented exactly [0, 1+t]; throws std::invalid_argument otherwise.
[[nodiscard]] std::vector<ServerTypeInfo> classifyServers(const AlgorithmTrace& ff, const Rational& t);

/// Ids of Type II(b), II(c) or III(c) servers breaking eps1 > eps2, eps1 <= 1/6 or eps2 <= 1/12.
[[nodiscard]] std::vector<std::size_t> epsViolations(const std::vector<ServerTypeInfo>& servers);

/// Servers the upper-bound argument may discard: 2 + 3 + 2 across its three pruning steps.
inline constexpr std::size_t kIgnoredBudget = 7;

struct ServerWeight {
    std::size_t serverId = 0;
    Rational w1Sum;
    Rational w2Sum;
    [[nodiscard]] Rational total() const { return w1Sum + w2Sum; }
};

struct OptServerCheck {
    std::size_t serverId = 0;
    Rational weight;
    Rational bound;
    bool pass = false;
};

struct WeightReport {
    Rational t;
    std::vector<ServerWeight> perServerWeight;
    std::vector<std::size_t> ffViolations;  // FirstFit servers with weight < 1 + t
    std::vector<OptServerCheck> optServerChecks;
    std::vector<ServerTypeInfo> serverTypes;
    std::vector<std::size_t> epsViolations;
    std::size_t ignoredBudget = kIgnoredBudget;
    Rational ffTotal;
    Rational optTotal;
    Rational itemTotal;

    [[nodiscard]] bool conservationHolds() const { return ffTotal == itemTotal && optTotal == itemTotal; }
    [[nodiscard]] bool optChecksPass() const;
    [[nodiscard]] bool passes() const;
};

/// Weight bookkeeping on a uniform FirstFit schedule against any feasible schedule
/// of the same instance (true OPT or a certificate).
[[nodiscard]] WeightReport verifyWeights(const AlgorithmTrace& ff, const Schedule& optSchedule, const Rational& t);

// ---------------------------------------------------------------------------
// Long-running uniform servers: duration-2 jobs at integer times 0..l.

struct LayerProfile {
    std::vector<std::size_t> serverIds;
    std::vector<Rational> layerMass;  // x(L_0) .. x(L_l)
};

/// Mass per arrival time on the FirstFit servers rented exactly [0, l+2].
/// Requires duration-2 jobs at integer times in [0, l], k >= 2, and exactly k such servers.
[[nodiscard]] LayerProfile layerProfile(const AlgorithmTrace& ff, std::int64_t k, std::int64_t l);

/// x(L_0) > k/2 and x(L_i) + x(L_{i-1})/2 > (k-1)/2 for i = 1..l.
[[nodiscard]] std::vector<InequalityCheck> layerInequalities(const LayerProfile& profile);

struct MultiplierSequences {
    std::vector<Rational> f;            // f_0 = 1, f_i = 1 - f_{i-1}/2
    std::vector<Rational> gPartial;     // prefix sums of f
    std::vector<Rational> gRecurrence;  // g_0 = 1, g_1 = 3/2, g_j = 1 + g_{j-1}/2 + g_{j-2}/2
    std::vector<Rational> gClosed;      // (6n + (-1/2)^n - 4(-1)^{2n} + 12) / 9

    [[nodiscard]] bool agree() const { return gPartial == gRecurrence && gRecurrence == gClosed; }
};

[[nodiscard]] Rational gClosedForm(std::int64_t n);
/// Terms 0..n of each sequence.
[[nodiscard]] MultiplierSequences multiplierSequences(std::size_t n);

struct UtilRatioCheck {
    Rational ratio;  // util / FirstFit cost
    Rational bound;  // 2/3 - 2/(3k) - 2/(3(l+2))
    bool pass = false;
};

/// Requires the layerProfile hypotheses and FirstFit opening exactly k servers in total.
[[nodiscard]] UtilRatioCheck utilRatioBound(const AlgorithmTrace& ff, std::int64_t k, std::int64_t l);

// ---------------------------------------------------------------------------

enum class RatioKind { exactOpt, certificateUpper, lowerBound };
[[nodiscard]] std::string_view ratioKindName(RatioKind kind);

struct RatioReport {
    Rational ratio;
    RatioKind kind = RatioKind::exactOpt;
    /// How the true ALG/OPT ratio relates to `ratio`: "=", ">=" or "<=".
    std::string relation;
};

/// Throws std::invalid_argument when optCostOrBound <= 0.
[[nodiscard]] RatioReport ratioReport(const Rational& algCost, const Rational& optCostOrBound, RatioKind kind);

struct PerTimeCheck {
    Rational t;
    std::size_t active = 0;
    std::int64_t ceilBound = 0;
    bool pass = false;
};

/// activeCount(NF, t) <= 2 * ceil(X(t-1, t]) at every event time. Unit durations only.
[[nodiscard]] std::vector<PerTimeCheck> nextFitPerTimeChecks(const AlgorithmTrace& nf);

/// Aggregate inequalities on the C/D/E split of FirstFit (duration 2, arrivals {0,1}):
/// the cost identity, 2A1 > k1, 2A2 > k2 and, with k1, k2 >= 2, the merged chain bound.
[[nodiscard]] std::vector<InequalityCheck> strictCaseInequalities(const ServerTypePartition& split,
                                                                  const Schedule& ff);

}  // namespace rsic
