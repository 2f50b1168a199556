#include "rsic/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsic/optimal.hpp"

namespace rsic {

namespace {

void requireWeightDomain(const Rational& x, const Rational& t) {
    if (!(x.sign() > 0 && x <= 1)) throw std::domain_error("weight: x must lie in (0, 1], got " + x.str());
    if (!(t >= Rational(1, 28) && t < 1)) throw std::domain_error("weight: t must lie in [1/28, 1), got " + t.str());
}

Rational ri(std::int64_t v) { return Rational(v); }

// Two-arrival setting: duration-1 jobs at 0 or t, plus uniform FirstFit servers.
void requireUniformTwoArrival(const AlgorithmTrace& ff, const Rational& t) {
    const Instance& instance = ff.schedule.instance();
    for (std::size_t i = 0; i < instance.size(); ++i) {
        const Job& job = instance[i];
        if (job.duration() != 1 || (job.start.sign() != 0 && job.start != t)) {
            throw std::invalid_argument("job " + std::to_string(i) + " is not a duration-1 job arriving at 0 or " +
                                        t.str());
        }
    }
    const Rational end = t + 1;
    for (const auto& server : ff.schedule.servers()) {
        if (server.openTime.sign() != 0 || server.closeTime != end) {
            throw std::invalid_argument("server " + std::to_string(server.id) + " is rented [" +
                                        server.openTime.str() + ", " + server.closeTime.str() + "], not [0, " +
                                        end.str() + "]");
        }
    }
}

Rational itemWeight(const Job& job, const Rational& t) {
    return job.start.sign() == 0 ? weightW1(job.size, t) : weightW2(job.size, t);
}

}  // namespace

InequalityCheck checkGreater(std::string name, Rational lhs, Rational rhs) {
    const bool holds = lhs > rhs;
    return {std::move(name), std::move(lhs), ">", std::move(rhs), holds};
}
InequalityCheck checkLess(std::string name, Rational lhs, Rational rhs) {
    const bool holds = lhs < rhs;
    return {std::move(name), std::move(lhs), "<", std::move(rhs), holds};
}
InequalityCheck checkAtMost(std::string name, Rational lhs, Rational rhs) {
    const bool holds = lhs <= rhs;
    return {std::move(name), std::move(lhs), "<=", std::move(rhs), holds};
}
InequalityCheck checkEqual(std::string name, Rational lhs, Rational rhs) {
    const bool holds = lhs == rhs;
    return {std::move(name), std::move(lhs), "=", std::move(rhs), holds};
}

Rational weightW1(const Rational& x, const Rational& t) {
    requireWeightDomain(x, t);
    const Rational onePlusT = t + 1;
    Rational w = Rational(156, 131) * onePlusT * x;
    if (x > Rational(1, 2)) w += Rational(12, 131) * onePlusT;
    return w;
}

Rational weightW2(const Rational& x, const Rational& t) {
    requireWeightDomain(x, t);
    return weightRatio(t) * x;
}

Rational weightRatio(const Rational& t) { return Rational(168, 131) * (t + 1); }

std::string_view serverTypeName(ServerType type) {
    switch (type) {
        case ServerType::I: return "I";
        case ServerType::IIa: return "IIa";
        case ServerType::IIb: return "IIb";
        case ServerType::IIc: return "IIc";
        case ServerType::IIIa: return "IIIa";
        case ServerType::IIIb: return "IIIb";
        case ServerType::IIIc: return "IIIc";
        case ServerType::belowThreshold: return "belowThreshold";
    }
    return "unknown";
}

ServerType classifyLoads(const Rational& x0, const Rational& xTotal, std::size_t itemsAtZero) {
    const Rational fiveSixths(5, 6);
    const Rational twoThirds(2, 3);
    const Rational half(1, 2);
    const Rational elevenTwelfths(11, 12);
    const Rational threeQuarters(3, 4);

    if (x0 >= fiveSixths) {
        return xTotal >= elevenTwelfths ? ServerType::I : ServerType::belowThreshold;
    }
    if (x0 >= twoThirds) {
        if (xTotal >= elevenTwelfths) return ServerType::IIa;
        if (xTotal >= fiveSixths) return itemsAtZero == 1 ? ServerType::IIb : ServerType::IIc;
        return ServerType::belowThreshold;
    }
    if (x0 > half && itemsAtZero == 1) {
        if (xTotal >= elevenTwelfths) return ServerType::IIIa;
        if (xTotal >= fiveSixths) return ServerType::IIIb;
        if (xTotal >= threeQuarters) return ServerType::IIIc;
    }
    return ServerType::belowThreshold;
}

ServerTypeInfo describeServer(std::size_t serverId, const Rational& x0, const Rational& xTotal,
                              std::size_t itemsAtZero) {
    ServerTypeInfo info{serverId, x0, xTotal, itemsAtZero, classifyLoads(x0, xTotal, itemsAtZero), {}, {}};
    if (info.type == ServerType::IIb || info.type == ServerType::IIc) {
        info.eps1 = Rational(5, 6) - x0;
        info.eps2 = Rational(11, 12) - xTotal;
    } else if (info.type == ServerType::IIIc) {
        info.eps1 = Rational(2, 3) - x0;
        info.eps2 = Rational(5, 6) - xTotal;
    }
    return info;
}

std::vector<ServerTypeInfo> classifyServers(const AlgorithmTrace& ff, const Rational& t) {
    requireUniformTwoArrival(ff, t);
    const Instance& instance = ff.schedule.instance();
    std::vector<ServerTypeInfo> out;
    for (const auto& server : ff.schedule.servers()) {
        Rational x0;
        Rational total;
        std::size_t early = 0;
        for (std::size_t idx : server.jobIndices) {
            total += instance[idx].size;
            if (instance[idx].start.sign() == 0) {
                x0 += instance[idx].size;
                ++early;
            }
        }
        out.push_back(describeServer(server.id, x0, total, early));
    }
    return out;
}

std::vector<std::size_t> epsViolations(const std::vector<ServerTypeInfo>& servers) {
    std::vector<std::size_t> out;
    for (const auto& s : servers) {
        if (!s.eps1 || !s.eps2) continue;
        if (!(*s.eps1 > *s.eps2 && *s.eps1 <= Rational(1, 6) && *s.eps2 <= Rational(1, 12))) out.push_back(s.serverId);
    }
    return out;
}

bool WeightReport::optChecksPass() const {
    return std::all_of(optServerChecks.begin(), optServerChecks.end(), [](const auto& c) { return c.pass; });
}

bool WeightReport::passes() const {
    return ffViolations.size() <= ignoredBudget && epsViolations.size() <= ignoredBudget && optChecksPass() &&
           conservationHolds();
}

WeightReport verifyWeights(const AlgorithmTrace& ff, const Schedule& optSchedule, const Rational& t) {
    const Instance& instance = ff.schedule.instance();
    if (!(optSchedule.instance() == instance)) {
        throw std::invalid_argument("verifyWeights: schedules refer to different instances");
    }
    const auto infeasible = validateSchedule(optSchedule);
    if (!infeasible.empty()) throw std::invalid_argument("verifyWeights: " + infeasible.front().message);

    WeightReport report;
    report.t = t;
    report.serverTypes = classifyServers(ff, t);
    report.epsViolations = epsViolations(report.serverTypes);

    for (const auto& job : instance.jobs()) report.itemTotal += itemWeight(job, t);

    const Rational threshold = t + 1;
    for (const auto& server : ff.schedule.servers()) {
        ServerWeight w{server.id, {}, {}};
        for (std::size_t idx : server.jobIndices) {
            const Job& job = instance[idx];
            (job.start.sign() == 0 ? w.w1Sum : w.w2Sum) += itemWeight(job, t);
        }
        report.ffTotal += w.total();
        if (w.total() < threshold) report.ffViolations.push_back(server.id);
        report.perServerWeight.push_back(std::move(w));
    }

    const Rational ratio = weightRatio(t);
    for (const auto& server : optSchedule.servers()) {
        Rational weight;
        for (std::size_t idx : server.jobIndices) weight += itemWeight(instance[idx], t);
        report.optTotal += weight;
        const Rational bound = ratio * server.duration();
        report.optServerChecks.push_back({server.id, weight, bound, weight <= bound});
    }
    return report;
}

LayerProfile layerProfile(const AlgorithmTrace& ff, std::int64_t k, std::int64_t l) {
    if (k < 2) throw std::invalid_argument("layerProfile: k must be >= 2");
    if (l < 0) throw std::invalid_argument("layerProfile: l must be >= 0");
    const Instance& instance = ff.schedule.instance();
    for (std::size_t i = 0; i < instance.size(); ++i) {
        const Job& job = instance[i];
        if (job.duration() != 2 || !job.start.isInteger() || job.start > l) {
            throw std::invalid_argument("layerProfile: job " + std::to_string(i) +
                                        " is not a duration-2 job at an integer time in [0, " + std::to_string(l) +
                                        "]");
        }
    }
    LayerProfile profile;
    profile.layerMass.assign(static_cast<std::size_t>(l) + 1, Rational(0));
    const Rational close(l + 2);
    for (const auto& server : ff.schedule.servers()) {
        if (server.openTime.sign() != 0 || server.closeTime != close) continue;
        profile.serverIds.push_back(server.id);
        for (std::size_t idx : server.jobIndices) {
            profile.layerMass[static_cast<std::size_t>(instance[idx].start.floor())] += instance[idx].size;
        }
    }
    if (profile.serverIds.empty()) throw std::invalid_argument("layerProfile: no server is rented [0, l+2]");
    if (profile.serverIds.size() != static_cast<std::size_t>(k)) {
        throw std::invalid_argument("layerProfile: expected " + std::to_string(k) + " servers rented [0, l+2], found " +
                                    std::to_string(profile.serverIds.size()));
    }
    return profile;
}

std::vector<InequalityCheck> layerInequalities(const LayerProfile& profile) {
    const auto k = static_cast<std::int64_t>(profile.serverIds.size());
    const auto& x = profile.layerMass;
    std::vector<InequalityCheck> out;
    out.push_back(checkGreater("x(L_0) > k/2", x[0], Rational(k, 2)));
    for (std::size_t i = 1; i < x.size(); ++i) {
        out.push_back(checkGreater("x(L_" + std::to_string(i) + ") + x(L_" + std::to_string(i - 1) + ")/2 > (k-1)/2",
                                   x[i] + x[i - 1] / 2, Rational(k - 1, 2)));
    }
    return out;
}

Rational gClosedForm(std::int64_t n) {
    const int e = static_cast<int>(n);
    return (Rational(6 * n) + Rational::pow(Rational(-1, 2), e) - Rational(4) * Rational::pow(Rational(-1), 2 * e) +
            Rational(12)) /
           9;
}

MultiplierSequences multiplierSequences(std::size_t n) {
    MultiplierSequences s;
    for (std::size_t i = 0; i <= n; ++i) {
        s.f.push_back(i == 0 ? Rational(1) : Rational(1) - s.f.back() / 2);
        s.gPartial.push_back(i == 0 ? s.f.back() : s.gPartial.back() + s.f.back());
        if (i == 0) {
            s.gRecurrence.push_back(Rational(1));
        } else if (i == 1) {
            s.gRecurrence.push_back(Rational(3, 2));
        } else {
            s.gRecurrence.push_back(Rational(1) + s.gRecurrence[i - 1] / 2 + s.gRecurrence[i - 2] / 2);
        }
        s.gClosed.push_back(gClosedForm(static_cast<std::int64_t>(i)));
    }
    return s;
}

UtilRatioCheck utilRatioBound(const AlgorithmTrace& ff, std::int64_t k, std::int64_t l) {
    const auto profile = layerProfile(ff, k, l);
    if (ff.schedule.serverCount() != static_cast<std::size_t>(k)) {
        throw std::invalid_argument("utilRatioBound: FirstFit opened " + std::to_string(ff.schedule.serverCount()) +
                                    " servers, expected " + std::to_string(k));
    }
    UtilRatioCheck out;
    out.ratio = utilization(ff.schedule.instance()) / cost(ff.schedule);
    out.bound = Rational(2, 3) - Rational(2, 3 * k) - Rational(2, 3 * (l + 2));
    out.pass = out.ratio > out.bound;
    return out;
}

std::string_view ratioKindName(RatioKind kind) {
    switch (kind) {
        case RatioKind::exactOpt: return "exactOpt";
        case RatioKind::certificateUpper: return "certificateUpper";
        case RatioKind::lowerBound: return "lowerBound";
    }
    return "unknown";
}

RatioReport ratioReport(const Rational& algCost, const Rational& optCostOrBound, RatioKind kind) {
    if (optCostOrBound.sign() <= 0) throw std::invalid_argument("ratioReport: OPT value must be positive");
    RatioReport r{algCost / optCostOrBound, kind, {}};
    switch (kind) {
        case RatioKind::exactOpt: r.relation = "="; break;
        // Dividing by an upper bound on OPT underestimates the ratio, and vice versa.
        case RatioKind::certificateUpper: r.relation = ">="; break;
        case RatioKind::lowerBound: r.relation = "<="; break;
    }
    return r;
}

std::vector<PerTimeCheck> nextFitPerTimeChecks(const AlgorithmTrace& nf) {
    const Instance& instance = nf.schedule.instance();
    std::vector<PerTimeCheck> out;
    for (const auto& t : instance.eventTimes()) {
        const std::size_t active = activeCount(nf.schedule, t);
        const std::int64_t bound = activeCeilBound(instance, t);
        out.push_back({t, active, bound, static_cast<std::int64_t>(active) <= 2 * bound});
    }
    return out;
}

std::vector<InequalityCheck> strictCaseInequalities(const ServerTypePartition& split, const Schedule& ff) {
    const auto k1 = static_cast<std::int64_t>(split.k1());
    const auto k2 = static_cast<std::int64_t>(split.k2());
    const auto k3 = static_cast<std::int64_t>(split.k3());
    std::vector<InequalityCheck> out;
    out.push_back(checkEqual("FirstFit = 2k1 + 3k2 + 2k3", cost(ff), ri(2 * k1 + 3 * k2 + 2 * k3)));
    if (k1 >= 2) out.push_back(checkGreater("2A1 > k1", split.a1 * 2, ri(k1)));
    if (k2 >= 2) out.push_back(checkGreater("2A2 > k2", split.a2 * 2, ri(k2)));
    if (k1 >= 2 && k2 >= 2) {
        const Rational chain = split.a1 * 2 + split.a2 + split.b * 2;
        const Rational rhs = ri(k1 + k2 + k3) - Rational(1, 2);
        out.push_back(checkGreater("2A1 + A2 + 2B > k1 + k2 + k3 - 1/2", chain, rhs));
        const Rational mass = (split.a1 + split.a2 + split.b) * 4;
        out.push_back(checkLess("FirstFit < 4A + 4B + 1", cost(ff), mass + 1));
    }
    return out;
}

}  // namespace rsic
