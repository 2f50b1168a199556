#include "rsic/report.hpp"

#include <cstdio>

namespace rsic {

std::string decimal(const Rational& value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value.toDouble());
    return buf;
}

Json toJson(const Rational& value) { return {{"exact", value.str()}, {"approx", decimal(value)}}; }

Json instanceDigest(const Instance& instance) {
    Json digest{{"jobs", instance.size()}};
    digest["mu"] = instance.empty() ? Json(nullptr) : toJson(mu(instance));
    digest["util"] = toJson(utilization(instance));
    digest["span"] = toJson(span(instance));
    return digest;
}

Json activeProfile(const Schedule& schedule) {
    Json profile = Json::array();
    for (const auto& t : schedule.instance().eventTimes()) {
        profile.push_back({{"t", t.str()}, {"active", activeCount(schedule, t)}});
    }
    return profile;
}

Json toJson(const AlgorithmTrace& trace) {
    Json servers = Json::array();
    for (const auto& server : trace.schedule.servers()) {
        servers.push_back({{"id", server.id},
                           {"jobs", server.jobIndices},
                           {"open", server.openTime.str()},
                           {"close", server.closeTime.str()}});
    }
    Json decisions = Json::array();
    for (const auto& d : trace.decisions) {
        decisions.push_back({{"job", d.jobIndex},
                             {"server", d.serverId},
                             {"opened", d.openedNewServer},
                             {"scanned", d.serversScanned}});
    }
    return {{"servers", std::move(servers)},
            {"cost", toJson(cost(trace.schedule))},
            {"decisions", std::move(decisions)},
            {"activeCounts", activeProfile(trace.schedule)}};
}

Json toJson(const OptResult& result) {
    Json servers = Json::array();
    for (const auto& server : result.bestSchedule.servers()) {
        servers.push_back({{"id", server.id},
                           {"jobs", server.jobIndices},
                           {"open", server.openTime.str()},
                           {"close", server.closeTime.str()}});
    }
    return {{"cost", toJson(result.bestCost)},
            {"servers", std::move(servers)},
            {"partitionsExamined", result.partitionsExamined},
            {"lowerBounds",
             {{"util", toJson(result.lowerBoundsUsed.utilBound)}, {"span", toJson(result.lowerBoundsUsed.spanBound)}}}};
}

Json toJson(const InequalityCheck& check) {
    return {{"name", check.name},
            {"lhs", toJson(check.lhs)},
            {"relation", check.relation},
            {"rhs", toJson(check.rhs)},
            {"holds", check.holds}};
}

Json toJson(const ServerTypeInfo& info) {
    Json j{{"server", info.serverId},
           {"type", std::string(serverTypeName(info.type))},
           {"x0", info.x0.str()},
           {"xTotal", info.xTotal.str()},
           {"itemsAtZero", info.itemsAtZero}};
    if (info.eps1) j["eps1"] = info.eps1->str();
    if (info.eps2) j["eps2"] = info.eps2->str();
    return j;
}

Json toJson(const WeightReport& report) {
    Json perServer = Json::array();
    for (const auto& w : report.perServerWeight) {
        perServer.push_back({{"server", w.serverId}, {"w1", w.w1Sum.str()}, {"w2", w.w2Sum.str()}});
    }
    Json opt = Json::array();
    for (const auto& c : report.optServerChecks) {
        opt.push_back({{"server", c.serverId}, {"weight", c.weight.str()}, {"bound", c.bound.str()}, {"pass", c.pass}});
    }
    Json types = Json::array();
    for (const auto& info : report.serverTypes) types.push_back(toJson(info));
    return {{"t", report.t.str()},
            {"ffServers", perServer},
            {"ffViolations", report.ffViolations},
            {"ignoredBudget", report.ignoredBudget},
            {"serverTypes", std::move(types)},
            {"epsViolations", report.epsViolations},
            {"optServers", std::move(opt)},
            {"ffTotal", report.ffTotal.str()},
            {"optTotal", report.optTotal.str()},
            {"itemTotal", report.itemTotal.str()},
            {"conservation", report.conservationHolds()},
            {"pass", report.passes()}};
}

Json toJson(const RatioReport& report) {
    return {{"ratio", toJson(report.ratio)},
            {"kind", std::string(ratioKindName(report.kind))},
            {"relation", report.relation}};
}

}  // namespace rsic
