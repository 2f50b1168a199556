#include "rsic/algorithms.hpp"

#include <optional>
#include <stdexcept>

namespace rsic {

namespace {

// Server under construction: job list plus running termination time T.
struct OpenServer {
    std::vector<std::size_t> jobs;
    Rational termination;
};

Rational loadAt(const Instance& instance, const std::vector<std::size_t>& jobs, const Rational& t) {
    Rational total;
    for (std::size_t idx : jobs) {
        if (instance[idx].activeAt(t)) total += instance[idx].size;
    }
    return total;
}

AlgorithmTrace finish(std::shared_ptr<const Instance> instance, const std::vector<OpenServer>& servers,
                      std::vector<Decision> decisions) {
    std::vector<std::vector<std::size_t>> groups;
    groups.reserve(servers.size());
    for (const auto& s : servers) groups.push_back(s.jobs);
    return {Schedule(std::move(instance), groups), std::move(decisions)};
}

}  // namespace

AlgorithmTrace nextFit(std::shared_ptr<const Instance> instance) {
    requireValid(*instance);
    const Instance& jobs = *instance;
    std::vector<OpenServer> servers;
    std::vector<Decision> decisions;
    decisions.reserve(jobs.size());
    std::optional<std::size_t> open;

    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const Job& job = jobs[i];
        Decision d{i, 0, false, 0};
        bool fits = false;
        if (open) {
            d.serversScanned = 1;
            const OpenServer& b = servers[*open];
            fits = !(job.start > b.termination) && loadAt(jobs, b.jobs, job.start) + job.size <= 1;
        }
        if (!fits) {
            servers.push_back({{}, job.finish});
            open = servers.size() - 1;
            d.openedNewServer = true;
        }
        OpenServer& b = servers[*open];
        b.jobs.push_back(i);
        b.termination = max(b.termination, job.finish);
        d.serverId = *open;
        decisions.push_back(d);
    }
    return finish(std::move(instance), servers, std::move(decisions));
}

AlgorithmTrace nextFit(const Instance& instance) { return nextFit(std::make_shared<const Instance>(instance)); }

AlgorithmTrace firstFit(std::shared_ptr<const Instance> instance) {
    requireValid(*instance);
    const Instance& jobs = *instance;
    std::vector<OpenServer> servers;
    std::vector<std::size_t> alive;  // server ids in opening order
    std::vector<Decision> decisions;
    decisions.reserve(jobs.size());

    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const Job& job = jobs[i];
        // Starts never decrease, so a server expired now stays expired.
        std::erase_if(alive, [&](std::size_t id) { return job.start > servers[id].termination; });

        Decision d{i, 0, false, 0};
        std::optional<std::size_t> target;
        for (std::size_t id : alive) {
            ++d.serversScanned;
            if (loadAt(jobs, servers[id].jobs, job.start) + job.size <= 1) {
                target = id;
                break;
            }
        }
        if (!target) {
            servers.push_back({{}, job.finish});
            target = servers.size() - 1;
            alive.push_back(*target);
            d.openedNewServer = true;
        }
        OpenServer& b = servers[*target];
        b.jobs.push_back(i);
        b.termination = max(b.termination, job.finish);
        d.serverId = *target;
        decisions.push_back(d);
    }
    return finish(std::move(instance), servers, std::move(decisions));
}

AlgorithmTrace firstFit(const Instance& instance) { return firstFit(std::make_shared<const Instance>(instance)); }

ServerTypePartition serverTypePartition(const AlgorithmTrace& trace) {
    const Instance& instance = trace.schedule.instance();
    const Rational zero(0);
    const Rational one(1);
    const Rational two(2);
    for (std::size_t i = 0; i < instance.size(); ++i) {
        const Job& job = instance[i];
        if (job.duration() != two || (job.start != zero && job.start != one)) {
            throw std::invalid_argument("job " + std::to_string(i) + " is not a duration-2 job arriving at 0 or 1");
        }
    }

    ServerTypePartition out;
    for (const auto& server : trace.schedule.servers()) {
        Rational early;
        Rational late;
        for (std::size_t idx : server.jobIndices) {
            (instance[idx].start == zero ? early : late) += instance[idx].size;
        }
        if (late.sign() == 0) {
            out.c.push_back(server.id);
            out.a1 += early;
        } else if (early.sign() == 0) {
            out.e.push_back(server.id);
        } else {
            out.d.push_back(server.id);
            out.a2 += early;
        }
        out.b += late;
    }
    return out;
}

}  // namespace rsic
