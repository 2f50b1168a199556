#include "rsic/model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rsic {

std::vector<Rational> Instance::eventTimes() const {
    std::vector<Rational> times;
    times.reserve(2 * jobs_.size());
    for (const auto& job : jobs_) {
        times.push_back(job.start);
        times.push_back(job.finish);
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

std::vector<Violation> validate(const Instance& instance) {
    std::vector<Violation> out;
    const auto& jobs = instance.jobs();
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const Job& job = jobs[i];
        if (job.size.sign() <= 0) {
            out.push_back({i, "size", "size must be > 0, got " + job.size.str()});
        } else if (job.size > 1) {
            out.push_back({i, "size", "size must be <= 1, got " + job.size.str()});
        }
        if (job.start.sign() < 0) {
            out.push_back({i, "start", "start must be >= 0, got " + job.start.str()});
        }
        if (job.finish <= job.start) {
            out.push_back({i, "interval", "finish " + job.finish.str() + " must exceed start " + job.start.str()});
        }
        if (i > 0 && job.start < jobs[i - 1].start) {
            out.push_back({i, "order", "starts decrease: " + jobs[i - 1].start.str() + " then " + job.start.str()});
        }
    }
    return out;
}

void requireValid(const Instance& instance) {
    const auto violations = validate(instance);
    if (!violations.empty()) {
        const auto& v = violations.front();
        throw std::invalid_argument("invalid instance: job " + std::to_string(*v.index) + ": " + v.message);
    }
}

Rational utilization(const Instance& instance) {
    Rational total;
    for (const auto& job : instance.jobs()) total += job.size * job.duration();
    return total;
}

Rational span(const Instance& instance) {
    std::vector<std::pair<Rational, Rational>> intervals;
    intervals.reserve(instance.size());
    for (const auto& job : instance.jobs()) intervals.emplace_back(job.start, job.finish);
    std::sort(intervals.begin(), intervals.end());
    Rational total;
    std::size_t i = 0;
    while (i < intervals.size()) {
        Rational lo = intervals[i].first;
        Rational hi = intervals[i].second;
        for (++i; i < intervals.size() && intervals[i].first <= hi; ++i) hi = max(hi, intervals[i].second);
        total += hi - lo;
    }
    return total;
}

Rational mu(const Instance& instance) {
    if (instance.empty()) throw std::domain_error("mu is undefined on empty instance");
    Rational longest = instance[0].duration();
    Rational shortest = longest;
    for (const auto& job : instance.jobs()) {
        const Rational d = job.duration();
        longest = max(longest, d);
        shortest = min(shortest, d);
    }
    return longest / shortest;
}

Rational arrivalMass(const Instance& instance, const Rational& t1, const Rational& t2) {
    if (!(t1 < t2)) throw std::invalid_argument("arrivalMass requires t1 < t2");
    Rational total;
    for (const auto& job : instance.jobs()) {
        if (t1 < job.start && job.start <= t2) total += job.size;
    }
    return total;
}

Rational arrivalMassAt(const Instance& instance, const Rational& t) {
    Rational total;
    for (const auto& job : instance.jobs()) {
        if (job.start == t) total += job.size;
    }
    return total;
}

Schedule::Schedule(std::shared_ptr<const Instance> instance, const std::vector<std::vector<std::size_t>>& groups)
    : instance_(std::move(instance)) {
    if (!instance_) throw std::invalid_argument("schedule requires an instance");
    servers_.reserve(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty()) throw std::invalid_argument("server " + std::to_string(g) + " has no jobs");
        Server server;
        server.id = g;
        server.jobIndices = groups[g];
        std::sort(server.jobIndices.begin(), server.jobIndices.end());
        for (std::size_t idx : server.jobIndices) {
            if (idx >= instance_->size()) {
                throw std::invalid_argument("server " + std::to_string(g) + " references job " + std::to_string(idx) +
                                            " outside the instance");
            }
        }
        const Job& first = (*instance_)[server.jobIndices.front()];
        server.openTime = first.start;
        server.closeTime = first.finish;
        for (std::size_t idx : server.jobIndices) {
            server.openTime = min(server.openTime, (*instance_)[idx].start);
            server.closeTime = max(server.closeTime, (*instance_)[idx].finish);
        }
        servers_.push_back(std::move(server));
    }
}

std::vector<std::optional<std::size_t>> Schedule::assignment() const {
    std::vector<std::optional<std::size_t>> owner(instance_->size());
    for (const auto& server : servers_) {
        for (std::size_t idx : server.jobIndices) owner[idx] = server.id;
    }
    return owner;
}

std::vector<Violation> validateSchedule(const Schedule& schedule) {
    std::vector<Violation> out;
    const Instance& instance = schedule.instance();
    std::vector<int> seen(instance.size(), 0);
    for (const auto& server : schedule.servers()) {
        for (std::size_t idx : server.jobIndices) ++seen[idx];
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i] == 0) out.push_back({i, "completeness", "job " + std::to_string(i) + " is not assigned"});
        if (seen[i] > 1) out.push_back({i, "completeness", "job " + std::to_string(i) + " is assigned more than once"});
    }
    // Load is piecewise constant and only rises at starts, so checking starts suffices.
    for (const auto& server : schedule.servers()) {
        for (std::size_t idx : server.jobIndices) {
            const Rational& t = instance[idx].start;
            const Rational x = load(instance, server, t);
            if (x > 1) {
                std::ostringstream msg;
                msg << "server " << server.id << " overloaded at time " << t << ": load " << x;
                out.push_back({server.id, "capacity", msg.str()});
                break;
            }
        }
    }
    return out;
}

Rational cost(const Schedule& schedule) {
    Rational total;
    for (const auto& server : schedule.servers()) total += server.duration();
    return total;
}

Rational load(const Instance& instance, const Server& server, const Rational& t) {
    Rational total;
    for (std::size_t idx : server.jobIndices) {
        if (instance[idx].activeAt(t)) total += instance[idx].size;
    }
    return total;
}

std::size_t activeCount(const Schedule& schedule, const Rational& t) {
    const Instance& instance = schedule.instance();
    std::size_t count = 0;
    for (const auto& server : schedule.servers()) {
        for (std::size_t idx : server.jobIndices) {
            if (instance[idx].activeAt(t)) {
                ++count;
                break;
            }
        }
    }
    return count;
}

Rational activeIntegral(const Schedule& schedule) {
    const auto times = schedule.instance().eventTimes();
    Rational total;
    for (std::size_t i = 0; i + 1 < times.size(); ++i) {
        const auto n = static_cast<std::int64_t>(activeCount(schedule, times[i]));
        total += Rational(n) * (times[i + 1] - times[i]);
    }
    return total;
}

Instance scaleTimes(const Instance& instance, const Rational& factor) {
    if (factor.sign() <= 0) throw std::invalid_argument("time scale factor must be positive");
    std::vector<Job> jobs;
    jobs.reserve(instance.size());
    for (const auto& job : instance.jobs()) jobs.push_back({job.size, job.start * factor, job.finish * factor});
    return Instance(std::move(jobs));
}

}  // namespace rsic
