#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rsic/rational.hpp"

namespace rsic {

/// A job (size, start, finish); active on the half-open interval [start, finish).
struct Job {
    Rational size;
    Rational start;
    Rational finish;

    [[nodiscard]] Rational duration() const { return finish - start; }
    [[nodiscard]] bool activeAt(const Rational& t) const { return start <= t && t < finish; }

    friend bool operator==(const Job&, const Job&) = default;
};

/// One broken rule of an instance or schedule. `index` is the job (or server) it concerns.
struct Violation {
    std::optional<std::size_t> index;
    std::string rule;
    std::string message;
};

/// Ordered job sequence. Construction does not enforce validity; see validate().
class Instance {
public:
    Instance() = default;
    explicit Instance(std::vector<Job> jobs) : jobs_(std::move(jobs)) {}

    [[nodiscard]] const std::vector<Job>& jobs() const { return jobs_; }
    [[nodiscard]] std::size_t size() const { return jobs_.size(); }
    [[nodiscard]] bool empty() const { return jobs_.empty(); }
    [[nodiscard]] const Job& operator[](std::size_t i) const { return jobs_[i]; }

    /// Sorted distinct start and finish times.
    [[nodiscard]] std::vector<Rational> eventTimes() const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    std::vector<Job> jobs_;
};

/// Empty iff every job has 0 < size <= 1, finish > start, start >= 0, and starts never decrease.
[[nodiscard]] std::vector<Violation> validate(const Instance& instance);

/// Throws std::invalid_argument listing the first violation if the instance is invalid.
void requireValid(const Instance& instance);

[[nodiscard]] Rational utilization(const Instance& instance);
[[nodiscard]] Rational span(const Instance& instance);
/// Max over min job duration. Throws std::domain_error on an empty instance.
[[nodiscard]] Rational mu(const Instance& instance);
/// Total size of jobs with start in (t1, t2]. Requires t1 < t2.
[[nodiscard]] Rational arrivalMass(const Instance& instance, const Rational& t1, const Rational& t2);
/// Total size of jobs starting exactly at t.
[[nodiscard]] Rational arrivalMassAt(const Instance& instance, const Rational& t);

/// A rented server. Rental spans [openTime, closeTime], idle gaps included.
struct Server {
    std::size_t id = 0;
    std::vector<std::size_t> jobIndices;  // ascending
    Rational openTime;
    Rational closeTime;

    [[nodiscard]] Rational duration() const { return closeTime - openTime; }
};

/// Assignment of every job of one instance to servers.
class Schedule {
public:
    Schedule() : instance_(std::make_shared<const Instance>()) {}

    /// Builds servers from groups of job indices; group g becomes server id g.
    /// Empty groups are rejected. Feasibility is not checked here (see validateSchedule).
    Schedule(std::shared_ptr<const Instance> instance, const std::vector<std::vector<std::size_t>>& groups);

    [[nodiscard]] const Instance& instance() const { return *instance_; }
    [[nodiscard]] const std::shared_ptr<const Instance>& instancePtr() const { return instance_; }
    [[nodiscard]] const std::vector<Server>& servers() const { return servers_; }
    [[nodiscard]] std::size_t serverCount() const { return servers_.size(); }
    [[nodiscard]] const Server& server(std::size_t id) const { return servers_.at(id); }

    /// Server id of each job, or nullopt for unassigned jobs.
    [[nodiscard]] std::vector<std::optional<std::size_t>> assignment() const;

private:
    std::shared_ptr<const Instance> instance_;
    std::vector<Server> servers_;
};

/// Completeness (each job in exactly one server) and capacity at every event time.
[[nodiscard]] std::vector<Violation> validateSchedule(const Schedule& schedule);

[[nodiscard]] Rational cost(const Schedule& schedule);
/// x(B, t): total size of jobs on the server active at t.
[[nodiscard]] Rational load(const Instance& instance, const Server& server, const Rational& t);
/// Number of servers with at least one job active at t.
[[nodiscard]] std::size_t activeCount(const Schedule& schedule, const Rational& t);
/// Integral of activeCount over time; equals cost iff no server idles inside its rental.
[[nodiscard]] Rational activeIntegral(const Schedule& schedule);

/// Copy of the instance with every time multiplied by `factor` (> 0).
[[nodiscard]] Instance scaleTimes(const Instance& instance, const Rational& factor);

}  // namespace rsic
