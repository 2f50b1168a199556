#pragma once

#include <cstddef>
#include <vector>

#include "rsic/model.hpp"

namespace rsic {

struct Decision {
    std::size_t jobIndex = 0;
    std::size_t serverId = 0;
    bool openedNewServer = false;
    /// Servers whose fit test was evaluated for this job (the accepting one included).
    std::size_t serversScanned = 0;
};

/// Output of an online algorithm plus one decision per job, in presentation order.
struct AlgorithmTrace {
    Schedule schedule;
    std::vector<Decision> decisions;
};

/// NextFit: one open server; close it when the arriving job does not fit at its
/// start time or the server has already terminated. Closed servers are never reused.
[[nodiscard]] AlgorithmTrace nextFit(std::shared_ptr<const Instance> instance);
[[nodiscard]] AlgorithmTrace nextFit(const Instance& instance);

/// FirstFit: place each job into the earliest-opened server still alive at its
/// start that has room; open a new server otherwise.
[[nodiscard]] AlgorithmTrace firstFit(std::shared_ptr<const Instance> instance);
[[nodiscard]] AlgorithmTrace firstFit(const Instance& instance);

/// FirstFit servers split by arrival pattern, for duration-2 jobs arriving at 0 and 1.
///   C (type 1): jobs only at 0, rented [0,2)
///   D (type 2): jobs at 0 and 1, rented [0,3)
///   E (type 3): jobs only at 1, rented [1,3)
struct ServerTypePartition {
    std::vector<std::size_t> c;
    std::vector<std::size_t> d;
    std::vector<std::size_t> e;
    Rational a1;  // time-0 mass on C servers
    Rational a2;  // time-0 mass on D servers
    Rational b;   // time-1 mass on all servers

    [[nodiscard]] std::size_t k1() const { return c.size(); }
    [[nodiscard]] std::size_t k2() const { return d.size(); }
    [[nodiscard]] std::size_t k3() const { return e.size(); }
};

/// Throws std::invalid_argument naming the first job that is not (start in {0,1}, duration 2).
[[nodiscard]] ServerTypePartition serverTypePartition(const AlgorithmTrace& trace);

}  // namespace rsic
