#include "rsic/generators.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "rsic/algorithms.hpp"

namespace rsic {

namespace {

// Unbiased draws from mt19937_64 output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % bound;
    }

    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 engine_;
};

Rational gridSize(Rng& rng, std::int64_t grid) { return Rational(rng.between(1, grid), grid); }

void requireGrid(std::int64_t grid) {
    if (grid < 1) throw std::invalid_argument("size grid denominator must be >= 1");
}

Instance sortedByStart(std::vector<Job> jobs) {
    std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.start < b.start; });
    return Instance(std::move(jobs));
}

bool firstFitIsUniform(const std::shared_ptr<const Instance>& instance, const Rational& t) {
    const auto trace = firstFit(instance);
    const Rational end = Rational(1) + t;
    return std::all_of(trace.schedule.servers().begin(), trace.schedule.servers().end(), [&](const Server& s) {
        return s.openTime.sign() == 0 && s.closeTime == end;
    });
}

}  // namespace

std::string_view familyName(Family family) {
    switch (family) {
        case Family::gguExtended: return "ggu";
        case Family::longUniform: return "long-uniform";
        case Family::nfNemesis: return "nf-nemesis";
        case Family::randomTwoArrival: return "random-two-arrival";
        case Family::randomEqualDuration: return "random-equal-duration";
    }
    return "unknown";
}

Family parseFamily(std::string_view name) {
    for (Family f : {Family::gguExtended, Family::longUniform, Family::nfNemesis, Family::randomTwoArrival,
                     Family::randomEqualDuration}) {
        if (familyName(f) == name) return f;
    }
    throw std::invalid_argument("unknown generator family '" + std::string(name) + "'");
}

GeneratedInstance generate(const GeneratorSpec& spec) {
    const auto& p = spec.params;
    switch (spec.family) {
        case Family::gguExtended: {
            auto ggu = gguExtended(p.k, p.t, p.delta);
            return {*ggu.instance, std::move(ggu.certificate)};
        }
        case Family::longUniform: return {longUniform(p.k, p.l), std::nullopt};
        case Family::nfNemesis: return {nfNemesis(p.nemesisN), std::nullopt};
        case Family::randomTwoArrival: return {randomTwoArrival(p.n, p.t, p.seed, p.sizeGrid), std::nullopt};
        case Family::randomEqualDuration:
            return {randomEqualDuration(p.n, p.duration, p.startGrid, p.horizon, p.seed, p.sizeGrid), std::nullopt};
    }
    throw std::invalid_argument("unknown generator family");
}

Rational defaultGguDelta(std::int64_t k) { return Rational::pow(Rational(18), static_cast<int>(-k)) / 1000; }

GguInstance gguExtended(std::int64_t k, const Rational& t, std::optional<Rational> delta) {
    if (k <= 0 || k % 6 != 0) throw std::invalid_argument("ggu: k must be a positive multiple of 6");
    if (!(t.sign() > 0 && t < 1)) throw std::invalid_argument("ggu: t must lie in (0, 1)");
    const Rational d = delta.value_or(defaultGguDelta(k));
    if (!(d.sign() > 0 && d < Rational::pow(Rational(18), static_cast<int>(-k)) / 100)) {
        throw std::invalid_argument("ggu: delta must satisfy 0 < delta < 18^-k / 100");
    }

    const auto groups = static_cast<std::size_t>(k);
    std::vector<Rational> groupDelta(groups);
    for (std::size_t i = 0; i < groups; ++i) {
        groupDelta[i] = d * Rational::pow(Rational(18), static_cast<int>(k - 1 - static_cast<std::int64_t>(i)));
    }

    const Rational sixth(1, 6);
    const Rational third(1, 3);
    static constexpr std::int64_t kPhase1[10] = {33, -3, -7, -7, -13, 9, -2, -2, -2, -2};
    static constexpr std::int64_t kPhase2[10] = {46, -34, 6, 6, 12, -10, 1, 1, 1, 1};

    std::vector<Job> jobs;
    jobs.reserve(47 * groups);
    const Rational zero(0);
    const Rational one(1);
    for (std::size_t i = 0; i < groups; ++i) {
        for (std::int64_t c : kPhase1) jobs.push_back({sixth + Rational(c) * groupDelta[i], zero, one});
    }
    for (std::size_t i = 0; i < groups; ++i) {
        for (std::int64_t c : kPhase2) jobs.push_back({third + Rational(c) * groupDelta[i], zero, one});
    }
    for (std::size_t i = 0; i < 10 * groups; ++i) jobs.push_back({Rational(1, 2) + d, zero, one});
    const Rational late = t + 1;
    for (std::size_t i = 0; i < 2 * groups; ++i) jobs.push_back({Rational(1, 12), t, late});
    for (std::size_t i = 0; i < 5 * groups; ++i) jobs.push_back({sixth, t, late});
    for (std::size_t i = 0; i < 10 * groups; ++i) jobs.push_back({Rational(1, 4), t, late});

    GguInstance out;
    out.layout.k = groups;
    out.delta = d;
    out.instance = std::make_shared<const Instance>(std::move(jobs));
    const GguLayout& lay = out.layout;

    // Phase-3 jobs each share a server with one phase-1/phase-2 pair.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < groups; ++i) {
        for (std::size_t j = 2; j < 10; ++j) pairs.emplace_back(lay.phase1(i, j), lay.phase2(i, j));
        pairs.emplace_back(lay.phase1(i, 0), lay.phase2(i, 1));
        if (i + 1 < groups) pairs.emplace_back(lay.phase1(i, 1), lay.phase2(i + 1, 0));
    }
    std::vector<std::vector<std::size_t>> servers;
    for (std::size_t p = 0; p < 10 * groups; ++p) {
        std::vector<std::size_t> server{lay.phase3Begin() + p};
        if (p < pairs.size()) {
            server.push_back(pairs[p].first);
            server.push_back(pairs[p].second);
        }
        servers.push_back(std::move(server));
    }
    servers.push_back({lay.phase1(groups - 1, 1), lay.phase2(0, 0)});

    auto chunk = [&](std::size_t begin, std::size_t count, std::size_t per) {
        for (std::size_t s = 0; s < count; s += per) {
            std::vector<std::size_t> server;
            for (std::size_t j = s; j < s + per; ++j) server.push_back(begin + j);
            servers.push_back(std::move(server));
        }
    };
    chunk(lay.lateBegin(), 2 * groups, 12);
    chunk(lay.lateBegin() + 2 * groups, 5 * groups, 6);
    chunk(lay.lateBegin() + 7 * groups, 10 * groups, 4);

    out.certificate = Schedule(out.instance, servers);
    return out;
}

Instance longUniform(std::int64_t k, std::int64_t l) {
    if (k < 2) throw std::invalid_argument("long-uniform: k must be >= 2");
    if (l <= 0 || l % 2 != 0) throw std::invalid_argument("long-uniform: l must be a positive even integer");
    const Rational eps(1, k * l);
    std::vector<Job> jobs;
    for (std::int64_t time = 0; time <= l; ++time) {
        const Rational size = time == 0 ? Rational(2, 3) : (time % 2 == 1 ? Rational(1, 3) : Rational(1, 3) + eps);
        for (std::int64_t i = 0; i < k; ++i) jobs.push_back({size, Rational(time), Rational(time + 2)});
    }
    return Instance(std::move(jobs));
}

Instance nfNemesis(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("nf-nemesis: N must be >= 1");
    std::vector<Job> jobs;
    for (std::int64_t i = 0; i < 2 * n; ++i) {
        jobs.push_back({Rational(1, 2), Rational(0), Rational(1)});
        jobs.push_back({Rational(1, 2 * n), Rational(0), Rational(1)});
    }
    return Instance(std::move(jobs));
}

Instance randomTwoArrival(std::int64_t n, const Rational& t, std::uint64_t seed, std::int64_t sizeGrid) {
    if (n < 1) throw std::invalid_argument("random-two-arrival: n must be >= 1");
    if (t.sign() <= 0) throw std::invalid_argument("random-two-arrival: t must be positive");
    requireGrid(sizeGrid);
    Rng rng(seed);
    std::vector<Job> jobs;
    for (std::int64_t i = 0; i < n; ++i) {
        const Rational start = rng.below(2) == 0 ? Rational(0) : t;
        jobs.push_back({gridSize(rng, sizeGrid), start, start + 1});
    }
    return sortedByStart(std::move(jobs));
}

Instance randomEqualDuration(std::int64_t n, const Rational& duration, const Rational& startGrid,
                             const Rational& horizon, std::uint64_t seed, std::int64_t sizeGrid) {
    if (n < 1) throw std::invalid_argument("random-equal-duration: n must be >= 1");
    if (duration.sign() <= 0 || startGrid.sign() <= 0 || horizon.sign() <= 0) {
        throw std::invalid_argument("random-equal-duration: duration, grid and horizon must be positive");
    }
    requireGrid(sizeGrid);
    const std::int64_t slots = std::max<std::int64_t>(1, (horizon / startGrid).ceil());
    Rng rng(seed);
    std::vector<Job> jobs;
    for (std::int64_t i = 0; i < n; ++i) {
        const Rational start = startGrid * Rational(rng.between(0, slots - 1));
        jobs.push_back({gridSize(rng, sizeGrid), start, start + duration});
    }
    return sortedByStart(std::move(jobs));
}

Instance randomUniformServers(std::int64_t maxJobs, const Rational& t, std::uint64_t seed, std::int64_t sizeGrid) {
    if (maxJobs < 2) throw std::invalid_argument("random-uniform: need room for at least two jobs");
    if (!(t.sign() > 0 && t < 1)) throw std::invalid_argument("random-uniform: t must lie in (0, 1)");
    requireGrid(sizeGrid);
    Rng rng(seed);
    constexpr int kAttempts = 100000;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        const std::int64_t n = rng.between(2, maxJobs);
        const std::int64_t early = rng.between(1, n - 1);
        std::vector<Job> jobs;
        for (std::int64_t i = 0; i < n; ++i) {
            const Rational start = i < early ? Rational(0) : t;
            jobs.push_back({gridSize(rng, sizeGrid), start, start + 1});
        }
        auto instance = std::make_shared<const Instance>(std::move(jobs));
        if (firstFitIsUniform(instance, t)) return *instance;
    }
    throw std::runtime_error("random-uniform: no uniform-server instance found");
}

}  // namespace rsic
