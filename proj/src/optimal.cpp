#include "rsic/optimal.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <type_traits>

namespace rsic {

namespace {

// Brute force works on the event grid: segment k is [times[k], times[k+1]).
// Sizes and times are either scaled to int64 by a common denominator, or kept
// as Rational when the common denominator is too large.
template <typename Num>
struct Problem {
    std::size_t jobs = 0;
    std::size_t segments = 0;
    std::vector<Num> size;
    Num capacity{};
    std::vector<Num> time;  // per event index
    std::vector<std::size_t> startIdx;
    std::vector<std::size_t> finishIdx;
    std::vector<std::int64_t> need;          // ceil(total active mass) per segment
    std::vector<std::optional<std::size_t>> twin;  // previous identical job
};

template <typename Num>
class Search {
public:
    explicit Search(const Problem<Num>& p) : p_(p), label_(p.jobs, 0), cover_(p.segments, 0) {
        for (std::size_t s = 0; s < p_.segments; ++s) deficit_ += segLen(s) * Num(p_.need[s]);
        rootBound_ = deficit_;
        blocks_.reserve(p_.jobs);  // dfs holds references into blocks_ across recursion
    }

    void run() { dfs(0); }

    [[nodiscard]] bool found() const { return best_.has_value(); }
    [[nodiscard]] const Num& bestCost() const { return *best_; }
    [[nodiscard]] const std::vector<std::size_t>& bestLabels() const { return bestLabel_; }
    [[nodiscard]] std::uint64_t leaves() const { return leaves_; }
    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

private:
    struct Block {
        std::vector<Num> load;
        std::size_t open = 0;
        std::size_t close = 0;
    };

    Num segLen(std::size_t s) const { return p_.time[s + 1] - p_.time[s]; }

    void coverRange(std::size_t from, std::size_t to, int delta) {
        for (std::size_t s = from; s < to; ++s) {
            if (delta > 0) {
                if (cover_[s] < p_.need[s]) deficit_ -= segLen(s);
                ++cover_[s];
            } else {
                --cover_[s];
                if (cover_[s] < p_.need[s]) deficit_ += segLen(s);
            }
        }
    }

    bool done() const { return best_ && *best_ <= rootBound_; }

    void dfs(std::size_t i) {
        ++nodes_;
        if (i == p_.jobs) {
            ++leaves_;
            if (!best_ || partial_ < *best_) {
                best_ = partial_;
                bestLabel_ = label_;
            }
            return;
        }
        const std::size_t lo = p_.twin[i] ? label_[*p_.twin[i]] : 0;
        const std::size_t s = p_.startIdx[i];
        const std::size_t f = p_.finishIdx[i];
        for (std::size_t b = lo; b <= blocks_.size() && !done(); ++b) {
            if (b == blocks_.size()) {
                Block fresh;
                fresh.load.assign(p_.segments, Num{});
                for (std::size_t k = s; k < f; ++k) fresh.load[k] = p_.size[i];
                fresh.open = s;
                fresh.close = f;
                blocks_.push_back(std::move(fresh));
                coverRange(s, f, +1);
                partial_ += p_.time[f] - p_.time[s];
                label_[i] = b;
                if (!best_ || partial_ + deficit_ < *best_) dfs(i + 1);
                partial_ -= p_.time[f] - p_.time[s];
                coverRange(s, f, -1);
                blocks_.pop_back();
                break;
            }
            Block& blk = blocks_[b];
            bool fits = true;
            for (std::size_t k = s; k < f && fits; ++k) fits = blk.load[k] + p_.size[i] <= p_.capacity;
            if (!fits) continue;
            // Starts are sorted, so only the closing edge of the rental can move.
            const std::size_t oldClose = blk.close;
            const std::size_t newClose = std::max(oldClose, f);
            for (std::size_t k = s; k < f; ++k) blk.load[k] += p_.size[i];
            blk.close = newClose;
            coverRange(oldClose, newClose, +1);
            const Num extra = p_.time[newClose] - p_.time[oldClose];
            partial_ += extra;
            label_[i] = b;
            if (!best_ || partial_ + deficit_ < *best_) dfs(i + 1);
            partial_ -= extra;
            coverRange(oldClose, newClose, -1);
            blk.close = oldClose;
            for (std::size_t k = s; k < f; ++k) blk.load[k] -= p_.size[i];
        }
    }

    const Problem<Num>& p_;
    std::vector<Block> blocks_;
    std::vector<std::size_t> label_;
    std::vector<std::int64_t> cover_;
    Num partial_{};
    Num deficit_{};
    Num rootBound_{};
    std::optional<Num> best_;
    std::vector<std::size_t> bestLabel_;
    std::uint64_t leaves_ = 0;
    std::uint64_t nodes_ = 0;
};

mpz_class commonDenominator(const std::vector<Rational>& values) {
    mpz_class l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
    return l;
}

// Largest magnitude that keeps all int64 sums in the search safe.
bool fitsScaled(const std::vector<Rational>& values, const mpz_class& scale, std::size_t terms) {
    const mpz_class limit = mpz_class(std::numeric_limits<std::int64_t>::max() / 4) / static_cast<long>(terms + 1);
    for (const auto& v : values) {
        mpq_class scaled = v.raw() * mpq_class(scale);
        mpz_class z = scaled.get_num();
        if (abs(z) > limit) return false;
    }
    return scale <= limit;
}

template <typename Num>
Num convert(const Rational& v, const mpz_class& scale) {
    if constexpr (std::is_same_v<Num, std::int64_t>) {
        mpq_class scaled = v.raw() * mpq_class(scale);
        return static_cast<std::int64_t>(scaled.get_num().get_si());
    } else {
        return v;
    }
}

template <typename Num>
Problem<Num> buildProblem(const Instance& instance, const std::vector<Rational>& times, const mpz_class& sizeScale,
                          const mpz_class& timeScale) {
    Problem<Num> p;
    p.jobs = instance.size();
    p.segments = times.size() - 1;
    p.capacity = convert<Num>(Rational(1), sizeScale);
    for (const auto& t : times) p.time.push_back(convert<Num>(t, timeScale));
    std::vector<Rational> mass(p.segments);
    for (std::size_t i = 0; i < p.jobs; ++i) {
        const Job& job = instance[i];
        p.size.push_back(convert<Num>(job.size, sizeScale));
        const auto s = static_cast<std::size_t>(std::lower_bound(times.begin(), times.end(), job.start) - times.begin());
        const auto f = static_cast<std::size_t>(std::lower_bound(times.begin(), times.end(), job.finish) - times.begin());
        p.startIdx.push_back(s);
        p.finishIdx.push_back(f);
        for (std::size_t k = s; k < f; ++k) mass[k] += job.size;
        std::optional<std::size_t> twin;
        for (std::size_t j = i; j-- > 0;) {
            if (instance[j] == job) {
                twin = j;
                break;
            }
        }
        p.twin.push_back(twin);
    }
    for (const auto& m : mass) p.need.push_back(m.ceil());
    return p;
}

template <typename Num>
OptResult solve(std::shared_ptr<const Instance> instance, const Problem<Num>& problem, const mpz_class& timeScale) {
    Search<Num> search(problem);
    search.run();
    const auto& labels = search.bestLabels();
    std::size_t blocks = 0;
    for (std::size_t l : labels) blocks = std::max(blocks, l + 1);
    std::vector<std::vector<std::size_t>> groups(blocks);
    for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i]].push_back(i);

    OptResult out;
    if constexpr (std::is_same_v<Num, std::int64_t>) {
        out.bestCost = Rational(mpq_class(mpz_class(static_cast<long>(search.bestCost())), timeScale));
    } else {
        out.bestCost = search.bestCost();
    }
    out.partitionsExamined = search.leaves();
    out.nodesVisited = search.nodes();
    out.lowerBoundsUsed = lowerBounds(*instance);
    out.bestSchedule = Schedule(std::move(instance), groups);
    return out;
}

}  // namespace

OptResult bruteForceOpt(std::shared_ptr<const Instance> instance, std::size_t maxJobs) {
    requireValid(*instance);
    if (instance->size() > maxJobs) {
        throw std::invalid_argument("instance of " + std::to_string(instance->size()) +
                                    " jobs exceeds brute-force limit " + std::to_string(maxJobs));
    }
    if (instance->empty()) {
        OptResult out;
        out.bestSchedule = Schedule(instance, {});
        out.partitionsExamined = 1;
        return out;
    }
    const auto times = instance->eventTimes();
    std::vector<Rational> sizes;
    for (const auto& job : instance->jobs()) sizes.push_back(job.size);
    const mpz_class sizeScale = commonDenominator(sizes);
    const mpz_class timeScale = commonDenominator(times);
    const std::size_t terms = 2 * instance->size() + 2;
    if (fitsScaled(sizes, sizeScale, terms) && fitsScaled(times, timeScale, terms)) {
        const auto problem = buildProblem<std::int64_t>(*instance, times, sizeScale, timeScale);
        return solve(std::move(instance), problem, timeScale);
    }
    const auto problem = buildProblem<Rational>(*instance, times, 1, 1);
    return solve(std::move(instance), problem, 1);
}

OptResult bruteForceOpt(const Instance& instance, std::size_t maxJobs) {
    return bruteForceOpt(std::make_shared<const Instance>(instance), maxJobs);
}

LowerBounds lowerBounds(const Instance& instance) { return {utilization(instance), span(instance)}; }

std::int64_t activeCeilBound(const Instance& instance, const Rational& t) {
    for (std::size_t i = 0; i < instance.size(); ++i) {
        if (instance[i].duration() != 1) {
            throw std::invalid_argument("activeCeilBound requires unit durations; job " + std::to_string(i) +
                                        " has duration " + instance[i].duration().str());
        }
    }
    return arrivalMass(instance, t - 1, t).ceil();
}

Rational verifyCertificate(const Instance& instance, const Schedule& claimed) {
    if (!(claimed.instance() == instance)) throw CertificateError("certificate refers to a different instance");
    const auto violations = validateSchedule(claimed);
    if (!violations.empty()) throw CertificateError("infeasible certificate: " + violations.front().message);
    return cost(claimed);
}

}  // namespace rsic
