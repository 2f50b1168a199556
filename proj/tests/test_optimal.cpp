#include <doctest.h>

#include "oracles.hpp"
#include "rsic/algorithms.hpp"
#include "rsic/generators.hpp"
#include "rsic/optimal.hpp"

using namespace rsic;
using oracle::make;
using oracle::R;

TEST_CASE("brute force on small fixed instances") {
    const auto one = bruteForceOpt(make({{R(1, 2), R(0), R(2)}}));
    CHECK(one.bestCost == 2);
    CHECK(one.bestSchedule.serverCount() == 1);

    const auto apart = bruteForceOpt(make({{R(6, 10), R(0), R(2)}, {R(6, 10), R(0), R(2)}}));
    CHECK(apart.bestCost == 4);
    CHECK(apart.bestSchedule.serverCount() == 2);

    const Instance three = make({{R(1, 2), R(0), R(2)}, {R(1, 2), R(0), R(2)}, {R(1, 2), R(1), R(3)}});
    CHECK(oracle::naiveOpt(three) == 4);
    const auto r = bruteForceOpt(three);
    CHECK(r.bestCost == 4);
    CHECK(oracle::groupsOf(r.bestSchedule) == oracle::Groups{{0, 1}, {2}});

    const auto empty = bruteForceOpt(Instance());
    CHECK(empty.bestCost == 0);
    CHECK(empty.bestSchedule.serverCount() == 0);
}

TEST_CASE("brute force refuses instances over the limit") {
    const Instance big = nfNemesis(3);  // 12 jobs
    CHECK_THROWS_WITH_AS((void)bruteForceOpt(big), doctest::Contains("exceeds brute-force limit"),
                         std::invalid_argument);
    CHECK(bruteForceOpt(big, 12).bestCost == 4);
}

TEST_CASE("brute force matches exhaustive enumeration") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const std::int64_t n = 1 + static_cast<std::int64_t>(seed % 7);
        const Instance in = seed % 2 == 0 ? randomEqualDuration(n, R(1), R(1, 2), R(2), seed, 6)
                                          : randomEqualDuration(n, R(1 + seed % 3), R(1, 3), R(3), seed, 5);
        CAPTURE(seed);
        const auto r = bruteForceOpt(in);
        CHECK(r.bestCost == oracle::naiveOpt(in));
        CHECK(validateSchedule(r.bestSchedule).empty());
        CHECK(cost(r.bestSchedule) == r.bestCost);
        CHECK(r.bestCost >= lowerBounds(in).best());
        CHECK(r.bestCost <= cost(firstFit(in).schedule));
        CHECK(r.bestCost <= cost(nextFit(in).schedule));
    }
}

TEST_CASE("brute force with mixed durations matches exhaustive enumeration") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        // Concatenate two random families with different durations, then sort by start.
        auto a = randomEqualDuration(3, R(1), R(1, 2), R(2), seed, 4).jobs();
        const auto b = randomEqualDuration(3, R(5, 2), R(1, 2), R(2), seed + 1000, 4).jobs();
        a.insert(a.end(), b.begin(), b.end());
        std::stable_sort(a.begin(), a.end(), [](const Job& x, const Job& y) { return x.start < y.start; });
        const Instance in(a);
        CAPTURE(seed);
        CHECK(bruteForceOpt(in).bestCost == oracle::naiveOpt(in));
    }
}

TEST_CASE("brute force on identical intervals is bin packing times duration") {
    // Best packing: {1/2,1/2}, {1/3,1/3,1/3}, {2/3}, so 3 bins of duration 3.
    const Instance in = make({{R(1, 2), R(0), R(3)},
                              {R(1, 2), R(0), R(3)},
                              {R(1, 3), R(0), R(3)},
                              {R(1, 3), R(0), R(3)},
                              {R(1, 3), R(0), R(3)},
                              {R(2, 3), R(0), R(3)}});
    CHECK(bruteForceOpt(in).bestCost == 9);
}

TEST_CASE("brute force returns the first minimal partition in enumeration order") {
    // {0,1},{2} and {0,2},{1} and {0},{1,2} all cost 2; the first restricted-growth string is 0,0,1.
    const Instance in = make({{R(1, 2), R(0), R(1)}, {R(1, 2), R(0), R(1)}, {R(1, 2), R(0), R(1)}});
    CHECK(oracle::groupsOf(bruteForceOpt(in).bestSchedule) == oracle::Groups{{0, 1}, {2}});
    // 0,0,0,0 and 0,0,0,1 overflow; 0,0,1,0 is feasible with two servers.
    const Instance mixed = make({{R(1, 2), R(0), R(1)}, {R(1, 3), R(0), R(1)}, {R(1, 2), R(0), R(1)}, {R(1, 6), R(0), R(1)}});
    CHECK(oracle::groupsOf(bruteForceOpt(mixed).bestSchedule) == oracle::Groups{{0, 1, 3}, {2}});
}

TEST_CASE("brute force is exact with large denominators") {
    const Rational tiny = Rational::pow(R(18), -20);
    const Instance in = make({{R(1, 2) + tiny, R(0), R(1)}, {R(1, 2) - tiny, R(0), R(1)}, {R(1, 2), R(0), R(1) + tiny}});
    const auto r = bruteForceOpt(in);
    CHECK(r.bestCost == oracle::naiveOpt(in));
    CHECK(r.bestCost == 2 + tiny);
}

TEST_CASE("lower bounds") {
    const auto one = lowerBounds(make({{R(1, 2), R(0), R(2)}}));
    CHECK(one.utilBound == 1);
    CHECK(one.spanBound == 2);
    CHECK(lowerBounds(longUniform(3, 4)).utilBound == 13);
    const auto none = lowerBounds(Instance());
    CHECK(none.utilBound == 0);
    CHECK(none.spanBound == 0);
}

TEST_CASE("active ceiling bound") {
    const Instance halves = make({{R(1, 2), R(1, 2), R(3, 2)}, {R(1, 2), R(1), R(2)}, {R(1, 2), R(1), R(2)}});
    CHECK(activeCeilBound(halves, R(1)) == 2);
    CHECK(activeCeilBound(halves, R(5)) == 0);
    const Instance exact = make({{R(1), R(0), R(1)}, {R(1, 2), R(0), R(1)}, {R(1, 2), R(0), R(1)}});
    CHECK(activeCeilBound(exact, R(0)) == 2);
    CHECK_THROWS_AS((void)activeCeilBound(make({{R(1, 2), R(0), R(2)}}), R(1)), std::invalid_argument);
}

TEST_CASE("active ceiling bound never exceeds OPT's active servers") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const Instance in = randomEqualDuration(1 + static_cast<std::int64_t>(seed % 8), R(1), R(1, 3), R(3), seed, 6);
        const auto opt = bruteForceOpt(in);
        for (const auto& t : in.eventTimes()) {
            CHECK(static_cast<std::int64_t>(activeCount(opt.bestSchedule, t)) >= activeCeilBound(in, t));
        }
    }
}

TEST_CASE("certificate verification") {
    auto in = std::make_shared<const Instance>(make({{R(6, 10), R(0), R(1)}, {R(6, 10), R(0), R(2)}}));
    CHECK(verifyCertificate(*in, Schedule(in, {{0}, {1}})) == 3);
    CHECK_THROWS_WITH_AS((void)verifyCertificate(*in, Schedule(in, {{0, 1}})), doctest::Contains("server 0"),
                         CertificateError);
    CHECK_THROWS_AS((void)verifyCertificate(*in, Schedule(in, {{0}})), CertificateError);
    const Instance other = make({{R(1, 2), R(0), R(1)}, {R(6, 10), R(0), R(2)}});
    CHECK_THROWS_AS((void)verifyCertificate(other, Schedule(in, {{0}, {1}})), CertificateError);
}

TEST_CASE("brute force is below any certificate") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto in = std::make_shared<const Instance>(randomTwoArrival(8, R(1, 2), seed, 12));
        const Rational opt = bruteForceOpt(in).bestCost;
        CHECK(opt <= verifyCertificate(*in, firstFit(in).schedule));
        std::vector<std::vector<std::size_t>> singles;
        Rational total;
        for (std::size_t i = 0; i < in->size(); ++i) {
            singles.push_back({i});
            total += (*in)[i].duration();
        }
        CHECK(verifyCertificate(*in, Schedule(in, singles)) == total);
        CHECK(opt <= total);
    }
}
