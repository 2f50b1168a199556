#include <doctest.h>

#include "oracles.hpp"
#include "rsic/algorithms.hpp"
#include "rsic/analysis.hpp"
#include "rsic/generators.hpp"
#include "rsic/optimal.hpp"

using namespace rsic;
using oracle::make;
using oracle::R;

TEST_CASE("weight w1") {
    CHECK(weightW1(R(1, 2), R(1, 2)) == R(117, 131));
    // 234/131 * 3/4 + 18/131
    CHECK(weightW1(R(3, 4), R(1, 2)) == R(351, 262) + R(36, 262));
    CHECK(weightW1(R(3, 4), R(1, 2)) == R(387, 262));
    CHECK(weightW1(R(1, 1000000), R(1, 2)) < R(1, 100000));
    CHECK(weightW1(R(1), R(1, 28)) == weightRatio(R(1, 28)));
    CHECK_THROWS_AS((void)weightW1(R(0), R(1, 2)), std::domain_error);
    CHECK_THROWS_AS((void)weightW1(R(3, 2), R(1, 2)), std::domain_error);
    CHECK_THROWS_AS((void)weightW1(R(1, 2), R(1)), std::domain_error);
}

TEST_CASE("weight w2") {
    CHECK(weightW2(R(1, 2), R(1, 2)) == R(126, 131));
    CHECK_THROWS_AS((void)weightW2(R(1), R(0)), std::domain_error);
    CHECK_THROWS_AS((void)weightW2(R(1), R(1, 29)), std::domain_error);
    CHECK_NOTHROW((void)weightW2(R(1), R(1, 28)));
    for (const auto& t : {R(1, 28), R(1, 3), R(9, 10)}) {
        CHECK(weightW2(R(1, 5) + R(1, 7), t) == weightW2(R(1, 5), t) + weightW2(R(1, 7), t));
    }
}

TEST_CASE("server type table") {
    CHECK(classifyLoads(R(9, 10), R(19, 20), 2) == ServerType::I);
    CHECK(classifyLoads(R(9, 10), R(9, 10), 2) == ServerType::belowThreshold);
    CHECK(classifyLoads(R(5, 6), R(11, 12), 1) == ServerType::I);
    CHECK(classifyLoads(R(7, 10), R(7, 8), 1) == ServerType::IIb);
    CHECK(classifyLoads(R(7, 10), R(7, 8), 2) == ServerType::IIc);
    CHECK(classifyLoads(R(7, 10), R(11, 12), 2) == ServerType::IIa);
    CHECK(classifyLoads(R(2, 3), R(5, 6), 1) == ServerType::IIb);
    CHECK(classifyLoads(R(2, 3), R(4, 5), 1) == ServerType::belowThreshold);
    CHECK(classifyLoads(R(11, 20), R(4, 5), 1) == ServerType::IIIc);
    CHECK(classifyLoads(R(11, 20), R(6, 7), 1) == ServerType::IIIb);
    CHECK(classifyLoads(R(11, 20), R(23, 24), 1) == ServerType::IIIa);
    CHECK(classifyLoads(R(11, 20), R(4, 5), 2) == ServerType::belowThreshold);
    CHECK(classifyLoads(R(1, 2), R(1), 1) == ServerType::belowThreshold);
    CHECK(classifyLoads(R(11, 20), R(7, 10), 1) == ServerType::belowThreshold);
}

TEST_CASE("eps values of the table rows") {
    const auto iiic = describeServer(3, R(11, 20), R(4, 5), 1);
    CHECK(iiic.type == ServerType::IIIc);
    CHECK(*iiic.eps1 == R(7, 60));
    CHECK(*iiic.eps2 == R(1, 30));
    const auto iib = describeServer(0, R(7, 10), R(7, 8), 1);
    CHECK(*iib.eps1 == R(2, 15));
    CHECK(*iib.eps2 == R(1, 24));
    const auto one = describeServer(1, R(9, 10), R(19, 20), 2);
    CHECK_FALSE(one.eps1.has_value());
    CHECK(epsViolations({iiic, iib, one}).empty());
    // eps1 = 1/60 and eps2 = 1/12 break eps1 > eps2.
    const auto tight = describeServer(4, R(13, 20), R(3, 4), 1);
    CHECK(tight.type == ServerType::IIIc);
    CHECK(epsViolations({tight}) == std::vector<std::size_t>{4});
}

TEST_CASE("classification requires the uniform two-arrival setting") {
    const auto spread = firstFit(make({{R(1, 2), R(0), R(1)}, {R(3, 4), R(1, 2), R(3, 2)}}));
    CHECK_THROWS_WITH_AS((void)classifyServers(spread, R(1, 2)), doctest::Contains("server 0"), std::invalid_argument);
    const auto longJobs = firstFit(make({{R(1, 2), R(0), R(2)}}));
    CHECK_THROWS_WITH_AS((void)classifyServers(longJobs, R(1, 2)), doctest::Contains("job 0"), std::invalid_argument);
    const auto fine = firstFit(make({{R(9, 10), R(0), R(1)}, {R(1, 20), R(1, 2), R(3, 2)}}));
    const auto types = classifyServers(fine, R(1, 2));
    REQUIRE(types.size() == 1);
    CHECK(types[0].type == ServerType::I);
    CHECK(types[0].itemsAtZero == 1);
}

TEST_CASE("weights on the ggu instance against its certificate") {
    const auto g = gguExtended(6, R(1, 2));
    const auto ff = firstFit(g.instance);
    const auto report = verifyWeights(ff, g.certificate, R(1, 2));
    CHECK(report.optChecksPass());
    CHECK(report.conservationHolds());
    CHECK(report.ffViolations.size() <= kIgnoredBudget);
    CHECK(report.passes());
    CHECK(report.perServerWeight.size() == 102);
    CHECK(report.optServerChecks.size() == 82);

    Rational items;
    for (const auto& job : g.instance->jobs()) {
        items += job.start == 0 ? weightW1(job.size, R(1, 2)) : weightW2(job.size, R(1, 2));
    }
    CHECK(report.itemTotal == items);
    CHECK(report.ffTotal == items);
}

TEST_CASE("a full time-0 job alone meets the bound exactly") {
    for (const auto& t : {R(1, 28), R(1, 4), R(1, 2), R(99, 100)}) {
        CHECK(weightW1(R(1), t) == weightRatio(t) * 1);
        CHECK(weightW1(R(1), t) == R(156, 131) * (1 + t) + R(12, 131) * (1 + t));
    }
}

TEST_CASE("weights versus brute-force OPT on uniform instances") {
    const Rational ts[] = {R(1, 28), R(1, 4), R(1, 2), R(3, 4)};
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Rational& t = ts[seed % 4];
        const Instance in = randomUniformServers(8, t, seed, 12);
        const auto ff = firstFit(in);
        const auto opt = bruteForceOpt(in);
        const auto report = verifyWeights(ff, opt.bestSchedule, t);
        CAPTURE(seed);
        CHECK(report.passes());
        CHECK(report.serverTypes.size() == ff.schedule.serverCount());
        for (const auto& c : report.optServerChecks) {
            const auto& server = opt.bestSchedule.server(c.serverId);
            CHECK(c.bound == weightRatio(t) * server.duration());
        }
    }
}

TEST_CASE("weight report rejects mismatched schedules") {
    const Instance in = randomUniformServers(6, R(1, 2), 3, 12);
    const auto ff = firstFit(in);
    const Instance other = randomUniformServers(6, R(1, 2), 4, 12);
    CHECK_THROWS_AS((void)verifyWeights(ff, firstFit(other).schedule, R(1, 2)), std::invalid_argument);
}

TEST_CASE("layer profile on long uniform k = 4, l = 4") {
    const auto ff = firstFit(longUniform(4, 4));
    const auto profile = layerProfile(ff, 4, 4);
    REQUIRE(profile.layerMass.size() == 5);
    CHECK(profile.layerMass[0] == R(8, 3));
    CHECK(profile.layerMass[1] == R(4, 3));
    CHECK(profile.layerMass[1] + profile.layerMass[0] / 2 == R(8, 3));
    const auto checks = layerInequalities(profile);
    CHECK(checks.size() == 5);
    for (const auto& c : checks) CHECK(c.holds);
    CHECK(checks[0].rhs == 2);
    CHECK(checks[1].rhs == R(3, 2));

    Rational mass;
    for (const auto& x : profile.layerMass) mass += x * 2;
    CHECK(mass == utilization(longUniform(4, 4)));
}

TEST_CASE("layer profile hypotheses") {
    const auto ff = firstFit(longUniform(4, 4));
    CHECK_THROWS_AS((void)layerProfile(ff, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)layerProfile(ff, 4, 2), std::invalid_argument);
    // No server rented over [0, l+2] at all.
    const auto none = firstFit(make({{R(1, 2), R(1), R(3)}}));
    CHECK_THROWS_WITH_AS((void)layerProfile(none, 2, 2), doctest::Contains("no server"), std::invalid_argument);
    CHECK_THROWS_AS((void)layerProfile(firstFit(make({{R(1, 2), R(0), R(1)}})), 2, 2), std::invalid_argument);
}

TEST_CASE("multiplier sequences") {
    const auto s = multiplierSequences(200);
    REQUIRE(s.f.size() == 201);
    CHECK(s.f[0] == 1);
    CHECK(s.f[1] == R(1, 2));
    CHECK(s.f[2] == R(3, 4));
    CHECK(s.gRecurrence[0] == 1);
    CHECK(s.gRecurrence[1] == R(3, 2));
    CHECK(s.gRecurrence[2] == R(9, 4));
    CHECK(s.gClosed[2] == (R(12) + R(1, 4) - R(4) + R(12)) / 9);
    CHECK(s.gClosed[2] == R(9, 4));
    CHECK(s.agree());
    CHECK(gClosedForm(0) == 1);
    CHECK(gClosedForm(1) == R(3, 2));
    // Independent prefix sums of f_i = 1 - f_{i-1}/2.
    Rational f(1);
    Rational g(1);
    for (std::size_t i = 1; i <= 200; ++i) {
        f = R(1) - f / 2;
        g += f;
        CHECK(s.gPartial[i] == g);
    }
    CHECK(multiplierSequences(0).gClosed.size() == 1);
}

TEST_CASE("util ratio bound on long uniform instances") {
    const auto small = utilRatioBound(firstFit(longUniform(2, 2)), 2, 2);
    CHECK(small.bound == R(1, 6));
    CHECK(small.ratio == R(2, 3) + R(1, 8));
    CHECK(small.pass);

    const auto big = utilRatioBound(firstFit(longUniform(100, 100)), 100, 100);
    CHECK(big.bound == R(2, 3) - R(2, 300) - R(2, 306));
    CHECK(big.bound.toDouble() == doctest::Approx(0.653).epsilon(0.001));
    CHECK(big.ratio == R(2, 3) + R(1, 100 * 102));
    CHECK(big.pass);
}

TEST_CASE("ratio reports carry their direction") {
    const auto lower = ratioReport(R(153), R(82), RatioKind::certificateUpper);
    CHECK(lower.ratio == R(153, 82));
    CHECK(lower.relation == ">=");
    const auto exact = ratioReport(R(7, 3), R(7, 3), RatioKind::exactOpt);
    CHECK(exact.ratio == 1);
    CHECK(exact.relation == "=");
    const auto upper = ratioReport(R(4), R(2), RatioKind::lowerBound);
    CHECK(upper.ratio == 2);
    CHECK(upper.relation == "<=");
    CHECK_THROWS_AS((void)ratioReport(R(1), R(0), RatioKind::exactOpt), std::invalid_argument);
    CHECK(ratioKindName(RatioKind::certificateUpper) == "certificateUpper");
}

TEST_CASE("nextfit per-time checks") {
    const Instance in = make({{R(6, 10), R(0), R(1)}, {R(6, 10), R(0), R(1)}, {R(1, 2), R(1, 2), R(3, 2)}});
    const auto checks = nextFitPerTimeChecks(nextFit(in));
    REQUIRE(checks.size() == 4);
    CHECK(checks[0].t == 0);
    CHECK(checks[0].active == 2);
    CHECK(checks[0].ceilBound == 2);
    CHECK(checks[1].t == R(1, 2));
    CHECK(checks[1].active == 3);
    for (const auto& c : checks) CHECK(c.pass);
}

TEST_CASE("strict-case inequalities on a hand-built trace") {
    // Two C servers, two D servers and one E server.
    const Instance in = make({{R(3, 5), R(0), R(2)},
                              {R(3, 5), R(0), R(2)},
                              {R(3, 5), R(0), R(2)},
                              {R(3, 5), R(0), R(2)},
                              {R(2, 5), R(1), R(3)},
                              {R(2, 5), R(1), R(3)},
                              {R(2, 3), R(1), R(3)}});
    const auto ff = firstFit(in);
    const auto split = serverTypePartition(ff);
    CHECK(split.k1() == 2);
    CHECK(split.k2() == 2);
    CHECK(split.k3() == 1);
    const auto checks = strictCaseInequalities(split, ff.schedule);
    CHECK(checks.size() == 5);
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CHECK(c.holds);
    }
    CHECK(cost(ff.schedule) == 2 * 2 + 3 * 2 + 2);
}
