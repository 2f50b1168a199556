#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rsic/algorithms.hpp"
#include "rsic/generators.hpp"
#include "rsic/optimal.hpp"

using namespace rsic;
using oracle::R;

namespace {

// Sizes of the time-0 part written out from the construction, group i of k (0-based).
std::vector<Rational> expectedEarlySizes(std::int64_t k, const Rational& delta) {
    const std::int64_t p1[10] = {33, -3, -7, -7, -13, 9, -2, -2, -2, -2};
    const std::int64_t p2[10] = {46, -34, 6, 6, 12, -10, 1, 1, 1, 1};
    std::vector<Rational> out;
    for (std::int64_t i = 1; i <= k; ++i) {
        Rational di = delta;
        for (std::int64_t e = 0; e < k - i; ++e) di *= 18;
        for (auto c : p1) out.push_back(R(1, 6) + R(c) * di);
    }
    for (std::int64_t i = 1; i <= k; ++i) {
        Rational di = delta;
        for (std::int64_t e = 0; e < k - i; ++e) di *= 18;
        for (auto c : p2) out.push_back(R(1, 3) + R(c) * di);
    }
    for (std::int64_t j = 0; j < 10 * k; ++j) out.push_back(R(1, 2) + delta);
    return out;
}

}  // namespace

TEST_CASE("ggu instance contents for k = 6") {
    const auto g = gguExtended(6, R(1, 2));
    const Instance& in = *g.instance;
    REQUIRE(in.size() == 282);
    REQUIRE(g.layout.total() == 282);
    CHECK(validate(in).empty());

    Rational delta(1);
    for (int i = 0; i < 6; ++i) delta /= 18;
    delta /= 1000;
    CHECK(g.delta == delta);
    CHECK(defaultGguDelta(6) == delta);

    const auto early = expectedEarlySizes(6, delta);
    for (std::size_t i = 0; i < early.size(); ++i) {
        CAPTURE(i);
        CHECK(in[i].size == early[i]);
        CHECK(in[i].start == 0);
        CHECK(in[i].finish == 1);
    }
    std::size_t twelfths = 0, sixths = 0, quarters = 0;
    for (std::size_t i = g.layout.lateBegin(); i < in.size(); ++i) {
        CHECK(in[i].start == R(1, 2));
        CHECK(in[i].finish == R(3, 2));
        twelfths += in[i].size == R(1, 12);
        sixths += in[i].size == R(1, 6);
        quarters += in[i].size == R(1, 4);
    }
    CHECK(twelfths == 12);
    CHECK(sixths == 30);
    CHECK(quarters == 60);
}

TEST_CASE("ggu costs") {
    const auto g = gguExtended(6, R(1, 2));
    CHECK(cost(firstFit(g.instance).schedule) == 153);
    CHECK(verifyCertificate(*g.instance, g.certificate) == 82);
    CHECK(g.certificate.serverCount() == 82);

    const auto g12 = gguExtended(12, R(1, 4));
    CHECK(cost(firstFit(g12.instance).schedule) == R(17 * 12) * R(5, 4));
    CHECK(verifyCertificate(*g12.instance, g12.certificate) == 163);
}

TEST_CASE("ggu firstfit structure") {
    for (std::int64_t k : {6, 12}) {
        const auto g = gguExtended(k, R(1, 2));
        const auto ff = firstFit(g.instance);
        const auto& s = ff.schedule;
        const auto& lay = g.layout;
        const auto uk = static_cast<std::size_t>(k);
        REQUIRE(s.serverCount() == 17 * uk);
        for (std::size_t i = 0; i < uk; ++i) {
            Rational di = g.delta;
            for (std::size_t e = 0; e + 1 + i < uk; ++e) di *= 18;
            const Rational l1 = load(*g.instance, s.server(2 * i), R(0));
            const Rational l2 = load(*g.instance, s.server(2 * i + 1), R(0));
            CHECK(l1 == R(5, 6) + 3 * di);
            CHECK(l2 == R(5, 6) + di);
            const Rational expect2[5] = {R(2, 3) + 12 * di, R(2, 3) + 12 * di, R(2, 3) + 2 * di, R(2, 3) + 2 * di,
                                         R(2, 3) + 2 * di};
            for (std::size_t j = 0; j < 5; ++j) {
                CHECK(load(*g.instance, s.server(2 * uk + 5 * i + j), R(0)) == expect2[j]);
            }
        }
        std::set<std::size_t> lateServers;
        for (std::size_t i = lay.lateBegin(); i < lay.total(); ++i) {
            CHECK_FALSE(ff.decisions[i].openedNewServer);
            lateServers.insert(ff.decisions[i].serverId);
        }
        CHECK(lateServers.size() == 17 * uk);
        for (const auto& server : s.servers()) CHECK(server.duration() == R(3, 2));
    }
}

TEST_CASE("ggu parameter checks") {
    CHECK_THROWS_AS((void)gguExtended(4, R(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS((void)gguExtended(0, R(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS((void)gguExtended(6, R(1)), std::invalid_argument);
    CHECK_THROWS_AS((void)gguExtended(6, R(0)), std::invalid_argument);
    CHECK_THROWS_AS((void)gguExtended(6, R(1, 2), Rational::pow(R(18), -6) / 100), std::invalid_argument);
    CHECK_THROWS_AS((void)gguExtended(6, R(1, 2), R(0)), std::invalid_argument);
    CHECK_NOTHROW((void)gguExtended(6, R(1, 2), Rational::pow(R(18), -6) / 101));
}

TEST_CASE("long uniform instance") {
    const Instance in = longUniform(2, 4);
    REQUIRE(in.size() == 10);
    CHECK(in[0].size == R(2, 3));
    CHECK(in[2].size == R(1, 3));
    CHECK(in[4].size == R(1, 3) + R(1, 8));
    CHECK(in[9].start == 4);
    CHECK(in[9].finish == 6);

    for (std::int64_t k : {2, 3, 5}) {
        for (std::int64_t l : {2, 4, 6}) {
            const Instance u = longUniform(k, l);
            const auto ff = firstFit(u);
            CHECK(ff.schedule.serverCount() == static_cast<std::size_t>(k));
            for (const auto& s : ff.schedule.servers()) {
                CHECK(s.openTime == 0);
                CHECK(s.closeTime == l + 2);
            }
            // Direct sum: 2k/3 at time 0, k/3 per odd time, k(1/3 + eps) per even time, all times 2.
            Rational direct = R(2, 3) * k * 2;
            for (std::int64_t time = 1; time <= l; ++time) {
                direct += (time % 2 == 1 ? R(1, 3) : R(1, 3) + R(1, k * l)) * k * 2;
            }
            CHECK(utilization(u) == direct);
            CHECK(utilization(u) == R(2, 3) * k * (l + 2) + 1);
        }
    }
    CHECK_THROWS_AS((void)longUniform(2, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)longUniform(1, 4), std::invalid_argument);
}

TEST_CASE("nextfit nemesis family") {
    const Instance one = nfNemesis(1);
    CHECK(one.size() == 4);
    CHECK(cost(nextFit(one).schedule) == bruteForceOpt(one).bestCost);

    Rational previous;
    for (std::int64_t n = 1; n <= 5; ++n) {
        const Instance in = nfNemesis(n);
        REQUIRE(in.size() == static_cast<std::size_t>(4 * n));
        const Rational nf = cost(nextFit(in).schedule);
        const Rational opt = bruteForceOpt(in, 24).bestCost;
        CHECK(nf == 2 * n);
        CHECK(opt == n + 1);
        CHECK(nf / opt >= previous);
        previous = nf / opt;
    }
    CHECK_THROWS_AS((void)nfNemesis(0), std::invalid_argument);
}

TEST_CASE("random families are valid and deterministic") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Instance a = randomTwoArrival(12, R(1, 3), seed, 8);
        CHECK(a == randomTwoArrival(12, R(1, 3), seed, 8));
        CHECK(validate(a).empty());
        for (const auto& job : a.jobs()) {
            CHECK((job.start == 0 || job.start == R(1, 3)));
            CHECK(job.duration() == 1);
            CHECK((job.size * 8).isInteger());
        }
        const Instance b = randomEqualDuration(15, R(3, 2), R(1, 4), R(2), seed, 10);
        CHECK(b == randomEqualDuration(15, R(3, 2), R(1, 4), R(2), seed, 10));
        CHECK(validate(b).empty());
        for (const auto& job : b.jobs()) {
            CHECK(job.start < 2);
            CHECK((job.start * 4).isInteger());
            CHECK(job.duration() == R(3, 2));
        }
    }
    CHECK_FALSE(randomTwoArrival(12, R(1, 3), 1, 8) == randomTwoArrival(12, R(1, 3), 2, 8));
}

TEST_CASE("random two-arrival instances respect the duration-2 bound") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Instance in = scaleTimes(randomTwoArrival(6, R(1, 2), seed, 8), R(2));
        CHECK(cost(firstFit(in).schedule) <= 2 * bruteForceOpt(in).bestCost);
    }
}

TEST_CASE("uniform-server sampling") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Rational t = seed % 2 ? R(1, 28) : R(3, 4);
        const Instance in = randomUniformServers(8, t, seed, 12);
        CHECK(in.size() <= 8);
        const auto ff = firstFit(in);
        for (const auto& s : ff.schedule.servers()) {
            CHECK(s.openTime == 0);
            CHECK(s.closeTime == 1 + t);
        }
    }
}

TEST_CASE("generator dispatch by family name") {
    CHECK(parseFamily("ggu") == Family::gguExtended);
    CHECK(familyName(Family::randomEqualDuration) == "random-equal-duration");
    CHECK_THROWS_AS((void)parseFamily("nope"), std::invalid_argument);
    GeneratorSpec spec;
    spec.family = Family::longUniform;
    spec.params.k = 2;
    spec.params.l = 4;
    const auto lu = generate(spec);
    CHECK(lu.instance.size() == 10);
    CHECK_FALSE(lu.certificate.has_value());
    spec.family = Family::gguExtended;
    spec.params.k = 6;
    const auto g = generate(spec);
    CHECK(g.instance.size() == 282);
    REQUIRE(g.certificate.has_value());
    CHECK(cost(*g.certificate) == 82);
}
