#include <doctest.h>

#include <random>

#include "fsr/oracle.hpp"

using namespace fsr;

namespace {
const Modulus z9(3, 2);
const Modulus z5(5, 1);

bool contains(const std::vector<Poly>& set, const Poly& p) {
    for (const Poly& q : set)
        if (q == p) return true;
    return false;
}
} // namespace

TEST_CASE("brute-force feedback search on the worked sequences") {
    const Sequence s9 = make_sequence(z9, {6, 3, 1, 5, 6});
    const OracleResult r9 = oracle_shortest_feedback(s9, z9, false);
    CHECK(r9.complexity == 3);

    const Sequence s5 = make_sequence(z5, {4, 0, 4, 4, 2});
    const OracleResult r5 = oracle_shortest_feedback(s5, z5, true);
    CHECK(r5.complexity == 3);
    CHECK(contains(r5.solutions, Poly::parse(z5, "3x^2+4x+1")));
}

TEST_CASE("brute-force feedback search on the zero sequence") {
    const Sequence zeros = make_sequence(z9, {0, 0, 0});
    const OracleResult raw = oracle_shortest_feedback(zeros, z9, false);
    CHECK(raw.complexity == 0);
    for (const Poly& p : raw.solutions) {
        CHECK(p.degree() == 0);
        CHECK(p.constant_term().is_unit());
    }
    CHECK(raw.solutions.size() == 6); // the units of Z_9
    const OracleResult norm = oracle_shortest_feedback(zeros, z9, true);
    REQUIRE(norm.solutions.size() == 1);
    CHECK(norm.solutions[0] == Poly::parse(z9, "1"));
}

TEST_CASE("brute-force characteristic search matches the known families") {
    // reciprocal of the Z_9 example
    const Sequence rev = make_sequence(z9, {6, 5, 1, 3, 6});
    const OracleResult rc = oracle_min_char(rev, z9, true);
    CHECK(rc.complexity == 3);
    std::vector<Poly> expect;
    for (std::int64_t b = 0; b < 9; ++b)
        expect.push_back(Poly::parse(z9, "x^3+3x") + Residue(b, z9) * Poly::parse(z9, "4x^2+7x+7"));
    sort_unique_canonical(expect);
    CHECK(rc.solutions == expect);

    const Sequence rev3 = make_sequence(z9, {1, 3, 6});
    const OracleResult rc3 = oracle_min_char(rev3, z9, true);
    CHECK(rc3.complexity == 2);
    std::vector<Poly> expect3;
    for (std::int64_t b = 0; b < 9; ++b)
        expect3.push_back(Poly::parse(z9, "x^2+7x") + Residue(b, z9) * Poly::parse(z9, "8x+3"));
    sort_unique_canonical(expect3);
    CHECK(rc3.solutions == expect3);

    // a single unit element: no degree-0 annihilator, every monic x + d works
    const Sequence one = make_sequence(z9, {5});
    const OracleResult r1 = oracle_min_char(one, z9, true);
    CHECK(r1.complexity == 1);
    CHECK(r1.solutions.size() == 9);
    for (const Poly& p : r1.solutions) CHECK(p.degree() == 1);
}

TEST_CASE("brute-force complexity profiles") {
    const Sequence s9 = make_sequence(z9, {6, 3, 1, 5, 6});
    const auto prof = oracle_complexity_profile(s9, z9);
    REQUIRE(prof.size() == 5);
    CHECK(prof[2] == 3);
    CHECK(prof[4] == 3);

    const Sequence zeros = make_sequence(z5, {0, 0, 0, 0});
    CHECK(oracle_complexity_profile(zeros, z5) == std::vector<std::int64_t>{0, 0, 0, 0});

    const Sequence s5 = make_sequence(z5, {4, 0, 4, 4, 2});
    CHECK(oracle_complexity_profile(s5, z5).back() == 3);
}

TEST_CASE("profiles are nondecreasing on random sequences") {
    std::mt19937 rng(77);
    for (const Modulus& m : {Modulus(2, 2), Modulus(3, 1), z5}) {
        std::uniform_int_distribution<std::int64_t> val(0, m.q() - 1);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::int64_t> sv(5);
            for (auto& v : sv) v = val(rng);
            const auto prof = oracle_complexity_profile(make_sequence(m, sv), m);
            for (std::size_t i = 1; i < prof.size(); ++i) CHECK(prof[i - 1] <= prof[i]);
        }
    }
}

TEST_CASE("the feasibility budget guards runaway searches") {
    // 1,5,7,... has no register of length <= 1, so the search must reach the
    // length-2 level, whose 486 candidates blow a budget of 100
    const Sequence big = make_sequence(z9, {1, 5, 7, 2, 8, 4, 1, 5});
    CHECK_THROWS_AS(oracle_shortest_feedback(big, z9, false, 100), cost_error);
    CHECK_THROWS_AS(oracle_min_char(big, z9, false, 100), cost_error);
}
