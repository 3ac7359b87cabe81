#include <doctest.h>

#include "fsr/synth.hpp"
#include "fsr/verify.hpp"

using namespace fsr;

namespace {
const Modulus z9(3, 2);
const Modulus z5(5, 1);

PolyRowVec row(const Modulus& m, const char* g1, const char* g2) {
    return {Poly::parse(m, g1), Poly::parse(m, g2)};
}

std::vector<PolyRowVec> final_rows(const Modulus& m, const std::vector<std::int64_t>& sv,
                                   SynthMode mode) {
    const Sequence s = make_sequence(m, sv);
    return synthesize(s, m, mode, false).state.rows;
}
} // namespace

TEST_CASE("minimal Groebner basis characterization over a field") {
    const auto grob = final_rows(z5, {4, 0, 4, 4}, SynthMode::kGrobnerField);
    CHECK(is_minimal_grobner_field(grob[0], grob[1], 4));

    const auto bm = final_rows(z5, {4, 0, 4, 4}, SynthMode::kBmCompatField);
    CHECK_FALSE(is_minimal_grobner_field(bm[0], bm[1], 4)); // both rows lead in position 2

    const SynthState st0 = init(z5, SynthMode::kGrobnerField);
    CHECK(is_minimal_grobner_field(st0.rows[0], st0.rows[1], 0));

    CHECK_THROWS_AS(is_minimal_grobner_field(row(z9, "x", "0"), row(z9, "0", "1"), 0),
                    std::invalid_argument);
}

TEST_CASE("p-PLM holds for the Z_9 example rows and fails on cancellation") {
    const PBasis good{z9, final_rows(z9, {6, 3, 1, 5, 6}, SynthMode::kGrobnerRing)};
    CHECK(check_p_plm(good, 1));

    const PBasis bad{z9, {row(z9, "0", "1"), row(z9, "0", "8")}};
    std::string why;
    CHECK_FALSE(check_p_plm(bad, 0, &why)); // 1*(1) + 1*(8) = 0
    CHECK(why == "(1, 1)");
}

TEST_CASE("a field minimal Groebner basis has the p-PLM property at r = 1") {
    const PBasis basis{z5, final_rows(z5, {4, 0, 4, 4, 2}, SynthMode::kGrobnerField)};
    CHECK(check_p_plm(basis, 2));
}

TEST_CASE("p-generator sequence checks") {
    const PBasis init_rows{z9, init(z9, SynthMode::kGrobnerRing).rows};
    CHECK(check_p_generator_sequence(init_rows, 1));

    const auto rows = final_rows(z9, {6, 3, 1, 5, 6}, SynthMode::kGrobnerRing);
    CHECK(check_p_generator_sequence(PBasis{z9, rows}, 2));

    // moving the last row first breaks the suffix condition: p*v_4 != 0
    CHECK_FALSE(check_p_generator_sequence(PBasis{z9, {rows[3], rows[0], rows[1], rows[2]}}, 2));
}

TEST_CASE("p-basis expansion of a minimal Groebner basis") {
    // field case: orders are all 1, the expansion is the basis itself
    const auto grob5 = final_rows(z5, {4, 0, 4, 4, 2}, SynthMode::kGrobnerField);
    // rows sorted by decreasing lm: g2 has lm x^3 e1 < g1's x^3 e2
    const std::vector<PolyRowVec> sorted5{grob5[0], grob5[1]};
    const PBasis exp5 = p_expand(sorted5, MonomialOrder::kTop);
    CHECK(exp5.rows == sorted5);

    // the two-element minimal Groebner basis of the Z_9 example expands to
    // exactly the four rows the iteration produces
    const std::vector<PolyRowVec> gb{row(z9, "0", "x^3+3x"), row(z9, "2x^3+3x", "4x^2+7x+7")};
    const PBasis expanded = p_expand(gb, MonomialOrder::kTop);
    REQUIRE(expanded.rows.size() == 4);
    CHECK(expanded.rows[0] == row(z9, "0", "x^3+3x"));
    CHECK(expanded.rows[1] == row(z9, "0", "3x^3"));
    CHECK(expanded.rows[2] == row(z9, "2x^3+3x", "4x^2+7x+7"));
    CHECK(expanded.rows[3] == row(z9, "6x^3", "3x^2+3x+3"));
    CHECK(expanded.rows == final_rows(z9, {6, 3, 1, 5, 6}, SynthMode::kGrobnerRing));
    CHECK(check_p_generator_sequence(expanded, 2));
    CHECK(check_p_plm(expanded, 1));

    // a single row with no matching leading position expands by its order
    const PBasis single = p_expand({row(z9, "0", "x^2+1")}, MonomialOrder::kTop);
    REQUIRE(single.rows.size() == 2);
    CHECK(single.rows[0] == row(z9, "0", "x^2+1"));
    CHECK(single.rows[1] == row(z9, "0", "3x^2+3"));

    // unsorted input is rejected
    CHECK_THROWS_AS(p_expand({gb[1], gb[0]}, MonomialOrder::kTop), std::invalid_argument);
}

TEST_CASE("intermediate states are p-bases in minimal Groebner p-basis order") {
    // the row order of an intermediate R^k need not be a p-generator
    // sequence; sorted by decreasing lm (ties by decreasing ord) it is one,
    // with the p-PLM property, at every step
    const Sequence s = make_sequence(z9, {6, 3, 1, 5, 6});
    SynthState st = init(z9, SynthMode::kGrobnerRing);
    for (std::size_t k = 1; k <= s.size(); ++k) {
        step(st, std::span(s).subspan(0, k));
        const PBasis sorted = p_basis_order(z9, st.rows);
        const std::int64_t bound = std::max<std::int64_t>(2, max_row_degree_spread(sorted.rows));
        CHECK(check_p_generator_sequence(sorted, bound));
        CHECK(check_p_plm(sorted, 1));
    }
    // the final R^5 is already in that order
    CHECK(p_basis_order(z9, st.rows).rows == st.rows);
}

TEST_CASE("the p-generator search needs the documented degree headroom") {
    // for S = 0,3,6 the representation of p*[x^4 0] requires a coefficient of
    // degree 3 on the constant row, so a bound-2 search must come up empty
    const Sequence s = make_sequence(z9, {0, 3, 6});
    const auto rows = synthesize(s, z9, SynthMode::kGrobnerRing, false).state.rows;
    const PBasis sorted = p_basis_order(z9, rows);
    CHECK(max_row_degree_spread(sorted.rows) == 4);
    CHECK_FALSE(check_p_generator_sequence(sorted, 2));
    CHECK(check_p_generator_sequence(sorted, 3));
    CHECK(check_p_generator_sequence(sorted, 4));
}
