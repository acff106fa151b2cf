#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brieskorn/errors.hpp"
#include "brieskorn/obstruct.hpp"
#include "oracles/grids.hpp"
#include "oracles/markov_oracle.hpp"

#include <algorithm>

using namespace brieskorn;
using arith::BigInt;
using arith::Rational;
using obstruct::SuitabilityReason;
using seifert::BrieskornData;

namespace {

bool has_note(const obstruct::ObstructionReport& r, const std::string& fragment)
{
    return std::any_of(r.notes.begin(), r.notes.end(),
                       [&](const std::string& n) { return n.find(fragment) != std::string::npos; });
}

void check_consistency(const obstruct::ObstructionReport& r)
{
    REQUIRE(r.weinstein_constraints.min_b2 == 4 * r.d.value);
    if (r.d.value > 0)
        REQUIRE(r.weinstein_constraints.min_b2 >= 8);
    if (r.d.value == 0)
        REQUIRE(r.diagonalizable);
    if (r.diagonalizable)
        REQUIRE(r.strongly_suitable);
    REQUIRE(r.strongly_suitable == (r.reason != SuitabilityReason::none));
    REQUIRE(r.small_surface.excluded_small_k_max == 7);
    REQUIRE(r.small_surface.excluded_all_positive == r.strongly_suitable);
    REQUIRE(r.weinstein_constraints.form_must_be == "negative definite, even, nontrivial");
    REQUIRE(r.d.agree);
}

} // namespace

TEST_CASE("analyze Sigma(2,3,5)")
{
    auto r = obstruct::analyze(BrieskornData({2, 3, 5}));
    check_consistency(r);
    CHECK(r.label == "Sigma(2,3,5)");
    CHECK(r.seifert == "M(-2; 1/2, 2/3, 4/5)");
    CHECK(r.b2 == 8);
    CHECK(r.d.value == 2);
    CHECK(r.max_char_square == 0);
    CHECK_FALSE(r.diagonalizable);
    CHECK_FALSE(r.strongly_suitable);
    CHECK(r.reason == SuitabilityReason::none);
    CHECK(r.weinstein_constraints.min_b2 == 8);
    CHECK(r.small_surface.excludes_s2xs2);
    CHECK_FALSE(r.small_surface.excluded_all_positive);
    CHECK(has_note(r, "realized at k=8"));
    CHECK(has_note(r, "HF_red(-Sigma(2,3,5)) = 0"));
    REQUIRE(r.family);
    CHECK(r.family->candidate_xi0);
    CHECK(r.family->c_red_zero_confirmed == true);
    CHECK(r.family->h_xi0 == Rational(-2));
    CHECK(r.family->d_minus_y == -2);
    CHECK(r.family->surgery == "-1 surgery on T(2,-3)");
}

TEST_CASE("analyze Sigma(2,3,7) and Sigma(2,3,11)")
{
    auto r = obstruct::analyze(BrieskornData({2, 3, 7}));
    check_consistency(r);
    CHECK(r.d.value == 0);
    CHECK(r.diagonalizable);
    CHECK(r.strongly_suitable);
    CHECK(r.reason == SuitabilityReason::d_zero);
    CHECK(r.small_surface.excluded_all_positive);
    CHECK(r.max_char_square == -4);
    REQUIRE(r.family);
    CHECK_FALSE(r.family->zero_rot_exists); // -1 center: outside the framing scheme
    CHECK(r.family->surgery == "-1 surgery on T(2,3)");

    auto s = obstruct::analyze(BrieskornData({2, 3, 11}));
    check_consistency(s);
    CHECK(s.strongly_suitable);
    CHECK(s.reason == SuitabilityReason::family);
    CHECK(s.d.value == 2);
    REQUIRE(s.family);
    CHECK(s.family->n == 2);
    CHECK(s.family->zero_rot_exists == false);
    CHECK(s.family->surgery == "-1/2 surgery on T(2,-3)");
}

TEST_CASE("family verdict examples")
{
    auto a = obstruct::family_verdict(2, 3, 2, -1);
    CHECK(a.strongly_suitable);
    auto b = obstruct::family_verdict(2, 3, 1, -1);
    CHECK(b.label == "Sigma(2,3,5)");
    REQUIRE(b.family);
    CHECK(b.family->candidate_xi0);
    CHECK(b.family->c_red_zero_confirmed == true);
    CHECK(b.family->even_p_odd_k);
    auto c = obstruct::family_verdict(3, 5, 1, 1);
    CHECK(c.label == "Sigma(3,5,16)");
    CHECK(c.strongly_suitable);
    CHECK(c.reason == SuitabilityReason::d_zero);
    CHECK_THROWS_AS(obstruct::family_verdict(2, 4, 1, 1), CoprimalityError);
    CHECK_THROWS_AS(obstruct::family_verdict(2, 3, 0, 1), DomainError);
    CHECK_THROWS_AS(obstruct::family_verdict(2, 3, 1, 2), DomainError);
}

TEST_CASE("report invariants on the family grid and product <= 1000")
{
    auto grid = grids::family_grid();
    for (auto t : grids::coprime_triples(1000))
        grid.push_back(t);
    for (auto [a, b, c] : grid)
        check_consistency(obstruct::analyze(BrieskornData({a, b, c})));
}

TEST_CASE("npq+1 is strongly suitable via d = 0; npq-1 with n >= 2 via the family")
{
    for (auto [p, q] : grids::coprime_pairs(40))
        for (std::int64_t n = 1; n <= 3; ++n) {
            auto r = obstruct::family_verdict(p, q, n, 1);
            REQUIRE(r.reason == SuitabilityReason::d_zero);
        }
    for (auto [p, q] : grids::coprime_pairs(40))
        for (std::int64_t n = 2; n <= 3; ++n) {
            auto r = obstruct::family_verdict(p, q, n, -1);
            REQUIRE(r.strongly_suitable);
            REQUIRE(r.family);
            REQUIRE(r.family->zero_rot_exists == false);
            REQUIRE_FALSE(r.family->candidate_xi0);
        }
}

TEST_CASE("even p, q = pk+1, odd k: h(xi0) = -p(pk+2)/4 and c_red(xi0) = 0")
{
    for (std::int64_t p = 2; p <= 8; p += 2)
        for (std::int64_t k = 1; k <= 7; k += 2) {
            auto r = obstruct::family_verdict(p, p * k + 1, 1, -1);
            check_consistency(r);
            REQUIRE(r.family);
            const auto& f = *r.family;
            REQUIRE(f.even_p_odd_k);
            REQUIRE(f.candidate_xi0);
            REQUIRE(f.h_xi0 == Rational(BigInt(-p * (p * k + 2)), BigInt(4)));
            REQUIRE(f.alpha_g_minus_1);
            REQUIRE(Rational(-2 * *f.alpha_g_minus_1) == *f.h_xi0);
            REQUIRE(f.d_minus_y == -2 * *f.alpha_g_minus_1);
            for (auto deg : f.reduced_degrees)
                REQUIRE(deg > *f.d_minus_y);
            REQUIRE(f.c_red_zero_confirmed == true);
            REQUIRE_FALSE(r.strongly_suitable);
            REQUIRE(has_note(r, "c_red(xi0) = 0"));
        }
}

TEST_CASE("FLMN family")
{
    auto a = obstruct::flmn_family_report(3);
    CHECK(a.label == "Sigma(2,3,7)");
    CHECK(a.ambient == "CP^2#10(-CP^2)");
    CHECK(a.strongly_suitable);
    CHECK(has_note(a, "cannot be positive"));
    auto b = obstruct::flmn_family_report(4);
    CHECK(b.label == "Sigma(3,4,13)");
    CHECK(b.ambient == "CP^2#17(-CP^2)");
    CHECK(b.d.value == 0);
    auto c = obstruct::flmn_family_report(5);
    CHECK(c.label == "Sigma(4,5,21)");
    CHECK(c.ambient == "CP^2#26(-CP^2)");
    CHECK_THROWS_AS(obstruct::flmn_family_report(2), DomainError);
}

TEST_CASE("Markov numbers")
{
    CHECK(obstruct::markov_member(1, 1));
    CHECK(obstruct::markov_member(5, 100));
    CHECK_FALSE(obstruct::markov_member(7, 1'000'000));
    const std::set<std::int64_t> expected{1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985};
    CHECK(obstruct::markov_numbers(1000) == expected);
    auto brute = oracle::markov_numbers_brute_force(1000);
    CHECK(std::equal(expected.begin(), expected.end(), brute.begin(), brute.end(),
                     [](std::int64_t a, std::uint64_t b) { return static_cast<std::uint64_t>(a) == b; }));
    CHECK_THROWS_AS(obstruct::markov_member(0, 10), DomainError);
    CHECK_THROWS_AS(obstruct::markov_member(10, 5), DomainError);
    auto big = obstruct::markov_numbers(1'000'000'000'000LL);
    CHECK(big.count(1325) == 1);
    CHECK(big.count(7) == 0);
}

TEST_CASE("lens space labels")
{
    CHECK(obstruct::lens_space_label(2, 1) == "L(4,1)");
    CHECK(obstruct::lens_space_label(5, 2) == "L(25,9)");
    CHECK_THROWS_AS(obstruct::lens_space_label(1, 1), DomainError);
    CHECK_THROWS_AS(obstruct::lens_space_label(4, 2), CoprimalityError);
}

TEST_CASE("cuspidal curves")
{
    auto a = obstruct::cuspidal_check(3, {{2, 3}});
    CHECK(a.g == 1);
    CHECK(a.genus_sum_ok);
    CHECK(a.spinc_index == 0);
    CHECK(a.surgery_framing == 9);
    CHECK(a.adjunction_slack_ok);
    auto b = obstruct::cuspidal_check(4, {{2, 3}, {2, 3}, {2, 3}});
    CHECK(b.g == 3);
    CHECK(b.genus_sum_ok);
    CHECK(b.spinc_index == -2);
    auto c = obstruct::cuspidal_check(3, {{2, 5}});
    CHECK(c.g == 2);
    CHECK_FALSE(c.genus_sum_ok);
    CHECK_THROWS_AS(obstruct::cuspidal_check(2, {{2, 3}}), DomainError);
    CHECK_THROWS_AS(obstruct::cuspidal_check(3, {}), DomainError);
    CHECK_THROWS_AS(obstruct::cuspidal_check(3, {{2, 4}}), CoprimalityError);
}

TEST_CASE("reason names")
{
    for (auto r : {SuitabilityReason::d_zero, SuitabilityReason::diagonalizable,
                   SuitabilityReason::family, SuitabilityReason::none})
        CHECK(obstruct::parse_reason(obstruct::to_string(r)) == r);
    CHECK(obstruct::to_string(SuitabilityReason::d_zero) == "d-zero");
    CHECK_FALSE(obstruct::parse_reason("zero"));
}
