#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brieskorn/errors.hpp"
#include "brieskorn/floer.hpp"
#include "brieskorn/lattice.hpp"
#include "brieskorn/plumbing.hpp"
#include "brieskorn/seifert.hpp"
#include "oracles/grids.hpp"
#include "oracles/lattice_oracle.hpp"

#include <numeric>

using namespace brieskorn;
using arith::BigInt;
using arith::Rational;
using floer::DMethod;
using seifert::BrieskornData;

namespace {

Rational q(std::int64_t n, std::int64_t d) { return Rational(BigInt(n), BigInt(d)); }

plumbing::PlumbingGraph graph_of(std::vector<std::int64_t> m)
{
    return plumbing::build_plumbing(seifert::seifert_invariants(BrieskornData(std::move(m))));
}

// alpha_j straight from the definition: #{s > j : s not in S_{p,q}}, scanning
// up to the trivial bound pq (everything >= pq is representable).
std::int64_t alpha_oracle(std::int64_t p, std::int64_t qq, std::int64_t j)
{
    std::int64_t n = 0;
    for (std::int64_t s = j + 1; s < p * qq; ++s)
        n += !oracle::in_semigroup(s, p, qq);
    return n;
}

} // namespace

TEST_CASE("semigroup profile examples")
{
    auto a = floer::semigroup_profile(2, 3);
    CHECK(a.gaps == std::vector<std::int64_t>{1});
    CHECK(a.genus == 1);
    auto b = floer::semigroup_profile(2, 5);
    CHECK(b.gaps == std::vector<std::int64_t>{1, 3});
    CHECK(b.genus == 2);
    auto c = floer::semigroup_profile(4, 5);
    CHECK(c.gaps == std::vector<std::int64_t>{1, 2, 3, 6, 7, 11});
    CHECK(c.genus == 6);
    CHECK(floer::semigroup_profile(5, 4) == c);
    CHECK_THROWS_AS(floer::semigroup_profile(4, 6), CoprimalityError);
    CHECK_THROWS_AS(floer::semigroup_profile(1, 6), DomainError);
}

TEST_CASE("semigroup gaps agree with direct representability for p, q <= 30")
{
    for (std::int64_t p = 2; p <= 30; ++p)
        for (std::int64_t qq = p + 1; qq <= 30; ++qq) {
            if (std::gcd(p, qq) != 1)
                continue;
            auto s = floer::semigroup_profile(p, qq);
            std::vector<std::int64_t> gaps;
            for (std::int64_t v = 1; v < p * qq; ++v)
                if (!oracle::in_semigroup(v, p, qq))
                    gaps.push_back(v);
            REQUIRE(s.gaps == gaps);
            REQUIRE(2 * s.genus == (p - 1) * (qq - 1));
            REQUIRE(s.gaps.back() == s.frobenius());
            REQUIRE(floer::alpha(s, s.frobenius()) == 0);
            for (std::int64_t j = 0; j < s.frobenius(); ++j)
                REQUIRE(floer::alpha(s, j) >= floer::alpha(s, j + 1));
        }
}

TEST_CASE("alpha examples")
{
    CHECK(floer::alpha(floer::semigroup_profile(2, 3), 0) == 1);
    CHECK(floer::alpha(floer::semigroup_profile(4, 5), 5) == 3);
    CHECK(floer::alpha(floer::semigroup_profile(7, 9), 7 * 9 - 7 - 9) == 0);
}

TEST_CASE("closed forms")
{
    CHECK(floer::d_torus_surgery_minus(2, 3) == 2);
    CHECK(floer::d_torus_surgery_minus(4, 5) == 6);
    CHECK(floer::d_torus_surgery_minus(2, 5) == 2);
    CHECK(floer::d_family_plus(2, 3, 1) == 0);
    CHECK(floer::d_family_plus(2, 3, 2) == 0);
    CHECK(floer::d_family_plus(3, 5, 1) == 0);
    CHECK_THROWS_AS(floer::d_torus_surgery_minus(2, 4), CoprimalityError);
    CHECK_THROWS_AS(floer::d_family_plus(3, 6, 1), CoprimalityError);
}

TEST_CASE("plumbing d-invariant examples")
{
    auto e8 = floer::d_invariant_plumbing(graph_of({2, 3, 5}));
    CHECK(e8.value == 2);
    CHECK(e8.methods == std::vector<floer::MethodValue>{{DMethod::plumbing, 2}});
    CHECK(floer::d_invariant_plumbing(graph_of({2, 3, 7})).value == 0);

    auto d = floer::d_invariant(BrieskornData({2, 3, 5}));
    CHECK(d.value == 2);
    CHECK(d.agree);
    CHECK(d.value_of(DMethod::semigroup) == 2);
    CHECK(d.value_of(DMethod::plumbing) == 2);
    CHECK_FALSE(d.value_of(DMethod::family_closed_form));

    auto z = floer::d_invariant(BrieskornData({2, 3, 7}));
    CHECK(z.value == 0);
    CHECK(z.value_of(DMethod::family_closed_form) == 0);
    CHECK_FALSE(z.value_of(DMethod::semigroup));

    auto other = floer::d_invariant(BrieskornData({3, 4, 5}));
    CHECK(other.methods.size() == 1);

    auto bad = floer::combine_with_closed_forms(BrieskornData({2, 3, 5}), 4);
    CHECK_FALSE(bad.agree);

    CHECK(floer::to_string(DMethod::family_closed_form) == "family-closed-form");
    for (auto m : {DMethod::semigroup, DMethod::plumbing, DMethod::family_closed_form})
        CHECK(floer::parse_d_method(floer::to_string(m)) == m);
    CHECK_FALSE(floer::parse_d_method("semi"));
}

TEST_CASE("family matching")
{
    using floer::FamilyMatch;
    CHECK(floer::match_torus_family(BrieskornData({2, 3, 5})) == FamilyMatch{2, 3, 1, -1});
    CHECK(floer::match_torus_family(BrieskornData({2, 3, 11})) == FamilyMatch{2, 3, 2, -1});
    CHECK(floer::match_torus_family(BrieskornData({2, 3, 7})) == FamilyMatch{2, 3, 1, 1});
    CHECK(floer::match_torus_family(BrieskornData({3, 5, 31})) == FamilyMatch{3, 5, 2, 1});
    CHECK_FALSE(floer::match_torus_family(BrieskornData({3, 4, 5})));
    CHECK_FALSE(floer::match_torus_family(BrieskornData({2, 3, 5, 7})));
}

TEST_CASE("plumbing = 2 alpha_{g-1} on Sigma(p,q,pq-1), pq <= 60")
{
    for (auto [p, qq] : grids::coprime_pairs(60)) {
        auto d = floer::d_invariant(BrieskornData({p, qq, p * qq - 1}));
        auto s = floer::semigroup_profile(p, qq);
        REQUIRE(d.value_of(DMethod::plumbing) == 2 * alpha_oracle(p, qq, s.genus - 1));
        REQUIRE(d.value_of(DMethod::semigroup) == d.value_of(DMethod::plumbing));
        REQUIRE(d.agree);
    }
}

TEST_CASE("d = 0 on Sigma(p,q,npq+1), pq <= 40, n <= 3")
{
    for (auto [p, qq] : grids::coprime_pairs(40))
        for (std::int64_t n = 1; n <= 3; ++n) {
            auto d = floer::d_invariant(BrieskornData({p, qq, n * p * qq + 1}));
            REQUIRE(d.value_of(DMethod::plumbing) == 0);
            REQUIRE(d.agree);
        }
}

TEST_CASE("d is even, nonnegative, and d = 0 forces diagonalizability on the grids")
{
    auto grid = grids::family_grid();
    for (auto [a, b, c] : grids::coprime_triples(2000))
        grid.push_back({a, b, c});
    for (auto [a, b, c] : grid) {
        lattice::CharSquareResult k;
        auto g = graph_of({a, b, c});
        auto d = floer::d_plumbing_value(g, {}, &k);
        REQUIRE(d >= 0);
        REQUIRE(d % 2 == 0);
        REQUIRE(lattice::is_characteristic(plumbing::intersection_matrix(g), k.maximizer));
        if (d == 0)
            REQUIRE(lattice::diagonalize(plumbing::intersection_matrix(g)).diagonalizable);
    }
}

TEST_CASE("even p, q = pk+1, odd k: alpha_{g-1} = p(pk+2)/8 and reduced degrees above -2 alpha_{g-1}")
{
    for (std::int64_t p = 2; p <= 10; p += 2)
        for (std::int64_t k = 1; k <= 9; k += 2) {
            const std::int64_t qq = p * k + 1;
            auto s = floer::semigroup_profile(p, qq);
            const std::int64_t a = floer::alpha(s, s.genus - 1);
            REQUIRE(a == alpha_oracle(p, qq, s.genus - 1));
            REQUIRE(8 * a == p * (p * k + 2));
            auto deg = floer::reduced_kernel_degrees(p, qq);
            REQUIRE(static_cast<std::int64_t>(deg.size()) == s.genus - 1);
            for (std::size_t i = 0; i < deg.size(); ++i) {
                const auto ii = static_cast<std::int64_t>(i + 1);
                REQUIRE(deg[i] == -2 * alpha_oracle(p, qq, s.genus - 1 + ii) + 2 * ii * (ii - 1));
                REQUIRE(deg[i] > -2 * a);
            }
        }
}

TEST_CASE("reduced kernel degree examples")
{
    CHECK(floer::reduced_kernel_degrees(4, 5) == std::vector<std::int64_t>{-4, 2, 10, 22, 38});
    CHECK(floer::reduced_kernel_degrees(2, 3).empty());
    CHECK(floer::reduced_kernel_degrees(2, 5) == std::vector<std::int64_t>{-2});
}

TEST_CASE("contact grading by substitution")
{
    CHECK(floer::contact_grading(0, -8, 9).h == Rational(-2));
    CHECK(floer::contact_grading(0, 0, 2).h == q(1, 2));
    CHECK(floer::contact_grading(0, 0, 1).h == Rational(0));
    CHECK(floer::contact_grading(-8, -8, 9).h == Rational(0));
    auto g = floer::contact_grading(q(-1, 3), -1, 2);
    CHECK(g.h == q(-1, 6));
    CHECK(g.c1_squared == q(-1, 3));
    CHECK(g.sigma == -1);
    CHECK(g.euler == 2);
}

TEST_CASE("Stein gradings from plumbings")
{
    auto e8 = plumbing::intersection_matrix(graph_of({2, 3, 5}));
    CHECK(floer::stein_grading_from_plumbing(e8, lattice::Vector(8, 0)).h == Rational(-2));
    CHECK(floer::stein_grading_from_plumbing(plumbing::diagonal_form({-2}), {0}).h == q(-1, 4));

    auto fig2 = plumbing::intersection_matrix(graph_of({4, 5, 19}));
    CHECK(fig2.b2() == 24);
    CHECK(floer::stein_grading_from_plumbing(fig2, lattice::Vector(24, 0)).h == Rational(-6));

    auto odd = plumbing::intersection_matrix(graph_of({2, 3, 7}));
    CHECK_THROWS_AS(floer::stein_grading_from_plumbing(odd, {0, 0, 0, 0}), CharacteristicParityError);
    CHECK_THROWS_AS(floer::stein_grading_from_plumbing(odd, {1, 0}), DomainError);
    CHECK_THROWS_AS(floer::stein_grading_from_plumbing(plumbing::make_form({{1}}), {1}),
                    DefinitenessError);

    // -p(pk+2)/4 on Sigma(p, pk+1, p(pk+1)-1)
    for (std::int64_t p = 2; p <= 8; p += 2)
        for (std::int64_t k = 1; k <= 7; k += 2) {
            const std::int64_t qq = p * k + 1;
            auto f = plumbing::intersection_matrix(graph_of({p, qq, p * qq - 1}));
            REQUIRE(static_cast<std::int64_t>(f.b2()) == p * (p * k + 2));
            auto h = floer::stein_grading_from_plumbing(f, lattice::Vector(f.b2(), 0)).h;
            REQUIRE(h == q(-p * (p * k + 2), 4));
        }
}

TEST_CASE("nonzero rotation vectors: c1^2 matches an independent inverse")
{
    // Sigma(2,3,11): leg entry -3 forces an odd rotation number.
    auto f = plumbing::intersection_matrix(graph_of({2, 3, 11}));
    oracle::IntMatrix m(f.b2(), std::vector<std::int64_t>(f.b2()));
    for (std::size_t i = 0; i < f.b2(); ++i)
        for (std::size_t j = 0; j < f.b2(); ++j)
            m[i][j] = arith::to_int64(f(i, j));
    auto inv = oracle::gauss_inverse(m);
    for (std::int64_t r : {-1, 1}) {
        lattice::Vector rot(f.b2(), 0);
        std::size_t odd = 0;
        while (m[odd][odd] % 2 == 0)
            ++odd;
        rot[odd] = r;
        auto g = floer::stein_grading_from_plumbing(f, rot);
        oracle::Q c = inv[odd][odd];
        auto expected_h = -(c + 3 * oracle::Q(static_cast<long long>(f.b2())) - 2 * oracle::Q(static_cast<long long>(f.b2() + 1))) / 4 - oracle::Q(1, 2);
        CHECK(oracle::Q(g.c1_squared.to_string()) == c);
        CHECK(oracle::Q(g.h.to_string()) == expected_h);
    }
}
