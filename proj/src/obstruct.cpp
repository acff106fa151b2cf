#include "brieskorn/obstruct.hpp"

#include "brieskorn/errors.hpp"
#include "brieskorn/stein.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <sstream>

namespace brieskorn::obstruct {

std::string to_string(SuitabilityReason r)
{
    switch (r) {
    case SuitabilityReason::d_zero:
        return "d-zero";
    case SuitabilityReason::diagonalizable:
        return "diagonalizable";
    case SuitabilityReason::family:
        return "family";
    case SuitabilityReason::none:
        return "none";
    }
    return "none";
}

std::optional<SuitabilityReason> parse_reason(const std::string& s)
{
    for (auto r : {SuitabilityReason::d_zero, SuitabilityReason::diagonalizable,
                   SuitabilityReason::family, SuitabilityReason::none})
        if (to_string(r) == s)
            return r;
    return std::nullopt;
}

namespace {

std::string surgery_text(const seifert::SurgeryPresentation& s)
{
    std::ostringstream os;
    os << s.coefficient.to_string() << " surgery on T(" << s.knot.p << "," << s.knot.q << ")";
    return os.str();
}

// Fills the family facts and returns true when they alone force strong
// suitability (every fillable structure has c_red != 0).
bool family_facts(const floer::FamilyMatch& m, const plumbing::PlumbingGraph& g,
                  const plumbing::IntersectionForm& f, std::int64_t d, FamilyFacts& facts)
{
    facts.p = m.p;
    facts.q = m.q;
    facts.n = m.n;
    facts.sign = m.sign;
    if (auto s = seifert::surgery_presentation(m.p, m.q, m.n, m.sign))
        facts.surgery = surgery_text(*s);
    try {
        facts.zero_rot_exists = stein::rot_profile(g).zero_exists;
    } catch (const UnsupportedFramingError&) {
        facts.zero_rot_exists.reset();
    }
    facts.even_p_odd_k = m.p % 2 == 0 && (m.q - 1) % m.p == 0 && ((m.q - 1) / m.p) % 2 == 1;
    facts.d_minus_y = -d;
    if (m.sign > 0)
        return false;

    if (m.n >= 2) {
        // The third leg carries a -3, so every rotation vector is nonzero.
        if (facts.zero_rot_exists.value_or(false))
            throw std::logic_error("zero rotation vector found for n >= 2");
        return true;
    }

    auto profile = floer::semigroup_profile(m.p, m.q);
    facts.alpha_g_minus_1 = floer::alpha(profile, profile.genus - 1);
    facts.reduced_degrees = floer::reduced_kernel_degrees(m.p, m.q);
    if (!facts.zero_rot_exists.value_or(false))
        return true; // c1 != 0 for every Stein filling
    facts.candidate_xi0 = true;
    facts.h_xi0 = floer::stein_grading_from_plumbing(f, lattice::Vector(f.b2(), 0)).h;
    if (*facts.h_xi0 != Rational(*facts.d_minus_y))
        return true; // grading mismatch already forces c_red(xi0) != 0
    bool above = std::all_of(facts.reduced_degrees.begin(), facts.reduced_degrees.end(),
                             [&](std::int64_t deg) { return deg > *facts.d_minus_y; });
    if (above)
        facts.c_red_zero_confirmed = true;
    return false;
}

} // namespace

ObstructionReport analyze(const seifert::BrieskornData& b, const lattice::CharSearchOptions& options)
{
    ObstructionReport r;
    r.multiplicities = b.multiplicities();
    r.label = b.label();
    const auto sd = seifert::seifert_invariants(b);
    r.seifert = seifert::to_string(sd);
    const auto g = plumbing::build_plumbing(sd);
    const auto f = plumbing::intersection_matrix(g);
    r.b2 = static_cast<std::int64_t>(f.b2());

    lattice::CharSquareResult k;
    const std::int64_t d_value = floer::d_plumbing_value(g, options, &k);
    r.d = floer::combine_with_closed_forms(b, d_value);
    r.max_char_square = k.max_square;
    r.diagonalizable = lattice::diagonalize(f, options.budget).diagonalizable;

    if (r.diagonalizable != (r.max_char_square == -r.b2))
        throw std::logic_error("diagonalizability disagrees with the characteristic maximum");
    if (r.d.value == 0 && !r.diagonalizable)
        throw std::logic_error("d = 0 but the plumbing form is not diagonalizable");

    bool family_strong = false;
    if (auto m = floer::match_torus_family(b)) {
        FamilyFacts facts;
        family_strong = family_facts(*m, g, f, r.d.value, facts);
        r.family = facts;
    }

    if (r.d.value == 0)
        r.reason = SuitabilityReason::d_zero;
    else if (r.diagonalizable)
        r.reason = SuitabilityReason::diagonalizable;
    else if (family_strong)
        r.reason = SuitabilityReason::family;
    r.strongly_suitable = r.reason != SuitabilityReason::none;

    r.weinstein_constraints.min_b2 = 4 * r.d.value;
    r.small_surface.excluded_all_positive = r.strongly_suitable;

    if (!r.d.agree)
        r.notes.push_back("d-invariant methods disagree");
    if (r.strongly_suitable)
        r.notes.push_back("strongly suitable: bounds no Weinstein domain in any positive "
                          "symplectic 4-manifold");
    else
        r.notes.push_back("any Weinstein domain with this boundary in a positive rational "
                          "surface has a negative definite, even, nontrivial form with b2 = " +
                          std::to_string(r.weinstein_constraints.min_b2));
    if (r.family && r.family->c_red_zero_confirmed.value_or(false))
        r.notes.push_back("not suitable: the Stein structure with c1 = 0 gives c_red(xi0) = 0 "
                          "(h(xi0) = d(-Y) and every reduced kernel degree exceeds d(-Y))");
    if (r.family && r.family->candidate_xi0 && !r.family->c_red_zero_confirmed &&
        !r.strongly_suitable)
        r.notes.push_back("inconclusive: a reduced kernel degree does not exceed d(-Y)");
    if (r.multiplicities == std::vector<std::int64_t>{2, 3, 5}) {
        r.notes.push_back("not suitable (HF_red(-Sigma(2,3,5)) = 0)");
        r.notes.push_back("realized at k=8: bounds a Weinstein domain (the E8 plumbing, "
                          "complement of a Gompf nucleus) in CP^2#8(-CP^2)");
    }
    return r;
}

ObstructionReport family_verdict(std::int64_t p, std::int64_t q, std::int64_t n, int sign,
                                 const lattice::CharSearchOptions& options)
{
    seifert::require_coprime_pair(p, q);
    if (n < 1)
        throw DomainError("n must be at least 1");
    if (sign != 1 && sign != -1)
        throw DomainError("sign must be +1 or -1");
    return analyze(seifert::BrieskornData({p, q, n * p * q + sign}), options);
}

ObstructionReport flmn_family_report(std::int64_t degree, const lattice::CharSearchOptions& options)
{
    if (degree < 3)
        throw DomainError("FLMN family needs degree >= 3");
    auto r = analyze(seifert::BrieskornData({degree - 1, degree, degree * degree - degree + 1}),
                     options);
    const std::string ambient = "CP^2#" + std::to_string(degree * degree + 1) + "(-CP^2)";
    r.ambient = ambient;
    r.notes.push_back("bounds a Weinstein domain in a non-positive symplectic structure on " +
                      ambient);
    if (r.strongly_suitable)
        r.notes.push_back("strongly suitable, so that ambient structure cannot be positive");
    return r;
}

std::set<std::int64_t> markov_numbers(std::int64_t bound)
{
    if (bound < 1)
        throw DomainError("Markov search bound must be positive");
    if (bound > 1'000'000'000'000'000'000LL)
        throw DomainError("Markov search bound too large");
    using Triple = std::array<std::int64_t, 3>;
    std::set<Triple> seen;
    std::queue<Triple> todo;
    std::set<std::int64_t> numbers;
    Triple start{1, 1, 1};
    seen.insert(start);
    todo.push(start);
    while (!todo.empty()) {
        Triple t = todo.front();
        todo.pop();
        for (auto x : t)
            numbers.insert(x);
        for (int i = 0; i < 3; ++i) {
            const std::int64_t a = t[(i + 1) % 3], c = t[(i + 2) % 3];
            const __int128 moved = static_cast<__int128>(3) * a * c - t[i];
            if (moved < 1 || moved > bound)
                continue;
            Triple next = t;
            next[i] = static_cast<std::int64_t>(moved);
            std::sort(next.begin(), next.end());
            if (seen.insert(next).second)
                todo.push(next);
        }
    }
    return numbers;
}

bool markov_member(std::int64_t x, std::int64_t bound)
{
    if (x < 1)
        throw DomainError("Markov membership needs x >= 1");
    if (bound < x)
        throw DomainError("Markov search bound must be at least x");
    return markov_numbers(bound).count(x) > 0;
}

std::string lens_space_label(std::int64_t p, std::int64_t q)
{
    if (p < 2)
        throw DomainError("lens space label needs p >= 2");
    if (q < 1 || q >= p)
        throw DomainError("lens space label needs 1 <= q < p");
    if (arith::gcd(p, q) != 1)
        throw CoprimalityError("p and q must be coprime");
    return "L(" + std::to_string(p * p) + "," + std::to_string(p * q - 1) + ")";
}

CuspidalReport cuspidal_check(std::int64_t degree,
                              const std::vector<std::pair<std::int64_t, std::int64_t>>& singularities)
{
    if (degree < 3)
        throw DomainError("cuspidal curve degree must be at least 3");
    if (singularities.empty())
        throw DomainError("at least one singularity is required");
    CuspidalReport r;
    r.degree = degree;
    r.singularities = singularities;
    std::int64_t twice_g = 0;
    for (auto [p, q] : singularities) {
        seifert::require_coprime_pair(p, q);
        twice_g += (p - 1) * (q - 1);
    }
    r.g = twice_g / 2; // (p-1)(q-1) is even for coprime p, q
    r.genus_sum_ok = 2 * r.g == (degree - 1) * (degree - 2);
    r.spinc_index = 1 - r.g;
    r.surgery_framing = degree * degree;
    r.adjunction_slack_ok = r.surgery_framing > 2 * r.g - 2;
    return r;
}

} // namespace brieskorn::obstruct
