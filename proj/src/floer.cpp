#include "brieskorn/floer.hpp"

#include "brieskorn/errors.hpp"

#include <algorithm>

namespace brieskorn::floer {

SemigroupProfile semigroup_profile(std::int64_t p, std::int64_t q)
{
    seifert::require_coprime_pair(p, q);
    SemigroupProfile s;
    s.p = std::min(p, q);
    s.q = std::max(p, q);
    const std::int64_t frob = s.frobenius();
    // Sieve: s is in the semigroup iff s - p or s - q is (or s = 0).
    std::vector<bool> member(static_cast<std::size_t>(frob + 1), false);
    member[0] = true;
    for (std::int64_t v = 1; v <= frob; ++v) {
        bool in = (v >= s.p && member[v - s.p]) || (v >= s.q && member[v - s.q]);
        member[v] = in;
        if (!in)
            s.gaps.push_back(v);
    }
    s.genus = static_cast<std::int64_t>(s.gaps.size());
    if (s.genus * 2 != (s.p - 1) * (s.q - 1))
        throw std::logic_error("semigroup gap count disagrees with the genus formula");
    return s;
}

std::int64_t alpha(const SemigroupProfile& s, std::int64_t j)
{
    auto it = std::upper_bound(s.gaps.begin(), s.gaps.end(), j);
    return static_cast<std::int64_t>(s.gaps.end() - it);
}

std::int64_t d_torus_surgery_minus(std::int64_t p, std::int64_t q)
{
    // The surgery formula gives d(-Y) = -2 alpha_{g-1}; we report d(Y).
    auto s = semigroup_profile(p, q);
    return 2 * alpha(s, s.genus - 1);
}

std::int64_t d_family_plus(std::int64_t p, std::int64_t q, std::int64_t n)
{
    seifert::require_coprime_pair(p, q);
    if (n < 1)
        throw DomainError("n must be at least 1");
    return 0;
}

std::string to_string(DMethod m)
{
    switch (m) {
    case DMethod::semigroup:
        return "semigroup";
    case DMethod::plumbing:
        return "plumbing";
    case DMethod::family_closed_form:
        return "family-closed-form";
    }
    return "unknown";
}

std::optional<DMethod> parse_d_method(const std::string& s)
{
    for (auto m : {DMethod::semigroup, DMethod::plumbing, DMethod::family_closed_form})
        if (to_string(m) == s)
            return m;
    return std::nullopt;
}

std::optional<std::int64_t> DInvariantResult::value_of(DMethod m) const
{
    for (const auto& mv : methods)
        if (mv.method == m)
            return mv.value;
    return std::nullopt;
}

std::int64_t d_plumbing_value(const plumbing::PlumbingGraph& g,
                              const lattice::CharSearchOptions& options,
                              lattice::CharSquareResult* witness)
{
    plumbing::validate(g);
    auto bad = plumbing::bad_vertices(g);
    if (bad.size() > 1)
        throw BadVertexError("plumbing has " + std::to_string(bad.size()) +
                             " bad vertices; the d-invariant formula needs at most one");
    auto f = plumbing::intersection_matrix(g);
    auto k = lattice::max_char_square(f, options);
    BigInt numerator = k.max_square + BigInt(f.b2());
    if (numerator % 4 != 0)
        throw std::logic_error("K^2 + b2 is not divisible by 4 on a unimodular form");
    if (witness)
        *witness = k;
    return arith::to_int64(numerator / 4);
}

DInvariantResult d_invariant_plumbing(const plumbing::PlumbingGraph& g,
                                      const lattice::CharSearchOptions& options)
{
    DInvariantResult r;
    r.value = d_plumbing_value(g, options);
    r.methods.push_back({DMethod::plumbing, r.value});
    return r;
}

std::optional<FamilyMatch> match_torus_family(const seifert::BrieskornData& b)
{
    if (b.size() != 3)
        return std::nullopt;
    const auto& m = b.multiplicities();
    const std::int64_t pq = m[0] * m[1];
    if ((m[2] + 1) % pq == 0)
        return FamilyMatch{m[0], m[1], (m[2] + 1) / pq, -1};
    if ((m[2] - 1) % pq == 0 && m[2] > pq)
        return FamilyMatch{m[0], m[1], (m[2] - 1) / pq, +1};
    return std::nullopt;
}

DInvariantResult d_invariant(const seifert::BrieskornData& b,
                             const lattice::CharSearchOptions& options)
{
    auto g = plumbing::build_plumbing(seifert::seifert_invariants(b));
    return combine_with_closed_forms(b, d_plumbing_value(g, options));
}

DInvariantResult combine_with_closed_forms(const seifert::BrieskornData& b,
                                           std::int64_t plumbing_value)
{
    DInvariantResult r;
    r.value = plumbing_value;
    r.methods.push_back({DMethod::plumbing, plumbing_value});
    if (auto fam = match_torus_family(b)) {
        if (fam->sign < 0 && fam->n == 1)
            r.methods.push_back({DMethod::semigroup, d_torus_surgery_minus(fam->p, fam->q)});
        if (fam->sign > 0)
            r.methods.push_back(
                {DMethod::family_closed_form, d_family_plus(fam->p, fam->q, fam->n)});
    }
    r.agree = std::all_of(r.methods.begin(), r.methods.end(),
                          [&](const MethodValue& mv) { return mv.value == r.value; });
    return r;
}

std::vector<std::int64_t> reduced_kernel_degrees(std::int64_t p, std::int64_t q)
{
    auto s = semigroup_profile(p, q);
    std::vector<std::int64_t> out;
    for (std::int64_t i = 1; i <= s.genus - 1; ++i)
        out.push_back(-2 * alpha(s, s.genus - 1 + i) + 2 * i * (i - 1));
    return out;
}

GradingResult contact_grading(const Rational& c1_squared, std::int64_t sigma, std::int64_t euler)
{
    GradingResult r;
    r.c1_squared = c1_squared;
    r.sigma = sigma;
    r.euler = euler;
    Rational inner = c1_squared - Rational(3 * sigma) - Rational(2 * euler);
    r.h = -inner / Rational(4) - Rational(BigInt(1), BigInt(2));
    return r;
}

GradingResult contact_grading(std::int64_t c1_squared, std::int64_t sigma, std::int64_t euler)
{
    return contact_grading(Rational(c1_squared), sigma, euler);
}

GradingResult stein_grading_from_plumbing(const plumbing::IntersectionForm& f,
                                          const lattice::Vector& rot)
{
    lattice::require_negative_definite(f);
    if (rot.size() != f.b2())
        throw DomainError("rotation vector length " + std::to_string(rot.size()) +
                          " does not match b2 = " + std::to_string(f.b2()));
    if (!lattice::is_characteristic(f, rot))
        throw CharacteristicParityError(
            "rotation numbers must have the parity of the vertex weights");
    const auto b2 = static_cast<std::int64_t>(f.b2());
    return contact_grading(lattice::inverse_square(f, rot), -b2, 1 + b2);
}

} // namespace brieskorn::floer
