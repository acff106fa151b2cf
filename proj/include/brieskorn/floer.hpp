#pragma once

// d-invariants of Brieskorn spheres and gradings of contact invariants.
//
// Orientation: d(Y) is for Y oriented as the boundary of its negative-definite
// plumbing, so d(Y) >= 0. Statements about -Y are flipped via d(-Y) = -d(Y).

#include "brieskorn/arith.hpp"
#include "brieskorn/lattice.hpp"
#include "brieskorn/plumbing.hpp"
#include "brieskorn/seifert.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace brieskorn::floer {

using arith::BigInt;
using arith::Rational;

/// Gaps of the numerical semigroup generated by p and q.
struct SemigroupProfile {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::vector<std::int64_t> gaps; // sorted
    std::int64_t genus = 0;

    std::int64_t frobenius() const noexcept { return p * q - p - q; }

    friend bool operator==(const SemigroupProfile&, const SemigroupProfile&) = default;
};

SemigroupProfile semigroup_profile(std::int64_t p, std::int64_t q);

/// Number of gaps strictly greater than j.
std::int64_t alpha(const SemigroupProfile& s, std::int64_t j);

/// d(Sigma(p, q, pq - 1)) = 2 alpha_{g-1}.
std::int64_t d_torus_surgery_minus(std::int64_t p, std::int64_t q);

/// d(Sigma(p, q, npq + 1)) = 0.
std::int64_t d_family_plus(std::int64_t p, std::int64_t q, std::int64_t n);

enum class DMethod { semigroup, plumbing, family_closed_form };

std::string to_string(DMethod m);
std::optional<DMethod> parse_d_method(const std::string& s);

struct MethodValue {
    DMethod method;
    std::int64_t value;
    friend bool operator==(const MethodValue&, const MethodValue&) = default;
};

struct DInvariantResult {
    std::int64_t value = 0;
    std::vector<MethodValue> methods; // in the order they were run
    bool agree = true;

    std::optional<std::int64_t> value_of(DMethod m) const;

    friend bool operator==(const DInvariantResult&, const DInvariantResult&) = default;
};

/// (max K^2 + b2) / 4 over the plumbing form. Needs at most one bad vertex.
/// The maximizing characteristic vector is stored in `witness` if given.
std::int64_t d_plumbing_value(const plumbing::PlumbingGraph& g,
                              const lattice::CharSearchOptions& options = {},
                              lattice::CharSquareResult* witness = nullptr);

DInvariantResult d_invariant_plumbing(const plumbing::PlumbingGraph& g,
                                      const lattice::CharSearchOptions& options = {});

/// Runs the plumbing formula plus every closed form that applies to b.
DInvariantResult d_invariant(const seifert::BrieskornData& b,
                             const lattice::CharSearchOptions& options = {});

/// Same, with the plumbing value already computed.
DInvariantResult combine_with_closed_forms(const seifert::BrieskornData& b,
                                           std::int64_t plumbing_value);

/// Recognizes Sigma(p, q, npq + sign) with p < q the two smallest entries.
struct FamilyMatch {
    std::int64_t p;
    std::int64_t q;
    std::int64_t n;
    int sign;
    friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

std::optional<FamilyMatch> match_torus_family(const seifert::BrieskornData& b);

/// -2 alpha_{g-1+i} + 2 i (i-1) for i = 1, ..., g-1; empty when g < 2.
std::vector<std::int64_t> reduced_kernel_degrees(std::int64_t p, std::int64_t q);

struct GradingResult {
    Rational h;
    Rational c1_squared;
    std::int64_t sigma = 0;
    std::int64_t euler = 0;
    friend bool operator==(const GradingResult&, const GradingResult&) = default;
};

/// h = -(c1^2 - 3 sigma - 2 e)/4 - 1/2.
GradingResult contact_grading(const Rational& c1_squared, std::int64_t sigma, std::int64_t euler);
GradingResult contact_grading(std::int64_t c1_squared, std::int64_t sigma, std::int64_t euler);

/// Grading of the Stein structure on the plumbing with rotation numbers rot:
/// c1^2 = rot^T Q^{-1} rot, sigma = -b2, e = 1 + b2. Any nondegenerate negative
/// definite form is accepted; rot must satisfy rot_i = Q_ii mod 2.
GradingResult stein_grading_from_plumbing(const plumbing::IntersectionForm& f,
                                          const lattice::Vector& rot);

} // namespace brieskorn::floer
