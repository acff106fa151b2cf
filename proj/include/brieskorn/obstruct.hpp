#pragma once

// Verdicts on Weinstein embeddings of Brieskorn spheres, assembled from the
// d-invariant, the plumbing lattice and the rotation-vector bookkeeping.
//
// The tool only ever reports obstructions. "reason = none" means no
// obstruction was found, not that an embedding exists.

#include "brieskorn/floer.hpp"
#include "brieskorn/lattice.hpp"
#include "brieskorn/seifert.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace brieskorn::obstruct {

using arith::BigInt;
using arith::Rational;

enum class SuitabilityReason { d_zero, diagonalizable, family, none };

std::string to_string(SuitabilityReason r);
std::optional<SuitabilityReason> parse_reason(const std::string& s);

struct WeinsteinConstraints {
    std::int64_t min_b2 = 0; // = 4 d
    std::string form_must_be = "negative definite, even, nontrivial";
    friend bool operator==(const WeinsteinConstraints&, const WeinsteinConstraints&) = default;
};

struct SmallSurfaceVerdict {
    /// No Weinstein domain in CP^2 # k (-CP^2), k <= this, has this boundary.
    std::int64_t excluded_small_k_max = 7;
    bool excludes_s2xs2 = true;
    /// Strongly suitable: excluded in every positive symplectic 4-manifold.
    bool excluded_all_positive = false;
    friend bool operator==(const SmallSurfaceVerdict&, const SmallSurfaceVerdict&) = default;
};

/// Facts about Sigma(p, q, npq + sign).
struct FamilyFacts {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t n = 0;
    int sign = 0;
    std::optional<std::string> surgery;     // e.g. "-1/2 surgery on T(2,-3)"
    std::optional<bool> zero_rot_exists;    // unset when the framing scheme does not apply
    bool candidate_xi0 = false;             // a Stein structure with c1 = 0 exists
    std::optional<Rational> h_xi0;
    std::optional<std::int64_t> d_minus_y;
    std::optional<std::int64_t> alpha_g_minus_1;
    std::vector<std::int64_t> reduced_degrees;
    std::optional<bool> c_red_zero_confirmed;
    bool even_p_odd_k = false; // p even, q = pk + 1, k odd

    friend bool operator==(const FamilyFacts&, const FamilyFacts&) = default;
};

struct ObstructionReport {
    std::vector<std::int64_t> multiplicities;
    std::string label;
    std::string seifert;
    std::int64_t b2 = 0;
    floer::DInvariantResult d;
    BigInt max_char_square;
    bool diagonalizable = false;
    bool strongly_suitable = false;
    SuitabilityReason reason = SuitabilityReason::none;
    WeinsteinConstraints weinstein_constraints;
    SmallSurfaceVerdict small_surface;
    std::optional<FamilyFacts> family;
    std::optional<std::string> ambient; // set by flmn_family_report
    std::vector<std::string> notes;

    friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

ObstructionReport analyze(const seifert::BrieskornData& b,
                          const lattice::CharSearchOptions& options = {});

/// analyze(Sigma(p, q, npq + sign)).
ObstructionReport family_verdict(std::int64_t p, std::int64_t q, std::int64_t n, int sign,
                                 const lattice::CharSearchOptions& options = {});

/// analyze(Sigma(d-1, d, d^2-d+1)) with the ambient CP^2 # (d^2+1)(-CP^2).
ObstructionReport flmn_family_report(std::int64_t degree,
                                     const lattice::CharSearchOptions& options = {});

/// Markov numbers reachable from (1,1,1) by Vieta moves through triples
/// with every entry <= bound.
std::set<std::int64_t> markov_numbers(std::int64_t bound);

/// Positive certificate only: false means "not found below bound".
bool markov_member(std::int64_t x, std::int64_t bound);

/// "L(p^2,pq-1)" for coprime p >= 2, 1 <= q < p.
std::string lens_space_label(std::int64_t p, std::int64_t q);

struct CuspidalReport {
    std::int64_t degree = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> singularities;
    bool genus_sum_ok = false;
    std::int64_t g = 0;
    std::int64_t spinc_index = 0;     // 1 - g
    std::int64_t surgery_framing = 0; // degree^2
    bool adjunction_slack_ok = false; // degree^2 > 2g - 2

    friend bool operator==(const CuspidalReport&, const CuspidalReport&) = default;
};

/// Singularities are one-Puiseux-pair cusps given by coprime (p, q).
CuspidalReport cuspidal_check(std::int64_t degree,
                              const std::vector<std::pair<std::int64_t, std::int64_t>>& singularities);

} // namespace brieskorn::obstruct
