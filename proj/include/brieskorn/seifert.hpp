#pragma once

#include "brieskorn/arith.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace brieskorn::seifert {

/// Pairwise-coprime multiplicities p_1 < ... < p_n (n >= 3, each >= 2) of a
/// Brieskorn integer homology sphere, oriented as the boundary of its
/// negative-definite plumbing.
class BrieskornData {
public:
    /// Validates and sorts; throws DomainError or CoprimalityError.
    explicit BrieskornData(std::vector<std::int64_t> multiplicities);

    const std::vector<std::int64_t>& multiplicities() const noexcept { return mult_; }
    std::size_t size() const noexcept { return mult_.size(); }
    arith::BigInt product() const;

    /// "Sigma(2,3,5)".
    std::string label() const;

    friend bool operator==(const BrieskornData&, const BrieskornData&) = default;

private:
    std::vector<std::int64_t> mult_;
};

/// M(e0; beta_1/alpha_1, ..., beta_n/alpha_n) with 0 < beta_i < alpha_i and
/// e0 + sum beta_i/alpha_i = -1/(alpha_1 ... alpha_n).
struct SeifertData {
    std::int64_t e0 = 0;
    std::vector<arith::Rational> fractions;

    friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

SeifertData seifert_invariants(const BrieskornData& b);

/// e0 + sum of the fractions; equals -1/A for data produced above.
arith::Rational orbifold_euler_number(const SeifertData& s);

/// "M(-2; 1/2, 2/3, 4/5)".
std::string to_string(const SeifertData& s);

/// Torus knot T(p, q); q < 0 denotes the negative torus knot T(p, -|q|).
struct TorusKnot {
    std::int64_t p;
    std::int64_t q;
    friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
};

struct SurgeryPresentation {
    TorusKnot knot;
    arith::Rational coefficient;
    BrieskornData manifold;
};

/// Surgery description of Sigma(p, q, npq + sign). Returns nullopt for
/// sign = +1 and n > 1, where no surgery description is asserted.
std::optional<SurgeryPresentation> surgery_presentation(std::int64_t p, std::int64_t q,
                                                        std::int64_t n, int sign);

/// Validates a coprime pair p, q >= 2 (either order).
void require_coprime_pair(std::int64_t p, std::int64_t q);

} // namespace brieskorn::seifert
