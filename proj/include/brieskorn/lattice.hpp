#pragma once

// Definite unimodular lattices: short vectors, diagonalizability by
// splitting off (-1)-vectors, and maximal squares of characteristic vectors.
//
// Forms are negative definite (plumbing convention); internally every search
// runs on the positive-definite Gram matrix -Q.

#include "brieskorn/arith.hpp"
#include "brieskorn/plumbing.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace brieskorn::lattice {

using arith::BigInt;
using arith::Rational;
using plumbing::IntersectionForm;
using plumbing::Matrix;
using Vector = std::vector<std::int64_t>;

/// Largest search (candidate vectors, DP table cells or enumeration nodes)
/// attempted before raising SearchBudgetError.
inline constexpr std::uint64_t default_search_budget = 100'000'000;

BigInt pairing(const IntersectionForm& f, const Vector& u, const Vector& v);
Vector apply_form(const IntersectionForm& f, const Vector& y);

/// Exact inverse; throws DomainError for singular input.
std::vector<std::vector<Rational>> inverse(const Matrix& m);

/// x^T Q^{-1} x, exact.
Rational inverse_square(const IntersectionForm& f, const Vector& x);

/// Throws DefinitenessError / UnimodularityError.
void require_negative_definite(const IntersectionForm& f);
void require_unimodular(const IntersectionForm& f);

/// x_i = Q_ii mod 2 for every i.
bool is_characteristic(const IntersectionForm& f, const Vector& x);

/// True iff the off-diagonal support of the matrix is a forest.
bool is_forest(const IntersectionForm& f);

/// Fincke-Pohst enumeration of integer vectors y with y^T G y <= radius on a
/// positive-definite Gram matrix G, optionally restricted to a residue class
/// modulo 2. The visitor may lower the radius through its reference argument
/// and returns false to stop. Counts visited nodes against `budget`.
class Enumerator {
public:
    using Visitor = std::function<bool(const Vector& y, const Rational& norm, Rational& radius)>;

    explicit Enumerator(const Matrix& positive_gram);

    void run(Rational radius, const std::optional<Vector>& parity, const Visitor& visit,
             std::uint64_t budget = default_search_budget) const;

    std::size_t dimension() const noexcept { return order_.size(); }

private:
    std::vector<std::size_t> order_;           // enumeration position -> basis index
    std::vector<Rational> pivots_;             // D_i
    std::vector<std::vector<std::pair<std::size_t, Rational>>> mu_; // sparse rows of L^T
};

/// All v with v^T Q v = norm, one representative of each pair +-v (first
/// nonzero entry positive), sorted lexicographically.
std::vector<Vector> short_vectors(const IntersectionForm& f, std::int64_t norm,
                                  std::uint64_t budget = default_search_budget);

struct DiagonalizationResult {
    bool diagonalizable = false;
    /// b2 pairwise-orthogonal vectors of square -1, present on success.
    std::optional<std::vector<Vector>> witness;
};

/// Iterated splitting: find a (-1)-vector, pass to its orthogonal
/// complement, repeat until rank 0 or no (-1)-vector remains.
DiagonalizationResult diagonalize(const IntersectionForm& f,
                                  std::uint64_t budget = default_search_budget);

enum class CharSearchMethod { tree_dp, enumeration, box };

std::string to_string(CharSearchMethod m);

struct CharSearchOptions {
    /// When set, search the box m_i + 2 - margin <= x_i <= -m_i + margin
    /// (margin even, >= 0) instead of the exact global search.
    std::optional<std::int64_t> box_margin;
    std::uint64_t budget = default_search_budget;
};

struct CharSquareResult {
    BigInt max_square;
    /// Evaluations x_i = <K, v_i> of a maximizing characteristic vector.
    Vector maximizer;
    CharSearchMethod method = CharSearchMethod::tree_dp;
};

/// max K^2 = x^T Q^{-1} x over characteristic x. Without a box margin the
/// maximum is global: a min-sum dynamic program over the tree when the form
/// is a forest, otherwise a Fincke-Pohst search over the characteristic coset.
CharSquareResult max_char_square(const IntersectionForm& f, const CharSearchOptions& options = {});

/// Candidate count of the box search for a given margin (saturating).
std::uint64_t box_size(const IntersectionForm& f, std::int64_t margin);

} // namespace brieskorn::lattice
