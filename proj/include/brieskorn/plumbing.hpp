#pragma once

#include "brieskorn/arith.hpp"
#include "brieskorn/seifert.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace brieskorn::plumbing {

/// Star-shaped plumbing tree: a central vertex joined to the first vertex of
/// each leg, each leg a chain listed center-outward.
///
/// Vertex numbering used by every matrix and vector in the library: 0 is the
/// center, then leg 1 from the center outward, then leg 2, and so on.
struct PlumbingGraph {
    std::int64_t center_weight = -1;
    std::vector<std::vector<std::int64_t>> legs;

    std::size_t vertex_count() const;
    std::vector<std::int64_t> weights() const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    std::vector<std::size_t> valences() const;

    friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;
};

/// Checks center <= -1 and leg weights <= -2; throws DomainError.
void validate(const PlumbingGraph& g);

PlumbingGraph build_plumbing(const seifert::SeifertData& s);

/// Vertices v with weight(v) > -valence(v).
std::vector<std::size_t> bad_vertices(const PlumbingGraph& g);

using Matrix = std::vector<std::vector<arith::BigInt>>;

/// Symmetric integer matrix of a lattice in a fixed basis.
struct IntersectionForm {
    Matrix matrix;

    std::size_t b2() const noexcept { return matrix.size(); }
    const arith::BigInt& operator()(std::size_t i, std::size_t j) const { return matrix[i][j]; }

    friend bool operator==(const IntersectionForm&, const IntersectionForm&) = default;
};

/// Builds a form from small integer rows; throws DomainError if not square
/// and symmetric.
IntersectionForm make_form(const std::vector<std::vector<std::int64_t>>& rows);

/// Diagonal form diag(entries).
IntersectionForm diagonal_form(const std::vector<std::int64_t>& entries);

IntersectionForm intersection_matrix(const PlumbingGraph& g);

struct FormProperties {
    bool negative_definite = false;
    arith::BigInt determinant;
    bool even = false;
    std::size_t b2 = 0;
};

FormProperties form_properties(const IntersectionForm& f);

/// Exact determinant, sparse elimination over Q.
arith::BigInt determinant(const Matrix& m);

/// True iff every leading principal minor of -Q is positive.
bool is_negative_definite(const IntersectionForm& f);

/// Undirected DOT graph; node ids "v0" for the center and "L{i}_{j}" for
/// position j (1-based, center-outward) of leg i (1-based).
std::string to_dot(const PlumbingGraph& g);

/// Node id of vertex index v in the numbering above.
std::string node_id(const PlumbingGraph& g, std::size_t v);

} // namespace brieskorn::plumbing
