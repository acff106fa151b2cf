#pragma once

// Rotation numbers of Legendrian realizations of plumbing diagrams, and the
// Legendrian torus-knot counts.

#include "brieskorn/arith.hpp"
#include "brieskorn/lattice.hpp"
#include "brieskorn/plumbing.hpp"

#include <cstdint>
#include <vector>

namespace brieskorn::stein {

/// A vertex of weight -n is a tb = -1 unknot stabilized n - 2 times, so its
/// rotation number ranges over -(n-2), -(n-2)+2, ..., n-2.
struct RotProfile {
    std::vector<std::vector<std::int64_t>> per_vertex_range;
    arith::BigInt total_count;
    bool zero_exists = false;

    friend bool operator==(const RotProfile&, const RotProfile&) = default;
};

/// Throws UnsupportedFramingError for any vertex of weight >= -1.
RotProfile rot_profile(const plumbing::PlumbingGraph& g);

struct RotEnumeration {
    std::vector<lattice::Vector> vectors; // lexicographic
    bool truncated = false;
};

RotEnumeration enumerate_rot_vectors(const plumbing::PlumbingGraph& g, std::uint64_t limit);

struct LegendrianCount {
    std::int64_t tb_max = 0;
    std::int64_t count = 0;
    std::vector<std::int64_t> rot_values;

    friend bool operator==(const LegendrianCount&, const LegendrianCount&) = default;
};

/// tb_max = pq - p - q, with pq - p - q + 1 fillable structures.
LegendrianCount torus_legendrian_count(std::int64_t p, std::int64_t q);

} // namespace brieskorn::stein
