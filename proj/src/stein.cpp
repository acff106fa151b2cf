#include "brieskorn/stein.hpp"

#include "brieskorn/errors.hpp"
#include "brieskorn/seifert.hpp"

namespace brieskorn::stein {

RotProfile rot_profile(const plumbing::PlumbingGraph& g)
{
    RotProfile r;
    r.total_count = 1;
    r.zero_exists = true;
    for (auto w : g.weights()) {
        if (w >= -1)
            throw UnsupportedFramingError("vertex weight " + std::to_string(w) +
                                          " has no tb = -1 stabilization scheme");
        const std::int64_t n = -w;
        std::vector<std::int64_t> range;
        for (std::int64_t v = -(n - 2); v <= n - 2; v += 2)
            range.push_back(v);
        r.total_count *= static_cast<std::int64_t>(range.size());
        if (n % 2 != 0)
            r.zero_exists = false;
        r.per_vertex_range.push_back(std::move(range));
    }
    return r;
}

RotEnumeration enumerate_rot_vectors(const plumbing::PlumbingGraph& g, std::uint64_t limit)
{
    if (limit == 0)
        throw DomainError("enumeration limit must be positive");
    const auto profile = rot_profile(g);
    const auto& ranges = profile.per_vertex_range;
    const std::size_t n = ranges.size();
    RotEnumeration out;
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        if (out.vectors.size() == limit) {
            out.truncated = arith::BigInt(limit) < profile.total_count;
            return out;
        }
        lattice::Vector v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = ranges[i][idx[i]];
        out.vectors.push_back(std::move(v));
        // Last coordinate varies fastest.
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++idx[i] < ranges[i].size())
                break;
            idx[i] = 0;
            if (i == 0)
                return out;
        }
        if (n == 0)
            return out;
    }
}

LegendrianCount torus_legendrian_count(std::int64_t p, std::int64_t q)
{
    seifert::require_coprime_pair(p, q);
    LegendrianCount c;
    c.tb_max = p * q - p - q;
    c.count = c.tb_max + 1;
    for (std::int64_t r = -c.tb_max; r <= c.tb_max; r += 2)
        c.rot_values.push_back(r);
    return c;
}

} // namespace brieskorn::stein
