#include "brieskorn/plumbing.hpp"

#include "brieskorn/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace brieskorn::plumbing {

using arith::BigInt;
using arith::Rational;

std::size_t PlumbingGraph::vertex_count() const
{
    std::size_t n = 1;
    for (const auto& leg : legs)
        n += leg.size();
    return n;
}

std::vector<std::int64_t> PlumbingGraph::weights() const
{
    std::vector<std::int64_t> w{center_weight};
    for (const auto& leg : legs)
        w.insert(w.end(), leg.begin(), leg.end());
    return w;
}

std::vector<std::pair<std::size_t, std::size_t>> PlumbingGraph::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    std::size_t next = 1;
    for (const auto& leg : legs) {
        std::size_t prev = 0;
        for (std::size_t j = 0; j < leg.size(); ++j) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return e;
}

std::vector<std::size_t> PlumbingGraph::valences() const
{
    std::vector<std::size_t> val(vertex_count(), 0);
    for (auto [u, v] : edges()) {
        ++val[u];
        ++val[v];
    }
    return val;
}

void validate(const PlumbingGraph& g)
{
    if (g.center_weight > -1)
        throw DomainError("center weight must be <= -1");
    for (const auto& leg : g.legs) {
        if (leg.empty())
            throw DomainError("plumbing legs must be nonempty");
        for (auto w : leg)
            if (w > -2)
                throw DomainError("leg weights must be <= -2, got " + std::to_string(w));
    }
}

PlumbingGraph build_plumbing(const seifert::SeifertData& s)
{
    PlumbingGraph g;
    g.center_weight = s.e0;
    for (const auto& r : s.fractions) {
        // Leg for beta/alpha carries the expansion of -alpha/beta.
        arith::Rational leg_value = -(arith::Rational(1) / r);
        auto cf = arith::neg_cont_frac(leg_value);
        std::vector<std::int64_t> leg;
        for (auto a : cf.coefficients)
            leg.push_back(-a);
        g.legs.push_back(std::move(leg));
    }
    validate(g);
    return g;
}

std::vector<std::size_t> bad_vertices(const PlumbingGraph& g)
{
    auto w = g.weights();
    auto val = g.valences();
    std::vector<std::size_t> bad;
    for (std::size_t v = 0; v < w.size(); ++v)
        if (w[v] > -static_cast<std::int64_t>(val[v]))
            bad.push_back(v);
    return bad;
}

IntersectionForm make_form(const std::vector<std::vector<std::int64_t>>& rows)
{
    IntersectionForm f;
    const std::size_t n = rows.size();
    f.matrix.assign(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw DomainError("intersection form must be square");
        for (std::size_t j = 0; j < n; ++j)
            f.matrix[i][j] = rows[i][j];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (f.matrix[i][j] != f.matrix[j][i])
                throw DomainError("intersection form must be symmetric");
    return f;
}

IntersectionForm diagonal_form(const std::vector<std::int64_t>& entries)
{
    std::vector<std::vector<std::int64_t>> rows(entries.size(),
                                                std::vector<std::int64_t>(entries.size(), 0));
    for (std::size_t i = 0; i < entries.size(); ++i)
        rows[i][i] = entries[i];
    return make_form(rows);
}

IntersectionForm intersection_matrix(const PlumbingGraph& g)
{
    const auto w = g.weights();
    IntersectionForm f;
    f.matrix.assign(w.size(), std::vector<BigInt>(w.size(), 0));
    for (std::size_t v = 0; v < w.size(); ++v)
        f.matrix[v][v] = w[v];
    for (auto [u, v] : g.edges()) {
        f.matrix[u][v] = 1;
        f.matrix[v][u] = 1;
    }
    return f;
}

namespace {

// Gaussian elimination over Q on sparse rows, so plumbing trees cost about
// O(n) instead of O(n^3). Returns the pivots in order; with allow_swaps
// false it stops at the first zero pivot (pivots are then ratios of
// consecutive leading minors). `sign` collects row-swap parity.
std::vector<Rational> sparse_pivots(const Matrix& input, bool allow_swaps, int& sign)
{
    const std::size_t n = input.size();
    std::vector<std::map<std::size_t, Rational>> rows(n);
    std::vector<std::set<std::size_t>> cols(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (input[i][j] != 0) {
                rows[i].emplace(j, Rational(input[i][j]));
                cols[j].insert(i);
            }
    sign = 1;
    std::vector<Rational> pivots;
    for (std::size_t k = 0; k < n; ++k) {
        if (!rows[k].count(k)) {
            if (!allow_swaps)
                return pivots;
            auto it = cols[k].upper_bound(k);
            if (it == cols[k].end())
                return pivots;
            const std::size_t r = *it;
            for (const auto& [j, v] : rows[k])
                cols[j].erase(k);
            for (const auto& [j, v] : rows[r])
                cols[j].erase(r);
            std::swap(rows[k], rows[r]);
            for (const auto& [j, v] : rows[k])
                cols[j].insert(k);
            for (const auto& [j, v] : rows[r])
                cols[j].insert(r);
            sign = -sign;
        }
        const Rational pivot = rows[k].at(k);
        pivots.push_back(pivot);
        std::vector<std::size_t> targets(cols[k].upper_bound(k), cols[k].end());
        for (auto i : targets) {
            const Rational factor = rows[i].at(k) / pivot;
            for (auto it = rows[k].lower_bound(k); it != rows[k].end(); ++it) {
                const std::size_t j = it->first;
                Rational& entry = rows[i][j];
                entry -= factor * it->second;
                if (entry == Rational(0)) {
                    rows[i].erase(j);
                    cols[j].erase(i);
                } else {
                    cols[j].insert(i);
                }
            }
        }
    }
    return pivots;
}

} // namespace

BigInt determinant(const Matrix& input)
{
    int sign = 1;
    auto pivots = sparse_pivots(input, true, sign);
    if (pivots.size() < input.size())
        return 0;
    Rational det(sign);
    for (const auto& p : pivots)
        det *= p;
    return det.numerator(); // integral for an integer matrix
}

bool is_negative_definite(const IntersectionForm& f)
{
    // Without swaps the k-th pivot is minor_k / minor_{k-1}, so all leading
    // minors of -Q are positive iff every pivot of Q is negative.
    if (f.b2() == 0)
        return false;
    int sign = 1;
    auto pivots = sparse_pivots(f.matrix, false, sign);
    if (pivots.size() < f.b2())
        return false;
    return std::all_of(pivots.begin(), pivots.end(), [](const Rational& p) { return p < Rational(0); });
}

FormProperties form_properties(const IntersectionForm& f)
{
    FormProperties props;
    props.b2 = f.b2();
    props.determinant = determinant(f.matrix);
    props.negative_definite = is_negative_definite(f);
    props.even = true;
    for (std::size_t i = 0; i < f.b2(); ++i)
        if (f.matrix[i][i] % 2 != 0)
            props.even = false;
    return props;
}

std::string node_id(const PlumbingGraph& g, std::size_t v)
{
    if (v == 0)
        return "v0";
    std::size_t index = v - 1;
    for (std::size_t i = 0; i < g.legs.size(); ++i) {
        if (index < g.legs[i].size())
            return "L" + std::to_string(i + 1) + "_" + std::to_string(index + 1);
        index -= g.legs[i].size();
    }
    throw DomainError("vertex index out of range");
}

std::string to_dot(const PlumbingGraph& g)
{
    std::ostringstream os;
    os << "graph plumbing {\n";
    const auto w = g.weights();
    for (std::size_t v = 0; v < w.size(); ++v)
        os << "  " << node_id(g, v) << " [label=\"" << w[v] << "\"];\n";
    for (auto [u, v] : g.edges())
        os << "  " << node_id(g, u) << " -- " << node_id(g, v) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace brieskorn::plumbing
