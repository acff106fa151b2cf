#include "brieskorn/lattice.hpp"

#include "brieskorn/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace brieskorn::lattice {

namespace {

using Int128 = __int128;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b)
{
    if (b > std::numeric_limits<std::uint64_t>::max() - a)
        return std::numeric_limits<std::uint64_t>::max();
    return a + b;
}

std::vector<std::vector<std::int64_t>> to_int64_matrix(const Matrix& m)
{
    std::vector<std::vector<std::int64_t>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& x : m[i])
            out[i].push_back(arith::to_int64(x));
    return out;
}

Matrix negated(const Matrix& m)
{
    Matrix out = m;
    for (auto& row : out)
        for (auto& x : row)
            x = -x;
    return out;
}

BigInt big(Int128 v)
{
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u & 0xFFFFFFFFFFFFFFFFull);
    return neg ? BigInt(-out) : out;
}

// Solution y of Q y = diag(Q) over GF(2); Q must be invertible mod 2.
Vector characteristic_residues(const IntersectionForm& f)
{
    const std::size_t n = f.b2();
    std::vector<std::vector<std::uint8_t>> a(n, std::vector<std::uint8_t>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<std::uint8_t>(f.matrix[i][j] % 2 != 0);
        a[i][n] = a[i][i];
    }
    std::vector<std::size_t> pivot_col(n);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = row;
        while (sel < n && !a[sel][col])
            ++sel;
        if (sel == n)
            throw UnimodularityError("form is singular modulo 2");
        std::swap(a[row], a[sel]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != row && a[i][col])
                for (std::size_t j = col; j <= n; ++j)
                    a[i][j] ^= a[row][j];
        pivot_col[row] = col;
        ++row;
    }
    Vector y(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        y[pivot_col[i]] = a[i][n];
    return y;
}

Int128 norm_of(const std::vector<std::vector<std::int64_t>>& g, const Vector& y)
{
    Int128 s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0)
            continue;
        Int128 row = 0;
        for (std::size_t j = 0; j < y.size(); ++j)
            row += static_cast<Int128>(g[i][j]) * y[j];
        s += row * y[i];
    }
    return s;
}

// Round a/b to the nearest integer congruent to `residue` mod 2 (b > 0).
std::int64_t nearest_with_parity(Int128 a, Int128 b, std::int64_t residue)
{
    Int128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    // q = floor(a/b); candidates q-1, q, q+1, q+2 cover the nearest valid value.
    Int128 best = 0;
    Int128 best_dist = -1;
    for (Int128 c = q - 1; c <= q + 2; ++c) {
        if (((c % 2) + 2) % 2 != residue)
            continue;
        Int128 dist = c * b - a;
        if (dist < 0)
            dist = -dist;
        if (best_dist < 0 || dist < best_dist) {
            best = c;
            best_dist = dist;
        }
    }
    return static_cast<std::int64_t>(best);
}

// Coordinate descent inside the coset y = residues mod 2; returns a short
// characteristic representative used to bound the exact searches.
Vector descend_in_coset(const std::vector<std::vector<std::int64_t>>& g, Vector y)
{
    const std::size_t n = y.size();
    for (int sweep = 0; sweep < 64; ++sweep) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            Int128 s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    s += static_cast<Int128>(g[i][j]) * y[j];
            // Minimize g_ii t^2 + 2 s t over t = y_i mod 2.
            std::int64_t residue = ((y[i] % 2) + 2) % 2;
            std::int64_t t = nearest_with_parity(-s, g[i][i], residue);
            Int128 old_cost = static_cast<Int128>(g[i][i]) * y[i] * y[i] + 2 * s * y[i];
            Int128 new_cost = static_cast<Int128>(g[i][i]) * t * t + 2 * s * t;
            if (new_cost < old_cost) {
                y[i] = t;
                changed = true;
            }
        }
        if (!changed)
            break;
    }
    return y;
}

// Greedy minimum-degree elimination order on the sparsity graph.
std::vector<std::size_t> elimination_order(const Matrix& g)
{
    const std::size_t n = g.size();
    std::vector<std::set<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && g[i][j] != 0)
                adj[i].insert(j);
    std::vector<bool> done(n, false);
    std::vector<std::size_t> order;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!done[v] && (best == n || adj[v].size() < adj[best].size()))
                best = v;
        order.push_back(best);
        done[best] = true;
        std::vector<std::size_t> nbrs(adj[best].begin(), adj[best].end());
        for (auto u : nbrs) {
            adj[u].erase(best);
            for (auto w : nbrs)
                if (w != u)
                    adj[u].insert(w);
        }
        adj[best].clear();
    }
    return order;
}

} // namespace

BigInt pairing(const IntersectionForm& f, const Vector& u, const Vector& v)
{
    BigInt s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0)
            continue;
        BigInt row = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0)
                row += f.matrix[i][j] * v[j];
        s += row * u[i];
    }
    return s;
}

Vector apply_form(const IntersectionForm& f, const Vector& y)
{
    Vector out(f.b2(), 0);
    for (std::size_t i = 0; i < f.b2(); ++i) {
        BigInt s = 0;
        for (std::size_t j = 0; j < f.b2(); ++j)
            if (y[j] != 0)
                s += f.matrix[i][j] * y[j];
        out[i] = arith::to_int64(s);
    }
    return out;
}

std::vector<std::vector<Rational>> inverse(const Matrix& m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rational(m[i][j]);
        a[i][n + i] = Rational(1);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a[sel][col] == Rational(0))
            ++sel;
        if (sel == n)
            throw DomainError("matrix is singular");
        std::swap(a[col], a[sel]);
        Rational pivot = a[col][col];
        for (auto& x : a[col])
            x /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == Rational(0))
                continue;
            Rational factor = a[i][col];
            for (std::size_t j = col; j < 2 * n; ++j)
                if (a[col][j] != Rational(0))
                    a[i][j] -= factor * a[col][j];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = a[i][n + j];
    return inv;
}

Rational inverse_square(const IntersectionForm& f, const Vector& x)
{
    // Solve Q y = x by elimination on one right-hand side; x^T Q^{-1} x = x . y.
    const std::size_t n = f.b2();
    if (x.size() != n)
        throw DomainError("vector length does not match the form");
    if (std::all_of(x.begin(), x.end(), [](auto v) { return v == 0; }))
        return Rational(0);
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rational(f(i, j));
        a[i][n] = Rational(x[i]);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a[sel][col] == Rational(0))
            ++sel;
        if (sel == n)
            throw DomainError("matrix is singular");
        std::swap(a[col], a[sel]);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == Rational(0))
                continue;
            Rational factor = a[i][col] / a[col][col];
            for (std::size_t j = col; j <= n; ++j)
                if (a[col][j] != Rational(0))
                    a[i][j] -= factor * a[col][j];
        }
    }
    std::vector<Rational> y(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = a[i][n];
        for (std::size_t j = i + 1; j < n; ++j)
            if (a[i][j] != Rational(0))
                acc -= a[i][j] * y[j];
        y[i] = acc / a[i][i];
    }
    Rational s(0);
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] != 0)
            s += y[i] * Rational(x[i]);
    return s;
}

void require_negative_definite(const IntersectionForm& f)
{
    if (!plumbing::is_negative_definite(f))
        throw DefinitenessError("intersection form is not negative definite");
}

void require_unimodular(const IntersectionForm& f)
{
    BigInt det = plumbing::determinant(f.matrix);
    if (det != 1 && det != -1)
        throw UnimodularityError("intersection form has determinant " + det.str() +
                                 ", not +-1");
}

bool is_characteristic(const IntersectionForm& f, const Vector& x)
{
    if (x.size() != f.b2())
        return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if ((BigInt(x[i]) - f.matrix[i][i]) % 2 != 0)
            return false;
    return true;
}

bool is_forest(const IntersectionForm& f)
{
    const std::size_t n = f.b2();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (f.matrix[i][j] == 0)
                continue;
            auto a = find(i), b = find(j);
            if (a == b)
                return false;
            parent[a] = b;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Fincke-Pohst enumeration

Enumerator::Enumerator(const Matrix& g)
{
    const std::size_t n = g.size();
    order_ = elimination_order(g);
    // LDL^T of the permuted matrix, positions in elimination order.
    std::vector<std::vector<Rational>> lower(n, std::vector<Rational>(n));
    pivots_.assign(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        Rational d(g[order_[j]][order_[j]]);
        for (std::size_t k = 0; k < j; ++k)
            if (lower[j][k] != Rational(0))
                d -= lower[j][k] * lower[j][k] * pivots_[k];
        if (d <= Rational(0))
            throw DefinitenessError("Gram matrix is not positive definite");
        pivots_[j] = d;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational s(g[order_[i]][order_[j]]);
            for (std::size_t k = 0; k < j; ++k)
                if (lower[i][k] != Rational(0) && lower[j][k] != Rational(0))
                    s -= lower[i][k] * lower[j][k] * pivots_[k];
            lower[i][j] = s / d;
        }
    }
    mu_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (lower[j][i] != Rational(0))
                mu_[i].emplace_back(j, lower[j][i]);
}

void Enumerator::run(Rational radius, const std::optional<Vector>& parity, const Visitor& visit,
                     std::uint64_t budget) const
{
    const std::size_t n = order_.size();
    if (n == 0) {
        Vector empty;
        visit(empty, Rational(0), radius);
        return;
    }
    std::vector<std::int64_t> pos_value(n, 0);
    std::uint64_t nodes = 0;
    bool stop = false;

    std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level,
                                                                    const Rational& partial) {
        Rational center(0);
        for (const auto& [j, mu] : mu_[level])
            if (pos_value[j] != 0)
                center -= mu * Rational(pos_value[j]);
        const BigInt step = parity ? 2 : 1;
        BigInt start = center.floor();
        if (parity) {
            std::int64_t residue = (*parity)[order_[level]];
            if (((start % 2) + 2) % 2 != residue)
                start -= 1;
        }
        for (int direction : {-1, +1}) {
            BigInt y = (direction < 0) ? start : BigInt(start + step);
            for (;; y += direction * step) {
                if (stop)
                    return;
                Rational diff = Rational(y) - center;
                Rational term = pivots_[level] * diff * diff;
                if (term > radius - partial)
                    break;
                if (++nodes > budget)
                    throw SearchBudgetError("lattice enumeration exceeded its node budget", nodes);
                pos_value[level] = arith::to_int64(y);
                Rational next = partial + term;
                if (level == 0) {
                    Vector out(n, 0);
                    for (std::size_t k = 0; k < n; ++k)
                        out[order_[k]] = pos_value[k];
                    if (!visit(out, next, radius)) {
                        stop = true;
                        return;
                    }
                } else {
                    descend(level - 1, next);
                }
            }
        }
        pos_value[level] = 0;
    };
    descend(n - 1, Rational(0));
}

std::vector<Vector> short_vectors(const IntersectionForm& f, std::int64_t norm,
                                  std::uint64_t budget)
{
    require_negative_definite(f);
    if (norm >= 0)
        throw DomainError("short_vectors needs a negative norm");
    const Rational target(-norm);
    std::set<Vector> found;
    Enumerator en(negated(f.matrix));
    en.run(
        target, std::nullopt,
        [&](const Vector& y, const Rational& n, Rational&) {
            if (n != target)
                return true;
            Vector v = y;
            auto first = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
            if (first != v.end() && *first < 0)
                for (auto& x : v)
                    x = -x;
            found.insert(std::move(v));
            return true;
        },
        budget);
    return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Diagonalization by splitting off (-1)-vectors

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b)
{
    const std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    BigMatrix out(rows, std::vector<BigInt>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                if (b[k][j] != 0)
                    out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

BigMatrix transpose(const BigMatrix& a)
{
    if (a.empty())
        return {};
    BigMatrix out(a[0].size(), std::vector<BigInt>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j)
            out[j][i] = a[i][j];
    return out;
}

// Columns form a basis of {w : a . w = 0} for a primitive integer row a.
BigMatrix kernel_basis(std::vector<BigInt> a)
{
    const std::size_t k = a.size();
    BigMatrix w(k, std::vector<BigInt>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        w[i][i] = 1;
    // Column operations reduce a to a single nonzero entry at column 0.
    auto col_op = [&](std::size_t dst, std::size_t src, const BigInt& factor) {
        a[dst] -= factor * a[src];
        for (std::size_t r = 0; r < k; ++r)
            w[r][dst] -= factor * w[r][src];
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        std::swap(a[x], a[y]);
        for (std::size_t r = 0; r < k; ++r)
            std::swap(w[r][x], w[r][y]);
    };
    for (;;) {
        std::size_t pivot = k;
        for (std::size_t i = 0; i < k; ++i)
            if (a[i] != 0 && (pivot == k || abs(a[i]) < abs(a[pivot])))
                pivot = i;
        if (pivot == k)
            throw DomainError("zero functional has no complement");
        bool others = false;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == pivot || a[i] == 0)
                continue;
            others = true;
            col_op(i, pivot, a[i] / a[pivot]);
        }
        if (!others) {
            col_swap(0, pivot);
            break;
        }
    }
    if (abs(a[0]) != 1)
        throw UnimodularityError("split vector is not primitive");
    BigMatrix basis(k, std::vector<BigInt>(k - 1));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 1; c < k; ++c)
            basis[r][c - 1] = w[r][c];
    return basis;
}

} // namespace

DiagonalizationResult diagonalize(const IntersectionForm& f, std::uint64_t budget)
{
    require_negative_definite(f);
    require_unimodular(f);
    const std::size_t n = f.b2();

    BigMatrix gram = f.matrix;      // current Gram matrix (negative definite)
    BigMatrix basis(n, std::vector<BigInt>(n, 0)); // columns in original coordinates
    for (std::size_t i = 0; i < n; ++i)
        basis[i][i] = 1;
    std::vector<Vector> witness;

    while (!gram.empty()) {
        const std::size_t k = gram.size();
        std::optional<Vector> found;
        Enumerator en(negated(gram));
        en.run(
            Rational(1), std::nullopt,
            [&](const Vector& y, const Rational& norm, Rational&) {
                if (norm == Rational(1)) {
                    found = y;
                    return false;
                }
                return true;
            },
            budget);
        if (!found)
            return {false, std::nullopt};
        const Vector& v = *found;

        Vector original(n, 0);
        for (std::size_t r = 0; r < n; ++r) {
            BigInt s = 0;
            for (std::size_t c = 0; c < k; ++c)
                if (v[c] != 0)
                    s += basis[r][c] * v[c];
            original[r] = arith::to_int64(s);
        }
        witness.push_back(original);

        std::vector<BigInt> a(k, 0); // a = Q v in the current basis
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (v[j] != 0)
                    a[i] += gram[i][j] * v[j];

        BigMatrix complement;
        auto unit = std::find_if(v.begin(), v.end(), [](auto x) { return x == 1 || x == -1; });
        if (unit != v.end()) {
            // pi(x) = x + (x.Qv) v; the images of e_i, i != j, are a basis.
            const std::size_t skip = static_cast<std::size_t>(unit - v.begin());
            complement.assign(k, std::vector<BigInt>(k - 1, 0));
            std::size_t c = 0;
            for (std::size_t i = 0; i < k; ++i) {
                if (i == skip)
                    continue;
                for (std::size_t r = 0; r < k; ++r)
                    complement[r][c] = a[i] * v[r] + (r == i ? 1 : 0);
                ++c;
            }
        } else {
            complement = kernel_basis(a);
        }

        gram = multiply(transpose(complement), multiply(gram, complement));
        basis = multiply(basis, complement);
    }

    // Splitting soundness: the witness Gram matrix is exactly -I.
    for (std::size_t i = 0; i < witness.size(); ++i)
        for (std::size_t j = 0; j < witness.size(); ++j) {
            BigInt expected = (i == j) ? -1 : 0;
            if (pairing(f, witness[i], witness[j]) != expected)
                throw std::logic_error("diagonalization witness is not orthonormal");
        }
    return {true, witness};
}

// ---------------------------------------------------------------------------
// Characteristic vectors

std::string to_string(CharSearchMethod m)
{
    switch (m) {
    case CharSearchMethod::tree_dp:
        return "tree-dp";
    case CharSearchMethod::enumeration:
        return "enumeration";
    case CharSearchMethod::box:
        return "box";
    }
    return "unknown";
}

std::uint64_t box_size(const IntersectionForm& f, std::int64_t margin)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < f.b2(); ++i) {
        // Values m + 2 - margin, ..., -m + margin in steps of 2.
        BigInt m = f.matrix[i][i];
        BigInt count = (-m + margin - (m + 2 - margin)) / 2 + 1;
        if (count < 1)
            return 0;
        total = saturating_mul(total, count > BigInt(std::numeric_limits<std::uint64_t>::max())
                                          ? std::numeric_limits<std::uint64_t>::max()
                                          : static_cast<std::uint64_t>(count));
    }
    return total;
}

namespace {

CharSquareResult box_search(const IntersectionForm& f, std::int64_t margin, std::uint64_t budget)
{
    if (margin < 0 || margin % 2 != 0)
        throw DomainError("characteristic box margin must be a nonnegative even integer");
    const std::uint64_t size = box_size(f, margin);
    if (size > budget)
        throw SearchBudgetError("characteristic box search exceeds the budget", size);
    const std::size_t n = f.b2();
    const auto rat_inv = inverse(f.matrix);
    std::vector<std::vector<Int128>> inv(n, std::vector<Int128>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = static_cast<Int128>(arith::to_int64(rat_inv[i][j].numerator()));

    Vector lo(n), hi(n), x(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t m = arith::to_int64(f.matrix[i][i]);
        lo[i] = m + 2 - margin;
        hi[i] = -m + margin;
        x[i] = lo[i];
    }
    std::vector<Int128> z(n, 0); // Q^{-1} x
    Int128 square = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            z[i] += inv[i][j] * x[j];
    for (std::size_t i = 0; i < n; ++i)
        square += static_cast<Int128>(x[i]) * z[i];

    Int128 best = square;
    Vector best_x = x;
    auto shift = [&](std::size_t i, std::int64_t delta) {
        square += 2 * delta * z[i] + static_cast<Int128>(delta) * delta * inv[i][i];
        for (std::size_t r = 0; r < n; ++r)
            z[r] += inv[r][i] * delta;
        x[i] += delta;
    };
    // Odometer over the box.
    for (;;) {
        std::size_t i = 0;
        while (i < n && x[i] == hi[i]) {
            shift(i, lo[i] - hi[i]);
            ++i;
        }
        if (i == n)
            break;
        shift(i, 2);
        if (square > best) {
            best = square;
            best_x = x;
        }
    }
    return {big(best), best_x, CharSearchMethod::box};
}

// (G^{-1})_vv for a positive definite G supported on a forest, in O(n):
// s[u] is the Schur pivot of u's side of the edge to its parent (leaves
// first), o[v] the pivot of the parent's side as seen from v.
std::vector<Rational> forest_inverse_diagonal(const std::vector<std::vector<std::int64_t>>& g,
                                              const std::vector<std::size_t>& bfs,
                                              const std::vector<std::size_t>& parent,
                                              const std::vector<std::vector<std::size_t>>& adj)
{
    const std::size_t n = g.size();
    auto w2 = [&](std::size_t a, std::size_t b) { return Rational(g[a][b] * g[a][b]); };
    std::vector<Rational> up(n), down(n), total(n, Rational(0));
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
        const std::size_t u = *it;
        Rational acc(g[u][u]);
        for (auto c : adj[u])
            if (c != parent[u])
                acc -= w2(u, c) / up[c];
        up[u] = acc;
    }
    for (auto v : bfs) {
        for (auto c : adj[v])
            total[v] += w2(v, c) / (c == parent[v] ? down[v] : up[c]);
        for (auto c : adj[v])
            if (c != parent[v])
                down[c] = Rational(g[v][v]) - (total[v] - w2(v, c) / up[c]);
    }
    std::vector<Rational> out(n);
    for (std::size_t v = 0; v < n; ++v)
        out[v] = Rational(1) / (Rational(g[v][v]) - total[v]);
    return out;
}

CharSquareResult tree_dp(const IntersectionForm& f, const std::vector<std::vector<std::int64_t>>& g,
                         const Vector& start, std::uint64_t budget)
{
    const std::size_t n = f.b2();
    const BigInt radius = big(norm_of(g, start));

    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && g[i][j] != 0)
                adj[i].push_back(j);

    std::vector<std::size_t> parent(n, n), bfs;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> roots;
    for (std::size_t r = 0; r < n; ++r) {
        if (seen[r])
            continue;
        roots.push_back(r);
        seen[r] = true;
        std::size_t head = bfs.size();
        bfs.push_back(r);
        while (head < bfs.size()) {
            std::size_t v = bfs[head++];
            for (auto u : adj[v])
                if (!seen[u]) {
                    seen[u] = true;
                    parent[u] = v;
                    bfs.push_back(u);
                }
        }
    }
    const auto ginv = forest_inverse_diagonal(g, bfs, parent, adj);

    // |y_v|^2 <= R (G^-1)_vv by Cauchy-Schwarz in the positive form G = -Q.
    std::vector<std::vector<std::int64_t>> domain(n);
    std::uint64_t cells = 0;
    for (std::size_t v = 0; v < n; ++v) {
        BigInt scaled = radius * ginv[v].numerator() / ginv[v].denominator();
        BigInt bound = boost::multiprecision::sqrt(scaled);
        if (bound > BigInt(1) << 31)
            throw SearchBudgetError("characteristic search domain too large",
                                    std::numeric_limits<std::uint64_t>::max());
        std::int64_t b = static_cast<std::int64_t>(bound);
        std::int64_t residue = ((start[v] % 2) + 2) % 2;
        std::int64_t y = -b;
        if (((y % 2) + 2) % 2 != residue)
            ++y;
        for (; y <= b; y += 2)
            domain[v].push_back(y);
    }

    for (std::size_t v = 0; v < n; ++v)
        if (parent[v] != n)
            cells = saturating_add(cells, saturating_mul(domain[v].size(), domain[parent[v]].size()));
    if (cells > budget)
        throw SearchBudgetError("characteristic dynamic program exceeds the budget", cells);

    // cost[v][k]: minimum of the subtree form with y_v = domain[v][k].
    std::vector<std::vector<Int128>> cost(n);
    std::vector<std::vector<std::size_t>> choice(n); // child's argmin per parent value
    for (std::size_t v = 0; v < n; ++v) {
        cost[v].resize(domain[v].size());
        for (std::size_t k = 0; k < domain[v].size(); ++k)
            cost[v][k] = static_cast<Int128>(g[v][v]) * domain[v][k] * domain[v][k];
    }
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
        const std::size_t u = *it;
        const std::size_t v = parent[u];
        if (v == n)
            continue;
        const Int128 coupling = 2 * static_cast<Int128>(g[u][v]);
        choice[u].resize(domain[v].size());
        for (std::size_t k = 0; k < domain[v].size(); ++k) {
            const Int128 yv = domain[v][k];
            Int128 best = 0;
            std::size_t arg = 0;
            for (std::size_t l = 0; l < domain[u].size(); ++l) {
                Int128 c = cost[u][l] + coupling * yv * domain[u][l];
                if (l == 0 || c < best) {
                    best = c;
                    arg = l;
                }
            }
            cost[v][k] += best;
            choice[u][k] = arg;
        }
    }

    Vector y(n, 0);
    std::vector<std::size_t> index(n, 0);
    Int128 total = 0;
    for (auto r : roots) {
        std::size_t arg = 0;
        for (std::size_t k = 1; k < cost[r].size(); ++k)
            if (cost[r][k] < cost[r][arg])
                arg = k;
        index[r] = arg;
        total += cost[r][arg];
    }
    for (auto v : bfs) {
        if (parent[v] != n)
            index[v] = choice[v][index[parent[v]]];
        y[v] = domain[v][index[v]];
    }
    if (norm_of(g, y) != total)
        throw std::logic_error("dynamic program reconstruction mismatch");
    return {big(-total), apply_form(f, y), CharSearchMethod::tree_dp};
}

CharSquareResult coset_enumeration(const IntersectionForm& f,
                                   const std::vector<std::vector<std::int64_t>>& g,
                                   const Vector& start, std::uint64_t budget)
{
    Vector best = start;
    Rational best_norm(big(norm_of(g, start)));
    Vector parity(start.size());
    for (std::size_t i = 0; i < start.size(); ++i)
        parity[i] = ((start[i] % 2) + 2) % 2;
    Enumerator en(negated(f.matrix));
    en.run(
        best_norm, parity,
        [&](const Vector& y, const Rational& norm, Rational& radius) {
            if (norm < best_norm) {
                best_norm = norm;
                best = y;
                radius = norm;
            }
            return true;
        },
        budget);
    return {-best_norm.numerator(), apply_form(f, best), CharSearchMethod::enumeration};
}

} // namespace

CharSquareResult max_char_square(const IntersectionForm& f, const CharSearchOptions& options)
{
    require_negative_definite(f);
    require_unimodular(f);
    if (options.box_margin)
        return box_search(f, *options.box_margin, options.budget);

    // K = Q y is characteristic iff y lies in one residue class mod 2, and
    // K^2 = y^T Q y, so maximizing K^2 minimizes y^T (-Q) y on that coset.
    const auto g = to_int64_matrix(negated(f.matrix));
    Vector start = descend_in_coset(g, characteristic_residues(f));
    if (is_forest(f))
        return tree_dp(f, g, start, options.budget);
    return coset_enumeration(f, g, start, options.budget);
}

} // namespace brieskorn::lattice
