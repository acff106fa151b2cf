#include "brieskorn/seifert.hpp"

#include "brieskorn/errors.hpp"

#include <algorithm>
#include <sstream>

namespace brieskorn::seifert {

using arith::BigInt;
using arith::Rational;

BrieskornData::BrieskornData(std::vector<std::int64_t> multiplicities)
    : mult_(std::move(multiplicities))
{
    if (mult_.size() < 3)
        throw DomainError("a Brieskorn sphere needs at least three multiplicities");
    for (auto p : mult_)
        if (p < 2)
            throw DomainError("multiplicities must be at least 2, got " + std::to_string(p));
    std::sort(mult_.begin(), mult_.end());
    for (std::size_t i = 0; i < mult_.size(); ++i)
        for (std::size_t j = i + 1; j < mult_.size(); ++j)
            if (arith::gcd(mult_[i], mult_[j]) != 1)
                throw CoprimalityError("multiplicities must be pairwise coprime: gcd(" +
                                       std::to_string(mult_[i]) + ", " +
                                       std::to_string(mult_[j]) + ") != 1");
}

BigInt BrieskornData::product() const
{
    BigInt a = 1;
    for (auto p : mult_)
        a *= p;
    return a;
}

std::string BrieskornData::label() const
{
    std::ostringstream os;
    os << "Sigma(";
    for (std::size_t i = 0; i < mult_.size(); ++i)
        os << (i ? "," : "") << mult_[i];
    os << ')';
    return os.str();
}

SeifertData seifert_invariants(const BrieskornData& b)
{
    // e0 A + sum beta_i (A/alpha_i) = -1 forces beta_i (A/alpha_i) = -1 mod alpha_i.
    const BigInt A = b.product();
    SeifertData s;
    BigInt weighted_sum = 0;
    for (auto alpha : b.multiplicities()) {
        BigInt cofactor = A / alpha;
        auto residue = static_cast<std::int64_t>(cofactor % alpha);
        std::int64_t inv = arith::mod_inverse(residue, alpha);
        std::int64_t beta = (alpha - inv) % alpha;
        s.fractions.emplace_back(BigInt(beta), BigInt(alpha));
        weighted_sum += cofactor * beta;
    }
    BigInt numerator = -1 - weighted_sum;
    // Exact by construction: numerator = 0 mod A.
    s.e0 = arith::to_int64(numerator / A);
    return s;
}

Rational orbifold_euler_number(const SeifertData& s)
{
    Rational e(s.e0);
    for (const auto& r : s.fractions)
        e += r;
    return e;
}

std::string to_string(const SeifertData& s)
{
    std::ostringstream os;
    os << "M(" << s.e0;
    for (std::size_t i = 0; i < s.fractions.size(); ++i)
        os << (i ? ", " : "; ") << s.fractions[i].to_string();
    os << ')';
    return os.str();
}

void require_coprime_pair(std::int64_t p, std::int64_t q)
{
    if (p < 2 || q < 2)
        throw DomainError("torus-knot parameters must be at least 2");
    if (arith::gcd(p, q) != 1)
        throw CoprimalityError("p = " + std::to_string(p) + " and q = " + std::to_string(q) +
                               " are not coprime");
}

std::optional<SurgeryPresentation> surgery_presentation(std::int64_t p, std::int64_t q,
                                                        std::int64_t n, int sign)
{
    require_coprime_pair(p, q);
    if (n < 1)
        throw DomainError("n must be at least 1");
    if (sign != 1 && sign != -1)
        throw DomainError("sign must be +1 or -1");
    BrieskornData manifold({p, q, n * p * q + sign});
    if (sign == -1)
        return SurgeryPresentation{{p, -q}, Rational(BigInt(-1), BigInt(n)), manifold};
    if (n == 1)
        return SurgeryPresentation{{p, q}, Rational(-1), manifold};
    return std::nullopt;
}

} // namespace brieskorn::seifert
