#include "brieskorn/arith.hpp"

#include "brieskorn/errors.hpp"

#include <limits>
#include <sstream>
#include <utility>

namespace brieskorn::arith {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Floor division for a positive divisor.
BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q = a / b;
    if (a % b != 0 && a < 0)
        q -= 1;
    return q;
}

} // namespace

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator))
    , den_(std::move(denominator))
{
    if (den_ == 0)
        throw DomainError("rational with zero denominator");
    normalize();
}

void Rational::normalize()
{
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(abs_big(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0)
        den_ = 1;
}

BigInt Rational::floor() const { return floor_div(num_, den_); }

BigInt Rational::ceil() const { return -floor_div(-num_, den_); }

Rational Rational::operator-() const
{
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs)
{
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.num_ == 0)
        throw DomainError("division by zero rational");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const
{
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text)
{
    auto parse_int = [](std::string_view s) {
        std::string_view digits = s;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
            digits.remove_prefix(1);
        if (digits.empty())
            throw DomainError("malformed rational");
        for (char c : digits)
            if (c < '0' || c > '9')
                throw DomainError("malformed rational: " + std::string(s));
        BigInt v{std::string(digits)};
        return (s.front() == '-') ? BigInt(-v) : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::int64_t to_int64(const BigInt& value)
{
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min())
        throw DomainError("integer " + value.str() + " exceeds the 64-bit range");
    return static_cast<std::int64_t>(value);
}

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    BigInt g = boost::multiprecision::gcd(abs_big(BigInt(a)), abs_big(BigInt(b)));
    return static_cast<std::int64_t>(g);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    if (m < 1)
        throw DomainError("modulus must be positive");
    if (m == 1)
        return 0;
    // Extended Euclid on (a mod m, m).
    BigInt old_r = ((BigInt(a) % m) + m) % m, r = m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt quotient = old_r / r;
        BigInt tmp = old_r - quotient * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quotient * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw CoprimalityError(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    BigInt inv = ((old_s % m) + m) % m;
    return static_cast<std::int64_t>(inv);
}

InversePair mod_inverse_pair(std::int64_t p, std::int64_t q)
{
    if (p < 2 || q < 2)
        throw DomainError("mod_inverse_pair requires p, q >= 2");
    if (gcd(p, q) != 1)
        throw CoprimalityError("p = " + std::to_string(p) + " and q = " + std::to_string(q) +
                               " are not coprime");
    return {mod_inverse(p, q), mod_inverse(q, p)};
}

NegContFrac neg_cont_frac(const Rational& x)
{
    if (x >= Rational(-1))
        throw DomainError("negative continued fraction needs x < -1, got " + x.to_string());
    BigInt r = -x.numerator();
    BigInt s = x.denominator();
    NegContFrac cf;
    if (r <= (BigInt(1) << 62)) {
        auto r64 = static_cast<std::int64_t>(r), s64 = static_cast<std::int64_t>(s);
        while (s64 != 0) {
            std::int64_t a = r64 / s64 + (r64 % s64 != 0);
            cf.coefficients.push_back(a);
            std::int64_t next = a * s64 - r64; // 0 <= next < s64, no overflow
            r64 = s64;
            s64 = next;
        }
        return cf;
    }
    // r/s = a - 1/(r'/s') with a = ceil(r/s), r' = s, s' = a s - r.
    while (s != 0) {
        BigInt a = (r + s - 1) / s;
        cf.coefficients.push_back(to_int64(a));
        BigInt next_s = a * s - r;
        r = s;
        s = next_s;
    }
    return cf;
}

Rational eval_cont_frac(const NegContFrac& cf)
{
    if (cf.coefficients.empty())
        throw DomainError("empty continued fraction");
    for (auto a : cf.coefficients)
        if (a < 2)
            throw DomainError("continued fraction coefficient " + std::to_string(a) + " < 2");
    // Right to left: a_j - 1/(r/s) = (a_j r - s)/r, kept as r/s > 1.
    {
        std::int64_t r = cf.coefficients.back(), s = 1;
        bool overflow = false;
        for (auto it = cf.coefficients.rbegin() + 1; it != cf.coefficients.rend(); ++it) {
            std::int64_t prod = 0;
            if (__builtin_mul_overflow(*it, r, &prod)) {
                overflow = true;
                break;
            }
            s = std::exchange(r, prod - s);
        }
        if (!overflow)
            return Rational(BigInt(-r), BigInt(s));
    }
    auto it = cf.coefficients.rbegin();
    BigInt r = *it, s = 1;
    for (++it; it != cf.coefficients.rend(); ++it) {
        BigInt next = *it * r - s;
        s = std::move(r);
        r = std::move(next);
    }
    return Rational(-r, s);
}

std::string to_string(const NegContFrac& cf)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < cf.coefficients.size(); ++i) {
        if (i)
            os << ", ";
        os << -cf.coefficients[i];
    }
    os << "]^-";
    return os.str();
}

} // namespace brieskorn::arith
