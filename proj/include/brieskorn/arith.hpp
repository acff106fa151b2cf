#pragma once

// Exact rational arithmetic, modular inverses and negative continued
// fractions. Nothing in the library uses floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brieskorn::arith {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction with positive denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(BigInt numerator, BigInt denominator = 1);
    Rational(std::int64_t value) : num_(value) {}
    Rational(int value) : num_(value) {}

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }

    /// Floor and ceiling as integers.
    BigInt floor() const;
    BigInt ceil() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;
    /// Accepts "n" or "n/d" with optional sign; throws DomainError.
    static Rational parse(std::string_view text);

private:
    void normalize();

    BigInt num_{0};
    BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Converts to int64, throwing DomainError when out of range.
std::int64_t to_int64(const BigInt& value);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// (p*, q*) with 0 < p* < q, p p* = 1 mod q and 0 < q* < p, q q* = 1 mod p.
struct InversePair {
    std::int64_t p_star;
    std::int64_t q_star;
    friend bool operator==(const InversePair&, const InversePair&) = default;
};

/// Inverse of `a` modulo `m` in [0, m); requires gcd(a, m) = 1, m >= 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

InversePair mod_inverse_pair(std::int64_t p, std::int64_t q);

/// Negative continued fraction [-a_1, ..., -a_m]^-; the coefficients are the
/// positive magnitudes a_j, each at least 2.
struct NegContFrac {
    std::vector<std::int64_t> coefficients;

    friend bool operator==(const NegContFrac&, const NegContFrac&) = default;
};

/// Unique expansion of x = -r/s (r > s >= 1) by repeated ceiling division.
NegContFrac neg_cont_frac(const Rational& x);

/// Value of a_1 - 1/(a_2 - 1/(...)) with each a_j negated.
Rational eval_cont_frac(const NegContFrac& cf);

/// Renders with the signed convention, e.g. "[-2, -2, -3]^-".
std::string to_string(const NegContFrac& cf);

} // namespace brieskorn::arith
