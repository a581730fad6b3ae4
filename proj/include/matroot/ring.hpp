#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

#include "matroot/errors.hpp"

namespace matroot {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Coefficient domain tag: the ring of integers, or a prime field F_p.
 *
 * Prime moduli are validated at construction (primality plus the soft cap
 * kMaxPrime), so downstream code may assume every Ring it sees is well formed.
 */
class Ring {
public:
    static constexpr std::int64_t kMaxPrime = 101;

    static Ring integers() { return Ring(0); }
    static Ring prime_field(std::int64_t p);

    bool is_field() const { return modulus_ != 0; }

    /** Prime modulus for F_p; zero when the ring is Z. */
    std::int64_t modulus() const { return modulus_; }

    std::string name() const;

    bool operator==(const Ring& other) const { return modulus_ == other.modulus_; }
    bool operator!=(const Ring& other) const { return modulus_ != other.modulus_; }

private:
    explicit Ring(std::int64_t modulus) : modulus_(modulus) {}

    std::int64_t modulus_;
};

/**
 * Exact element of a Ring.
 *
 * Holds an arbitrary-precision integer; prime-field values are kept reduced
 * to the canonical representative in [0, p) at all times, so equality and
 * ordering are plain value comparisons.
 */
class Scalar {
public:
    Scalar() : ring_(Ring::integers()), value_(0) {}
    Scalar(const Ring& ring, BigInt value);

    static Scalar zero(const Ring& ring) { return Scalar(ring, 0); }
    static Scalar one(const Ring& ring) { return Scalar(ring, 1); }

    const Ring& ring() const { return ring_; }

    /** Canonical value: the integer itself over Z, the representative in [0, p) over F_p. */
    const BigInt& value() const { return value_; }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);

    /** Multiplicative inverse; over Z only +-1 qualify. Throws NotInvertible. */
    Scalar inverse() const;

    Scalar pow(unsigned long long n) const;

    std::string str() const { return value_.str(); }

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /** Orders by canonical value; both operands must share a ring. */
    bool operator<(const Scalar& rhs) const;

private:
    Ring ring_;
    BigInt value_;
};

Scalar operator+(Scalar lhs, const Scalar& rhs);
Scalar operator-(Scalar lhs, const Scalar& rhs);
Scalar operator*(Scalar lhs, const Scalar& rhs);

/**
 * Exact quotient num/den, or nullopt when den does not divide num over Z.
 * Over a field this is ordinary division (den must be nonzero).
 */
std::optional<Scalar> exact_divide(const Scalar& num, const Scalar& den);

/** Throws RingMismatch unless both scalars live in the same ring. */
void require_same_ring(const Scalar& a, const Scalar& b, const char* where);

}  // namespace matroot
