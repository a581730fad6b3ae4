#include "matroot/ring.hpp"

namespace matroot {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

Ring Ring::prime_field(std::int64_t p) {
    if (!is_prime(p)) {
        throw UnsupportedPrime("prime_field: modulus " + std::to_string(p) + " is not prime");
    }
    if (p > kMaxPrime) {
        throw UnsupportedPrime("prime_field: modulus " + std::to_string(p) +
                               " exceeds the supported bound " + std::to_string(kMaxPrime));
    }
    return Ring(p);
}

std::string Ring::name() const {
    return is_field() ? "F" + std::to_string(modulus_) : "Z";
}

Scalar::Scalar(const Ring& ring, BigInt value) : ring_(ring), value_(std::move(value)) {
    if (ring_.is_field()) {
        value_ %= ring_.modulus();
        if (value_ < 0) value_ += ring_.modulus();
    }
}

Scalar Scalar::operator-() const {
    return Scalar(ring_, -value_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_ring(*this, rhs, "Scalar::operator+");
    *this = Scalar(ring_, value_ + rhs.value_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_ring(*this, rhs, "Scalar::operator-");
    *this = Scalar(ring_, value_ - rhs.value_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_ring(*this, rhs, "Scalar::operator*");
    *this = Scalar(ring_, value_ * rhs.value_);
    return *this;
}

Scalar Scalar::inverse() const {
    if (!ring_.is_field()) {
        if (value_ == 1 || value_ == -1) return *this;
        throw NotInvertible("Scalar::inverse: " + str() + " is not a unit of Z");
    }
    if (value_ == 0) {
        throw NotInvertible("Scalar::inverse: zero in " + ring_.name());
    }
    // Extended Euclid on (value, p); the modulus is small so int64 suffices.
    std::int64_t a = static_cast<std::int64_t>(value_), m = ring_.modulus();
    std::int64_t old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t k = old_r / r;
        std::int64_t tmp = old_r - k * r;
        old_r = r;
        r = tmp;
        tmp = old_s - k * s;
        old_s = s;
        s = tmp;
    }
    return Scalar(ring_, old_s);
}

Scalar Scalar::pow(unsigned long long n) const {
    Scalar base = *this;
    Scalar acc = Scalar::one(ring_);
    while (n > 0) {
        if (n & 1ULL) acc *= base;
        base *= base;
        n >>= 1ULL;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& rhs) const {
    return ring_ == rhs.ring_ && value_ == rhs.value_;
}

bool Scalar::operator<(const Scalar& rhs) const {
    require_same_ring(*this, rhs, "Scalar::operator<");
    return value_ < rhs.value_;
}

Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }

std::optional<Scalar> exact_divide(const Scalar& num, const Scalar& den) {
    require_same_ring(num, den, "exact_divide");
    if (den.ring().is_field()) {
        return num * den.inverse();
    }
    if (den.is_zero()) {
        throw NotInvertible("exact_divide: division by zero over Z");
    }
    if (num.value() % den.value() != 0) return std::nullopt;
    return Scalar(num.ring(), num.value() / den.value());
}

void require_same_ring(const Scalar& a, const Scalar& b, const char* where) {
    if (a.ring() != b.ring()) {
        throw RingMismatch(std::string(where) + ": " + a.ring().name() + " vs " + b.ring().name());
    }
}

}  // namespace matroot
