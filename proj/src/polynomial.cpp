#include "matroot/polynomial.hpp"

#include <algorithm>

namespace matroot {

namespace {

// Largest r >= 0 with r^n <= v, by bisection on bit length. v >= 0, n >= 1.
BigInt floor_nth_root(const BigInt& v, unsigned n) {
    if (v <= 1 || n == 1) return v;
    BigInt lo = 0, hi = BigInt(1) << (static_cast<unsigned>(boost::multiprecision::msb(v)) / n + 1);
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, n) <= v) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

}  // namespace

Polynomial::Polynomial(const Ring& ring, std::vector<Scalar> ascending_coeffs)
    : ring_(ring), coeffs_(std::move(ascending_coeffs)) {
    for (const Scalar& c : coeffs_) {
        if (c.ring() != ring_) {
            throw RingMismatch("Polynomial: coefficient ring " + c.ring().name() +
                               " differs from " + ring_.name());
        }
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::from_int_coeffs(const Ring& ring, const std::vector<BigInt>& ascending) {
    std::vector<Scalar> cs;
    cs.reserve(ascending.size());
    for (const BigInt& v : ascending) cs.emplace_back(ring, v);
    return Polynomial(ring, std::move(cs));
}

Scalar Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(ring_);
}

Scalar Polynomial::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(ring_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

bool Polynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back().is_one();
}

std::vector<Scalar> roots_over_field(const Polynomial& f) {
    if (!f.ring().is_field()) {
        throw RingMismatch("roots_over_field: polynomial is over " + f.ring().name());
    }
    if (f.is_zero()) {
        throw ZeroPolynomial("roots_over_field: the zero polynomial vanishes everywhere");
    }
    std::vector<Scalar> roots;
    for (std::int64_t x = 0; x < f.ring().modulus(); ++x) {
        Scalar cand(f.ring(), x);
        if (f.eval(cand).is_zero()) roots.push_back(cand);
    }
    return roots;
}

std::vector<Scalar> integer_roots(const Polynomial& f) {
    const Ring z = Ring::integers();
    if (f.ring() != z) {
        throw RingMismatch("integer_roots: polynomial is over " + f.ring().name());
    }
    if (f.is_zero()) {
        throw ZeroPolynomial("integer_roots: the zero polynomial vanishes everywhere");
    }
    if (!f.is_monic()) {
        throw std::invalid_argument("integer_roots: polynomial must be monic");
    }

    // Strip x^k so the divisor scan sees a nonzero constant term.
    std::vector<Scalar> cs = f.coefficients();
    bool zero_root = false;
    while (cs.front().is_zero()) {
        zero_root = true;
        cs.erase(cs.begin());
    }
    Polynomial g(z, cs);

    std::vector<Scalar> roots;
    if (zero_root) roots.push_back(Scalar::zero(z));
    if (g.degree() == 0) {
        return roots;  // nonzero constant, no further roots
    }

    // Any integer root divides the constant term; it also obeys the Cauchy
    // bound 1 + max |coeff|, which keeps the scan short when the constant
    // term is large but the polynomial is otherwise small.
    BigInt c0 = boost::multiprecision::abs(g.coeff(0).value());
    BigInt bound = 0;
    for (const Scalar& c : g.coefficients()) {
        bound = std::max(bound, BigInt(boost::multiprecision::abs(c.value())));
    }
    bound += 1;

    auto try_root = [&](const BigInt& r) {
        Scalar cand(z, r);
        if (g.eval(cand).is_zero()) roots.push_back(cand);
    };
    for (BigInt d = 1; d * d <= c0 && d <= bound; ++d) {
        if (c0 % d != 0) continue;
        try_root(d);
        try_root(-d);
        BigInt e = c0 / d;
        if (e != d && e <= bound) {
            try_root(e);
            try_root(-e);
        }
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Scalar> nth_roots_of_scalar(const Scalar& d, unsigned n) {
    if (n == 0) throw std::invalid_argument("nth_roots_of_scalar: n must be positive");
    std::vector<Scalar> roots;
    if (d.ring().is_field()) {
        for (std::int64_t x = 0; x < d.ring().modulus(); ++x) {
            Scalar cand(d.ring(), x);
            if (cand.pow(n) == d) roots.push_back(cand);
        }
        return roots;
    }
    const BigInt& v = d.value();
    if (v == 0) {
        return {Scalar::zero(d.ring())};
    }
    if (v < 0 && n % 2 == 0) {
        return {};
    }
    BigInt r = floor_nth_root(boost::multiprecision::abs(v), n);
    if (boost::multiprecision::pow(r, n) != boost::multiprecision::abs(v)) {
        return {};
    }
    if (v < 0) r = -r;
    if (n % 2 == 0) {
        roots.emplace_back(d.ring(), -r);
    }
    roots.emplace_back(d.ring(), r);
    return roots;
}

std::optional<Scalar> is_perfect_square(const Scalar& d) {
    if (d.ring().is_field()) {
        throw RingMismatch("is_perfect_square: defined over Z, got " + d.ring().name());
    }
    if (d.value() < 0) return std::nullopt;
    BigInt s = boost::multiprecision::sqrt(d.value());
    if (s * s != d.value()) return std::nullopt;
    return Scalar(d.ring(), s);
}

}  // namespace matroot
