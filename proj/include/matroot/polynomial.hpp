#pragma once

#include <optional>
#include <vector>

#include "matroot/ring.hpp"

namespace matroot {

/**
 * Univariate polynomial with exact coefficients, stored ascending by degree.
 *
 * The coefficient list is trimmed so the leading coefficient is nonzero; the
 * zero polynomial is the empty list (degree -1 by convention).
 */
class Polynomial {
public:
    explicit Polynomial(const Ring& ring) : ring_(ring) {}
    Polynomial(const Ring& ring, std::vector<Scalar> ascending_coeffs);

    /** Convenience: build from integer coefficients, ascending degree. */
    static Polynomial from_int_coeffs(const Ring& ring, const std::vector<BigInt>& ascending);

    const Ring& ring() const { return ring_; }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    /** Coefficient of x^k (zero beyond the stored degree). */
    Scalar coeff(std::size_t k) const;

    /** Exact evaluation by Horner's rule. */
    Scalar eval(const Scalar& x) const;

    bool is_monic() const;

private:
    Ring ring_;
    std::vector<Scalar> coeffs_;
};

/**
 * All roots of f in F_p, by exhaustive evaluation over the p residues.
 * Returned sorted ascending by canonical representative.
 * Throws ZeroPolynomial when f = 0 (every residue would qualify).
 */
std::vector<Scalar> roots_over_field(const Polynomial& f);

/**
 * All integer roots of a monic f over Z, sorted ascending.
 *
 * Rational-root theorem: candidates are the signed divisors of the constant
 * term. A zero constant term contributes the root 0 and the remaining factors
 * of x are stripped before the divisor scan.
 */
std::vector<Scalar> integer_roots(const Polynomial& f);

/**
 * All solutions of x^n = d in d's ring, sorted ascending.
 * Over F_p this scans the field; over Z it extracts the integer n-th root
 * (at most two solutions, sign handled by the parity of n).
 */
std::vector<Scalar> nth_roots_of_scalar(const Scalar& d, unsigned n);

/** Nonnegative witness s with s^2 = d, or nullopt when d is not a square in Z. */
std::optional<Scalar> is_perfect_square(const Scalar& d);

}  // namespace matroot
