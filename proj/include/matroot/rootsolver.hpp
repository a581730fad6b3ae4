#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matroot/matrix.hpp"

namespace matroot {

/**
 * Outcome of building one root candidate from an invariant pair.
 *
 * denominator_zero: the reconstruction denominator vanished, no matrix.
 * non_integral: over Z the entrywise division did not come out exact
 * (possible for spurious pairs that pass the invariant checks), no matrix.
 */
enum class CandidateStatus { verified, unverified, denominator_zero, non_integral };

const char* to_string(CandidateStatus s);

/** One (trace, det) candidate for a root B, with the reconstructed matrix when one exists. */
struct RootCandidate {
    Scalar trace_b;
    Scalar det_b;
    std::optional<Matrix> matrix;
    CandidateStatus status;

    bool verified() const { return status == CandidateStatus::verified; }
};

/**
 * Root-set description for the cube-root case split: nothing, an explicit
 * candidate list, the family {B : tr B = trace, det B = det}, or the coset
 * {scale * B : B^n = E}.
 */
struct RootSolution {
    enum class Kind { empty, finite_set, trace_det_family, scaled_unit_roots };

    Kind kind;
    std::vector<RootCandidate> candidates;  // finite_set only
    std::optional<Scalar> family_trace;     // trace_det_family only
    std::optional<Scalar> family_det;
    std::optional<Scalar> scale;            // scaled_unit_roots only
    unsigned unit_degree = 0;

    static RootSolution empty_set();
    static RootSolution finite(std::vector<RootCandidate> candidates);
    static RootSolution family(Scalar trace, Scalar det);
    static RootSolution scaled_units(Scalar scale, unsigned degree);

    /** Distinct verified matrices, sorted; meaningful for finite_set. */
    std::vector<Matrix> verified_matrices() const;
};

/**
 * All cube roots of a 2x2 matrix over F_p, per the three-way case split:
 * A = 0 gives the (0,0) trace/det family, scalar A = c^3*E gives scaled
 * unit roots, scalar A without a cube root gives the empty set, and
 * non-scalar A gets the explicit candidate construction
 * B = (A + ab*E) / (a^2 - b) over all solutions of b^3 = det A,
 * a^3 - 3ab = tr A.
 */
RootSolution cube_roots_m2(const Matrix& a);

/**
 * Candidate n-th roots of a non-scalar 2x2 matrix over F_p: for every pair
 * (a, b) with b^n = det A and P_n(a, b) = tr A, build
 * B = (A + b*Q_{n-2}(a,b)*E) / Q_{n-1}(a,b) and verify B^n = A.
 *
 * Every candidate is returned, verified or not, sorted by (b, a); pairs with
 * Q_{n-1}(a,b) = 0 carry the denominator-zero status. Requires n >= 3 and
 * throws ScalarMatrixInput when A is a scalar multiple of E.
 */
std::vector<RootCandidate> nth_root_candidates(const Matrix& a, unsigned n);

/**
 * Integer square-root criterion for 3x3 A with det 1: all (p, q) with
 * p a root of p^4 - 2a*p^2 - 8p + a^2 - 4b, q = (p^2 - a)/2 integral, and
 * q^2 - 2p = b. Each surviving pair is the (trace, second_sym) of a putative
 * root with characteristic polynomial x^3 - p*x^2 + q*x - 1.
 */
std::vector<std::pair<Scalar, Scalar>> sqrt_criterion_sl3z(const Matrix& a);

/**
 * Square-root reconstruction for 3x3 A from an invariant pair (p, q):
 * B = (A^2 - ((p^2 + tr A)/2)*A - p*E) / (1 - p*q), verified by squaring.
 *
 * Throws SingularDenominator when 1 - pq = 0, or over Z when p^2 + tr A is
 * odd. Over Z a spurious pair may divide non-integrally; the candidate then
 * carries the non-integral status instead of a matrix.
 */
RootCandidate sqrt_reconstruct_sl3(const Matrix& a, const Scalar& p, const Scalar& q);

/**
 * Square-root criterion over F_p (odd p), det A = 1: exhaustive scan for all
 * (t, q) with q^2 - 2t = b and t^2 - 2q = a, sorted by (t, q).
 */
std::vector<std::pair<Scalar, Scalar>> sqrt_criterion_fp(const Matrix& a);

/** Necessary condition on a candidate second invariant q: tr A + 2q is a perfect square in Z. */
bool sqrt_necessary_condition(const Matrix& a, const Scalar& q);

}  // namespace matroot
