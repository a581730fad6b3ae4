#include "matroot/rootsolver.hpp"

#include <algorithm>

#include "matroot/polynomial.hpp"
#include "matroot/sympoly.hpp"

namespace matroot {

namespace {

void require_dim(const Matrix& m, int dim, const char* where) {
    if (m.dim() != dim) {
        throw DimMismatch(std::string(where) + ": expected dim " + std::to_string(dim) +
                          ", got " + std::to_string(m.dim()));
    }
}

void require_field(const Matrix& m, const char* where) {
    if (!m.ring().is_field()) {
        throw RingMismatch(std::string(where) + ": expected a prime field, got " +
                           m.ring().name());
    }
}

void require_det_one(const Matrix& m, const char* where) {
    if (!det(m).is_one()) {
        throw NotUnimodular(std::string(where) + ": det " + det(m).str() + ", need 1");
    }
}

}  // namespace

const char* to_string(CandidateStatus s) {
    switch (s) {
        case CandidateStatus::verified: return "verified";
        case CandidateStatus::unverified: return "unverified";
        case CandidateStatus::denominator_zero: return "denominator-zero";
        case CandidateStatus::non_integral: return "non-integral";
    }
    return "?";
}

RootSolution RootSolution::empty_set() {
    return RootSolution{Kind::empty, {}, {}, {}, {}, 0};
}

RootSolution RootSolution::finite(std::vector<RootCandidate> candidates) {
    return RootSolution{Kind::finite_set, std::move(candidates), {}, {}, {}, 0};
}

RootSolution RootSolution::family(Scalar trace, Scalar det) {
    return RootSolution{Kind::trace_det_family, {}, std::move(trace), std::move(det), {}, 0};
}

RootSolution RootSolution::scaled_units(Scalar scale, unsigned degree) {
    return RootSolution{Kind::scaled_unit_roots, {}, {}, {}, std::move(scale), degree};
}

std::vector<Matrix> RootSolution::verified_matrices() const {
    std::vector<Matrix> out;
    for (const RootCandidate& c : candidates) {
        if (c.verified()) out.push_back(*c.matrix);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RootSolution cube_roots_m2(const Matrix& a) {
    require_dim(a, 2, "cube_roots_m2");
    require_field(a, "cube_roots_m2");
    const Ring& ring = a.ring();

    if (auto c = a.scalar_multiple_of_identity()) {
        if (c->is_zero()) {
            return RootSolution::family(Scalar::zero(ring), Scalar::zero(ring));
        }
        std::vector<Scalar> cube_roots = nth_roots_of_scalar(*c, 3);
        if (cube_roots.empty()) {
            return RootSolution::empty_set();
        }
        return RootSolution::scaled_units(cube_roots.front(), 3);
    }

    CharPolyInvariants inv = invariants(a);
    std::vector<RootCandidate> candidates;
    for (const Scalar& b : nth_roots_of_scalar(inv.det, 3)) {
        // a-values solve x^3 - 3b*x - tr A = 0.
        Polynomial cubic(ring, {-inv.trace, Scalar(ring, -3) * b, Scalar::zero(ring),
                                Scalar::one(ring)});
        for (const Scalar& ta : roots_over_field(cubic)) {
            Scalar den = ta * ta - b;
            if (den.is_zero()) {
                candidates.push_back({ta, b, std::nullopt, CandidateStatus::denominator_zero});
                continue;
            }
            Matrix root = (a + Matrix::identity(ring, 2).scaled(ta * b)).scaled(den.inverse());
            bool ok = power(root, 3) == a;
            candidates.push_back({ta, b, root,
                                  ok ? CandidateStatus::verified : CandidateStatus::unverified});
        }
    }
    return RootSolution::finite(std::move(candidates));
}

std::vector<RootCandidate> nth_root_candidates(const Matrix& a, unsigned n) {
    require_dim(a, 2, "nth_root_candidates");
    require_field(a, "nth_root_candidates");
    if (n < 3) throw std::invalid_argument("nth_root_candidates: n must be >= 3");
    if (a.scalar_multiple_of_identity()) {
        throw ScalarMatrixInput("nth_root_candidates: scalar multiples of E are excluded");
    }

    const Ring& ring = a.ring();
    CharPolyInvariants inv = invariants(a);
    std::vector<RootCandidate> candidates;
    for (const Scalar& b : nth_roots_of_scalar(inv.det, n)) {
        for (std::int64_t x = 0; x < ring.modulus(); ++x) {
            Scalar ta(ring, x);
            SymPolyParams params(ta, b);
            if (P(n, params) != inv.trace) continue;
            Scalar den = Q(static_cast<long>(n) - 1, params);
            if (den.is_zero()) {
                candidates.push_back({ta, b, std::nullopt, CandidateStatus::denominator_zero});
                continue;
            }
            Scalar shift = b * Q(static_cast<long>(n) - 2, params);
            Matrix root = (a + Matrix::identity(ring, 2).scaled(shift)).scaled(den.inverse());
            bool ok = power(root, n) == a;
            candidates.push_back({ta, b, root,
                                  ok ? CandidateStatus::verified : CandidateStatus::unverified});
        }
    }
    return candidates;
}

std::vector<std::pair<Scalar, Scalar>> sqrt_criterion_sl3z(const Matrix& a) {
    require_dim(a, 3, "sqrt_criterion_sl3z");
    if (a.ring().is_field()) {
        throw RingMismatch("sqrt_criterion_sl3z: expected Z, got " + a.ring().name());
    }
    require_det_one(a, "sqrt_criterion_sl3z");

    const Ring z = Ring::integers();
    CharPolyInvariants inv = invariants(a);
    const BigInt& ta = inv.trace.value();
    const BigInt& tb = inv.second_sym.value();

    // p^4 - 2a p^2 - 8p + (a^2 - 4b)
    Polynomial quartic = Polynomial::from_int_coeffs(
        z, {ta * ta - 4 * tb, -8, -2 * ta, 0, 1});

    std::vector<std::pair<Scalar, Scalar>> pairs;
    for (const Scalar& p : integer_roots(quartic)) {
        BigInt num = p.value() * p.value() - ta;
        if (num % 2 != 0) continue;
        BigInt q = num / 2;
        if (q * q - 2 * p.value() != tb) continue;
        pairs.emplace_back(p, Scalar(z, q));
    }
    return pairs;
}

RootCandidate sqrt_reconstruct_sl3(const Matrix& a, const Scalar& p, const Scalar& q) {
    require_dim(a, 3, "sqrt_reconstruct_sl3");
    require_same_ring(p, q, "sqrt_reconstruct_sl3");
    if (p.ring() != a.ring()) {
        throw RingMismatch("sqrt_reconstruct_sl3: pair ring " + p.ring().name() +
                           " differs from matrix ring " + a.ring().name());
    }
    const Ring& ring = a.ring();
    if (ring.is_field() && ring.modulus() == 2) {
        throw UnsupportedPrime(
            "sqrt_reconstruct_sl3: characteristic 2 has no division by 2; use the exhaustive path");
    }

    Scalar one = Scalar::one(ring);
    Scalar den = one - p * q;
    if (den.is_zero()) {
        throw SingularDenominator("sqrt_reconstruct_sl3: 1 - pq = 0 for p=" + p.str() +
                                  ", q=" + q.str());
    }
    Scalar tr_a = trace(a);
    Scalar mid_num = p * p + tr_a;  // divided by 2 below
    Scalar mid = Scalar::zero(ring);
    if (ring.is_field()) {
        mid = mid_num * Scalar(ring, 2).inverse();
    } else {
        if (mid_num.value() % 2 != 0) {
            throw SingularDenominator("sqrt_reconstruct_sl3: p^2 + tr A = " + mid_num.str() +
                                      " is odd");
        }
        mid = Scalar(ring, mid_num.value() / 2);
    }

    Matrix e = Matrix::identity(ring, 3);
    Matrix num = a * a - a.scaled(mid) - e.scaled(p);
    if (ring.is_field()) {
        Matrix root = num.scaled(den.inverse());
        bool ok = root * root == a;
        return {p, det(root), root, ok ? CandidateStatus::verified : CandidateStatus::unverified};
    }

    std::vector<Scalar> entries;
    entries.reserve(9);
    for (const Scalar& entry : num.entries()) {
        auto quotient = exact_divide(entry, den);
        if (!quotient) {
            return {p, Scalar::one(ring), std::nullopt, CandidateStatus::non_integral};
        }
        entries.push_back(*quotient);
    }
    Matrix root(ring, 3, std::move(entries));
    bool ok = root * root == a;
    return {p, det(root), root, ok ? CandidateStatus::verified : CandidateStatus::unverified};
}

std::vector<std::pair<Scalar, Scalar>> sqrt_criterion_fp(const Matrix& a) {
    require_dim(a, 3, "sqrt_criterion_fp");
    require_field(a, "sqrt_criterion_fp");
    require_det_one(a, "sqrt_criterion_fp");

    const Ring& ring = a.ring();
    CharPolyInvariants inv = invariants(a);
    Scalar two(ring, 2);
    std::vector<std::pair<Scalar, Scalar>> pairs;
    for (std::int64_t t = 0; t < ring.modulus(); ++t) {
        Scalar ts(ring, t);
        for (std::int64_t q = 0; q < ring.modulus(); ++q) {
            Scalar qs(ring, q);
            if (qs * qs - two * ts == inv.second_sym && ts * ts - two * qs == inv.trace) {
                pairs.emplace_back(ts, qs);
            }
        }
    }
    return pairs;
}

bool sqrt_necessary_condition(const Matrix& a, const Scalar& q) {
    require_dim(a, 3, "sqrt_necessary_condition");
    if (a.ring().is_field() || q.ring().is_field()) {
        throw RingMismatch("sqrt_necessary_condition: defined over Z");
    }
    return is_perfect_square(trace(a) + Scalar(q.ring(), 2) * q).has_value();
}

}  // namespace matroot
