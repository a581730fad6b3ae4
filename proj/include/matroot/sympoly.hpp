#pragma once

#include <utility>

#include "matroot/ring.hpp"

namespace matroot {

/**
 * Elementary-symmetric inputs for the two-variable engine: e1 = x + y and
 * e2 = x*y, usually instantiated as a trace and a determinant.
 */
struct SymPolyParams {
    Scalar e1;
    Scalar e2;

    SymPolyParams(Scalar e1_in, Scalar e2_in) : e1(std::move(e1_in)), e2(std::move(e2_in)) {
        require_same_ring(e1, e2, "SymPolyParams");
    }
};

/**
 * Complete homogeneous symmetric polynomial h_n(x, y) expressed in e1, e2:
 * Q_0 = 1, Q_1 = e1, Q_n = e1*Q_{n-1} - e2*Q_{n-2}.
 *
 * n = -1 is allowed and yields 0; the closed forms for the power sequences
 * read uniformly with that convention.
 */
Scalar Q(long n, const SymPolyParams& params);

/**
 * Power sum x^n + y^n expressed in e1, e2 (Newton recurrence):
 * P_1 = e1, P_2 = e1^2 - 2*e2, P_n = e1*P_{n-1} - e2*P_{n-2}. Requires n >= 1.
 */
Scalar P(unsigned long n, const SymPolyParams& params);

/**
 * The coefficient pair (s_n, t_n) with X^n = s_n*X + t_n*E for 2x2 X,
 * iterated from s_1 = 1, t_1 = 0 via s_n = trB*s_{n-1} + t_{n-1},
 * t_n = -detB*s_{n-1}. Requires n >= 1.
 */
std::pair<Scalar, Scalar> st_sequences(const Scalar& tr_b, const Scalar& det_b, unsigned long n);

}  // namespace matroot
