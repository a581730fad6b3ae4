#include "matroot/sympoly.hpp"

#include <stdexcept>

namespace matroot {

Scalar Q(long n, const SymPolyParams& params) {
    if (n < -1) throw std::invalid_argument("Q: n must be >= -1");
    const Ring& ring = params.e1.ring();
    if (n == -1) return Scalar::zero(ring);
    Scalar prev = Scalar::zero(ring);  // Q_{-1}
    Scalar cur = Scalar::one(ring);    // Q_0
    for (long k = 1; k <= n; ++k) {
        Scalar next = params.e1 * cur - params.e2 * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Scalar P(unsigned long n, const SymPolyParams& params) {
    if (n == 0) throw std::invalid_argument("P: n must be >= 1");
    Scalar two = Scalar(params.e1.ring(), 2);
    Scalar prev = params.e1;                                  // P_1
    Scalar cur = params.e1 * params.e1 - two * params.e2;     // P_2
    if (n == 1) return prev;
    for (unsigned long k = 3; k <= n; ++k) {
        Scalar next = params.e1 * cur - params.e2 * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::pair<Scalar, Scalar> st_sequences(const Scalar& tr_b, const Scalar& det_b, unsigned long n) {
    if (n == 0) throw std::invalid_argument("st_sequences: n must be >= 1");
    require_same_ring(tr_b, det_b, "st_sequences");
    const Ring& ring = tr_b.ring();
    Scalar s = Scalar::one(ring);   // s_1
    Scalar t = Scalar::zero(ring);  // t_1
    for (unsigned long k = 2; k <= n; ++k) {
        Scalar s_next = tr_b * s + t;
        Scalar t_next = -det_b * s;
        s = s_next;
        t = t_next;
    }
    return {s, t};
}

}  // namespace matroot
