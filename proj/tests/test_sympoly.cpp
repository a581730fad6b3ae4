#include <random>

#include "doctest.h"
#include "matroot/matrix.hpp"
#include "matroot/sympoly.hpp"

using namespace matroot;

namespace {
const Ring z = Ring::integers();

SymPolyParams zparams(int e1, int e2) { return SymPolyParams(Scalar(z, e1), Scalar(z, e2)); }
}  // namespace

TEST_CASE("Q recurrence ground values") {
    SymPolyParams p = zparams(3, 2);
    CHECK(Q(-1, p).value() == 0);
    CHECK(Q(0, p).value() == 1);
    CHECK(Q(1, p).value() == 3);
    CHECK(Q(2, p).value() == 7);  // e1^2 - e2 = 9 - 2
    CHECK(Q(3, p).value() == 15);

    // With roots x=1, y=2, Q_n is the geometric sum 2^{n+1} - 1.
    for (long n = 0; n <= 20; ++n) {
        CHECK(Q(n, p).value() == (BigInt(1) << (n + 1)) - 1);
    }

    CHECK_THROWS_AS(Q(-2, p), std::invalid_argument);
}

TEST_CASE("P recurrence ground values") {
    SymPolyParams p = zparams(3, 2);
    CHECK(P(1, p).value() == 3);
    CHECK(P(2, p).value() == 5);  // 1^2 + 2^2
    CHECK(P(3, p).value() == 9);  // 1 + 8

    // Power sums of the actual roots 1 and 2.
    for (unsigned long n = 1; n <= 20; ++n) {
        CHECK(P(n, p).value() == 1 + (BigInt(1) << n));
    }

    Ring f5 = Ring::prime_field(5);
    CHECK(P(3, SymPolyParams(Scalar(f5, 2), Scalar(f5, 1))).value() == 2);

    CHECK_THROWS_AS(P(0, p), std::invalid_argument);
}

TEST_CASE("st coefficient pairs") {
    auto [s3, t3] = st_sequences(Scalar(z, 2), Scalar(z, 1), 3);
    CHECK(s3.value() == 3);
    CHECK(t3.value() == -2);

    auto [s1, t1] = st_sequences(Scalar(z, 9), Scalar(z, -4), 1);
    CHECK(s1.value() == 1);
    CHECK(t1.value() == 0);

    CHECK_THROWS_AS(st_sequences(Scalar(z, 1), Scalar(z, 1), 0), std::invalid_argument);
    CHECK_THROWS_AS(st_sequences(Scalar(z, 1), Scalar(Ring::prime_field(5), 1), 2), RingMismatch);
}

TEST_CASE("closed forms tie the three sequences together") {
    // s_n = Q_{n-1}, t_n = -det * Q_{n-2}, and the trace identity
    // tr * Q_{n-1} - 2 det * Q_{n-2} = P_n, over whole prime fields.
    for (std::int64_t prime : {3, 5, 7}) {
        Ring f = Ring::prime_field(prime);
        for (std::int64_t tr = 0; tr < prime; ++tr) {
            for (std::int64_t dt = 0; dt < prime; ++dt) {
                SymPolyParams p(Scalar(f, tr), Scalar(f, dt));
                for (unsigned long n = 2; n <= 12; ++n) {
                    auto [sn, tn] = st_sequences(p.e1, p.e2, n);
                    CHECK(sn == Q(static_cast<long>(n) - 1, p));
                    CHECK(tn == -(p.e2 * Q(static_cast<long>(n) - 2, p)));
                    CHECK(p.e1 * Q(static_cast<long>(n) - 1, p) -
                              (Scalar(f, 2) * p.e2 * Q(static_cast<long>(n) - 2, p)) ==
                          P(n, p));
                }
            }
        }
    }
}

TEST_CASE("X^n = s_n X + t_n E for random 2x2 matrices") {
    std::mt19937 rng(7002);
    for (std::int64_t prime : {3, 5, 7}) {
        Ring f = Ring::prime_field(prime);
        std::uniform_int_distribution<std::int64_t> pick(0, prime - 1);
        for (int trial = 0; trial < 25; ++trial) {
            Matrix x = Matrix::from_rows(f, {{pick(rng), pick(rng)}, {pick(rng), pick(rng)}});
            for (unsigned long n = 1; n <= 12; ++n) {
                auto [sn, tn] = st_sequences(trace(x), det(x), n);
                CHECK(power(x, n) == x.scaled(sn) + Matrix::identity(f, 2).scaled(tn));
            }
        }
    }
}

TEST_CASE("h polynomial identity behind automatic determinants") {
    // Q_{n-2}^2 - Q_{n-1} Q_{n-3} = e2^{n-2}, the identity that makes the
    // determinant of every reconstructed root come out right.
    std::mt19937 rng(7003);
    std::uniform_int_distribution<int> pick(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        SymPolyParams p = zparams(pick(rng), pick(rng));
        for (long n = 3; n <= 10; ++n) {
            CHECK(Q(n - 2, p) * Q(n - 2, p) - Q(n - 1, p) * Q(n - 3, p) ==
                  p.e2.pow(static_cast<unsigned long long>(n) - 2));
        }
    }
}
