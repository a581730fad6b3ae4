#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matroot/ring.hpp"

namespace matroot {

/** Trace, sum of principal 2x2 minors, and determinant; for dim 2 the middle one equals det. */
struct CharPolyInvariants {
    Scalar trace;
    Scalar second_sym;
    Scalar det;
};

/**
 * Dense 2x2 or 3x3 matrix of exact scalars over a single ring, row-major.
 *
 * Value semantics throughout; all arithmetic checks ring and dimension
 * compatibility and is exact.
 */
class Matrix {
public:
    Matrix(const Ring& ring, int dim, std::vector<Scalar> entries);

    static Matrix zero(const Ring& ring, int dim);
    static Matrix identity(const Ring& ring, int dim);

    /** Build from integer rows (reduced mod p for field rings). */
    static Matrix from_rows(const Ring& ring, const std::vector<std::vector<BigInt>>& rows);

    const Ring& ring() const { return ring_; }
    int dim() const { return dim_; }

    const Scalar& at(int i, int j) const { return entries_[static_cast<std::size_t>(i * dim_ + j)]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;

    /** Entrywise scalar multiple. */
    Matrix scaled(const Scalar& c) const;

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    /** Row-major lexicographic order on entries; operands must share ring and dim. */
    bool operator<(const Matrix& rhs) const;

    /** The scalar c when the matrix equals c*E, otherwise nullopt. */
    std::optional<Scalar> scalar_multiple_of_identity() const;

    std::string str() const;

private:
    Ring ring_;
    int dim_;
    std::vector<Scalar> entries_;
};

/** X^n by repeated squaring; X^0 = E. */
Matrix power(const Matrix& x, unsigned long long n);

CharPolyInvariants invariants(const Matrix& x);

Scalar det(const Matrix& x);
Scalar trace(const Matrix& x);

/**
 * Exact inverse via adjugate over det. Over Z the determinant must be +-1;
 * over F_p it must be nonzero. Throws NotInvertible otherwise.
 */
Matrix inverse_unimodular(const Matrix& x);

/** Commutator under the fixed convention [x, y] = x y x^-1 y^-1. */
Matrix commutator(const Matrix& x, const Matrix& y);

}  // namespace matroot
