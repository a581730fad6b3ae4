#pragma once

#include <stdexcept>
#include <string>

namespace matroot {

/** Two scalars or matrices from different rings were combined. */
struct RingMismatch : std::invalid_argument {
    explicit RingMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/** Matrix dimensions do not match the operation's requirements. */
struct DimMismatch : std::invalid_argument {
    explicit DimMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/** Root finding was asked for the identically-zero polynomial. */
struct ZeroPolynomial : std::invalid_argument {
    explicit ZeroPolynomial(const std::string& what) : std::invalid_argument(what) {}
};

/** Inverse requested for a non-invertible element or matrix. */
struct NotInvertible : std::domain_error {
    explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

/** Prime modulus outside the supported range, or not prime at all. */
struct UnsupportedPrime : std::invalid_argument {
    explicit UnsupportedPrime(const std::string& what) : std::invalid_argument(what) {}
};

/** A scalar multiple of the identity was passed where the theorem excludes it. */
struct ScalarMatrixInput : std::invalid_argument {
    explicit ScalarMatrixInput(const std::string& what) : std::invalid_argument(what) {}
};

/** Operation requires determinant 1 (or +-1) and the input has neither. */
struct NotUnimodular : std::invalid_argument {
    explicit NotUnimodular(const std::string& what) : std::invalid_argument(what) {}
};

/** Reconstruction denominator vanished (1 - pq = 0) or an exact division is impossible. */
struct SingularDenominator : std::domain_error {
    explicit SingularDenominator(const std::string& what) : std::domain_error(what) {}
};

/** A word referenced a generator name absent from the catalog. */
struct UnknownGenerator : std::invalid_argument {
    explicit UnknownGenerator(const std::string& what) : std::invalid_argument(what) {}
};

/** Breadth-first search exceeded its configured node budget. */
struct SearchBudgetExceeded : std::runtime_error {
    explicit SearchBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace matroot
