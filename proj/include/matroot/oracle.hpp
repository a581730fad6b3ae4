#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "matroot/report.hpp"
#include "matroot/rootsolver.hpp"

namespace matroot {

/** Sweep parameters; primes above 7 are rejected (p^4 enumeration budget). */
struct OracleConfig {
    std::int64_t prime;
    unsigned n;
    int partitions = 1;

    void validate() const;
};

/** All p^4 matrices of M_2(F_p) in row-major lexicographic entry order. */
std::vector<Matrix> all_matrices_m2(const Ring& field);

/** Index of m in the all_matrices_m2 enumeration. */
std::size_t matrix_index_m2(const Matrix& m);

/**
 * Ground truth root set {B : B^n = A} by full enumeration, in canonical
 * (lexicographic) order. Partitioning splits the candidate space into
 * contiguous ranges, optionally scanned in parallel; the merged result is
 * identical for every partition count.
 */
std::vector<Matrix> exhaustive_roots_m2(const Matrix& a, unsigned n, int partitions = 1);

/**
 * Checks the candidate solver against the exhaustive set for one matrix:
 * the exhaustive roots must all appear among the candidates, and the
 * verified candidates must equal the exhaustive set. Violations are
 * reported entry-by-entry with the offending matrix.
 */
VerificationReport compare_with_solver(const Matrix& a, unsigned n);

/** Solver-vs-oracle sweep over every non-scalar A in M_2(F_p). */
struct SweepResult {
    VerificationReport report;  // summary first, then any violations
    std::vector<std::pair<std::size_t, std::size_t>> root_counts;  // (A index, root count)
    std::size_t checked = 0;
    std::size_t violations = 0;
};

SweepResult sweep_compare(const OracleConfig& config);

/**
 * Expands a cube-root solution into the explicit set of matrices it
 * describes, using enumeration for the family and scaled-unit shapes.
 * Sorted canonical order.
 */
std::vector<Matrix> expand_solution(const RootSolution& solution, const Ring& field);

/** Squaring-map coverage of the 168-element group SL_3(F_2). */
struct Sl3F2Sqrt {
    std::size_t group_size = 0;
    std::size_t image_size = 0;
    bool covers = false;
    std::vector<Matrix> square_free;  // elements with no square root, enumeration order
    VerificationReport report;
};

Sl3F2Sqrt sl3_f2_universal_sqrt();

/** The 168 elements of SL_3(F_2) in row-major lexicographic order. */
std::vector<Matrix> sl3_f2_elements();

}  // namespace matroot
