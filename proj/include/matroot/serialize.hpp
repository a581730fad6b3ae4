#pragma once

#include <string>

#include "matroot/esl3.hpp"
#include "matroot/oracle.hpp"
#include "matroot/report.hpp"
#include "matroot/rootsolver.hpp"
#include "json.hpp"

namespace matroot {

/** Insertion-ordered JSON so emitted documents are byte-stable. */
using Json = nlohmann::ordered_json;

/**
 * Matrix wire format: {"ring": "Z" | {"Fp": p}, "rows": [[...], ...]} with
 * plain integer entries (canonical representatives over F_p). Entries must
 * fit in 64 bits; larger values throw std::invalid_argument.
 */
Json matrix_to_json(const Matrix& m);

/** Parses the matrix wire format; throws std::invalid_argument on any shape
 * or type violation. Round-trips matrix_to_json bit-exactly. */
Matrix matrix_from_json(const Json& j);

/**
 * Report format: {"claims": [{id, source, convention, expected, verdict,
 * lhs_value, rhs_value}, ...], "summary": {total, holds, fails}}.
 * verdict is "holds" or "fails"; the matrix values are null for aggregate
 * entries that compare sets rather than single matrices.
 */
Json report_to_json(const VerificationReport& report);

Json candidate_to_json(const RootCandidate& c);

Json solution_to_json(const RootSolution& s);

Json word_to_json(const Word& w);

/** CSV summary of a sweep: header "a_index,root_count" then one row per A. */
std::string sweep_csv(const SweepResult& sweep);

/** Canonical dump: two-space indent, trailing newline. */
std::string dump_json(const Json& j);

}  // namespace matroot
