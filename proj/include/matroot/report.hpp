#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matroot/matrix.hpp"

namespace matroot {

/**
 * One verified statement in a report: an identifier, where the statement
 * comes from, the evaluation convention, the computed verdict, and the two
 * exactly-computed sides (absent for aggregate entries that compare sets
 * rather than single matrices).
 */
struct ReportEntry {
    std::string id;
    std::string source;
    std::string convention;
    std::string expected = "holds";  // "holds" or "paper-typo-suspected"
    bool holds = false;
    std::optional<Matrix> lhs_value;
    std::optional<Matrix> rhs_value;
};

/** Outcome list plus counts; serialized to JSON by the serialize module. */
struct VerificationReport {
    std::vector<ReportEntry> entries;

    std::size_t total() const { return entries.size(); }
    std::size_t holds_count() const;
    std::size_t fails_count() const { return total() - holds_count(); }

    /** True when every entry not marked paper-typo-suspected holds. */
    bool all_expected_hold() const;
};

}  // namespace matroot
