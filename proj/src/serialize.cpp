#include "matroot/serialize.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

namespace matroot {

namespace {

std::int64_t to_int64(const BigInt& v, const char* where) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw std::invalid_argument(std::string(where) + ": entry " + v.str() +
                                    " exceeds the 64-bit wire format");
    }
    return v.convert_to<std::int64_t>();
}

Json ring_to_json(const Ring& ring) {
    if (!ring.is_field()) return Json("Z");
    return Json{{"Fp", ring.modulus()}};
}

Ring ring_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Z") return Ring::integers();
        throw std::invalid_argument("matrix_from_json: unknown ring \"" + j.get<std::string>() +
                                    "\"");
    }
    if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_integer()) {
        return Ring::prime_field(j["Fp"].get<std::int64_t>());
    }
    throw std::invalid_argument("matrix_from_json: ring must be \"Z\" or {\"Fp\": p}");
}

Json optional_matrix(const std::optional<Matrix>& m) {
    return m ? matrix_to_json(*m) : Json(nullptr);
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim(); ++j) {
            row.push_back(to_int64(m.at(i, j).value(), "matrix_to_json"));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"ring", ring_to_json(m.ring())}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("rows")) {
        throw std::invalid_argument("matrix_from_json: expected {\"ring\": ..., \"rows\": ...}");
    }
    Ring ring = ring_from_json(j["ring"]);
    const Json& rows = j["rows"];
    if (!rows.is_array() || (rows.size() != 2 && rows.size() != 3)) {
        throw std::invalid_argument("matrix_from_json: rows must be a 2x2 or 3x3 array");
    }
    std::vector<std::vector<BigInt>> parsed;
    for (const Json& row : rows) {
        if (!row.is_array() || row.size() != rows.size()) {
            throw std::invalid_argument("matrix_from_json: rows must form a square array");
        }
        std::vector<BigInt> r;
        for (const Json& cell : row) {
            if (!cell.is_number_integer()) {
                throw std::invalid_argument("matrix_from_json: entries must be integers");
            }
            r.emplace_back(cell.get<std::int64_t>());
        }
        parsed.push_back(std::move(r));
    }
    return Matrix::from_rows(ring, parsed);
}

Json report_to_json(const VerificationReport& report) {
    Json claims = Json::array();
    for (const ReportEntry& e : report.entries) {
        claims.push_back(Json{{"id", e.id},
                              {"source", e.source},
                              {"convention", e.convention},
                              {"expected", e.expected},
                              {"verdict", e.holds ? "holds" : "fails"},
                              {"lhs_value", optional_matrix(e.lhs_value)},
                              {"rhs_value", optional_matrix(e.rhs_value)}});
    }
    return Json{{"claims", std::move(claims)},
                {"summary", Json{{"total", report.total()},
                                 {"holds", report.holds_count()},
                                 {"fails", report.fails_count()}}}};
}

Json candidate_to_json(const RootCandidate& c) {
    return Json{{"trace", to_int64(c.trace_b.value(), "candidate_to_json")},
                {"det", to_int64(c.det_b.value(), "candidate_to_json")},
                {"status", to_string(c.status)},
                {"matrix", optional_matrix(c.matrix)}};
}

Json solution_to_json(const RootSolution& s) {
    switch (s.kind) {
        case RootSolution::Kind::empty:
            return Json{{"kind", "empty"}};
        case RootSolution::Kind::finite_set: {
            Json candidates = Json::array();
            for (const RootCandidate& c : s.candidates) candidates.push_back(candidate_to_json(c));
            return Json{{"kind", "finite-set"}, {"candidates", std::move(candidates)}};
        }
        case RootSolution::Kind::trace_det_family:
            return Json{{"kind", "trace-det-family"},
                        {"trace", to_int64(s.family_trace->value(), "solution_to_json")},
                        {"det", to_int64(s.family_det->value(), "solution_to_json")}};
        case RootSolution::Kind::scaled_unit_roots:
            return Json{{"kind", "scaled-unit-roots"},
                        {"scale", to_int64(s.scale->value(), "solution_to_json")},
                        {"unit_degree", s.unit_degree}};
    }
    throw std::logic_error("solution_to_json: unreachable");
}

Json word_to_json(const Word& w) {
    Json out = Json::array();
    for (const WordLetter& letter : w) {
        out.push_back(Json{{"generator", letter.generator}, {"exponent", letter.exponent}});
    }
    return out;
}

std::string sweep_csv(const SweepResult& sweep) {
    std::ostringstream out;
    out << "a_index,root_count\n";
    for (const auto& [index, count] : sweep.root_counts) {
        out << index << ',' << count << '\n';
    }
    return out.str();
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace matroot
