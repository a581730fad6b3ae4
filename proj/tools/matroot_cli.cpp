// Command-line front end: root solvers, claim registry, word search,
// oracle sweeps, membership. JSON in, JSON out.
//
// Exit codes: 0 success/found, 1 verification failure, 2 usage or input
// error, 3 valid input but no root / no word / not a member.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "matroot/esl3.hpp"
#include "matroot/oracle.hpp"
#include "matroot/rootsolver.hpp"
#include "matroot/serialize.hpp"

namespace {

using matroot::Json;
using matroot::Matrix;
using matroot::Ring;
using matroot::Scalar;

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kNoResult = 3;

Matrix parse_matrix_arg(const std::string& arg) {
    std::string text;
    if (!arg.empty() && arg.front() == '{') {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("cannot open matrix file: " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    Json j = Json::parse(text, nullptr, true);
    return matroot::matrix_from_json(j);
}

void emit(const Json& j) { std::cout << matroot::dump_json(j); }

matroot::SearchLimits limits_from_env() {
    matroot::SearchLimits limits;
    if (const char* raw = std::getenv("MATROOT_NODE_LIMIT")) {
        limits.max_nodes = std::stoull(raw);
    }
    return limits;
}

int count_verified(const matroot::RootSolution& s) {
    switch (s.kind) {
        case matroot::RootSolution::Kind::empty:
            return 0;
        case matroot::RootSolution::Kind::finite_set:
            return static_cast<int>(s.verified_matrices().size());
        // The zero-trace zero-det family and the scaled unit roots are both
        // nonempty (they contain the zero matrix and scale*E respectively).
        case matroot::RootSolution::Kind::trace_det_family:
        case matroot::RootSolution::Kind::scaled_unit_roots:
            return 1;
    }
    return 0;
}

int cmd_root(std::int64_t prime, unsigned n, const std::string& matrix_arg) {
    Matrix a = parse_matrix_arg(matrix_arg);
    if (!a.ring().is_field()) {
        throw std::invalid_argument("root: the input matrix must live over a prime field");
    }
    if (prime != 0 && prime != a.ring().modulus()) {
        throw std::invalid_argument("root: --prime disagrees with the matrix ring");
    }
    if (n < 3) {
        throw std::invalid_argument("root: n must be at least 3 (n = 3 for the full case split)");
    }
    matroot::RootSolution solution = matroot::RootSolution::empty_set();
    if (n == 3) {
        solution = matroot::cube_roots_m2(a);
    } else {
        if (a.scalar_multiple_of_identity()) {
            throw std::invalid_argument(
                "root: scalar matrix excluded by the n-th root construction for n > 3");
        }
        solution = matroot::RootSolution::finite(matroot::nth_root_candidates(a, n));
    }
    Json out = matroot::solution_to_json(solution);
    out["input"] = matroot::matrix_to_json(a);
    out["n"] = n;
    emit(out);
    return count_verified(solution) > 0 ? kOk : kNoResult;
}

int cmd_sqrt_sl3z(const std::string& matrix_arg) {
    Matrix a = parse_matrix_arg(matrix_arg);
    auto pairs = matroot::sqrt_criterion_sl3z(a);
    Json out_pairs = Json::array();
    int verified = 0;
    for (const auto& [p, q] : pairs) {
        Json row{{"p", p.value().convert_to<std::int64_t>()},
                 {"q", q.value().convert_to<std::int64_t>()}};
        try {
            matroot::RootCandidate c = matroot::sqrt_reconstruct_sl3(a, p, q);
            row["status"] = matroot::to_string(c.status);
            row["matrix"] = c.matrix ? matroot::matrix_to_json(*c.matrix) : Json(nullptr);
            if (c.verified()) ++verified;
        } catch (const matroot::SingularDenominator&) {
            row["status"] = "denominator-zero";
            row["matrix"] = nullptr;
        }
        out_pairs.push_back(std::move(row));
    }
    emit(Json{{"input", matroot::matrix_to_json(a)}, {"pairs", std::move(out_pairs)}});
    return verified > 0 ? kOk : kNoResult;
}

int cmd_sqrt_sl3fp(std::int64_t prime, const std::string& matrix_arg) {
    Matrix a = parse_matrix_arg(matrix_arg);
    if (!a.ring().is_field()) {
        throw std::invalid_argument("sqrt-sl3fp: the input matrix must live over a prime field");
    }
    if (prime != 0 && prime != a.ring().modulus()) {
        throw std::invalid_argument("sqrt-sl3fp: --prime disagrees with the matrix ring");
    }
    if (!matroot::det(a).is_one()) {
        throw std::invalid_argument("sqrt-sl3fp: determinant must be 1");
    }
    if (a.ring().modulus() == 2) {
        // Characteristic 2 defeats the reconstruction formula (it divides
        // by 2), so fall back to the exhaustive group.
        Json roots = Json::array();
        for (const Matrix& g : matroot::sl3_f2_elements()) {
            if (g * g == a) roots.push_back(matroot::matrix_to_json(g));
        }
        emit(Json{{"input", matroot::matrix_to_json(a)}, {"roots", roots}});
        return roots.empty() ? kNoResult : kOk;
    }
    auto pairs = matroot::sqrt_criterion_fp(a);
    Json out_pairs = Json::array();
    int verified = 0;
    for (const auto& [p, q] : pairs) {
        Json row{{"p", p.value().convert_to<std::int64_t>()},
                 {"q", q.value().convert_to<std::int64_t>()}};
        try {
            matroot::RootCandidate c = matroot::sqrt_reconstruct_sl3(a, p, q);
            row["status"] = matroot::to_string(c.status);
            row["matrix"] = c.matrix ? matroot::matrix_to_json(*c.matrix) : Json(nullptr);
            if (c.verified()) ++verified;
        } catch (const matroot::SingularDenominator&) {
            row["status"] = "denominator-zero";
            row["matrix"] = nullptr;
        }
        out_pairs.push_back(std::move(row));
    }
    emit(Json{{"input", matroot::matrix_to_json(a)}, {"pairs", std::move(out_pairs)}});
    return verified > 0 ? kOk : kNoResult;
}

int cmd_claims(const std::string& out_path) {
    matroot::GeneratorCatalog catalog = matroot::GeneratorCatalog::standard();
    matroot::VerificationReport report = matroot::run_claim_registry(catalog);
    std::string text = matroot::dump_json(matroot::report_to_json(report));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("claims: cannot write " + out_path);
        out << text;
        if (!out.good()) throw std::invalid_argument("claims: write failed for " + out_path);
    }
    return report.all_expected_hold() ? kOk : kVerifyFail;
}

int cmd_word_search(const std::string& matrix_arg, std::vector<std::string> generators,
                    int max_len) {
    Matrix target = parse_matrix_arg(matrix_arg);
    matroot::GeneratorCatalog catalog = matroot::GeneratorCatalog::standard();
    auto word = matroot::bounded_word_search(target, generators, max_len, catalog,
                                             limits_from_env());
    if (!word) {
        emit(Json{{"found", false}, {"target", matroot::matrix_to_json(target)}});
        return kNoResult;
    }
    emit(Json{{"found", true},
              {"target", matroot::matrix_to_json(target)},
              {"length", word->size()},
              {"word", matroot::word_to_json(*word)},
              {"display", matroot::word_str(*word)}});
    return kOk;
}

int cmd_oracle_sweep(std::int64_t prime, unsigned n, int partitions, const std::string& csv_path) {
    if (n < 3) throw std::invalid_argument("oracle-sweep: n must be at least 3");
    if (prime == 7 && n != 3) {
        throw std::invalid_argument("oracle-sweep: p = 7 supports n = 3 only (powering budget)");
    }
    matroot::OracleConfig config{prime, n, partitions};
    config.validate();
    matroot::SweepResult sweep = matroot::sweep_compare(config);
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::invalid_argument("oracle-sweep: cannot write " + csv_path);
        out << matroot::sweep_csv(sweep);
    }
    Json out = matroot::report_to_json(sweep.report);
    out["checked"] = sweep.checked;
    out["violations"] = sweep.violations;
    emit(out);
    return sweep.violations == 0 ? kOk : kVerifyFail;
}

int cmd_member(const std::string& matrix_arg) {
    Matrix m = parse_matrix_arg(matrix_arg);
    if (!m.ring().is_field() && m.dim() == 3) {
        bool member = matroot::is_esl3_member(m);
        emit(Json{{"member", member},
                  {"det", matroot::det(m).value().convert_to<std::int64_t>()}});
        return member ? kOk : kNoResult;
    }
    throw std::invalid_argument("member: expected a 3x3 matrix over Z");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact matrix root toolkit"};
    app.require_subcommand(1);

    std::string matrix_arg;
    std::string out_path;
    std::string csv_path;
    std::vector<std::string> generators;
    std::int64_t prime = 0;
    unsigned n = 3;
    int max_len = 4;
    int partitions = 1;

    CLI::App* root = app.add_subcommand("root", "n-th roots of a 2x2 matrix over F_p");
    root->add_option("--prime", prime, "field modulus (must match the matrix ring)");
    root->add_option("--n", n, "root degree, n >= 3")->required();
    root->add_option("--matrix", matrix_arg, "matrix JSON (inline or a file path)")->required();

    CLI::App* sqrtz = app.add_subcommand("sqrt-sl3z", "integer square roots in SL_3(Z)");
    sqrtz->add_option("--matrix", matrix_arg, "matrix JSON (inline or a file path)")->required();

    CLI::App* sqrtfp = app.add_subcommand("sqrt-sl3fp", "square roots in SL_3(F_p)");
    sqrtfp->add_option("--prime", prime, "field modulus (must match the matrix ring)");
    sqrtfp->add_option("--matrix", matrix_arg, "matrix JSON (inline or a file path)")->required();

    CLI::App* claims = app.add_subcommand("claims", "run the identity registry");
    claims->add_option("--out", out_path, "report destination (stdout when omitted)");

    CLI::App* search = app.add_subcommand("word-search", "shortest generator word for a target");
    search->add_option("--matrix", matrix_arg, "target matrix JSON (inline or a file path)")
        ->required();
    search->add_option("--generators", generators, "catalog names, comma separated")
        ->required()
        ->delimiter(',');
    search->add_option("--max-len", max_len, "maximum word length (at most 8)");

    CLI::App* sweep = app.add_subcommand("oracle-sweep", "solver vs exhaustive enumeration");
    sweep->add_option("--prime", prime, "field modulus in {2,3,5,7}")->required();
    sweep->add_option("--n", n, "root degree, n >= 3")->required();
    sweep->add_option("--partitions", partitions, "parallel partitions");
    sweep->add_option("--csv", csv_path, "write the (A-index, root-count) table here");

    CLI::App* member = app.add_subcommand("member", "det = +-1 membership over Z");
    member->add_option("--matrix", matrix_arg, "matrix JSON (inline or a file path)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (root->parsed()) return cmd_root(prime, n, matrix_arg);
        if (sqrtz->parsed()) return cmd_sqrt_sl3z(matrix_arg);
        if (sqrtfp->parsed()) return cmd_sqrt_sl3fp(prime, matrix_arg);
        if (claims->parsed()) return cmd_claims(out_path);
        if (search->parsed()) return cmd_word_search(matrix_arg, generators, max_len);
        if (sweep->parsed()) return cmd_oracle_sweep(prime, n, partitions, csv_path);
        if (member->parsed()) return cmd_member(matrix_arg);
    } catch (const Json::parse_error& e) {
        std::cerr << "error: invalid JSON: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
