// Acceptance harness: one line per criterion, nonzero exit when any fails.
// Every check here is exact; there are no tolerances anywhere.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "matroot/esl3.hpp"
#include "matroot/oracle.hpp"
#include "matroot/rootsolver.hpp"
#include "matroot/serialize.hpp"
#include "matroot/sympoly.hpp"

using namespace matroot;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << name << ": " << detail
              << "\n";
    if (!pass) ++failures;
}

// 1. For p in {2,3,5} and n in {3,4,5}, every non-scalar A: the exhaustive
// root set is contained in the candidate set and equals the verified set.
void criterion_inclusion_sweep() {
    auto start = std::chrono::steady_clock::now();
    std::size_t checked = 0;
    std::size_t violations = 0;
    for (std::int64_t p : {2, 3, 5}) {
        for (unsigned n : {3u, 4u, 5u}) {
            SweepResult sweep = sweep_compare(OracleConfig{p, n, 2});
            checked += sweep.checked;
            violations += sweep.violations;
        }
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::ostringstream detail;
    detail << violations << " violations across " << checked << " matrices in " << ms << " ms";
    report(1, "exhaustive root sweep, p in {2,3,5}, n in {3,4,5}", violations == 0,
           detail.str());
}

// 2. For p in {3,5} and every A including scalars and zero, the cube-root
// case split expands to exactly the enumerated root set.
void criterion_cube_equivalence() {
    std::size_t mismatches = 0;
    std::size_t checked = 0;
    for (std::int64_t p : {3, 5}) {
        Ring f = Ring::prime_field(p);
        for (const Matrix& a : all_matrices_m2(f)) {
            ++checked;
            if (expand_solution(cube_roots_m2(a), f) != exhaustive_roots_m2(a, 3)) {
                ++mismatches;
            }
        }
    }
    std::ostringstream detail;
    detail << mismatches << " discrepancies across " << checked
           << " matrices (scalar and zero cases included)";
    report(2, "cube-root case split equals enumeration over F3 and F5", mismatches == 0,
           detail.str());
}

// 3. 200 random unimodular squares: the criterion always returns the
// invariant pair of the known root, and reconstruction verifies whenever its
// denominator 1 - pq is nonzero.
void criterion_integer_round_trip() {
    const Ring z = Ring::integers();
    std::vector<Matrix> gens;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            std::vector<std::vector<BigInt>> rows = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
            gens.push_back(Matrix::from_rows(z, rows));
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
            gens.push_back(Matrix::from_rows(z, rows));
        }
    }

    std::mt19937 rng(20250814);
    std::uniform_int_distribution<std::size_t> which(0, gens.size() - 1);
    int trials = 200;
    int pair_found = 0;
    int applicable = 0;
    int verified = 0;
    for (int trial = 0; trial < trials; ++trial) {
        Matrix b = Matrix::identity(z, 3);
        for (int step = 0; step < 5; ++step) b = b * gens[which(rng)];
        Matrix a = b * b;
        CharPolyInvariants ib = invariants(b);

        for (const auto& [p, q] : sqrt_criterion_sl3z(a)) {
            if (p != ib.trace || q != ib.second_sym) continue;
            ++pair_found;
            if ((Scalar::one(z) - p * q).is_zero()) break;
            ++applicable;
            RootCandidate c = sqrt_reconstruct_sl3(a, p, q);
            if (c.verified()) ++verified;
            break;
        }
    }
    std::ostringstream detail;
    detail << pair_found << "/" << trials << " pairs recovered, " << verified << "/" << applicable
           << " applicable reconstructions verified";
    report(3, "integer square-root round trip on 200 random unimodular squares",
           pair_found == trials && verified == applicable, detail.str());
}

// 4. The upper-triangular worked example comes out exactly.
void criterion_worked_example() {
    const Ring z = Ring::integers();
    Matrix a = Matrix::from_rows(z, {{1, 2, 1}, {0, 1, 2}, {0, 0, 1}});
    Matrix expected_root = Matrix::from_rows(z, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});

    bool pass = false;
    std::string detail = "pair (3,3) not produced by the criterion";
    for (const auto& [p, q] : sqrt_criterion_sl3z(a)) {
        if (p.value() != 3 || q.value() != 3) continue;
        RootCandidate c = sqrt_reconstruct_sl3(a, p, q);
        pass = c.verified() && *c.matrix == expected_root && (*c.matrix * *c.matrix) == a;
        detail = pass ? "p=3, q=3 reconstructs [[1,1,0],[0,1,1],[0,0,1]] with B*B = A exactly"
                      : "pair (3,3) found but reconstruction mismatched";
    }
    report(4, "upper-triangular worked example reproduced", pass, detail);
}

// 5. The 168-element group is enumerated and the squaring map measured; the
// verdict is definitive, reproducible, and witnessed.
void criterion_squaring_coverage() {
    auto start = std::chrono::steady_clock::now();
    Sl3F2Sqrt once = sl3_f2_universal_sqrt();
    Sl3F2Sqrt twice = sl3_f2_universal_sqrt();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();

    bool reproducible = dump_json(report_to_json(once.report)) ==
                        dump_json(report_to_json(twice.report));
    bool witnesses_ok = once.covers ? once.square_free.empty() : !once.square_free.empty();
    // Definitive means every listed witness is independently square-free.
    std::vector<Matrix> group = sl3_f2_elements();
    for (const Matrix& w : once.square_free) {
        for (const Matrix& g : group) {
            if (g * g == w) witnesses_ok = false;
        }
    }
    bool pass = once.group_size == 168 && reproducible && witnesses_ok && ms < 10000;
    std::ostringstream detail;
    detail << "group order " << once.group_size << ", squaring image " << once.image_size
           << ", verdict: " << (once.covers ? "covers" : "does not cover") << " ("
           << once.square_free.size() << " witnesses), " << ms << " ms";
    report(5, "squaring-map coverage of the order-168 group decided", pass, detail.str());
}

// 6. Sequence identities across the full (trace, det) grid for p in {3,5,7}
// and 2 <= n <= 12, plus exact power reduction for random matrices.
void criterion_sequence_identities() {
    std::size_t identity_failures = 0;
    std::size_t power_failures = 0;
    for (std::int64_t prime : {3, 5, 7}) {
        Ring f = Ring::prime_field(prime);
        for (std::int64_t tr = 0; tr < prime; ++tr) {
            for (std::int64_t dt = 0; dt < prime; ++dt) {
                SymPolyParams params(Scalar(f, tr), Scalar(f, dt));
                for (unsigned long n = 2; n <= 12; ++n) {
                    auto [sn, tn] = st_sequences(params.e1, params.e2, n);
                    long ln = static_cast<long>(n);
                    if (sn != Q(ln - 1, params)) ++identity_failures;
                    if (tn != -(params.e2 * Q(ln - 2, params))) ++identity_failures;
                    if (params.e1 * Q(ln - 1, params) -
                            Scalar(f, 2) * params.e2 * Q(ln - 2, params) !=
                        P(n, params)) {
                        ++identity_failures;
                    }
                }
            }
        }

        std::mt19937 rng(600 + prime);
        std::uniform_int_distribution<std::int64_t> pick(0, prime - 1);
        for (int trial = 0; trial < 50; ++trial) {
            Matrix b = Matrix::from_rows(f, {{pick(rng), pick(rng)}, {pick(rng), pick(rng)}});
            for (unsigned long n = 2; n <= 12; ++n) {
                auto [sn, tn] = st_sequences(trace(b), det(b), n);
                if (power(b, n) != b.scaled(sn) + Matrix::identity(f, 2).scaled(tn)) {
                    ++power_failures;
                }
            }
        }
    }
    std::ostringstream detail;
    detail << identity_failures << " identity failures, " << power_failures
           << " power reduction failures";
    report(6, "power-sequence identities on the full grid, p in {3,5,7}, n up to 12",
           identity_failures == 0 && power_failures == 0, detail.str());
}

// 7. The identity registry: required relations hold; suspected misprints are
// reported with computed values and never fail the run.
void criterion_claim_registry() {
    GeneratorCatalog catalog = GeneratorCatalog::standard();
    VerificationReport r = run_claim_registry(catalog);

    std::vector<std::string> required = {
        "steinberg-t12-t23", "steinberg-t13-t32", "steinberg-t21-t13", "steinberg-t23-t31",
        "steinberg-t31-t12", "steinberg-t32-t21", "m6-order-six",      "m6-cube-is-minus-e",
        "p3-order-three",    "inv-d1",            "inv-d2",            "inv-i12",
        "inv-i13",           "inv-i21",           "inv-i23",           "inv-i31",
        "inv-i32",           "prod-i12-d1",       "prod-i23-d2",       "prod-i13-d1",
        "prod-i21-d2",       "prod-i32-d3",       "prod-i31-d3",
    };
    for (const ReportEntry& e : r.entries) {
        if (e.id.rfind("steinberg-commute-", 0) == 0 || e.id.rfind("central-d123-", 0) == 0) {
            required.push_back(e.id);
        }
    }

    std::size_t missing_or_failed = 0;
    for (const std::string& id : required) {
        bool ok = false;
        for (const ReportEntry& e : r.entries) {
            if (e.id == id && e.holds) ok = true;
        }
        if (!ok) ++missing_or_failed;
    }

    std::size_t tagged = 0;
    std::size_t tagged_without_values = 0;
    for (const ReportEntry& e : r.entries) {
        if (e.expected == "paper-typo-suspected") {
            ++tagged;
            if (!e.lhs_value || !e.rhs_value) ++tagged_without_values;
        }
    }

    bool pass = missing_or_failed == 0 && tagged_without_values == 0 && r.all_expected_hold();
    std::ostringstream detail;
    detail << required.size() - missing_or_failed << "/" << required.size()
           << " required relations hold, " << tagged
           << " suspected misprints reported with computed values, run "
           << (r.all_expected_hold() ? "clean" : "failing");
    report(7, "identity registry verdicts", pass, detail.str());
}

// 8. Transvections factor into involution words of the promised lengths.
void criterion_word_search() {
    GeneratorCatalog catalog = GeneratorCatalog::standard();
    Matrix t12 = catalog.get("t12");
    Matrix t13 = catalog.get("t13");

    auto w12 = bounded_word_search(t12, {"i12", "D1"}, 2, catalog);
    bool pass12 = w12 && w12->size() == 2 && evaluate_word(*w12, catalog) == t12;

    std::vector<std::string> s8 = {"D1", "D2", "i12", "i13", "i21", "i23", "i31", "i32"};
    auto w13 = bounded_word_search(t13, s8, 4, catalog);
    bool pass13 = w13 && w13->size() <= 4 && evaluate_word(*w13, catalog) == t13;

    std::ostringstream detail;
    detail << "t12 = " << (w12 ? word_str(*w12) : "(not found)") << "; t13 = "
           << (w13 ? word_str(*w13) : "(not found)") << " (length "
           << (w13 ? std::to_string(w13->size()) : "-") << " of at most 4)";
    report(8, "transvections factor into involution words", pass12 && pass13, detail.str());
}

}  // namespace

int main() {
    criterion_inclusion_sweep();
    criterion_cube_equivalence();
    criterion_integer_round_trip();
    criterion_worked_example();
    criterion_squaring_coverage();
    criterion_sequence_identities();
    criterion_claim_registry();
    criterion_word_search();

    if (failures == 0) {
        std::cout << "all 8 criteria passed\n";
        return 0;
    }
    std::cout << failures << " of 8 criteria failed\n";
    return 1;
}
