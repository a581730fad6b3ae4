#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matroot/matrix.hpp"
#include "matroot/report.hpp"

namespace matroot {

/**
 * The named 3x3 integer matrices of the extended special linear group
 * toolkit: transvections t_ij, sign involutions D1/D2/D3/D123, the 3-cycle
 * P3, the order-6 monomial matrix M6, the diagonal involutions i_kl
 * (definitional form: -1 at (k,k), +1 at (k,l)), and the displayed variants
 * that differ from the definitional forms (suffix _disp).
 */
class GeneratorCatalog {
public:
    static GeneratorCatalog standard();

    const Matrix& get(const std::string& name) const;
    bool contains(const std::string& name) const { return by_name_.count(name) != 0; }

    /** Names in registration order (deterministic). */
    const std::vector<std::string>& names() const { return names_; }

private:
    void add(const std::string& name, Matrix m);

    std::vector<std::string> names_;
    std::map<std::string, Matrix> by_name_;
};

/** One letter of a word: a catalog name and an exponent of +1 or -1. */
struct WordLetter {
    std::string generator;
    int exponent;
};

/** Left-to-right product over the catalog; the empty word is E. */
using Word = std::vector<WordLetter>;

Matrix evaluate_word(const Word& w, const GeneratorCatalog& catalog);

std::string word_str(const Word& w);

enum class Expectation { holds, paper_typo_suspected };

/**
 * A machine-checkable identity: two words whose evaluations are compared
 * exactly. `expected` marks identities known to fail as printed in their
 * source text; their computed values are still reported, and they do not
 * count as verification failures.
 */
struct Claim {
    std::string id;
    Word lhs;
    Word rhs;
    std::string source;
    std::string convention;
    Expectation expected = Expectation::holds;
};

/** Every registered identity: generator relations, commutators, involution
 * products, the construction chain, and centrality checks. */
std::vector<Claim> standard_claims();

/** Evaluates the given claims; entries are sorted by claim id. */
VerificationReport run_claims(const GeneratorCatalog& catalog, const std::vector<Claim>& claims);

/** Evaluates the full standard registry. */
VerificationReport run_claim_registry(const GeneratorCatalog& catalog);

/** Membership in the extended special linear group: det = +-1 over Z. */
bool is_esl3_member(const Matrix& m);

/** True iff g commutes with every cataloged generator. */
bool centrality_check(const Matrix& g, const GeneratorCatalog& catalog);
bool centrality_check(const std::string& name, const GeneratorCatalog& catalog);

/**
 * Checks that conjugation by g keeps each det-1 catalog generator (the six
 * transvections and P3) inside the det-1 kernel, one report entry each.
 */
VerificationReport conjugation_closure_check(const std::string& name,
                                             const GeneratorCatalog& catalog);

struct SearchLimits {
    BigInt max_entry_magnitude = 16;
    std::size_t max_nodes = 1'000'000;
};

/**
 * Breadth-first search over right-multiplication by the listed generators
 * and their inverses, with exact-matrix dedup. Returns a shortest word
 * evaluating to `target`, or nullopt if none exists within max_len.
 *
 * States whose entries exceed the magnitude cap are pruned; exceeding the
 * node budget throws SearchBudgetExceeded. max_len must be at most 8.
 */
std::optional<Word> bounded_word_search(const Matrix& target,
                                        const std::vector<std::string>& generators, int max_len,
                                        const GeneratorCatalog& catalog,
                                        const SearchLimits& limits = {});

}  // namespace matroot
