#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "mullreg/partition.hpp"

namespace mullreg {

using PairList = std::vector<std::pair<int, int>>;

/// All pairs 1 <= a < b <= b_max, ordered lexicographically.
PairList all_pairs(int b_max);

/// One checked instance of the implication "Cr-valid with every divisible
/// hook shallow implies b-regular and Mullineux transpose = column
/// regularization". Hypothesis and conclusion flags are recomputed from
/// primitives on every call; conclusions stay unset when a prerequisite for
/// evaluating them is missing.
struct CaseRecord {
    Partition partition;
    int a = 0;
    int b = 0;
    bool cr_valid = false;
    bool reg_valid = false;
    bool divisible_hooks_shallow = false;
    bool divisible_hooks_shallow_or_steep = false;
    std::optional<bool> b_regular;
    std::optional<bool> mullineux_tr_eq_colreg;
    std::optional<bool> reg_mull_eq_tr_reg;
    std::string witness; // set when a checked conclusion fails
};

CaseRecord check_theorem_case(const Partition& p, int a, int b);

struct Violation {
    int n = 0;          // |partition|
    long long index = 0; // position in the reverse-lexicographic order
    std::string partition;
    int a = 0;
    int b = 0;
    std::string witness;
};

struct VerificationReport {
    std::string scan;
    int n_max = 0;
    PairList pairs;
    long long examined = 0;
    long long hypothesis_ok = 0;
    long long inapplicable = 0;    // reported only when track_inapplicable
    bool track_inapplicable = false;
    std::vector<Violation> violations;
    long long duration_ms = 0;

    nlohmann::ordered_json to_json(bool with_duration = true) const;
    std::string to_csv() const;
    std::string summary() const;
};

/// Throws ScanViolation when the report carries any violation.
void require_clean(const VerificationReport& report);

/// Instantiates the proved implication on every partition of size <= n_max
/// and every pair. A nonempty violation list means an implementation bug.
VerificationReport scan_theorem(int n_max, const PairList& pairs, int jobs = 1);

/// Hunts counterexamples to the reverse statement: a b-regular, Cr-valid
/// partition whose Mullineux transpose equals its column regularization but
/// which carries a non-shallow divisible hook. Pairs must be coprime unless
/// allow_non_coprime is set. Counterexamples are data, not failures.
VerificationReport scan_conjecture_reverse(int n_max, const PairList& pairs, int jobs = 1,
                                           bool allow_non_coprime = false);

/// Hunts counterexamples to both directions of the regularized statement on
/// pairs with 2a < b; direction (ii) is only tested for coprime pairs.
VerificationReport scan_conjecture_fayers(int n_max, const PairList& pairs, int jobs = 1);

/// Cross-module consistency sweep: Mullineux involution, both recursion
/// identities, the validity-lemma equivalence, core/quotient dual-path
/// agreement, core preservation, the size identity, dominance reversal, the
/// shallow-and-steep bound, and the row-removal identity on qualifying
/// partitions. Any violation is an implementation bug.
VerificationReport brute_force_cross_checks(int n_max, int b_max);

} // namespace mullreg
