#pragma once

#include <string>
#include <vector>

#include "mullreg/partition.hpp"

namespace mullreg {

/// First-quadrant points of the ladder through anchor, north to south.
/// A ladder steps by (+a, -(b-a)) going south; a dual ladder by (+(b-a), -a).
/// All boxes on one ladder share the same b-residue.
std::vector<Box> ladder_points(Box anchor, int a, int b, bool dual = false);

/// An arbitrary left-anchored box arrangement: the result type of the
/// sliding operations, which need not be a partition. Rows are 1-based;
/// row_lengths() reports per-row box counts.
class BoxComposition {
public:
    BoxComposition() = default;
    static BoxComposition of(const Partition& p);
    static BoxComposition from_boxes(std::vector<Box> boxes);

    std::vector<int> row_lengths() const;
    int row_count() const { return static_cast<int>(rows_.size()); }
    int total() const;
    bool contains(Box b) const;
    std::vector<Box> boxes() const;

    /// Every row occupies columns 1..k with no gaps.
    bool left_justified() const;
    bool is_partition() const;
    Partition to_partition() const; // throws NotAPartition
    BoxComposition transposed() const;

    /// Comma-joined row lengths; "0" when empty.
    std::string row_lengths_str() const;

    friend bool operator==(const BoxComposition&, const BoxComposition&) = default;

private:
    std::vector<std::vector<int>> rows_; // sorted column lists, trailing empties stripped
};

/// Column regularization: every ladder class meeting p re-occupies its
/// bottom-most positions. The result is always left-justified but not
/// necessarily a partition. Requires 1 <= a < b.
BoxComposition colreg(const Partition& p, int a, int b);

/// Regularization: every dual-ladder class re-occupies its top-most
/// positions; equals colreg conjugated by transposition.
BoxComposition reg(const Partition& p, int a, int b);

bool is_cr_valid(const Partition& p, int a, int b);

/// The first-row criterion: every ladder through a first-row box is either
/// fully contained in p, or some box of the ladder one row up sits in p with
/// nothing directly below it. Agrees with is_cr_valid on all inputs.
bool is_cr_valid_lemma(const Partition& p, int a, int b);

bool is_reg_valid(const Partition& p, int a, int b);

/// True iff reg(p, a, b) returns exactly p.
bool is_ab_regular(const Partition& p, int a, int b);

/// Column semi-regularization: each first-row box whose ladder is not full
/// slides to the north-most empty ladder position supported from above; the
/// first row is then deleted. Defined for Cr-valid input only; throws
/// NotCrValid otherwise. First-row boxes are processed northeast to
/// southwest; for valid input the order does not matter.
///
/// Throws NotAPartition when the slid arrangement has a row gap. This can
/// only happen in the presence of a hook of length t*b with leg t*a; the
/// row-by-row computation of colreg applies wherever such hooks are absent.
Partition semireg(const Partition& p, int a, int b);

} // namespace mullreg
