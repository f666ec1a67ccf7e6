#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "mullreg/partition.hpp"

namespace mullreg {

/// Bead sequence encoding of a partition. Slot m (an integer) stands for the
/// half-integer position m + 1/2; the boundary path of the diagram projects
/// to a black bead at position q_k - k + 1/2 for every row k of the
/// transpose q. The vacuum (empty partition) is black exactly on the
/// negative slots; a diagram is stored as its finite symmetric difference
/// with the vacuum, which keeps the origin charge balanced.
class MayaDiagram {
public:
    MayaDiagram() = default; // vacuum

    /// added: black slots >= 0; removed: white slots < 0. Both sorted sets
    /// must have equal cardinality. Throws MalformedDiagram otherwise.
    MayaDiagram(std::vector<int> added, std::vector<int> removed);

    static MayaDiagram of(const Partition& p);
    Partition to_partition() const;

    bool black(int slot) const;

    /// New diagram with one slot flipped; throws MalformedDiagram when the
    /// slot already has that color or the charge would not re-balance.
    MayaDiagram with_colors(std::initializer_list<std::pair<int, bool>> changes) const;

    const std::vector<int>& added() const { return added_; }
    const std::vector<int>& removed() const { return removed_; }

    /// Smallest slot that may differ from the vacuum; every slot below is black.
    int low_slot() const { return removed_.empty() ? 0 : removed_.front(); }
    /// Largest slot that may differ from the vacuum; every slot above is white.
    int high_slot() const { return added_.empty() ? -1 : added_.back(); }

    friend bool operator==(const MayaDiagram&, const MayaDiagram&) = default;

private:
    std::vector<int> added_;   // sorted, all >= 0
    std::vector<int> removed_; // sorted, all < 0
};

/// Adds (add = true) or removes (add = false) one box, as the swap of two
/// adjacent beads. Throws NotAddable / NotRemovable when the box is not an
/// addable / removable box of the encoded partition.
MayaDiagram apply_box_move(const MayaDiagram& m, Box box, bool add);

/// The Maya diagram regrouped into b runners. Runner r (0 at the top) holds
/// the slots congruent to b-1-r modulo b: grouping b consecutive positions
/// starting at the origin and rotating each group a quarter turn
/// counterclockwise stacks the highest position of the group on top.
class Abacus {
public:
    static Abacus of(const MayaDiagram& m, int b);

    int runners() const { return b_; }
    const MayaDiagram& maya() const { return maya_; } // regrouping inverse

    bool black(int runner, int q) const; // bead q of the runner, slot b-1-runner + b*q
    int runner_of_slot(int slot) const;

    /// Black beads pushed as far left as possible on every runner.
    Abacus pushed_to_core() const;

    /// The partition encoded by one runner read as a Maya diagram of its own.
    Partition runner_partition(int runner) const;

private:
    int b_ = 2;
    MayaDiagram maya_;
};

/// The b-core, computed on the abacus. Requires b >= 2.
Partition core_b(const Partition& p, int b);

/// The b-core by greedy removal of rim ribbons of length b, always taking
/// the ribbon whose hand sits in the lowest-numbered row. Independent of the
/// abacus path; the two must agree.
Partition core_b_by_ribbons(const Partition& p, int b);

/// Ordered b-tuple of partitions.
struct QuotientTuple {
    std::vector<Partition> components;
    int total_size() const;
    friend bool operator==(const QuotientTuple&, const QuotientTuple&) = default;
};

/// The b-quotient read off the abacus runners.
QuotientTuple quotient_b(const Partition& p, int b);

/// The b-quotient from the hook description: component k collects the boxes
/// with hook divisible by b and hand residue k, one part per occupied row.
/// Independent of the abacus path; the two must agree.
QuotientTuple quotient_b_by_hooks(const Partition& p, int b);

/// Total size of the b-quotient; also the number of hooks divisible by b.
int b_weight(const Partition& p, int b);

} // namespace mullreg
