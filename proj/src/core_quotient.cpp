#include "mullreg/core_quotient.hpp"

#include <algorithm>
#include <map>

namespace mullreg {

MayaDiagram::MayaDiagram(std::vector<int> added, std::vector<int> removed)
    : added_(std::move(added)), removed_(std::move(removed)) {
    auto sorted_unique = [](const std::vector<int>& v) {
        return std::is_sorted(v.begin(), v.end()) &&
               std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    if (!sorted_unique(added_) || !sorted_unique(removed_))
        throw MalformedDiagram("flip sets must be sorted and duplicate-free");
    if (!added_.empty() && added_.front() < 0)
        throw MalformedDiagram("added black beads must sit on non-negative slots");
    if (!removed_.empty() && removed_.back() >= 0)
        throw MalformedDiagram("removed black beads must sit on negative slots");
    if (added_.size() != removed_.size())
        throw MalformedDiagram("bead charge is not balanced");
}

MayaDiagram MayaDiagram::of(const Partition& p) {
    const Partition tr = p.transposed();
    const int l = tr.length();
    std::vector<int> added, present_neg;
    for (int k = 1; k <= l; ++k) {
        int m = tr.part(k) - k;
        if (m >= 0)
            added.push_back(m);
        else
            present_neg.push_back(m);
    }
    std::reverse(added.begin(), added.end());
    std::sort(present_neg.begin(), present_neg.end());
    std::vector<int> removed;
    for (int m = -l; m < 0; ++m)
        if (!std::binary_search(present_neg.begin(), present_neg.end(), m))
            removed.push_back(m);
    return MayaDiagram(std::move(added), std::move(removed));
}

bool MayaDiagram::black(int slot) const {
    if (slot >= 0)
        return std::binary_search(added_.begin(), added_.end(), slot);
    return !std::binary_search(removed_.begin(), removed_.end(), slot);
}

Partition MayaDiagram::to_partition() const {
    // Walk black slots from the top down; row k of the transpose is slot + k.
    std::vector<int> tr_parts;
    int k = 0;
    for (int m = high_slot(); m >= low_slot(); --m) {
        if (!black(m))
            continue;
        ++k;
        int part = m + k;
        if (part < 0)
            throw MalformedDiagram("bead sequence does not encode a partition");
        if (part > 0)
            tr_parts.push_back(part);
    }
    // Below low_slot() everything is black, so the remaining parts are zero.
    return Partition(std::move(tr_parts)).transposed();
}

MayaDiagram MayaDiagram::with_colors(std::initializer_list<std::pair<int, bool>> changes) const {
    std::vector<int> added = added_, removed = removed_;
    auto toggle = [](std::vector<int>& v, int slot) {
        auto it = std::lower_bound(v.begin(), v.end(), slot);
        if (it != v.end() && *it == slot)
            v.erase(it);
        else
            v.insert(it, slot);
    };
    for (auto [slot, make_black] : changes) {
        if (black(slot) == make_black)
            throw MalformedDiagram("slot already has the requested color");
        toggle(slot >= 0 ? added : removed, slot);
    }
    return MayaDiagram(std::move(added), std::move(removed));
}

MayaDiagram apply_box_move(const MayaDiagram& m, Box box, bool add) {
    Partition p = m.to_partition();
    if (box.row < 1 || box.col < 1) {
        if (add)
            throw NotAddable("box must lie in the first quadrant");
        throw NotRemovable("box must lie in the first quadrant");
    }
    if (add) {
        bool addable = box.row <= p.length() + 1 && box.col == p.part(box.row) + 1 &&
                       (box.row == 1 || p.part(box.row - 1) >= box.col);
        if (!addable)
            throw NotAddable("box (" + std::to_string(box.row) + "," + std::to_string(box.col) +
                             ") is not addable to " + p.str());
        int slot = box.row - box.col; // white bead; the black sits one slot left
        return m.with_colors({{slot - 1, false}, {slot, true}});
    }
    bool removable = p.contains(box) && box.col == p.part(box.row) &&
                     p.part(box.row + 1) < p.part(box.row);
    if (!removable)
        throw NotRemovable("box (" + std::to_string(box.row) + "," + std::to_string(box.col) +
                           ") is not removable from " + p.str());
    int slot = box.row - box.col; // black bead; it moves one slot left
    return m.with_colors({{slot, false}, {slot - 1, true}});
}

Abacus Abacus::of(const MayaDiagram& m, int b) {
    detail::require_modulus(b);
    Abacus a;
    a.b_ = b;
    a.maya_ = m;
    return a;
}

int Abacus::runner_of_slot(int slot) const {
    return b_ - 1 - detail::mod_floor(slot, b_);
}

bool Abacus::black(int runner, int q) const {
    if (runner < 0 || runner >= b_)
        throw BadParameters("runner index out of range");
    return maya_.black(b_ - 1 - runner + b_ * q);
}

Abacus Abacus::pushed_to_core() const {
    std::vector<int> added, removed;
    const int lo = maya_.low_slot(), hi = maya_.high_slot();
    for (int r = 0; r < b_; ++r) {
        const int c = b_ - 1 - r;
        int q_lo = detail::div_ceil(lo - c, b_);
        int q_hi = detail::div_floor(hi - c, b_);
        int blacks = 0;
        for (int q = q_lo; q <= q_hi; ++q)
            if (maya_.black(c + b_ * q))
                ++blacks;
        for (int q = q_lo; q <= q_hi; ++q) {
            int slot = c + b_ * q;
            bool is_black = q < q_lo + blacks;
            if (slot >= 0 && is_black)
                added.push_back(slot);
            if (slot < 0 && !is_black)
                removed.push_back(slot);
        }
    }
    std::sort(added.begin(), added.end());
    std::sort(removed.begin(), removed.end());
    Abacus out;
    out.b_ = b_;
    out.maya_ = MayaDiagram(std::move(added), std::move(removed));
    return out;
}

Partition Abacus::runner_partition(int runner) const {
    if (runner < 0 || runner >= b_)
        throw BadParameters("runner index out of range");
    const int c = b_ - 1 - runner;
    int q_lo = detail::div_ceil(maya_.low_slot() - c, b_);
    int q_hi = detail::div_floor(maya_.high_slot() - c, b_);
    std::vector<int> parts; // gathered south to north, then reversed
    int whites_below = 0;
    for (int q = q_lo; q <= q_hi; ++q) {
        if (maya_.black(c + b_ * q)) {
            if (whites_below > 0)
                parts.push_back(whites_below);
        } else {
            ++whites_below;
        }
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts)).transposed();
}

Partition core_b(const Partition& p, int b) {
    return Abacus::of(MayaDiagram::of(p), b).pushed_to_core().maya().to_partition();
}

Partition core_b_by_ribbons(const Partition& p, int b) {
    detail::require_modulus(b);
    Partition cur = p;
    for (;;) {
        Partition tr = cur.transposed();
        Box corner{0, 0};
        int leg = -1;
        for (int i = 1; i <= cur.length() && leg < 0; ++i) {
            for (int j = 1; j <= cur.part(i); ++j) {
                int hook = (cur.part(i) - j) + (tr.part(j) - i) + 1;
                if (hook == b) {
                    corner = Box{i, j};
                    leg = tr.part(j) - i;
                    break;
                }
                if (hook < b)
                    break; // hooks shrink eastwards
            }
        }
        if (leg < 0)
            return cur;
        // Strip the rim ribbon hanging off the corner hook.
        std::vector<int> rows = cur.parts();
        for (int r = corner.row; r < corner.row + leg; ++r)
            rows[r - 1] = cur.part(r + 1) - 1;
        rows[corner.row + leg - 1] = corner.col - 1;
        while (!rows.empty() && rows.back() == 0)
            rows.pop_back();
        cur = Partition(std::move(rows));
    }
}

int QuotientTuple::total_size() const {
    int t = 0;
    for (const Partition& p : components)
        t += p.size();
    return t;
}

QuotientTuple quotient_b(const Partition& p, int b) {
    Abacus a = Abacus::of(MayaDiagram::of(p), b);
    QuotientTuple q;
    q.components.reserve(b);
    for (int r = 0; r < b; ++r)
        q.components.push_back(a.runner_partition(r));
    return q;
}

QuotientTuple quotient_b_by_hooks(const Partition& p, int b) {
    detail::require_modulus(b);
    std::vector<std::map<int, int>> per_row(b); // residue -> (row -> count)
    for_each_hook(p, [&](Box box, int arm, int leg) {
        if ((arm + leg + 1) % b != 0)
            return;
        int hand_res = residue(Box{box.row, box.col + arm}, b);
        int foot_res = residue(Box{box.row + leg, box.col}, b);
        if (foot_res != (hand_res + 1) % b)
            throw InternalError("hand and foot residues of a divisible hook disagree");
        ++per_row[hand_res][box.row];
    });
    QuotientTuple q;
    for (int k = 0; k < b; ++k) {
        std::vector<int> parts;
        for (const auto& [row, count] : per_row[k])
            parts.push_back(count);
        try {
            q.components.push_back(Partition(std::move(parts)));
        } catch (const NotAPartition&) {
            throw InternalError("hook family of residue " + std::to_string(k) +
                                " is not partition-shaped in " + p.str());
        }
    }
    return q;
}

int b_weight(const Partition& p, int b) {
    return quotient_b(p, b).total_size();
}

} // namespace mullreg
