#include "mullreg/mullineux.hpp"

#include <algorithm>
#include <numeric>

namespace mullreg {

std::vector<Box> rim(const Partition& p) {
    std::vector<Box> path;
    const int l = p.length();
    for (int r = 1; r <= l; ++r) {
        // Rim boxes of row r occupy columns max(p_{r+1},1) .. p_r.
        int lo = r < l ? std::max(p.part(r + 1), 1) : 1;
        for (int c = p.part(r); c >= lo; --c)
            path.push_back(Box{r, c});
    }
    return path;
}

RimDecomposition b_rim(const Partition& p, int b) {
    detail::require_modulus(b);
    if (!is_b_regular(p, b))
        throw NotBRegular("partition " + p.str() + " is not " + std::to_string(b) + "-regular");

    RimDecomposition d;
    d.rim_boxes = rim(p);
    d.removed_per_row.assign(p.length(), 0);
    if (p.empty())
        return d;

    const int l = p.length();
    std::vector<int> row_start(l + 1, 0); // index of (r, p_r) in the rim path
    for (std::size_t idx = 0; idx < d.rim_boxes.size(); ++idx) {
        const Box& box = d.rim_boxes[idx];
        if (box.col == p.part(box.row))
            row_start[box.row] = static_cast<int>(idx);
    }

    std::vector<int> piece_path_begin;
    int start_row = 1;
    while (start_row <= l) {
        int begin = row_start[start_row];
        int end = std::min<int>(static_cast<int>(d.rim_boxes.size()), begin + b);
        piece_path_begin.push_back(begin);
        for (int idx = begin; idx < end; ++idx) {
            d.brim_boxes.push_back(d.rim_boxes[idx]);
            ++d.removed_per_row[d.rim_boxes[idx].row - 1];
        }
        d.piece_ends.push_back(static_cast<int>(d.brim_boxes.size()));
        start_row = d.rim_boxes[end - 1].row + 1;
    }

    // Bounding rectangles: along the path the row grows and the column
    // shrinks, so the first box of a piece gives top/right and the last box
    // gives bottom/left.
    for (int k = 0; k < d.piece_count(); ++k) {
        auto [pb, pe] = d.piece_span(k);
        const Box& first = d.brim_boxes[pb];
        const Box& last = d.brim_boxes[pe - 1];
        d.rectangles.push_back(RimRect{first.row, last.col, last.row, first.col});
    }

    // Segments: consecutive pieces belong to one segment exactly when they
    // are adjacent along the rim path.
    int seg_begin = 0;
    for (int k = 0; k < d.piece_count(); ++k) {
        bool last_piece = k + 1 == d.piece_count();
        bool breaks = last_piece ||
                      piece_path_begin[k + 1] !=
                          piece_path_begin[k] + d.piece_size(k);
        if (breaks) {
            int seg_end = d.piece_ends[k];
            d.segments.push_back(RimSegment{seg_begin, seg_end, (seg_end - seg_begin) % b == 0});
            seg_begin = seg_end;
        }
    }
    return d;
}

Partition remove_b_rim(const Partition& p, int b) {
    RimDecomposition d = b_rim(p, b);
    std::vector<int> rows;
    for (int r = 1; r <= p.length(); ++r) {
        int v = p.part(r) - d.removed_per_row[r - 1];
        if (v > 0)
            rows.push_back(v);
    }
    return Partition(std::move(rows));
}

Partition remove_truncated_b_rim(const Partition& p, int b) {
    if (p.empty())
        throw EmptyInput("cannot remove the truncated b-rim of the empty partition");
    RimDecomposition d = b_rim(p, b);
    const int l = p.length();
    int removed = 0;
    for (int r : d.removed_per_row)
        removed += r;
    int delta = removed % b == 0 ? 1 : 0;

    std::vector<int> rows;
    rows.reserve(l);
    for (int r = 1; r <= l; ++r) {
        int v = p.part(r) - d.removed_per_row[r - 1] + (r < l ? 1 : delta);
        if (v > 0)
            rows.push_back(v);
    }
    Partition result{std::move(rows)};
    if (result.size() >= p.size())
        throw InternalError("truncated rim step did not shrink " + p.str());
    return result;
}

Partition mullineux_transpose(const Partition& p, int b, MullineuxTrace* trace) {
    detail::require_modulus(b);
    if (!is_b_regular(p, b))
        throw NotBRegular("partition " + p.str() + " is not " + std::to_string(b) + "-regular");
    if (trace) {
        trace->iterates.clear();
        trace->row_sizes.clear();
        trace->iterates.push_back(p);
    }
    std::vector<int> row_sizes;
    Partition cur = p;
    while (!cur.empty()) {
        Partition next = remove_truncated_b_rim(cur, b);
        row_sizes.push_back(cur.size() - next.size());
        if (row_sizes.size() >= 2 && row_sizes[row_sizes.size() - 1] > row_sizes[row_sizes.size() - 2])
            throw InternalError("row sizes of the Mullineux transpose are not non-increasing for " +
                                p.str());
        cur = std::move(next);
        if (trace)
            trace->iterates.push_back(cur);
    }
    if (trace)
        trace->row_sizes = row_sizes;
    return Partition(std::move(row_sizes));
}

Partition mullineux(const Partition& p, int b) {
    return mullineux_transpose(p, b).transposed();
}

RectStats omega_psi(const Partition& p, int a, int b) {
    detail::require_ab(a, b);
    RimDecomposition d = b_rim(p, b);
    RectStats s;
    for (int k = 0; k < d.piece_count(); ++k) {
        const RimRect& r = d.rectangles[k];
        if (d.piece_size(k) == b && r.height() == a && r.width() == b - a + 1)
            s.omega = k + 1;
    }
    for (int k = 0; k < s.omega; ++k)
        s.psi += d.rectangles[k].height();
    return s;
}

} // namespace mullreg
