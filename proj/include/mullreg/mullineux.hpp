#pragma once

#include <utility>
#include <vector>

#include "mullreg/partition.hpp"

namespace mullreg {

/// The rim: boxes (i,j) of p with (i+1,j+1) outside p, listed along the
/// boundary path from the northeast end (1, p_1) to the southwest end (l, 1).
std::vector<Box> rim(const Partition& p);

/// Axis-aligned bounding rectangle of one b-rim piece.
struct RimRect {
    int top = 0, left = 0, bottom = 0, right = 0;
    int height() const { return bottom - top + 1; }
    int width() const { return right - left + 1; }
    friend bool operator==(const RimRect&, const RimRect&) = default;
};

/// Maximal run of contiguous b-rim boxes, as an index range into the chosen
/// boxes. A run whose size is a multiple of b is a b-segment.
struct RimSegment {
    int begin = 0;
    int end = 0;
    bool is_b_segment = false;
    friend bool operator==(const RimSegment&, const RimSegment&) = default;
};

/// The b-rim of a b-regular partition together with its decomposition into
/// pieces, segments and bounding rectangles.
///
/// Pieces are built along the rim path: a piece starts at the rightmost box
/// of the current row and takes up to b contiguous rim boxes; the next piece
/// starts at the rightmost box of the row below the one where the previous
/// piece ended. The walk stops once a piece ends in the last row, so every
/// row hosts at least one chosen box and only the final piece may be short.
struct RimDecomposition {
    std::vector<Box> rim_boxes;      // full rim, northeast to southwest
    std::vector<Box> brim_boxes;     // chosen boxes in label order
    std::vector<int> piece_ends;     // exclusive end offsets into brim_boxes
    std::vector<RimSegment> segments;
    std::vector<RimRect> rectangles; // one bounding rectangle per piece
    std::vector<int> removed_per_row;

    int piece_count() const { return static_cast<int>(piece_ends.size()); }
    std::pair<int, int> piece_span(int k) const {
        return {k == 0 ? 0 : piece_ends[k - 1], piece_ends[k]};
    }
    int piece_size(int k) const {
        auto [b, e] = piece_span(k);
        return e - b;
    }
};

/// Throws NotBRegular; the decomposition is only defined for b-regular input.
RimDecomposition b_rim(const Partition& p, int b);

/// Removes the b-rim. Throws NotBRegular.
Partition remove_b_rim(const Partition& p, int b);

/// Removes the truncated b-rim: drop the b-rim, then add one box back to
/// every row except the last, and one more to the last row when the b-rim
/// size is divisible by b. Throws NotBRegular and EmptyInput.
Partition remove_truncated_b_rim(const Partition& p, int b);

/// Iterates of remove_truncated_b_rim down to the empty partition, and the
/// sizes removed at each step. row_sizes is checked to be non-increasing.
struct MullineuxTrace {
    std::vector<Partition> iterates;
    std::vector<int> row_sizes;
};

/// The Mullineux transpose: row i of the result is the number of boxes the
/// i-th truncated-rim step removes. Throws NotBRegular.
Partition mullineux_transpose(const Partition& p, int b, MullineuxTrace* trace = nullptr);

/// The Mullineux map: mullineux_transpose followed by transposition. An
/// involution on b-regular partitions. Throws NotBRegular.
Partition mullineux(const Partition& p, int b);

/// omega: largest rectangle index (1-based) of dimensions a x (b-a+1) in the
/// b-rectangular decomposition, 0 if none. psi: total height of rectangles
/// 1..omega. Requires 1 <= a < b and b-regular input.
struct RectStats {
    int omega = 0;
    int psi = 0;
    friend bool operator==(const RectStats&, const RectStats&) = default;
};
RectStats omega_psi(const Partition& p, int a, int b);

} // namespace mullreg
