#include "mullreg/render.hpp"

#include <vector>

#include "mullreg/mullineux.hpp"

namespace mullreg {

namespace {

char label_char(int v) {
    static const char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
    return digits[v % 36];
}

} // namespace

std::string render_diagram(const Partition& p, int b, Overlay overlay) {
    std::vector<std::string> grid;
    grid.reserve(p.length());
    for (int r = 1; r <= p.length(); ++r)
        grid.push_back(std::string(p.part(r), '#'));

    switch (overlay) {
    case Overlay::None:
        break;
    case Overlay::BRim: {
        RimDecomposition d = b_rim(p, b);
        for (int k = 0; k < d.piece_count(); ++k) {
            auto [pb, pe] = d.piece_span(k);
            for (int i = pb; i < pe; ++i) {
                const Box& box = d.brim_boxes[i];
                grid[box.row - 1][box.col - 1] = label_char(i - pb + 1);
            }
        }
        break;
    }
    case Overlay::Rects: {
        RimDecomposition d = b_rim(p, b);
        for (const RimRect& rect : d.rectangles) {
            for (int r = rect.top; r <= rect.bottom; ++r) {
                for (int c = rect.left; c <= rect.right; ++c) {
                    bool border = r == rect.top || r == rect.bottom ||
                                  c == rect.left || c == rect.right;
                    if (border && p.contains(Box{r, c}))
                        grid[r - 1][c - 1] = '%';
                }
            }
        }
        break;
    }
    case Overlay::Ladders: {
        detail::require_modulus(b);
        for (int r = 1; r <= p.length(); ++r)
            for (int c = 1; c <= p.part(r); ++c)
                grid[r - 1][c - 1] = label_char(residue(Box{r, c}, b));
        break;
    }
    }

    std::string out;
    for (const std::string& line : grid) {
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace mullreg
