#pragma once

#include <string>

#include "mullreg/partition.hpp"

namespace mullreg {

enum class Overlay {
    None,    // every box prints '#'
    BRim,    // b-rim boxes labelled 1..b within each piece, '#' elsewhere
    Rects,   // boxes on the border of a decomposition rectangle print '%'
    Ladders, // every box prints its b-residue
};

/// ASCII Young diagram, one character per box, rows growing south.
/// b is required for every overlay except None.
std::string render_diagram(const Partition& p, int b, Overlay overlay);

} // namespace mullreg
