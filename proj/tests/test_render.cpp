#include "doctest.h"

#include "mullreg/render.hpp"

using namespace mullreg;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
}

TEST_CASE("plain rendering") {
    CHECK(render_diagram(P({3, 2}), 0, Overlay::None) == "###\n##\n");
    CHECK(render_diagram(Partition{}, 0, Overlay::None) == "");
}

TEST_CASE("rim label overlay") {
    // Pieces of the 3-rim are labelled 1..3 from their northeast ends.
    CHECK(render_diagram(P({7, 5, 1, 1}), 3, Overlay::BRim) ==
          "####321\n"
          "##321\n"
          "1\n"
          "2\n");
    CHECK(render_diagram(P({7, 2, 1}), 3, Overlay::BRim) ==
          "####321\n"
          "21\n"
          "3\n");
}

TEST_CASE("rectangle border overlay") {
    CHECK(render_diagram(P({12, 9, 9, 7, 5, 2, 2, 1}), 5, Overlay::Rects) ==
          "########%%%%\n"
          "########%\n"
          "#####%%%%\n"
          "#####%%\n"
          "#%%%%\n"
          "#%\n"
          "%%\n"
          "%\n");
}

TEST_CASE("residue overlay") {
    CHECK(render_diagram(P({4, 2, 2, 1}), 4, Overlay::Ladders) ==
          "0123\n"
          "30\n"
          "23\n"
          "1\n");
    CHECK_THROWS_AS(render_diagram(P({2, 1}), 0, Overlay::Ladders), BadParameters);
}
