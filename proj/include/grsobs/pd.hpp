#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace grsobs::diagram {

// PD presentation of a knot projection. Each crossing is a 4-tuple of edge
// labels in counterclockwise order of the strand ends, starting with the
// incoming understrand; the understrand occupies slots 0 and 2. Edge labels
// are exactly 1..2n, each appearing twice. n = 0 encodes the unknot.
struct PlanarDiagram {
    std::vector<std::array<int, 4>> crossings;

    std::size_t size() const noexcept { return crossings.size(); }
};

// Validating constructor; throws grsobs::Error("validate", ...) on a label
// multiset violation.
PlanarDiagram pd_from_tuples(std::vector<std::array<int, 4>> crossings);

// Parse PD notation, e.g. "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]". Whitespace
// insensitive. "[]" is the unknot.
PlanarDiagram parse_pd(std::string_view text);

}  // namespace grsobs::diagram
