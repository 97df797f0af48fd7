#pragma once

#include "grsobs/pd.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace grsobs::diagram {

// Corner k of a crossing is the region between strand ends k and k+1 (mod 4)
// in the counterclockwise order of the PD tuple.
struct Corner {
    int crossing;
    int corner;

    bool operator==(const Corner&) const = default;
};

// The complementary regions of the projection. For a connected n-crossing
// diagram there are exactly n + 2 faces (Euler); the unknot has two faces
// with no corners.
struct FaceComplex {
    std::size_t crossing_count = 0;
    std::vector<std::vector<Corner>> faces;  // each face as a cyclic corner list
    std::vector<int> face_of;                // corner id 4*crossing + k -> face index

    int face_at(int crossing, int corner) const { return face_of[4 * crossing + corner]; }
};

// Trace the faces of a connected diagram. Throws on split PD codes and on
// codes that do not embed in the sphere (face count != n + 2).
FaceComplex build_faces(const PlanarDiagram& d);

// A checkerboard coloring: the white faces, plus per-crossing data used by
// the Goeritz construction. eta is +1 when the white corners at the crossing
// are the pair {1,3} of the PD tuple and -1 for the pair {0,2}; the overall
// sign convention is pinned by the calibration tests on the torus trefoil
// and figure-eight diagrams.
struct Coloring {
    std::vector<bool> face_is_white;
    std::vector<int> white_faces;                     // ascending face indices
    std::vector<int> eta;                             // per crossing, +1 or -1
    std::vector<std::pair<int, int>> white_at;        // per crossing, the two white faces

    std::size_t white_count() const noexcept { return white_faces.size(); }
};

// The two complementary proper 2-colorings of the faces, in a fixed order:
// the coloring in which face 0 is white comes first.
std::pair<Coloring, Coloring> checkerboard(const FaceComplex& f);

}  // namespace grsobs::diagram
