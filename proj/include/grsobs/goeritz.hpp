#pragma once

#include "grsobs/faces.hpp"
#include "grsobs/intmatrix.hpp"
#include "grsobs/pd.hpp"

namespace grsobs::diagram {

// A reduced Goeritz matrix certified negative definite with odd determinant,
// together with provenance. mirror_flag records that the raw matrix was
// negated to reach negative definiteness (the diagram presents the mirror of
// the knot the form describes).
struct GoeritzForm {
    enum class Source { diagram, user_matrix };

    intlat::IntMatrix matrix;
    bool mirror_flag = false;
    Source source = Source::user_matrix;
    int coloring = -1;        // 0 or 1 for diagram forms
    int deleted_region = -1;  // face index of the deleted white region

    std::size_t rank() const noexcept { return matrix.rows(); }
};

// Unreduced entry g_ij = -sum of eta over crossings joining white regions
// i != j; g_ii makes rows sum to zero. Returns the reduction with
// deleted_region's row and column removed; rank = (#white regions) - 1.
intlat::IntMatrix goeritz_matrix(const PlanarDiagram& d, const FaceComplex& f,
                                 const Coloring& c, int deleted_region);

// Try both colorings un-negated, then both negated (fewer white regions
// first; on ties the coloring in which face 0 is white). The deleted region
// is always the lowest white face index. Returns the first negative-definite
// reduced matrix; throws when none exists.
GoeritzForm definite_goeritz(const PlanarDiagram& d);

// Validate a user-supplied reduced matrix: symmetric, negative definite,
// odd determinant. No negation is attempted; mirror_flag is false.
GoeritzForm goeritz_from_matrix(const intlat::IntMatrix& m);

}  // namespace grsobs::diagram
