#include "grsobs/goeritz.hpp"

#include "grsobs/error.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace grsobs::diagram {

using intlat::Int;
using intlat::IntMatrix;

intlat::IntMatrix goeritz_matrix(const PlanarDiagram& d, const FaceComplex& f,
                                 const Coloring& c, int deleted_region) {
    const auto& whites = c.white_faces;
    std::vector<int> index_of(f.faces.size(), -1);
    for (std::size_t i = 0; i < whites.size(); ++i) index_of[whites[i]] = static_cast<int>(i);
    if (deleted_region < 0 || deleted_region >= static_cast<int>(f.faces.size()) ||
        index_of[deleted_region] == -1)
        throw Error("validate", "deleted region " + std::to_string(deleted_region) +
                                    " is not a white region");

    IntMatrix g(whites.size(), whites.size());
    for (std::size_t x = 0; x < d.size(); ++x) {
        auto [wa, wb] = c.white_at[x];
        if (wa == wb) continue;  // crossing joins a white region to itself
        int i = index_of[wa], j = index_of[wb];
        g.at(i, j) -= c.eta[x];
        g.at(j, i) -= c.eta[x];
        g.at(i, i) += c.eta[x];
        g.at(j, j) += c.eta[x];
    }
    std::size_t del = static_cast<std::size_t>(index_of[deleted_region]);
    return g.removing(del, del);
}

namespace {

void check_odd_det(const IntMatrix& m, const char* what) {
    Int det = intlat::determinant(m);
    if (mod_positive(det, 2) == 0)
        throw Error("validate", std::string(what) + ": determinant " + det.str() +
                                    " is even (not a knot form)");
}

}  // namespace

GoeritzForm definite_goeritz(const PlanarDiagram& d) {
    FaceComplex faces = build_faces(d);
    auto [first, second] = checkerboard(faces);

    std::array<const Coloring*, 2> order{&first, &second};
    std::array<int, 2> ids{0, 1};
    if (second.white_count() < first.white_count()) {
        std::swap(order[0], order[1]);
        std::swap(ids[0], ids[1]);
    }

    bool det_checked = false;
    for (bool negate : {false, true}) {
        for (int k = 0; k < 2; ++k) {
            const Coloring& col = *order[k];
            int deleted = col.white_faces.front();
            IntMatrix reduced = goeritz_matrix(d, faces, col, deleted);
            if (!det_checked) {
                // |det| is the knot determinant, identical for every choice.
                check_odd_det(reduced, "goeritz matrix");
                det_checked = true;
            }
            if (negate) reduced = reduced.negated();
            if (intlat::is_negative_definite(reduced)) {
                GoeritzForm form;
                form.matrix = std::move(reduced);
                form.mirror_flag = negate;
                form.source = GoeritzForm::Source::diagram;
                form.coloring = ids[k];
                form.deleted_region = deleted;
                return form;
            }
        }
    }
    throw Error("validate",
                "no negative-definite checkerboard presentation exists for this diagram; "
                "supply a reduced matrix directly (--goeritz)");
}

GoeritzForm goeritz_from_matrix(const intlat::IntMatrix& m) {
    if (!m.is_square() || !m.is_symmetric())
        throw Error("validate", "goeritz matrix must be symmetric");
    if (!intlat::is_negative_definite(m))
        throw Error("validate", "matrix is not negative definite");
    check_odd_det(m, "user matrix");
    GoeritzForm form;
    form.matrix = m;
    form.mirror_flag = false;
    form.source = GoeritzForm::Source::user_matrix;
    return form;
}

}  // namespace grsobs::diagram
