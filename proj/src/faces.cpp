#include "grsobs/faces.hpp"

#include "grsobs/error.hpp"

#include <algorithm>
#include <string>

namespace grsobs::diagram {

namespace {

// For each dart (crossing, slot), the dart at the other end of its edge.
std::vector<int> dart_partners(const PlanarDiagram& d) {
    const std::size_t n = d.size();
    std::vector<std::vector<int>> by_label(2 * n + 1);
    for (std::size_t c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k)
            by_label[d.crossings[c][k]].push_back(static_cast<int>(4 * c) + k);
    std::vector<int> partner(4 * n);
    for (std::size_t label = 1; label <= 2 * n; ++label) {
        partner[by_label[label][0]] = by_label[label][1];
        partner[by_label[label][1]] = by_label[label][0];
    }
    return partner;
}

void check_connected(const PlanarDiagram& d, const std::vector<int>& partner) {
    const std::size_t n = d.size();
    if (n == 0) return;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t c = stack.back();
        stack.pop_back();
        for (int k = 0; k < 4; ++k) {
            std::size_t other = static_cast<std::size_t>(partner[4 * c + k]) / 4;
            if (!seen[other]) {
                seen[other] = true;
                ++reached;
                stack.push_back(other);
            }
        }
    }
    if (reached != n)
        throw Error("validate", "split PD code: diagram is not connected");
}

}  // namespace

FaceComplex build_faces(const PlanarDiagram& d) {
    const std::size_t n = d.size();
    FaceComplex fc;
    fc.crossing_count = n;
    if (n == 0) {
        // The unknot's circle separates the sphere into two faces.
        fc.faces = {{}, {}};
        return fc;
    }

    std::vector<int> partner = dart_partners(d);
    check_connected(d, partner);

    // Successor of corner (c, k): follow dart (c, k+1) to its other end
    // (c', k'); the next corner of the same face is (c', k').
    fc.face_of.assign(4 * n, -1);
    for (std::size_t start = 0; start < 4 * n; ++start) {
        if (fc.face_of[start] != -1) continue;
        int face = static_cast<int>(fc.faces.size());
        std::vector<Corner> cycle;
        std::size_t cur = start;
        while (fc.face_of[cur] == -1) {
            fc.face_of[cur] = face;
            cycle.push_back(Corner{static_cast<int>(cur / 4), static_cast<int>(cur % 4)});
            int c = static_cast<int>(cur / 4), k = static_cast<int>(cur % 4);
            cur = static_cast<std::size_t>(partner[4 * c + (k + 1) % 4]);
        }
        fc.faces.push_back(std::move(cycle));
    }

    if (fc.faces.size() != n + 2)
        throw Error("validate", "PD code is not planar: " + std::to_string(fc.faces.size()) +
                                    " faces for " + std::to_string(n) + " crossings");
    return fc;
}

std::pair<Coloring, Coloring> checkerboard(const FaceComplex& f) {
    const std::size_t n = f.crossing_count;
    const std::size_t nfaces = f.faces.size();

    // 2-color the face adjacency graph. The faces on the two sides of the
    // edge leaving dart (c, k) are the corners (c, k) and (c, k-1).
    std::vector<int> color(nfaces, -1);
    color[0] = 0;
    std::vector<std::size_t> queue{0};
    std::vector<std::vector<int>> adjacent(nfaces);
    for (std::size_t c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) {
            int a = f.face_at(static_cast<int>(c), k);
            int b = f.face_at(static_cast<int>(c), (k + 3) % 4);
            adjacent[a].push_back(b);
            adjacent[b].push_back(a);
        }
    if (n == 0) color[1] = 1;  // inside/outside of the unknot circle
    while (!queue.empty()) {
        std::size_t face = queue.back();
        queue.pop_back();
        for (int other : adjacent[face]) {
            if (color[other] == -1) {
                color[other] = 1 - color[face];
                queue.push_back(static_cast<std::size_t>(other));
            } else if (color[other] == color[face]) {
                throw Error("validate", "face graph is not 2-colorable");
            }
        }
    }
    for (int c : color)
        if (c == -1) throw Error("validate", "face graph is not connected");

    auto make = [&](int white_color) {
        Coloring col;
        col.face_is_white.resize(nfaces);
        for (std::size_t i = 0; i < nfaces; ++i) {
            col.face_is_white[i] = (color[i] == white_color);
            if (col.face_is_white[i]) col.white_faces.push_back(static_cast<int>(i));
        }
        col.eta.resize(n);
        col.white_at.resize(n);
        for (std::size_t c = 0; c < n; ++c) {
            int f0 = f.face_at(static_cast<int>(c), 0);
            int f1 = f.face_at(static_cast<int>(c), 1);
            int f2 = f.face_at(static_cast<int>(c), 2);
            int f3 = f.face_at(static_cast<int>(c), 3);
            if (col.face_is_white[f0]) {
                col.eta[c] = -1;
                col.white_at[c] = {f0, f2};
            } else {
                col.eta[c] = +1;
                col.white_at[c] = {f1, f3};
            }
        }
        return col;
    };

    // Opposite corners share a color by construction of the 2-coloring;
    // face 0 is white in the first coloring returned.
    return {make(0), make(1)};
}

}  // namespace grsobs::diagram
