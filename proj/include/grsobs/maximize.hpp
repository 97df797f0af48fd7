#pragma once

#include "grsobs/intmatrix.hpp"

#include <vector>

namespace grsobs::dinv {

using grsobs::Int;
using grsobs::Rational;
using intlat::IntMatrix;
using intlat::IntVector;

// Result of maximizing alpha^2 = alpha^T G^{-1} alpha over the coset
// rep + 2 G Z^r. The maximizer is the optimum with lexicographically
// smallest absolute coordinates (ties broken toward positive entries), so
// results are reproducible across search strategies.
struct MaximizeResult {
    Rational max_square;
    IntVector maximizer;
};

// Exact maximization of alpha^2 over characteristic cosets of a fixed
// negative-definite form. Factorization data (adjugate, determinant, and a
// rational LDL^T of -G) is computed once and shared across cosets.
class CosetMaximizer {
public:
    explicit CosetMaximizer(IntMatrix g);

    const IntMatrix& form() const noexcept { return g_; }
    const Int& det() const noexcept { return det_g_; }
    std::size_t rank() const noexcept { return g_.rows(); }

    Rational square(const IntVector& alpha) const;  // alpha^T G^{-1} alpha

    // Sphere decoding in Schnorr-Euchner order; every accept/reject
    // comparison is exact rational arithmetic.
    MaximizeResult sphere(const IntVector& rep) const;

    // Exhaustive scan of v in {-box..box}^r, evaluating alpha^2 directly.
    // Complete only when the optimum lies inside the box; this is the
    // independent oracle.
    MaximizeResult box(const IntVector& rep, long box) const;

    // Exhaustive scan over a box certified to contain every optimal v
    // (ellipsoid axis bounds from an incumbent value). Used for ranks <= 2.
    MaximizeResult certified_box(const IntVector& rep) const;

    // Dispatch: rank 0 yields {0, ()}; ranks 1-2 the certified box; higher
    // ranks sphere decoding.
    MaximizeResult maximize(const IntVector& rep) const;

private:
    IntMatrix g_;        // negative definite
    IntMatrix adj_g_;    // adjugate of g
    Int det_g_;          // (-1)^r * |det|
    IntMatrix a_;        // -g, positive definite
    std::vector<Rational> ldl_diag_;            // D of A = L D L^T
    std::vector<std::vector<Rational>> ldl_l_;  // unit lower triangular L

    std::vector<Rational> continuous_center(const IntVector& rep) const;  // v* with A v* = rep/2
    Rational coset_distance(const std::vector<Rational>& center, const IntVector& v) const;
    MaximizeResult pick_result(const IntVector& rep, const std::vector<IntVector>& arg_v) const;
};

MaximizeResult max_square_sphere(const IntMatrix& g, const IntVector& rep);
MaximizeResult max_square_box(const IntMatrix& g, const IntVector& rep, long box);
MaximizeResult max_square_certified_box(const IntMatrix& g, const IntVector& rep);
MaximizeResult max_square(const IntMatrix& g, const IntVector& rep);

}  // namespace grsobs::dinv
