#pragma once

#include "grsobs/intmatrix.hpp"

#include <vector>

namespace grsobs::intlat {

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r,
// all diagonal entries nonnegative. Deterministic for a fixed input
// (smallest-absolute-value pivoting).
struct SmithDecomposition {
    IntMatrix u;  // rows x rows
    IntMatrix d;  // rows x cols
    IntMatrix v;  // cols x cols
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// coker(M) = Z^r / M Z^r for square nonsingular M, as a product of cyclic
// groups of the invariant factors > 1.
struct AbelianGroupStructure {
    std::vector<Int> invariant_factors;  // the d_i > 1, in divisibility order
    Int order;                           // product of all d_i == |det M|
    bool cyclic;                         // at most one nontrivial factor
};

// The group together with the coordinate map x -> class of x, expressed in
// the invariant-factor basis (one coordinate per nontrivial factor, each
// reduced into [0, d_i)).
class CokernelMap {
public:
    CokernelMap(AbelianGroupStructure group, IntMatrix u, std::vector<Int> diag);

    const AbelianGroupStructure& group() const noexcept { return group_; }
    const IntMatrix& u() const noexcept { return u_; }
    const std::vector<Int>& full_diagonal() const noexcept { return diag_; }

    // Class of an integer vector, as coordinates over the nontrivial factors.
    std::vector<Int> label(const IntVector& x) const;

    // Lift of a label tuple back to Z^r (a representative of the class).
    IntVector lift(const std::vector<Int>& label) const;

private:
    AbelianGroupStructure group_;
    IntMatrix u_;
    IntMatrix u_inverse_;
    std::vector<Int> diag_;
    std::vector<std::size_t> nontrivial_;  // positions with d_i > 1
};

CokernelMap cokernel(const IntMatrix& m);

// Solve M x = b over GF(2); x has 0/1 entries. Throws when M is singular
// mod 2 (never the case for a matrix of odd determinant).
std::vector<int> solve_mod2(const IntMatrix& m, const IntVector& b);

}  // namespace grsobs::intlat
