#pragma once

#include "grsobs/spinc.hpp"

#include <string>
#include <utility>
#include <vector>

namespace grsobs::grs {

using grsobs::Int;
using grsobs::Rational;

// A D_{p^e} index: p = 1 (with e = 0) or a prime dividing det, with
// 0 <= e <= floor((m+1)/2) where p^m exactly divides det.
struct PrimePowerSpec {
    Int p = 1;
    unsigned e = 0;
    unsigned m = 0;
};

// Complete factorization by trial division (determinants here are small).
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

// The labels of the unique order-q subgroup of a cyclic group: the q
// multiples of N/q, ascending. q must divide the order N.
std::vector<Int> subgroup_coset(const intlat::AbelianGroupStructure& group, const Int& q);

// D_{p^e} = sum of d over the order-p^e subgroup coset of the canonical
// structure; exact rational.
Rational D_invariant(const diagram::GoeritzForm& g, const PrimePowerSpec& spec);

enum class Verdict { infinite_order, no_obstruction, not_applicable_noncyclic };

const char* verdict_name(Verdict v);

struct DEntry {
    Int p;
    unsigned e = 0;
    Rational value;
};

struct ObstructionReport {
    std::string name;
    diagram::GoeritzForm form;  // includes the matrix echo and mirror_flag
    Int det;                    // |det|, the knot determinant
    std::vector<std::pair<Int, unsigned>> factorization;
    intlat::AbelianGroupStructure h2;
    dinv::DTable d_table;
    std::vector<DEntry> d_values;  // all D_{p^e} in the theorem's range; empty if non-cyclic
    Verdict verdict = Verdict::no_obstruction;
};

// Full pipeline: determinant, factorization, d-table, every D_{p^e} with
// 0 <= e <= floor((m+1)/2) (D_1 reported once as p = 1), and the verdict:
// infinite_order iff some in-range D is nonzero; not_applicable_noncyclic
// when coker(G) is not cyclic (D values omitted).
ObstructionReport obstruction(const diagram::GoeritzForm& form, std::string name);
ObstructionReport obstruction(const diagram::PlanarDiagram& d, std::string name);
ObstructionReport obstruction(const intlat::IntMatrix& user_matrix, std::string name);

}  // namespace grsobs::grs
