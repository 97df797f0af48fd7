#pragma once

#include "grsobs/goeritz.hpp"
#include "grsobs/maximize.hpp"
#include "grsobs/smith.hpp"

#include <vector>

namespace grsobs::dinv {

// An integer vector alpha with alpha_i = G_ii (mod 2): a characteristic
// vector of the form.
struct CharVector {
    IntVector coords;

    bool operator==(const CharVector&) const = default;
};

// A spin^c structure of the branched double cover presented by G: a coset of
// Char(G) mod 2 G Z^r. rep is the normalized coset representative (a
// maximizer of alpha^2); label is the class of (rep - alpha_0)/2 in
// coker(G), in invariant-factor coordinates over the nontrivial factors.
// The canonical structure is the one with label 0 (c_1 = 0).
struct SpinCStructure {
    CharVector rep;
    std::vector<Int> label;
    bool is_canonical = false;
};

// alpha_0 = G x for the unique x in {0,1}^r with G x = diag(G) (mod 2).
// Characteristic by construction, and trivial in coker(G).
CharVector canonical_characteristic(const diagram::GoeritzForm& g);

// All |det G| spin^c structures, ordered by label coordinates ascending.
// Exactly one is canonical.
std::vector<SpinCStructure> spinc_enumerate(const diagram::GoeritzForm& g);

// max over alpha in the structure's coset of alpha^T G^{-1} alpha, exact.
Rational max_char_square(const diagram::GoeritzForm& g, const SpinCStructure& s);

// d = (max_char_square + rank) / 4, in lowest terms.
struct CorrectionTerm {
    Rational d;

    bool operator==(const CorrectionTerm&) const = default;
};

CorrectionTerm correction_term(const diagram::GoeritzForm& g, const SpinCStructure& s);

// The full labeled d-invariant table, ordered by label coordinates.
class DTable {
public:
    DTable(std::vector<SpinCStructure> structures, std::vector<Rational> d,
           intlat::CokernelMap coker);

    std::size_t size() const noexcept { return structures_.size(); }
    const std::vector<SpinCStructure>& structures() const noexcept { return structures_; }
    const std::vector<Rational>& values() const noexcept { return d_; }
    const intlat::CokernelMap& coker() const noexcept { return coker_; }

    const Rational& at_label(const std::vector<Int>& label) const;
    const Rational& canonical_value() const;

private:
    std::vector<SpinCStructure> structures_;
    std::vector<Rational> d_;
    intlat::CokernelMap coker_;
};

DTable all_correction_terms(const diagram::GoeritzForm& g);

}  // namespace grsobs::dinv
