#include "grsobs/spinc.hpp"

#include "grsobs/error.hpp"

#include <algorithm>

namespace grsobs::dinv {

using diagram::GoeritzForm;
using intlat::CokernelMap;

CharVector canonical_characteristic(const GoeritzForm& g) {
    const auto& m = g.matrix;
    const std::size_t r = m.rows();
    if (r == 0) return CharVector{{}};
    std::vector<int> x = intlat::solve_mod2(m, m.diagonal());
    IntVector lift(r);
    for (std::size_t i = 0; i < r; ++i) lift[i] = x[i];
    return CharVector{m * lift};
}

namespace {

struct Enumeration {
    CharVector alpha0;
    CokernelMap coker;
    std::vector<std::vector<Int>> labels;  // ascending lexicographic
    std::vector<IntVector> reps;           // raw representative per label
};

// Walk all label tuples over the nontrivial invariant factors in ascending
// lexicographic order, producing the representative alpha_0 + 2 lift(t).
Enumeration enumerate_cosets(const GoeritzForm& g) {
    Enumeration e{canonical_characteristic(g), intlat::cokernel(g.matrix), {}, {}};
    const auto& factors = e.coker.group().invariant_factors;
    std::vector<Int> t(factors.size(), Int(0));
    const std::size_t r = g.rank();
    while (true) {
        IntVector w = e.coker.lift(t);
        IntVector rep = e.alpha0.coords;
        for (std::size_t i = 0; i < r; ++i) rep[i] += 2 * w[i];
        e.labels.push_back(t);
        e.reps.push_back(std::move(rep));
        // next tuple, most significant coordinate first
        std::size_t k = factors.size();
        while (k > 0) {
            --k;
            if (++t[k] < factors[k]) break;
            t[k] = 0;
            if (k == 0) return e;
        }
        if (factors.empty()) return e;
    }
}

}  // namespace

std::vector<SpinCStructure> spinc_enumerate(const GoeritzForm& g) {
    return all_correction_terms(g).structures();
}

Rational max_char_square(const GoeritzForm& g, const SpinCStructure& s) {
    return max_square(g.matrix, s.rep.coords).max_square;
}

CorrectionTerm correction_term(const GoeritzForm& g, const SpinCStructure& s) {
    Rational d = (max_char_square(g, s) + Rational(static_cast<long>(g.rank()))) / 4;
    return CorrectionTerm{d};
}

DTable::DTable(std::vector<SpinCStructure> structures, std::vector<Rational> d,
               CokernelMap coker)
    : structures_(std::move(structures)), d_(std::move(d)), coker_(std::move(coker)) {}

const Rational& DTable::at_label(const std::vector<Int>& label) const {
    // Labels are in ascending lexicographic order.
    auto it = std::lower_bound(structures_.begin(), structures_.end(), label,
                               [](const SpinCStructure& s, const std::vector<Int>& l) {
                                   return std::lexicographical_compare(
                                       s.label.begin(), s.label.end(), l.begin(), l.end());
                               });
    if (it == structures_.end() || it->label != label)
        throw Error("compute", "label not present in the d-table");
    return d_[static_cast<std::size_t>(it - structures_.begin())];
}

const Rational& DTable::canonical_value() const {
    for (std::size_t i = 0; i < structures_.size(); ++i)
        if (structures_[i].is_canonical) return d_[i];
    throw Error("compute", "d-table has no canonical structure");
}

DTable all_correction_terms(const GoeritzForm& g) {
    Enumeration e = enumerate_cosets(g);
    CosetMaximizer maximizer(g.matrix);
    const Rational rank_term(static_cast<long>(g.rank()));

    std::vector<SpinCStructure> structures;
    std::vector<Rational> d;
    structures.reserve(e.reps.size());
    d.reserve(e.reps.size());
    for (std::size_t i = 0; i < e.reps.size(); ++i) {
        MaximizeResult res = maximizer.maximize(e.reps[i]);
        SpinCStructure s;
        s.rep = CharVector{std::move(res.maximizer)};
        s.label = e.labels[i];
        s.is_canonical =
            std::all_of(s.label.begin(), s.label.end(), [](const Int& x) { return x == 0; });
        structures.push_back(std::move(s));
        d.push_back((res.max_square + rank_term) / 4);
    }
    return DTable(std::move(structures), std::move(d), std::move(e.coker));
}

}  // namespace grsobs::dinv
