#include "grsobs/obstruction.hpp"

#include "grsobs/error.hpp"

#include <algorithm>

namespace grsobs::grs {

using diagram::GoeritzForm;

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    if (n < 1) throw Error("validate", "factorize requires a positive integer");
    std::vector<std::pair<Int, unsigned>> factors;
    Int rest = n;
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        unsigned m = 0;
        while (rest % p == 0) {
            rest /= p;
            ++m;
        }
        factors.emplace_back(p, m);
    }
    if (rest > 1) factors.emplace_back(rest, 1);
    return factors;
}

std::vector<Int> subgroup_coset(const intlat::AbelianGroupStructure& group, const Int& q) {
    if (!group.cyclic)
        throw Error("validate", "subgroup_coset requires a cyclic group");
    const Int n = group.order;
    if (q < 1 || n % q != 0)
        throw Error("validate", "subgroup order " + q.str() + " does not divide " + n.str());
    std::vector<Int> labels;
    Int stride = n / q;
    for (Int k = 0; k < q; ++k) labels.push_back(k * stride);
    return labels;
}

namespace {

Rational sum_over_subgroup(const dinv::DTable& table,
                           const intlat::AbelianGroupStructure& h2, const Int& q) {
    Rational sum = 0;
    for (const Int& h : subgroup_coset(h2, q)) {
        std::vector<Int> label;
        if (h2.order > 1) label.push_back(h);
        sum += table.at_label(label);
    }
    return sum;
}

}  // namespace

Rational D_invariant(const GoeritzForm& g, const PrimePowerSpec& spec) {
    dinv::DTable table = dinv::all_correction_terms(g);
    const auto& h2 = table.coker().group();
    if (!h2.cyclic)
        throw Error("validate", "D invariants are defined here only for cyclic H^2");
    Int q = 1;
    for (unsigned i = 0; i < spec.e; ++i) q *= spec.p;
    return sum_over_subgroup(table, h2, q);
}

ObstructionReport obstruction(const GoeritzForm& form, std::string name) {
    Int det = intlat::determinant(form.matrix);
    if (det < 0) det = -det;

    dinv::DTable table = dinv::all_correction_terms(form);
    intlat::AbelianGroupStructure h2 = table.coker().group();

    ObstructionReport report{std::move(name), form,          det, factorize(det), h2,
                             std::move(table), {},           Verdict::no_obstruction};

    if (!h2.cyclic) {
        report.verdict = Verdict::not_applicable_noncyclic;
        return report;
    }

    // D_1 = d(s_0), the e = 0 invariant for every prime, reported once.
    report.d_values.push_back(DEntry{Int(1), 0, report.d_table.canonical_value()});
    for (const auto& [p, m] : report.factorization) {
        Int q = 1;
        for (unsigned e = 1; e <= (m + 1) / 2; ++e) {
            q *= p;
            report.d_values.push_back(
                DEntry{p, e, sum_over_subgroup(report.d_table, h2, q)});
        }
    }
    bool nonzero = std::any_of(report.d_values.begin(), report.d_values.end(),
                               [](const DEntry& d) { return d.value != 0; });
    report.verdict = nonzero ? Verdict::infinite_order : Verdict::no_obstruction;
    return report;
}

ObstructionReport obstruction(const diagram::PlanarDiagram& d, std::string name) {
    return obstruction(diagram::definite_goeritz(d), std::move(name));
}

ObstructionReport obstruction(const intlat::IntMatrix& user_matrix, std::string name) {
    return obstruction(diagram::goeritz_from_matrix(user_matrix), std::move(name));
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::infinite_order: return "infinite_order";
        case Verdict::no_obstruction: return "no_obstruction";
        case Verdict::not_applicable_noncyclic: return "not_applicable_noncyclic";
    }
    return "unknown";
}

}  // namespace grsobs::grs
