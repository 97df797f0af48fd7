#include "grsobs/report.hpp"

#include "grsobs/error.hpp"
#include "grsobs/pd.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace grsobs::report {

using json = nlohmann::json;
using grs::ObstructionReport;

namespace {

json matrix_to_json(const intlat::IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(static_cast<long long>(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json label_to_json(const ObstructionReport& r, const std::vector<Int>& label) {
    if (r.h2.cyclic)
        return label.empty() ? 0LL : static_cast<long long>(label[0]);
    json coords = json::array();
    for (const Int& c : label) coords.push_back(static_cast<long long>(c));
    return coords;
}

std::string d_subscript(const grs::DEntry& d) {
    return d.p.str() + "^" + std::to_string(d.e);
}

}  // namespace

std::string report_to_json(const ObstructionReport& r) {
    json j;
    j["schema"] = 1;
    j["name"] = r.name;
    j["det"] = static_cast<long long>(r.det);
    json factors = json::array();
    for (const auto& [p, m] : r.factorization)
        factors.push_back(json::array({static_cast<long long>(p), m}));
    j["factors"] = std::move(factors);
    j["h2"] = {{"order", static_cast<long long>(r.h2.order)}, {"cyclic", r.h2.cyclic}};
    j["mirror_flag"] = r.form.mirror_flag;
    j["goeritz"] = matrix_to_json(r.form.matrix);
    j["source"] =
        r.form.source == diagram::GoeritzForm::Source::diagram ? "diagram" : "matrix";
    json spinc = json::array();
    const auto& structures = r.d_table.structures();
    const auto& values = r.d_table.values();
    for (std::size_t i = 0; i < structures.size(); ++i)
        spinc.push_back({{"h", label_to_json(r, structures[i].label)},
                         {"d", rational_to_string(values[i])}});
    j["spinc"] = std::move(spinc);
    json dvals = json::array();
    for (const auto& d : r.d_values)
        dvals.push_back({{"p", static_cast<long long>(d.p)},
                         {"e", d.e},
                         {"value", rational_to_string(d.value)}});
    j["D"] = std::move(dvals);
    j["verdict"] = grs::verdict_name(r.verdict);
    return j.dump();
}

std::string csv_header() { return "name,det,verdict,nonzero_D"; }

std::string report_to_csv_row(const ObstructionReport& r) {
    std::string nonzero;
    for (const auto& d : r.d_values) {
        if (d.value == 0) continue;
        if (!nonzero.empty()) nonzero += ";";
        nonzero += d_subscript(d) + "=" + rational_to_string(d.value);
    }
    return r.name + "," + r.det.str() + "," + grs::verdict_name(r.verdict) + "," + nonzero;
}

std::string report_to_pretty(const ObstructionReport& r) {
    std::ostringstream out;
    out << "knot:        " << r.name << "\n";
    out << "goeritz:     " << r.form.matrix.to_string()
        << (r.form.mirror_flag ? "  (negated input)" : "") << "\n";
    out << "det:         " << r.det.str() << "  = ";
    for (std::size_t i = 0; i < r.factorization.size(); ++i) {
        if (i) out << " * ";
        out << r.factorization[i].first.str();
        if (r.factorization[i].second > 1) out << "^" << r.factorization[i].second;
    }
    if (r.factorization.empty()) out << "1";
    out << "\n";
    out << "H^2:         ";
    if (r.h2.invariant_factors.empty()) {
        out << "trivial";
    } else {
        for (std::size_t i = 0; i < r.h2.invariant_factors.size(); ++i) {
            if (i) out << " + ";
            out << "Z/" << r.h2.invariant_factors[i].str();
        }
    }
    out << (r.h2.cyclic ? "  (cyclic)" : "  (non-cyclic)") << "\n";
    out << "d-invariants:";
    const auto& structures = r.d_table.structures();
    const auto& values = r.d_table.values();
    for (std::size_t i = 0; i < structures.size(); ++i) {
        out << "\n  h=";
        if (structures[i].label.empty()) {
            out << "0";
        } else {
            for (std::size_t k = 0; k < structures[i].label.size(); ++k)
                out << (k ? "," : "") << structures[i].label[k].str();
        }
        out << "  d=" << rational_to_string(values[i])
            << (structures[i].is_canonical ? "  (canonical)" : "");
    }
    out << "\n";
    if (!r.d_values.empty()) {
        out << "D-invariants:";
        for (const auto& d : r.d_values)
            out << "\n  D_" << d_subscript(d) << " = " << rational_to_string(d.value);
        out << "\n";
    }
    out << "verdict:     " << grs::verdict_name(r.verdict) << "\n";
    return out.str();
}

intlat::IntMatrix parse_matrix_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw Error("parse", std::string("bad matrix literal: ") + e.what());
    }
    if (!j.is_array()) throw Error("parse", "matrix literal must be a list of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw Error("parse", "matrix rows must be lists");
        std::vector<Int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw Error("parse", "matrix entries must be integers");
            r.emplace_back(v.get<long long>());
        }
        rows.push_back(std::move(r));
    }
    return intlat::IntMatrix::from_rows(rows);
}

namespace {

grs::DEntry d_entry_from_json(const json& j) {
    grs::DEntry d;
    d.p = Int(j.at("p").get<long long>());
    d.e = j.at("e").get<unsigned>();
    d.value = rational_from_string(j.at("value").get<std::string>());
    return d;
}

}  // namespace

KnotRecord knot_record_from_json(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const std::exception& e) {
        throw Error("parse", std::string("bad record: ") + e.what());
    }
    KnotRecord rec;
    rec.name = j.at("name").get<std::string>();
    if (j.contains("pd")) rec.pd_text = j.at("pd").get<std::string>();
    if (j.contains("goeritz")) rec.goeritz = parse_matrix_text(j.at("goeritz").dump());
    if (rec.pd_text.has_value() == rec.goeritz.has_value())
        throw Error("validate",
                    "record '" + rec.name + "' needs exactly one of \"pd\" or \"goeritz\"");
    if (j.contains("meta")) rec.meta = j.at("meta").get<std::string>();
    if (j.contains("expected")) {
        ExpectedValues e;
        const json& je = j.at("expected");
        if (je.contains("det")) e.det = Int(je.at("det").get<long long>());
        if (je.contains("D"))
            for (const auto& d : je.at("D")) e.nonzero_d.push_back(d_entry_from_json(d));
        rec.expected = std::move(e);
    }
    return rec;
}

grs::ObstructionReport compute_record(const KnotRecord& rec) {
    if (rec.pd_text) return grs::obstruction(diagram::parse_pd(*rec.pd_text), rec.name);
    return grs::obstruction(*rec.goeritz, rec.name);
}

bool expected_matches(const ObstructionReport& r, const ExpectedValues& e, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (e.det && r.det != *e.det)
        return fail("det " + r.det.str() + " != expected " + e.det->str());

    // The computed nonzero set must equal the expected set for one of the
    // two global signs.
    std::vector<grs::DEntry> computed;
    for (const auto& d : r.d_values)
        if (d.value != 0) computed.push_back(d);
    for (int sign : {+1, -1}) {
        if (computed.size() != e.nonzero_d.size()) break;
        bool all = true;
        for (const auto& want : e.nonzero_d) {
            Rational target = sign > 0 ? want.value : Rational(-want.value);
            bool found = std::any_of(computed.begin(), computed.end(),
                                     [&](const grs::DEntry& have) {
                                         return have.p == want.p && have.e == want.e &&
                                                have.value == target;
                                     });
            if (!found) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    std::string have = "{";
    for (const auto& d : computed)
        have += "D_" + d_subscript(d) + "=" + rational_to_string(d.value) + " ";
    std::string want = "{";
    for (const auto& d : e.nonzero_d)
        want += "D_" + d_subscript(d) + "=" + rational_to_string(d.value) + " ";
    return fail("nonzero D " + have + "} != expected (up to sign) " + want + "}");
}

}  // namespace grsobs::report
