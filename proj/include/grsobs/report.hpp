#pragma once

#include "grsobs/obstruction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grsobs::report {

using grsobs::Int;
using grsobs::Rational;

// Stable JSON report, schema version 1:
// {"schema":1, "name":..., "det":N, "factors":[[p,m],...],
//  "h2":{"order":N,"cyclic":bool}, "mirror_flag":bool, "goeritz":[[..]..],
//  "source":"diagram"|"matrix", "spinc":[{"h":..,"d":"a/b"},...],
//  "D":[{"p":..,"e":..,"value":"a/b"},...], "verdict":"..."}
// Rationals are lowest-terms strings; h is an integer for cyclic H^2 and an
// array of invariant-factor coordinates otherwise. Key order is sorted, so
// serialization is byte-stable.
std::string report_to_json(const grs::ObstructionReport& r);

std::string csv_header();
std::string report_to_csv_row(const grs::ObstructionReport& r);

std::string report_to_pretty(const grs::ObstructionReport& r);

// Expected values carried by verification fixtures: the determinant and the
// complete set of nonzero D invariants (matched up to one global sign for
// the whole knot).
struct ExpectedValues {
    std::optional<Int> det;
    std::vector<grs::DEntry> nonzero_d;
};

// One JSON-lines batch record: a name plus exactly one of "pd" (PD notation
// string) or "goeritz" (matrix rows), with optional "expected" and free-form
// "meta".
struct KnotRecord {
    std::string name;
    std::optional<std::string> pd_text;
    std::optional<intlat::IntMatrix> goeritz;
    std::optional<ExpectedValues> expected;
    std::optional<std::string> meta;
};

KnotRecord knot_record_from_json(const std::string& line);

// Run the full obstruction pipeline on a record.
grs::ObstructionReport compute_record(const KnotRecord& rec);

// Compare a computed report against expected values, up to one global sign
// per knot. On mismatch returns false and fills `why`.
bool expected_matches(const grs::ObstructionReport& r, const ExpectedValues& e,
                      std::string* why);

// Parse "[[-2,1],[1,-3]]" into a matrix (CLI --goeritz input and fixture rows).
intlat::IntMatrix parse_matrix_text(const std::string& text);

}  // namespace grsobs::report
