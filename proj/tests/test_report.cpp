#include "grsobs/error.hpp"
#include "grsobs/report.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace grsobs;
using intlat::Int;
using intlat::IntMatrix;
using nlohmann::json;

TEST_CASE("rational serialization") {
    CHECK(rational_to_string(Rational(3)) == "3");
    CHECK(rational_to_string(Rational(-1, 2)) == "-1/2");
    CHECK(rational_to_string(Rational(2, 5)) == "2/5");
    CHECK(rational_to_string(make_rational(Int(4), Int(-6))) == "-2/3");  // sign on top
    CHECK(rational_from_string("-1/2") == Rational(-1, 2));
    CHECK(rational_from_string(" 7 ") == Rational(7));
    CHECK(rational_from_string("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(rational_from_string("1/0"), Error);
    CHECK_THROWS_AS(rational_from_string("abc"), Error);
}

TEST_CASE("matrix literal parsing") {
    CHECK(report::parse_matrix_text("[[-3]]") == IntMatrix::of({{-3}}));
    CHECK(report::parse_matrix_text(" [ [ -2 , 1 ], [ 1, -3 ] ] ") ==
          IntMatrix::of({{-2, 1}, {1, -3}}));
    CHECK_THROWS_AS(report::parse_matrix_text("[[1,2],[3]]"), Error);
    CHECK_THROWS_AS(report::parse_matrix_text("nonsense"), Error);
}

TEST_CASE("json report fields") {
    auto r = grs::obstruction(IntMatrix::of({{-3}}), "trefoil-form");
    json j = json::parse(report::report_to_json(r));
    CHECK(j.at("schema") == 1);
    CHECK(j.at("name") == "trefoil-form");
    CHECK(j.at("det") == 3);
    CHECK(j.at("factors") == json::parse("[[3,1]]"));
    CHECK(j.at("h2").at("order") == 3);
    CHECK(j.at("h2").at("cyclic") == true);
    CHECK(j.at("mirror_flag") == false);
    CHECK(j.at("goeritz") == json::parse("[[-3]]"));
    CHECK(j.at("source") == "matrix");
    CHECK(j.at("verdict") == "infinite_order");
    REQUIRE(j.at("spinc").size() == 3);
    CHECK(j.at("spinc")[0].at("h") == 0);
    CHECK(j.at("spinc")[0].at("d") == "-1/2");
    REQUIRE(j.at("D").size() == 2);
    CHECK(j.at("D")[0].at("p") == 1);
    CHECK(j.at("D")[0].at("e") == 0);
    CHECK(j.at("D")[0].at("value") == "-1/2");
    CHECK(j.at("D")[1].at("p") == 3);
    CHECK(j.at("D")[1].at("value") == "-1/6");
}

TEST_CASE("csv row") {
    auto r = grs::obstruction(IntMatrix::of({{-3}}), "trefoil-form");
    CHECK(report::csv_header() == "name,det,verdict,nonzero_D");
    CHECK(report::report_to_csv_row(r) ==
          "trefoil-form,3,infinite_order,1^0=-1/2;3^1=-1/6");

    auto fig8 = grs::obstruction(IntMatrix::of({{-2, 1}, {1, -3}}), "4_1");
    CHECK(report::report_to_csv_row(fig8) == "4_1,5,no_obstruction,");
}

TEST_CASE("knot records") {
    auto pd_rec = report::knot_record_from_json(
        R"({"name":"3_1","pd":"[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"})");
    CHECK(pd_rec.name == "3_1");
    REQUIRE(pd_rec.pd_text);
    auto rep = report::compute_record(pd_rec);
    CHECK(rep.det == 3);

    auto gz_rec = report::knot_record_from_json(
        R"({"name":"m","goeritz":[[-2,1],[1,-3]],"meta":"external-matrix"})");
    REQUIRE(gz_rec.goeritz);
    CHECK(*gz_rec.meta == "external-matrix");
    CHECK(report::compute_record(gz_rec).det == 5);

    CHECK_THROWS_AS(report::knot_record_from_json(R"({"name":"bad"})"), Error);
    CHECK_THROWS_AS(report::knot_record_from_json(
                        R"({"name":"bad","pd":"[]","goeritz":[[-3]]})"),
                    Error);
    CHECK_THROWS_AS(report::knot_record_from_json("not json"), Error);
}

TEST_CASE("expected-value matching is up to one global sign") {
    auto r = grs::obstruction(IntMatrix::of({{-3}}), "t");
    report::ExpectedValues e;
    e.det = Int(3);
    e.nonzero_d = {{Int(1), 0, Rational(1, 2)}, {Int(3), 1, Rational(1, 6)}};
    std::string why;
    CHECK(report::expected_matches(r, e, &why));  // opposite global sign

    e.nonzero_d = {{Int(1), 0, Rational(-1, 2)}, {Int(3), 1, Rational(-1, 6)}};
    CHECK(report::expected_matches(r, e, &why));  // exact sign

    // inconsistent signs across the knot must fail
    e.nonzero_d = {{Int(1), 0, Rational(1, 2)}, {Int(3), 1, Rational(-1, 6)}};
    CHECK_FALSE(report::expected_matches(r, e, &why));

    // wrong determinant
    e.det = Int(5);
    e.nonzero_d = {{Int(1), 0, Rational(-1, 2)}, {Int(3), 1, Rational(-1, 6)}};
    CHECK_FALSE(report::expected_matches(r, e, &why));
    CHECK(why.find("det") != std::string::npos);

    // an unexpected extra nonzero D must fail
    e.det = Int(3);
    e.nonzero_d = {{Int(1), 0, Rational(-1, 2)}};
    CHECK_FALSE(report::expected_matches(r, e, &why));
}

TEST_CASE("goeritz echo round trip reproduces the report") {
    auto pd = diagram::parse_pd("[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]");
    auto first = grs::obstruction(pd, "4_1");
    json j = json::parse(report::report_to_json(first));
    auto echoed = report::parse_matrix_text(j.at("goeritz").dump());
    auto second = grs::obstruction(echoed, "4_1");
    CHECK(first.d_table.values() == second.d_table.values());
    REQUIRE(first.d_values.size() == second.d_values.size());
    for (std::size_t i = 0; i < first.d_values.size(); ++i)
        CHECK(first.d_values[i].value == second.d_values[i].value);
    CHECK(report::report_to_csv_row(first).substr(4) ==
          report::report_to_csv_row(second).substr(4));
}
