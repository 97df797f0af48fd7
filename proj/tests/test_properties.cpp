#include "property_checks.hpp"
#include "testutil.hpp"

#include <doctest.h>

#include <random>

using namespace grsobs;
using diagram::GoeritzForm;
using intlat::IntMatrix;

namespace {

GoeritzForm random_form(std::mt19937& rng, std::size_t max_rank) {
    std::size_t n = 1 + rng() % max_rank;
    return diagram::goeritz_from_matrix(testutil::random_knot_form(rng, n));
}

}  // namespace

TEST_CASE("conjugation symmetry d(h) = d(-h)") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 15; ++trial)
        CHECK(propcheck::check_conjugation_symmetry(random_form(rng, 3)) == "");
}

TEST_CASE("label bijectivity") {
    std::mt19937 rng(102);
    for (int trial = 0; trial < 15; ++trial)
        CHECK(propcheck::check_label_bijectivity(random_form(rng, 3)) == "");
}

TEST_CASE("denominator bound 4 |det| d is integral") {
    std::mt19937 rng(103);
    for (int trial = 0; trial < 15; ++trial)
        CHECK(propcheck::check_denominator_bound(random_form(rng, 3)) == "");
}

TEST_CASE("congruence invariance of the d multiset") {
    std::mt19937 rng(104);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 2 + trial % 3;
        GoeritzForm g = diagram::goeritz_from_matrix(testutil::random_knot_form(rng, n));
        IntMatrix u = testutil::random_unimodular(rng, n);
        CHECK(propcheck::check_congruence_invariance(g, u) == "");
    }
}

TEST_CASE("block additivity") {
    std::mt19937 rng(105);
    for (int trial = 0; trial < 6; ++trial) {
        GoeritzForm a = random_form(rng, 2);
        GoeritzForm b = random_form(rng, 2);
        CHECK(propcheck::check_block_additivity(a, b) == "");
    }
}

TEST_CASE("maximizer strategies agree (small oracle run)") {
    std::mt19937 rng(106);
    int done = 0;
    while (done < 10) {
        GoeritzForm g = random_form(rng, 3);
        Int det = intlat::determinant(g.matrix);
        if (abs(det) > 35) continue;  // keep the box scans quick here
        CHECK(propcheck::check_oracle_equivalence(g, 8) == "");
        ++done;
    }
}

TEST_CASE("snf round trip on random matrices") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 3) % 4;
        CHECK(propcheck::check_snf_roundtrip(testutil::random_matrix(rng, rows, cols)) == "");
    }
}

TEST_CASE("both colorings of the basic diagrams agree on |det|") {
    for (const char* code :
         {"[[1,4,2,5],[3,6,4,1],[5,2,6,3]]", "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]"})
        CHECK(propcheck::check_coloring_det_agreement(diagram::parse_pd(code)) == "");
}
