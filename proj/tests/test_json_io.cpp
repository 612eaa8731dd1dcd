#include "mdet/errors.hpp"
#include "mdet/json_io.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace mdet;
using mdet::testing::banana;

TEST_CASE("matrix json round trip") {
    QMat a = banana();
    CHECK(matrix_from_json(matrix_to_json(a)) == a);
    QMat q(2, 2);
    q.at(0, 0) = Rat(1) / 3;
    q.at(1, 1) = Rat(-7) / 5;
    CHECK(matrix_from_json(matrix_to_json(q)) == q);
}

TEST_CASE("matrix csv parsing") {
    QMat m = matrix_from_csv("1/2, -3, 0\n4, 5/7, 1\n");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.at(0, 0) == Rat(1) / 2);
    CHECK(m.at(1, 1) == Rat(5) / 7);
    // Sniffing picks the right parser.
    CHECK(matrix_from_text("  {\"rows\":1,\"cols\":1,\"entries\":[[\"2\"]]}").at(0, 0) == 2);
    CHECK(matrix_from_text("2").at(0, 0) == 2);
}

TEST_CASE("matrix parsing rejects inexact entries") {
    CHECK_THROWS_AS(matrix_from_csv("1.5, 2\n"), ParseError);
    CHECK_THROWS_AS(matrix_from_json("{\"rows\":1,\"cols\":1,\"entries\":[[1.5]]}"),
                    ParseError);
}

TEST_CASE("multiplicities") {
    MultiplicityMap m = multiplicities_from_file(
        mdet::testing::fixture_path("banana_mult.json"));
    REQUIRE(m.size() == 5);
    CHECK(m[0].second == 8);
    CHECK(m[4].first == subset_from_list({0, 1, 2, 3}));
}

TEST_CASE("reports are deterministic") {
    Matroid b(banana());
    FactorizationDescriptor d = factorization_descriptor(b, std::nullopt, 8, 3);
    CHECK(descriptor_to_json(d) == descriptor_to_json(factorization_descriptor(b, std::nullopt, 8, 3)));
    std::string analysis = analysis_to_json(b, d);
    CHECK(analysis.find("\"mu\": \"3\"") != std::string::npos);
    CHECK(analysis.find("\"E_L\": \"36\"") != std::string::npos);
}

TEST_CASE("fan and polytope serialization") {
    WeightedFan fan = uniform_bergman_cones(3, 2);
    std::string fj = fan_to_json(fan);
    CHECK(fj.find("\"dimension\": 2") != std::string::npos);
    LatticePolytope p;
    p.n = 1;
    p.vertices = {{Int(1), Int(0)}, {Int(0), Int(1)}};
    std::string pj = polytope_to_json(p, Int(1));
    CHECK(pj.find("\"degree\": \"1\"") != std::string::npos);
}
