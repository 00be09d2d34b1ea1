#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "bargmann/serialization.hpp"
#include "bargmann/verification.hpp"

using namespace bargmann;

TEST_CASE("round trip per basis") {
    const double nu = 0.75;

    {
        const HermiteCoeffs f = random_hermite(nu, 7, 602);
        const auto back = parse_coefficient_document(to_json_string(CoefficientDocument(f)));
        const auto& g = std::get<HermiteCoeffs>(back);
        REQUIRE(g.c.size() == f.c.size());
        CHECK(g.nu == f.nu);
        for (std::size_t m = 0; m < f.c.size(); ++m) CHECK(g.c[m] == f.c[m]);
    }
    {
        const SliceRegularSeries f = random_slice_series(nu, 6, 603);
        const auto back = parse_coefficient_document(to_json_string(CoefficientDocument(f)));
        const auto& g = std::get<SliceRegularSeries>(back);
        REQUIRE(g.c.size() == f.c.size());
        for (std::size_t m = 0; m < f.c.size(); ++m) CHECK(g.c[m] == f.c[m]);
    }
    {
        const FockCoeffs2 f = random_fock2(nu, 3, 5, 604);
        const auto back = parse_coefficient_document(to_json_string(CoefficientDocument(f)));
        const auto& g = std::get<FockCoeffs2>(back);
        REQUIRE(g.rows == f.rows);
        REQUIRE(g.cols == f.cols);
        for (std::size_t i = 0; i < f.a.size(); ++i) CHECK(g.a[i] == f.a[i]);
    }
    {
        const ASubspaceCoeffs f = random_a2(nu, 5, 605);
        const auto back = parse_coefficient_document(to_json_string(CoefficientDocument(f)));
        CHECK(basis_name(back) == "a2");
        const auto& g = std::get<ASubspaceCoeffs>(back);
        for (std::size_t m = 0; m < f.b.size(); ++m) CHECK(g.b[m] == f.b[m]);
    }
    {
        const HermiteCoeffsQ f = random_hermite_q(nu, 4, 606);
        const auto back = parse_coefficient_document(to_json_string(CoefficientDocument(f)));
        CHECK(basis_name(back) == "hermite");
        const auto& g = std::get<HermiteCoeffsQ>(back);
        for (std::size_t m = 0; m < f.c.size(); ++m) CHECK(g.c[m] == f.c[m]);
    }
}

TEST_CASE("full-precision decimals survive the round trip") {
    HermiteCoeffs f;
    f.nu = 1.0 / 3.0;
    f.c = {Complex(0.12345678901234567, -9.876543210987654e-5),
           Complex(1.0 + 2.220446049250313e-16, 3.141592653589793)};
    const auto back = parse_coefficient_document(to_json_string(CoefficientDocument(f)));
    const auto& g = std::get<HermiteCoeffs>(back);
    CHECK(g.nu == f.nu);
    CHECK(g.c[0] == f.c[0]);
    CHECK(g.c[1] == f.c[1]);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(parse_coefficient_document("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_coefficient_document("{\"nu\": 1.0}"), std::invalid_argument);
    CHECK_THROWS_AS(
        parse_coefficient_document("{\"nu\": 1.0, \"basis\": \"sphere\", \"coeffs\": []}"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        parse_coefficient_document("{\"nu\": -1.0, \"basis\": \"fock1\", \"coeffs\": []}"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        parse_coefficient_document(
            "{\"nu\": 1.0, \"basis\": \"fock1\", \"coeffs\": [[1.0]]}"),
        std::invalid_argument);
}

TEST_CASE("suite reports serialize with the contract fields") {
    TransformReport rep;
    rep.identity = "demo";
    rep.residual = 1.5e-11;
    rep.tolerance = 1e-8;
    rep.pass = true;
    rep.quad_nodes = 96;
    rep.truncation = 16;
    rep.constants["kappa"] = 0.5;

    const auto j = nlohmann::json::parse(to_json_string(rep));
    CHECK(j.at("identity") == "demo");
    CHECK(j.at("residual").get<double>() == 1.5e-11);
    CHECK(j.at("tolerance").get<double>() == 1e-8);
    CHECK(j.at("pass").get<bool>());
    CHECK(j.at("constants").at("kappa").get<double>() == 0.5);
}

TEST_CASE("run configuration JSON mirror") {
    RunConfig base;
    base.nu = 2.0;
    base.truncation = 16;
    const std::string text = run_config_to_json(base);
    const RunConfig parsed = run_config_from_json(text);
    CHECK(parsed.nu == base.nu);
    CHECK(parsed.truncation == base.truncation);
    CHECK(parsed.quad_nodes == base.quad_nodes);
    CHECK(parsed.seed == base.seed);

    // absent fields keep the provided defaults
    RunConfig defaults;
    defaults.quad_nodes = 48;
    const RunConfig partial = run_config_from_json("{\"nu\": 0.5}", defaults);
    CHECK(partial.nu == 0.5);
    CHECK(partial.quad_nodes == 48);
}
