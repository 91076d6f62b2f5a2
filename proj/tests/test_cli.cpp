#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tropcone/cli.hpp"
#include "tropcone/io.hpp"
#include "oracles.hpp"

using namespace tropcone;
using io::json;
using oracles::cyclic_cone;
using oracles::qvec;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string cyclic4_json() {
    return io::cone_to_json(cyclic_cone(4)).dump();
}

} // namespace

TEST_CASE("member subcommand reports the projection") {
    json input;
    input["cone"] = io::cone_to_json(cyclic_cone(4));
    input["point"] = io::point_to_json(qvec({0, 0, 0, 0}));
    CliResult res = run_cli({"member"}, input.dump());
    REQUIRE(res.code == 0);
    json doc = json::parse(res.out);
    CHECK(doc["member"] == false);
    CHECK(doc["projection"] == json({"-3", "-2", "-1", "0"}));

    input["point"] = io::point_to_json(cyclic_cone(4).generator(1));
    res = run_cli({"member"}, input.dump());
    doc = json::parse(res.out);
    CHECK(doc["member"] == true);
    CHECK(doc.contains("witness"));
}

TEST_CASE("padovan and sperner values") {
    CliResult res = run_cli({"padovan", "--n", "7"});
    REQUIRE(res.code == 0);
    CHECK(json::parse(res.out)["value"] == 4);
    res = run_cli({"sperner", "--n", "4"});
    REQUIRE(res.code == 0);
    CHECK(json::parse(res.out)["value"] == 6);
}

TEST_CASE("minimal-check on the worked half-space") {
    json input;
    input["cone"] = io::cone_to_json(cyclic_cone(4));
    json hs;
    hs["kind"] = "halfspaces";
    hs["dim"] = 4;
    hs["halfspaces"] = json::array();
    hs["halfspaces"].push_back(
        {{"lhs", {{"2", "6"}, {"4", "-1/2"}}}, {"rhs", {{"1", "8"}, {"3", "7/2"}}}});
    input["halfspaces"] = hs;
    CliResult res = run_cli({"minimal-check"}, input.dump());
    REQUIRE(res.code == 0);
    json doc = json::parse(res.out);
    CHECK(doc["minimal"] == true);
    CHECK(doc["certificate"]["covering"] == true);
    CHECK(doc["certificate"]["lhs_witnesses"].size() == 2);
}

TEST_CASE("round trip: hrep2vrep after vrep2hrep returns the same cone") {
    CliResult hrep = run_cli({"vrep2hrep"}, cyclic4_json());
    REQUIRE(hrep.code == 0);
    CliResult vrep = run_cli({"hrep2vrep"}, hrep.out);
    REQUIRE(vrep.code == 0);
    Cone back = io::cone_from_json(json::parse(vrep.out));
    CHECK(cone_equal_projective(back, cyclic_cone(4)));
}

TEST_CASE("deterministic output") {
    CliResult first = run_cli({"vrep2hrep"}, cyclic4_json());
    CliResult second = run_cli({"vrep2hrep"}, cyclic4_json());
    CHECK(first.out == second.out);
    CliResult verts1 = run_cli({"vertices", "--emit-plot-data"}, cyclic4_json());
    CliResult verts2 = run_cli({"vertices", "--emit-plot-data"}, cyclic4_json());
    CHECK(verts1.out == verts2.out);
    CHECK(json::parse(verts1.out).contains("plot"));
}

TEST_CASE("separate subcommand") {
    json input;
    input["cone"] = io::cone_to_json(cyclic_cone(4));
    input["point"] = io::point_to_json(qvec({0, 0, 0, 0}));
    CliResult res = run_cli({"separate"}, input.dump());
    REQUIRE(res.code == 0);
    json doc = json::parse(res.out);
    CHECK(doc["member"] == false);
    CHECK(doc["apex"] == json({"-3", "-2", "-1", "0"}));
    CHECK(doc["halfspace"]["rhs"] == json({{"4", "0"}}));
}

TEST_CASE("minimal-at-apex reports coverings and verdicts") {
    json input;
    input["cone"] = io::cone_to_json(cyclic_cone(4));
    input["point"] = io::point_to_json(qvec({1, 3, 6, 10}));
    CliResult res = run_cli({"minimal-at-apex", "--pretty"}, input.dump());
    REQUIRE(res.code == 0);
    json doc = json::parse(res.out);
    CHECK(doc["apex_in_cone"] == true);
    REQUIRE(doc["coverings"].size() == 2);
    CHECK(doc["coverings"][0] == json({1, 2, 4}));
    CHECK(doc["coverings"][1] == json({1, 3}));
    CHECK(doc["halfspaces"].size() == 2);
    CHECK(doc["minimal"].size() == 2);
}

TEST_CASE("polar subcommands") {
    CliResult ext = run_cli({"polar-extremes"}, cyclic4_json());
    REQUIRE(ext.code == 0);
    json polar_doc = json::parse(ext.out);
    CHECK(polar_doc["kind"] == "polar");
    CHECK(!polar_doc["vectors"].empty());

    json input;
    input["cone"] = io::cone_to_json(cyclic_cone(4));
    json w;
    w["kind"] = "polar";
    w["dim"] = 4;
    w["vectors"] = json::array();
    w["vectors"].push_back({{"lhs", {"-inf", "0", "-inf", "-inf"}},
                            {"rhs", {"2", "-inf", "-3", "-inf"}}});
    input["polar"] = w;
    CliResult chk = run_cli({"polar-check"}, input.dump());
    REQUIRE(chk.code == 0);
    json doc = json::parse(chk.out);
    CHECK(doc["member"] == true);
    CHECK(doc["extreme"] == true);
    // generator indices refer to the canonical (sorted) order of the input
    // document, where the original second and third generators sit at 3 and 2
    CHECK(doc["witnesses"] == json({{"1", 3}, {"3", 2}}));
    CHECK(doc["support_vectors"] == json({2, 3}));

    // an inequality that fails on the cone is reported, not an error
    w["vectors"][0]["rhs"] = {"-10", "-inf", "-inf", "-inf"};
    input["polar"] = w;
    chk = run_cli({"polar-check"}, input.dump());
    REQUIRE(chk.code == 0);
    doc = json::parse(chk.out);
    CHECK(doc["member"] == false);
    CHECK(doc["extreme"] == false);
}

TEST_CASE("type subcommand") {
    json input;
    input["cone"] = io::cone_to_json(cyclic_cone(4));
    input["point"] = io::point_to_json(qvec({1, 3, 6, 10}));
    CliResult res = run_cli({"type"}, input.dump());
    REQUIRE(res.code == 0);
    json doc = json::parse(res.out);
    CHECK(doc["cell_dimension"] == 1);
    CHECK(doc["vertex"] == true);
    // generator indices follow the canonical (sorted) order of the document
    CHECK(doc["sets"].size() == 4);
    for (const auto& set : doc["sets"]) CHECK(!set.empty());
}

TEST_CASE("face subcommand") {
    json input;
    input["cone"] = io::cone_to_json(cyclic_cone(4));
    json hs;
    hs["kind"] = "halfspaces";
    hs["dim"] = 4;
    hs["halfspaces"] = json::array();
    hs["halfspaces"].push_back(
        {{"lhs", {{"2", "6"}, {"4", "-1/2"}}}, {"rhs", {{"1", "8"}, {"3", "7/2"}}}});
    input["halfspaces"] = hs;
    CliResult res = run_cli({"face"}, input.dump());
    REQUIRE(res.code == 0);
    json doc = json::parse(res.out);
    CHECK(doc["kind"] == "cone");
    CHECK(!doc["generators"].empty());
}

TEST_CASE("decompose and recession subcommands") {
    json poly;
    poly["kind"] = "polyhedron";
    poly["dim"] = 2;
    poly["points"] = json::array({json::array({"0", "0"}), json::array({"-1/2", "-1/2"})});
    poly["rays"] = json::array({json::array({"3", "-inf"})});
    // the midpoint-like second point is redundant against the ray-shifted hull
    CliResult dec = run_cli({"decompose"}, poly.dump());
    REQUIRE(dec.code == 0);
    json doc = json::parse(dec.out);
    CHECK(doc["kind"] == "polyhedron");
    CliResult rec = run_cli({"recession"}, poly.dump());
    REQUIRE(rec.code == 0);
    json cone_doc = json::parse(rec.out);
    CHECK(cone_doc["kind"] == "cone");
    CHECK(cone_doc["generators"] == json::array({json::array({"0", "-inf"})}));
}

TEST_CASE("document round trips") {
    json cone_doc = io::cone_to_json(cyclic_cone(4));
    CHECK(io::cone_to_json(io::cone_from_json(cone_doc)) == cone_doc);

    json point_doc = io::point_to_json(qvec({0, Rational(-1, 2)}));
    CHECK(io::point_to_json(io::point_from_json(point_doc)) == point_doc);

    std::vector<HalfSpace> hs = vrep_to_hrep(cyclic_cone(4));
    json hs_doc = io::halfspaces_to_json(hs, 4);
    int dim = 0;
    std::vector<HalfSpace> parsed = io::halfspaces_from_json(hs_doc, &dim);
    CHECK(io::halfspaces_to_json(parsed, dim) == hs_doc);

    Polyhedron P(2, {qvec({0, 0})}, {unit_vector(2, 1)});
    json poly_doc = io::polyhedron_to_json(P);
    CHECK(io::polyhedron_to_json(io::polyhedron_from_json(poly_doc)) == poly_doc);

    std::vector<PolarVector> W = polar_extremes(cyclic_cone(4));
    json polar_doc = io::polar_to_json(W, 4);
    CHECK(io::polar_to_json(io::polar_from_json(polar_doc), 4) == polar_doc);
}

TEST_CASE("exit codes") {
    SUBCASE("malformed JSON is exit 1") {
        CliResult res = run_cli({"reduce"}, "not json");
        CHECK(res.code == 1);
        CHECK(res.err.find("JSON") != std::string::npos);
    }
    SUBCASE("shape mismatch is exit 1") {
        json input;
        input["cone"] = io::cone_to_json(cyclic_cone(4));
        input["point"] = io::point_to_json(qvec({0, 0}));
        CHECK(run_cli({"member"}, input.dump()).code == 1);
    }
    SUBCASE("budget exhaustion is exit 2") {
        CliResult res = run_cli({"vertices", "--budget", "5"}, cyclic4_json());
        CHECK(res.code == 2);
    }
    SUBCASE("non-finite entries for type operations are exit 3") {
        json input;
        input["cone"] = io::cone_to_json(cyclic_cone(4));
        input["point"]["kind"] = "point";
        input["point"]["dim"] = 4;
        input["point"]["coords"] = {"0", "-inf", "0", "0"};
        CliResult res = run_cli({"type"}, input.dump());
        CHECK(res.code == 3);
        CHECK(res.err.find("finite") != std::string::npos);
    }
    SUBCASE("unknown subcommand is exit 1") {
        CHECK(run_cli({"frobnicate"}).code == 1);
    }
    SUBCASE("out-of-domain argument is exit 1") {
        CHECK(run_cli({"padovan", "--n", "0"}).code == 1);
    }
    SUBCASE("invalid scalar literal is exit 1") {
        json input;
        input["kind"] = "cone";
        input["dim"] = 1;
        input["generators"] = json::array({json::array({"1.5"})});
        CHECK(run_cli({"reduce"}, input.dump()).code == 1);
    }
}

TEST_CASE("malformed inputs fail cleanly on every subcommand") {
    const std::vector<std::string> subcommands = {
        "vrep2hrep", "hrep2vrep", "reduce",   "member",         "type",
        "minimal-check", "minimal-at-apex",   "vertices",       "separate",
        "decompose", "recession", "polar-extremes", "polar-check", "face"};
    const std::vector<std::string> inputs = {
        "",
        "42",
        "[]",
        "{}",
        "{\"kind\":\"cone\"}",
        "{\"kind\":\"cone\",\"dim\":0,\"generators\":[]}",
        "{\"kind\":\"cone\",\"dim\":2,\"generators\":[[\"1\"]]}",
        "{\"kind\":\"point\",\"dim\":2,\"coords\":[\"a\",\"b\"]}",
        "{\"cone\":{\"kind\":\"cone\",\"dim\":2,\"generators\":[[\"1\",\"-inf\"]]},"
        "\"point\":{\"kind\":\"point\",\"dim\":2,\"coords\":[\"0\",\"-inf\"]}}",
    };
    for (const auto& cmd : subcommands)
        for (const auto& input : inputs) {
            CliResult res = run_cli({cmd}, input);
            CHECK((res.code == 0 || res.code == 1 || res.code == 3));
            if (res.code != 0) CHECK(!res.err.empty());
        }
}

TEST_CASE("file input and output") {
    std::string in_path = "cli_test_in.json";
    std::string out_path = "cli_test_out.json";
    {
        std::ofstream f(in_path);
        f << cyclic4_json();
    }
    CliResult res = run_cli({"reduce", "--input", in_path, "--output", out_path});
    REQUIRE(res.code == 0);
    CHECK(res.out.empty());
    std::ifstream f(out_path);
    json doc = json::parse(f);
    CHECK(doc["kind"] == "cone");
    CHECK(doc["generators"].size() == 4);
    std::remove(in_path.c_str());
    std::remove(out_path.c_str());
}

TEST_CASE("help exits cleanly") {
    CliResult res = run_cli({"--help"});
    CHECK(res.code == 0);
    CHECK(res.out.find("vrep2hrep") != std::string::npos);
    CliResult sub = run_cli({"vertices", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--emit-plot-data") != std::string::npos);
}
