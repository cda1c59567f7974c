#include <cstdio>
#include <fstream>
#include <sstream>

#include "cgk/cli.hpp"
#include "cgk/serialize.hpp"
#include "doctest.h"

using namespace cgk;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pde emit in LaTeX") {
    Run r = run({"pde", "emit", "--d", "1", "--two-ell", "3", "--ext", "mass", "--q", "1", "--render", "latex"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\\mu \\partial_{t} + 2\\mu x_{1} \\partial_{x_{0}} + \\partial_{x_{1}}^{2}\n");
}

TEST_CASE("pde emit JSON re-parses") {
    Run r = run({"pde", "emit", "--d", "1", "--two-ell", "1", "--q", "2"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    const VarLayout layout{1, 0};
    DiffOp expected = power(parse_diffop("2*mu*d/dt + (d/dx0)^2", layout), 2);
    CHECK(diffop_from_json(j.at("terms"), layout) == expected);
    CHECK(parse_diffop(j.at("operator").get<std::string>(), layout) == expected);
}

TEST_CASE("centerless search") {
    Run r = run({"singular", "search", "--d", "1", "--two-ell", "2", "--ext", "none", "--kappa", "0", "--level", "2"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j.at("kernel").size() == 1);
    CHECK(module_vector_from_json(j.at("kernel")[0]) == ModuleVector(PbwMonomial{0, {2}, {}}, 1));
}

TEST_CASE("jacobi") {
    Run r = run({"algebra", "jacobi", "--d", "2", "--two-ell", "2", "--ext", "exotic"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).at("failures").empty());
}

TEST_CASE("algebra show") {
    Run r = run({"algebra", "--d", "1", "--two-ell", "1"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("generators").size() == 6);
    CHECK(j.at("decomposition").at("minus").size() + j.at("decomposition").at("zero").size() +
              j.at("decomposition").at("plus").size() ==
          6);
}

TEST_CASE("verma act") {
    Run r = run({"verma", "act", "--d", "2", "--two-ell", "3", "--gen", "P1+", "--monomial",
                 R"({"h":1,"a":[1,0],"b":[0,0]})"});
    REQUIRE(r.code == 0);
    ModuleVector v = module_vector_from_json(Json::parse(r.out));
    VermaModule mod({2, 3, Extension::Mass}, Params::symbolic());
    CHECK(v == mod.act(parse_gen("P1+"), PbwMonomial{1, {1, 0}, {0, 0}}));
}

TEST_CASE("singular verify and condition") {
    CHECK(run({"singular", "verify", "--delta", "-1/2"}).code == 0);
    CHECK(run({"singular", "verify", "--delta", "auto", "--d", "2", "--two-ell", "2", "--ext", "exotic"}).code == 0);
    CHECK(run({"singular", "verify", "--delta", "1"}).code == 1);
    Run c = run({"singular", "condition", "--q", "1"});
    CHECK(Json::parse(c.out).at("root") == "-1/2");
    // kappa must vanish for the centerless closed form
    CHECK(run({"singular", "closed", "--d", "1", "--two-ell", "2", "--ext", "none", "--kappa", "1"}).code == 1);
}

TEST_CASE("reps") {
    Run r = run({"reps", "right", "--d", "1", "--two-ell", "3", "--gen", "H", "--render", "text"});
    CHECK(r.out == "d/dt + x1*d/dx0\n");
    CHECK(run({"reps", "check", "--d", "2", "--two-ell", "3"}).code == 0);
    CHECK(run({"reps", "left", "--gen", "C", "--render", "latex"}).code == 0);
    CHECK(run({"reps", "right", "--gen", "C"}).code == 2);
}

TEST_CASE("pde check") {
    Run ok = run({"pde", "check", "--d", "2", "--two-ell", "2", "--ext", "exotic"});
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out).at("pass") == true);
    Run off = run({"pde", "check", "--delta", "3"});
    CHECK(off.code == 1);
    CHECK(Json::parse(off.out).at("pass") == false);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"singular"}).code == 2);
    CHECK(run({"singular", "frobnicate"}).code == 2);
    CHECK(run({"algebra", "--ext", "weird"}).code == 2);
    CHECK(run({"algebra", "--d", "3"}).code == 2);
    CHECK(run({"verma", "act", "--gen", "Q"}).code == 2);
    CHECK(run({"verma", "act", "--gen", "H", "--monomial", "{not json"}).code == 2);
    CHECK(run({"verma", "basis", "--level", "x"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output file") {
    const std::string path = "cgk_cli_test_out.json";
    Run r = run({"algebra", "jacobi", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    CHECK(Json::parse(in).at("failures").empty());
    std::remove(path.c_str());
}
