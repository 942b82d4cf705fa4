#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nevpick/cli.hpp"
#include "nevpick/errors.hpp"
#include "support.hpp"

using namespace nevpick;
using namespace nevpick::testing;

namespace {

const std::string kDir = NEVPICK_PROBLEMS_DIR;

struct Run {
    int code = 0;
    std::string out, err;
    json result() const { return json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string problem(const std::string& name) { return kDir + "/" + name + ".json"; }

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("nevpick_test_" + name)).string();
}

}  // namespace

TEST_CASE("pick reports P and kappa") {
    const Run r = run({"pick", "--problem", problem("ex101")});
    REQUIRE(r.code == 0);
    const json j = r.result();
    CHECK(j["kappa"] == 1);
    CHECK(j["P"] == json::parse(R"([["-1","1"],["1","1"]])"));
    CHECK(j["singular"] == false);
    CHECK(j["derived"]["eta"] == json::parse(R"(["inf","1/2"])"));
    CHECK(j["lyapunov_residual"]["zero"] == true);
    const json s = run({"pick", "--problem", problem("ex103")}).result();
    CHECK(s["singular"] == true);
    CHECK(s["derived"].is_null());
}

TEST_CASE("input errors exit with 2") {
    CHECK(run({"pick"}, "{not json").code == 2);
    CHECK(run({"pick"}, R"({"regular":[{"x":0,"w":0}]})").code == 2);
    CHECK(run({"pick"}, R"({"regular":[{"x":0,"w":0,"gamma":1},{"x":0,"w":1,"gamma":1}]})").code == 2);
    CHECK(run({"pick", "--problem", kDir + "/does_not_exist.json"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"apply", "--problem", problem("ex101")}).code == 2);
    CHECK(run({"apply", "--problem", problem("ex103"), "--param", R"({"type":"inf"})"}).code == 2);
    CHECK(run({"apply", "--problem", problem("ex101"), "--param", R"({"type":"bogus"})"}).code == 2);
    const Run r = run({"pick"}, "[]");
    CHECK(r.code == 2);
    CHECK(json::parse(r.err)["exit"] == 2);
}

TEST_CASE("solve prints the resolvent coefficients") {
    const json j = run({"solve", "--problem", problem("ex101")}).result();
    CHECK(j["problem"] == 3);
    CHECK(j["theta"]["kappa"] == 1);
    const json& t = j["theta"]["theta"];
    CHECK(t[0][0] == json::parse(R"({"num":["0","1"],"den":["-1","1"]})"));
    CHECK(t[0][1] == json::parse(R"({"num":["-1"],"den":["-2","2"]})"));
    CHECK(t[1][0] == json::parse(R"({"num":["1"],"den":["-1","1"]})"));
    CHECK(t[1][1] == json::parse(R"({"num":["1","-4","2"],"den":["0","-2","2"]})"));
    // the JSON form parses back to the same function
    const RationalMatrix2x2 theta = build_theta(build_system(ex101()));
    CHECK(parse_rational(t[1][1]) == theta(1, 1));
}

TEST_CASE("solve on the degenerate example prints w") {
    const json j = run({"solve", "--problem", problem("ex103")}).result();
    CHECK(j["problem"] == 1);
    CHECK(j["w"] == json::parse(R"({"num":["1","2"],"den":["-1","2"]})"));
    CHECK(j["verification"]["fmi_count"] == 1);
    CHECK(j["verification"]["problem1"] == true);
}

TEST_CASE("apply with the standard examples") {
    const json a = run({"apply", "--problem", problem("ex101"), "--param", R"({"type":"inf"})"}).result();
    CHECK(a["w"] == json::parse(R"({"num":["0","1"],"den":["1"]})"));
    CHECK(a["k"] == 1);
    CHECK(a["class_index"] == 0);
    CHECK(a["classification"][0]["family"] == "Ctilde");
    CHECK(a["classification"][0]["index"] == 4);
    CHECK(a["classification"][0]["verified"] == true);
    CHECK(a["class_confirmed"] == true);
    const json b =
        run({"apply", "--problem", problem("ex101"), "--param", R"({"type":"rational","num":[0,1],"den":[1]})"}).result();
    CHECK(b["w"] == json::parse(R"({"num":["0","-1","0","2"],"den":["1","-4","4"]})"));
    CHECK(b["k"] == 0);
    const json c = run({"apply", "--problem", problem("ex101"), "--param", R"({"type":"const","value":"-2"})"}).result();
    CHECK(c["k"] == 0);
    CHECK(c["problem1"] == true);
}

TEST_CASE("non-Nevanlinna parameter exits with 3") {
    const Run r = run({"apply", "--problem", problem("ex101"), "--param", R"({"type":"rational","num":[0,0,1]})"});
    CHECK(r.code == 3);
    const json e = json::parse(r.err);
    CHECK(e["exit"] == 3);
    CHECK(e["error"].get<std::string>().find("kernel section at") != std::string::npos);
    CHECK(run({"apply", "--problem", problem("ex101"), "--param", R"({"type":"const","value":{"re":1,"im":1}})"}).code == 3);
}

TEST_CASE("verify reports node limits and counts") {
    const json v = run({"verify", "--problem", problem("ex101"), "--w", R"({"num":[0,1]})"}).result();
    CHECK(v["fmi_count"] == 1);
    CHECK(v["nodes"][0]["problem2"] == false);
    CHECK(v["nodes"][1]["problem1"] == true);
    CHECK(v["nodes"][0]["derivative"]["value"].get<double>() == doctest::Approx(1.0));
    const json m = run({"verify", "--problem", problem("ex101"), "--w", R"({"num":[0,-1]})"}).result();
    CHECK(m["fmi_count"].get<int>() >= 2);
}

TEST_CASE("solve output round-trips through verify") {
    const json s = run({"solve", "--problem", problem("ex103")}).result();
    const std::string wfile = temp_path("w.json");
    {
        std::ofstream f(wfile);
        f << s["w"].dump();
    }
    const json v = run({"verify", "--problem", problem("ex103"), "--param", wfile}).result();
    std::remove(wfile.c_str());
    CHECK(v["problem1"] == true);
    CHECK(v["fmi_matches"] == true);
    CHECK(v["nodes"][1]["residual"]["value"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("stdin, --out and the float backend") {
    std::ifstream f(problem("ex102"));
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string cfg = temp_path("cfg.json"), out = temp_path("out.json");
    {
        std::ofstream c(cfg);
        c << R"({"backend":"float","grid":{"points_per_line":5}})";
    }
    const Run r = run({"solve", "--config", cfg, "--out", out}, ss.str());
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream o(out);
    const json j = json::parse(o);
    CHECK(j["backend"] == "float");
    CHECK(j["theta"]["theta"][0][1]["num"][0].is_number_float());
    std::remove(cfg.c_str());
    std::remove(out.c_str());
    const Run bad = run({"pick", "--config", kDir + "/missing_cfg.json", "--problem", problem("ex101")});
    CHECK(bad.code == 2);
}

TEST_CASE("json helpers") {
    CHECK(parse_scalar(json(0.25)) == q(1, 4));
    CHECK(parse_scalar(json("-3/6")) == q(-1, 2));
    CHECK(parse_scalar(json(7)) == Scalar(7));
    CHECK_THROWS_AS(parse_scalar(json(true)), InputError);
    const InterpolationData d = parse_problem(json::parse(R"({"nodes":[{"kind":"singular","x":"1","xi":-1},{"kind":"regular","x":0,"w":0,"gamma":-1}]})"));
    CHECK(d.size() == 2);
    CHECK(d.nodes()[0].kind == NodeKind::Singular);
    CHECK(to_json(rat({Scalar(0)}, {Scalar(1)})) == json::parse(R"({"num":["0"],"den":["1"]})"));
    CHECK(to_json(Parameter::infinity()) == json::parse(R"({"type":"inf"})"));
    const RunConfig rc = parse_run_config(json::parse(R"({"rank_tol":1e-8,"grid":{"imag_lines":[0.5],"points":[[0,1]]}})"));
    CHECK(rc.rank_tol == 1e-8);
    CHECK(rc.grid.imag_lines == std::vector<double>{0.5});
    CHECK(rc.grid.explicit_points.size() == 1);
    CHECK_THROWS_AS(parse_run_config(json::parse(R"({"backend":"quad"})")), InputError);
}
