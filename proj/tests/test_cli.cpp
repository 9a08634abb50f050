#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"

using namespace mbbox;
using namespace mbbox::cli;
using nlohmann::json;

namespace {
struct Run {
    int code;
    std::string out, err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p.string();
}
}  // namespace

TEST_CASE("report JSON round trip") {
    Report rep;
    rep.command = "sweep";
    PointRecord r;
    r.integral = "onemass";
    r.kinematics = {-1.0, -2.0, -0.5, 0.3};
    r.method = "closed";
    r.value = {14.900294390044476, -1e-300};
    r.laurent = {{-2, {1.0 / 3.0, 0.0}}, {-1, {0.1, 2.5e-17}}};
    r.breakdown = {{"Im1", {0.1 + 0.2, -7.0}}};
    r.diagnostics = {{"nodes", 64}, {"tail_estimate", INFINITY}};
    r.values = {{"closed", r.value}};
    r.deviations = {{"closed", 0.0}};
    r.status = "ok";
    rep.records.push_back(r);
    rep.checks.push_back({"identities", "beta", "eps=0.3", 1e-17, 1e-11, true, ""});
    rep.summary = {1e-17, 0, 1};

    const std::string text = to_json(rep).dump();
    CHECK(report_from_json(json::parse(text)) == rep);
    CHECK(report_from_json(json::parse(to_json(rep).dump(2))) == rep);
    CHECK(text.find("0.30000000000000004") != std::string::npos);
}

TEST_CASE("eval prints JSON with the closed form value") {
    const auto r = invoke({"eval", "--s", "-1", "--t", "-2", "--eps", "0.3", "--json"});
    REQUIRE(r.code == kOk);
    const auto rec = point_from_json(json::parse(r.out));
    CHECK(rec.integral == "massless");
    CHECK(rec.method == "closed");
    CHECK(rec.value.real() == doctest::Approx(24.077761462512484).epsilon(1e-14));
    CHECK(rec.value.imag() == 0.0);
    CHECK(rec.breakdown.count("s_channel") == 1);
}

TEST_CASE("exit codes") {
    auto r = invoke({"eval", "--s", "1", "--t", "-2", "--eps", "0.3"});
    CHECK(r.code == kInputError);
    CHECK(r.err.find("EuclideanRegionViolation") != std::string::npos);

    CHECK(invoke({"eval", "--s", "-1", "--t", "-2", "--eps", "1.2"}).code == kInputError);
    CHECK(invoke({"eval", "--integral", "onemass", "--s", "-1", "--t", "-2"}).code == kInputError);
    CHECK(invoke({"eval", "--method", "bogus"}).code == kInputError);
    CHECK(invoke({"expand", "--order", "1"}).code == kInputError);
    CHECK(invoke({}).code == kInputError);
    CHECK(invoke({"--help"}).code == kOk);
    CHECK(invoke({"verify", "--suite", "identities"}).code == kOk);
    // An absurd tolerance must make the suite fail.
    CHECK(invoke({"verify", "--suite", "identities", "--tol", "1e-30"}).code == kVerifyFailed);
    CHECK(invoke({"sweep", "--grid", "/nonexistent/grid.json"}).code == kInputError);
}

TEST_CASE("expand lists the requested Laurent terms") {
    const auto r = invoke({"expand", "--s", "-1", "--t", "-2", "--eps", "0.3", "--order", "-1", "--json"});
    REQUIRE(r.code == kOk);
    const auto rec = point_from_json(json::parse(r.out));
    CHECK(rec.method == "laurent");
    REQUIRE(rec.laurent.size() == 2);
    CHECK(rec.laurent[0].power == -2);
    CHECK(rec.laurent[0].value.real() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("sweep grids") {
    const auto empty = temp_file("mbbox_empty_grid.json", "[]");
    auto r = invoke({"sweep", "--grid", empty});
    CHECK(r.code == kOk);
    CHECK(report_from_json(json::parse(r.out)).records.empty());

    const auto bad = temp_file("mbbox_bad_grid.json", "{\"points\": 3}");
    CHECK(invoke({"sweep", "--grid", bad}).code == kInputError);
    const auto junk = temp_file("mbbox_junk_grid.json", "[{\"s\": ");
    CHECK(invoke({"sweep", "--grid", junk}).code == kInputError);

    const json grid = {{"points",
                        {{{"s", -1}, {"t", -2}, {"eps", 0.3}},
                         {{"s", -1}, {"t", -1}, {"msq", -1}, {"eps", 0.3}},
                         {{"s", -0.5}, {"t", -2}, {"msq", -1}, {"eps", 0.3}}}},
                       {"methods", {"closed", "closed_alt", "residue", "feynman"}}};
    const auto rep = sweep_grid(grid, 1e-8);
    REQUIRE(rep.records.size() == 3);
    CHECK(rep.records[0].status == "ok");
    CHECK(rep.records[1].status == "skipped-degenerate");
    CHECK(rep.records[2].status == "ok");
    CHECK(rep.summary.warnings == 1);
    CHECK(rep.summary.failures == 0);
    CHECK(rep.summary.max_deviation < 1e-10);
    CHECK(exit_code(rep) == kOk);

    const json outside = json::array({{{"s", 2}, {"t", -1}}});
    CHECK(exit_code(sweep_grid(outside, 1e-8)) == kInputError);
    CHECK_THROWS_AS(sweep_grid(json{{"points", json::array()}, {"methods", {"nope"}}}, 1e-8),
                    InputError);
}

TEST_CASE("exit code priority") {
    Report rep;
    rep.records.resize(3);
    rep.records[0].status = "fail";
    CHECK(exit_code(rep) == kVerifyFailed);
    rep.records[1].status = "not-converged";
    CHECK(exit_code(rep) == kNotConverged);
    rep.records[2].status = "input-error";
    CHECK(exit_code(rep) == kInputError);
}
