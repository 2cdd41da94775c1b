#include "regfactor/cli.hpp"
#include "regfactor/generators.hpp"
#include "regfactor/graph_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace regfactor;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "regfactor");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("regfactor_test_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = temp_path(name);
    std::ofstream(path) << text;
    return path;
}

std::vector<json> json_lines(const std::string& text) {
    std::vector<json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            out.push_back(json::parse(line));
    return out;
}

// Drops timing fields so that runs can be compared byte for byte.
std::string without_millis(const std::string& text) {
    std::string out;
    for (auto j : json_lines(text)) {
        j.erase("millis");
        out += j.dump() + "\n";
    }
    return out;
}

} // namespace

TEST_CASE("generate") {
    auto path = temp_path("syl.mgf");
    auto r = run({"generate", "sylvester", "--r", "1", "--k", "1", "-o", path});
    CHECK(r.code == 0);
    auto summary = json::parse(r.out);
    CHECK(summary["bridges"] == 3);
    CHECK(summary["regularDegree"] == 3);
    CHECK(load_graph_file(path) == sylvester_extremal(1, 1));

    auto b = run({"generate", "bsw", "--r", "2", "--t", "1"});
    CHECK(b.code == 0);
    CHECK(parse_mgf(b.out).num_vertices() == 38);
    CHECK(json::parse(b.err)["regularDegree"] == 5);

    auto one = run({"generate", "random-regular", "--n", "10", "--d", "3", "--seed", "7"});
    auto two = run({"generate", "random-regular", "--n", "10", "--d", "3", "--seed", "7"});
    CHECK(one.out == two.out);

    auto ext = run({"generate", "extremal", "--r", "1", "--k", "1", "--tsize", "3", "--ssize",
                    "1", "--blisters", "1", "--format", "dot"});
    CHECK(ext.code == 0);
    CHECK(ext.out.find("graph G {") == 0);
    CHECK(json::parse(ext.err)["partition"]["S"].size() == 1);

    CHECK(run({"generate", "complete", "--n", "4", "--format", "graph6"}).out == "C~\n");
    CHECK(run({"generate", "cycle", "--n", "1", "--format", "graph6"}).code == 2); // a loop
    CHECK(run({"generate", "sylvester", "--r", "1", "--k", "2"}).code == 2);
    CHECK(run({"generate", "nosuch"}).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("check") {
    auto k4 = write_temp("k4.mgf", write_mgf(complete_graph(4)));
    auto r = run({"check", k4, "--k", "1"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["factorFound"] == true);
    CHECK(j["factor"].size() == 4);

    auto syl = write_temp("syl2.mgf", write_mgf(sylvester_extremal(1, 1)));
    auto s = json::parse(run({"check", syl, "--k", "1"}).out);
    CHECK(s["factorFound"] == false);
    CHECK(s["witness"]["deficiency"] == 2);
    CHECK(s["witness"]["S"].empty());

    auto capped = run({"check", syl, "--k", "1", "--oracle"});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("size cap") != std::string::npos);

    auto ok = run({"check", syl, "--ell", "2", "--oracle", "--oracle-cap", "16"});
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out)["oracle"]["agrees"] == true);

    auto bad = write_temp("bad.mgf", "mgf 3 2\n0 1\n1 x\n");
    auto e = run({"check", bad, "--k", "1"});
    CHECK(e.code == 2);
    CHECK(e.err.find("line 3") != std::string::npos);
    CHECK(run({"check", "/nonexistent.mgf"}).code == 2);
    for (const auto& p : {k4, syl, bad})
        std::remove(p.c_str());
}

TEST_CASE("analyze") {
    auto path = write_temp("bsw.mgf", write_mgf(bsw_graph({2, 1})));
    auto r = run({"analyze", path, "--ell", "4"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["vertexConnectivity"] == 3);
    CHECK(j["connected"] == true);
    CHECK(j["factorDeficiency"] == 2);
    std::remove(path.c_str());
}

TEST_CASE("verify") {
    auto main = run({"verify", "main", "--r", "2", "--k", "1", "--trials", "200", "--seed", "1"});
    CHECK(main.code == 0);
    CHECK(json_lines(main.out).size() == 200);

    auto bsw = run({"verify", "bsw", "--r", "2", "--t", "1", "--k", "2"});
    CHECK(bsw.code == 0);
    auto b = json_lines(bsw.out);
    REQUIRE(b.size() == 1);
    CHECK(b[0]["factorFound"] == false);
    CHECK(run({"verify", "bsw", "--r", "2", "--t", "1"}).code == 0);

    auto ch = run({"verify", "charzn", "--r", "1", "--k", "1"});
    CHECK(ch.code == 0);
    auto lines = json_lines(ch.out);
    CHECK(lines.size() == 28 + 5);
    CHECK(lines[0].contains("certificate"));

    CHECK(run({"verify", "parity", "--instances", "3", "--trials", "200"}).code == 0);
    CHECK(run({"verify", "main", "--r", "1", "--k", "2"}).code == 2);
    CHECK(run({"verify"}).code == 2);

    // single files: the wrong bridge count is a usage error
    auto syl = write_temp("syl3.mgf", write_mgf(sylvester_extremal(1, 1)));
    CHECK(run({"verify", "charzn", "--r", "1", "--k", "1", "--input", syl}).code == 0);
    auto k4 = write_temp("k4b.mgf", write_mgf(complete_graph(4)));
    CHECK(run({"verify", "charzn", "--r", "1", "--k", "1", "--input", k4}).code == 2);
    std::remove(syl.c_str());
    std::remove(k4.c_str());
}

TEST_CASE("verify output is deterministic across job counts") {
    auto a = run({"verify", "main", "--r", "1", "--k", "1", "--trials", "40", "--seed", "3"});
    auto b = run({"verify", "main", "--r", "1", "--k", "1", "--trials", "40", "--seed", "3",
                  "--jobs", "3"});
    CHECK(a.code == 0);
    CHECK(without_millis(a.out) == without_millis(b.out));
    auto c = run({"verify", "charzn", "--r", "2", "--k", "1", "--jobs", "2"});
    auto d = run({"verify", "charzn", "--r", "2", "--k", "1"});
    CHECK(without_millis(c.out) == without_millis(d.out));
}
