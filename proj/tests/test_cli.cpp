#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "locinv/commands.hpp"
#include "locinv/formats.hpp"

using namespace locinv;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

// Writes text to a fresh file under the system temp directory.
std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("locinv_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("reverse on P3") {
    const std::string p3 = temp_file("p3.edges", "n 3\n0 1\n1 2\n");
    const Result r = call({"reverse", "-i", p3, "--verify"});
    CHECK(r.code == exit_ok);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() >= 6);
    CHECK(lines[0] == "word: 0,1,0,1,0,2,0,2,1");
    CHECK(lines[1] == "length: 9");
    CHECK(lines[3] == "bound: 9");
    CHECK(r.out.find("verified: yes") != std::string::npos);

    const Result named = call({"reverse", "-i", p3, "--labels", "a,b,c"});
    CHECK(lines_of(named.out)[0] == "word: a,b,a,b,a,c,a,c,b");
}

TEST_CASE("reverse reads graph6 files and reports unsatisfiable inputs") {
    const std::string c5 = temp_file("c5.g6", emit_graph6(cycle_graph(5)) + "\n");
    CHECK(call({"reverse", "-i", c5, "--verify", "--reduce"}).code == exit_ok);

    const std::string iso = temp_file("iso.edges", "n 3\n0 1\n");
    const Result r = call({"reverse", "-i", iso});
    CHECK(r.code == exit_unsatisfiable);
    CHECK(r.err.find("isolated") != std::string::npos);
}

TEST_CASE("bad input exits nonzero with a diagnostic") {
    CHECK(call({"reverse", "-i", "/nonexistent/graph"}).code == exit_bad_input);
    const std::string bad = temp_file("bad.edges", "n 2\n0 5\n");
    const Result r = call({"reverse", "-i", bad});
    CHECK(r.code == exit_bad_input);
    CHECK_FALSE(r.err.empty());
    CHECK(call({"frobnicate"}).code == exit_bad_input);
    CHECK(call({}).code == exit_bad_input);
}

TEST_CASE("transform") {
    const std::string p4 = temp_file("p4.edges", "n 4\n0 1\n1 2\n2 3\n");
    const Result r = call({"transform", "-i", p4, "--from", "++++", "--to", "+--+", "--verify"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("within_bound: yes") != std::string::npos);
    CHECK(r.out.find("verified: yes") != std::string::npos);
    const bool tagged = r.out.find("strategy: fix-V1") != std::string::npos ||
                        r.out.find("strategy: flip-V0-then-all") != std::string::npos;
    CHECK(tagged);

    CHECK(call({"transform", "-i", p4, "--from", "+++", "--to", "++++"}).code == exit_bad_input);
    CHECK(call({"transform", "-i", p4, "--from", "++?+", "--to", "++++"}).code == exit_bad_input);
}

TEST_CASE("apply reproduces the triangle walk") {
    const std::string k3 = temp_file("k3.edges", "n 3\n0 1\n0 2\n1 2\n");
    const Result once = call({"apply", "-i", k3, "--colors", "+++", "--word", "0"});
    CHECK(once.code == exit_ok);
    CHECK(once.out == "n 3\n0 1\n0 2\ncolors +--\n");
    const Result full = call({"apply", "-i", k3, "--colors", "+++", "--word", "0,1,2,0"});
    CHECK(full.out == "n 3\n0 1\n0 2\n1 2\ncolors +++\n");
    CHECK(call({"apply", "-i", k3, "--colors", "+++", "--word", "0,7"}).code == exit_bad_input);
}

TEST_CASE("exact") {
    const std::string s4 = temp_file("s4.edges", "n 4\n0 1\n0 2\n0 3\n");
    const Result r = call({"exact", "-i", s4});
    CHECK(r.code == exit_ok);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["exact_cr"] == 12);
    CHECK(j["bound"] == 12);

    const std::string p5 = temp_file("p5.edges", "n 5\n0 1\n1 2\n2 3\n3 4\n");
    CHECK(call({"exact", "-i", p5, "--cap", "4"}).code == exit_resource);
}

TEST_CASE("survey") {
    const Result r = call({"survey", "--max-n", "4", "--jobs", "2"});
    CHECK(r.code == exit_ok);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 1 + 2 + 6 + 1);
    const auto summary = nlohmann::json::parse(lines.back());
    CHECK(summary["graphs"] == 9);
    CHECK(summary["max_cr"] == 12);
    CHECK(summary["violations_3n"].empty());
    CHECK(call({"survey", "--max-n", "4", "--jobs", "1"}).out == call({"survey", "--max-n", "4"}).out);

    const std::string catalog = temp_file("cat.g6", ">>graph6<<A_\nCh\nC~\n");
    const Result c = call({"survey", "--max-n", "4", "--graph6", catalog});
    CHECK(c.code == exit_ok);
    CHECK(lines_of(c.out).size() == 4);

    CHECK(call({"survey", "--max-n", "9"}).code == exit_resource);
}

TEST_CASE("gadget") {
    const Result star = call({"gadget", "star", "4", "--labels", "c"});
    CHECK(star.code == exit_ok);
    CHECK(star.out == "c1,c0,c1,c0,c1,c2,c0,c2,c3,c0,c3,c0\n");
    CHECK(call({"gadget", "edge", "0", "1"}).out == "0,1,0,1,0,1\n");
    CHECK(call({"gadget", "triangle", "0", "1", "2", "--labels", "a,b,c"}).out == "a,b,a,c,b,a,c\n");
    CHECK(call({"gadget", "p3ends", "0", "1", "2", "--labels", "a,b,c"}).out == "c,a,b,a,b,a,b,c\n");
    CHECK(call({"gadget", "p3end", "0", "1", "2", "--labels", "a,b,c"}).out == "c,a,b,a,c,b,a\n");
    CHECK(call({"gadget", "complete", "3"}).out == "0,1,0,1,0,1,2,0,2\n");
    CHECK(call({"gadget", "edge", "0"}).code == exit_bad_input);
    CHECK(call({"gadget", "hexagon", "1"}).code == exit_bad_input);
}
