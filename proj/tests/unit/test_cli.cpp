#include "support.hpp"

#include "cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace liecomp;
using liecomp::cli::run;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string H = testing::data_path("heisenberg.json");
const std::string HE = testing::data_path("heisenberg_over_Qsqrt2.json");

} // namespace

TEST_SUITE("cli") {

TEST_CASE("validate") {
    const Result r = invoke({"validate", H});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == slurp(testing::golden_path("validate_heisenberg.txt")));
}

TEST_CASE("series") {
    const Result r = invoke({"series", H});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(testing::golden_path("series_heisenberg.txt")));
    const Result lower = invoke({"series", H, "--kind", "lower_central"});
    CHECK(lower.out == "lower_central dims: 3,1,0 class: 2\n");
}

TEST_CASE("potential") {
    const Result r = invoke({"potential", "--n", "3", "--m", "2"});
    CHECK(r.code == cli::kExitCheckFailed);
    CHECK(r.out.find("infeasible: 2 does not divide 3") != std::string::npos);
    CHECK(invoke({"potential", "--n", "6", "--m", "3", "--bound", "4"}).code == 0);
}

TEST_CASE("complete") {
    const Result r = invoke({"complete", HE, "--twist", testing::data_path("full_id.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("dim_E K = 3") != std::string::npos);
    const Result c = invoke({"complete", HE, "--twist", testing::data_path("center_conj.json")});
    CHECK(c.out.find("dim_E K = 5") != std::string::npos);
}

TEST_CASE("complete --write feeds axioms") {
    const auto path = std::filesystem::temp_directory_path() / "liecomp_cli_completion.json";
    const Result w = invoke({"complete", HE, "--twist", testing::data_path("full_id.json"), "--write", path.string()});
    REQUIRE(w.code == 0);
    const Result a = invoke({"axioms", path.string()});
    CHECK(a.code == 0);
    std::size_t verdicts = 0;
    std::istringstream lines(a.out);
    for (std::string l; std::getline(lines, l);)
        if (l.rfind("AXIOM ", 0) == 0)
            ++verdicts;
    CHECK(verdicts == 25);
    const Result s = invoke({"axioms", path.string(), "--mode", "sampled", "--samples", "10"});
    CHECK(s.code == 0);
    std::filesystem::remove(path);
}

TEST_CASE("json output parses") {
    const Result r = invoke({"--output", "json", "centroid", H});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("dim") == 3);
    CHECK(j.at("is_field") == false);
    const Result s = invoke({"series", testing::data_path("sl2.json"), "--output", "json"});
    CHECK(Json::parse(s.out).at("lower_central").at("class") == "not nilpotent");
}

TEST_CASE("output is byte-identical across runs") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"centroid", testing::data_path("sl2.json"), "--seed", "9"},
          std::vector<std::string>{"bound", HE, "--seed", "4", "--samples", "7"},
          std::vector<std::string>{"prop1", "--n", "5", "--seed", "3"},
          std::vector<std::string>{"verify-action", HE, "--twist", testing::data_path("full_id.json")}}) {
        const Result a = invoke(args), b = invoke(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("other subcommands") {
    CHECK(invoke({"centralizer", H, "--index", "0"}).out.find("centralizer dim: 2") != std::string::npos);
    CHECK(invoke({"center", H}).out.find("center dim: 1") != std::string::npos);
    CHECK(invoke({"tensor", H, "--minpoly=-2,0,1"}).code == 0);
    CHECK(invoke({"entangled", H, "--minpoly=-2,0,1", "--ideal", testing::data_path("no_such.json")}).code ==
          cli::kExitInputError);
    CHECK(invoke({"preserve", H, "--minpoly=-2,0,1"}).code == 0);
    CHECK(invoke({"prop1", "--n", "3"}).code == 0);
    CHECK(invoke({"prop1", "--n", "2", "--minpoly=-1,0,1"}).code == cli::kExitCheckFailed);
    const Result note = invoke({"axioms", "--note"});
    CHECK(note.code == 0);
    CHECK(note.out.find("non-checkable") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
    CHECK(invoke({}).code == cli::kExitInputError);
    CHECK(invoke({"frobnicate"}).code == cli::kExitInputError);
    CHECK(invoke({"validate", testing::data_path("missing.json")}).code == cli::kExitInputError);
    CHECK(invoke({"validate", H, "--output", "xml"}).code == cli::kExitInputError);
    CHECK(invoke({"validate", H, "--samples", "0"}).code == cli::kExitInputError);
    CHECK(invoke({"tensor", H, "--minpoly=-2,0,1", "--max-degree", "1"}).code == cli::kExitInputError);
    const Result r = invoke({"validate", testing::data_path("missing.json")});
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("empty reports print nothing") {
    CHECK(cli::emit_report(cli::Report{}, cli::OutputFormat::text).empty());
    CHECK(cli::emit_report(cli::Report{}, cli::OutputFormat::json).empty());
}

} // TEST_SUITE
