#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "rankrange/constructions.hpp"
#include "rankrange/io.hpp"

using namespace rankrange;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "rankrange-cli-test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    fs::path out = work_dir() / "stdout.txt";
    std::string cmd = std::string(RANKRANGE_CLI_PATH) + " " + args + " > " +
                      out.string() + " 2> " + (work_dir() / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    int code = status == -1 ? -1 : WEXITSTATUS(status);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    return {code, ss.str()};
}

}  // namespace

TEST_CASE("matrix text format round trip") {
    Fp f7(7);
    Mat A = Mat::jbar(4, f7);
    std::stringstream ss;
    write_matrix(ss, A);
    CHECK(read_matrix(ss) == A);

    std::stringstream bad1("2 2 7\n1 2\n3");
    CHECK_THROWS_AS(read_matrix(bad1), ParseError);
    std::stringstream bad2("2 2 7\n1 2\n3 9\n");
    CHECK_THROWS_AS(read_matrix(bad2), ParseError);  // 9 not a residue
    std::stringstream bad3("nonsense");
    CHECK_THROWS_AS(read_matrix(bad3), ParseError);
    CHECK_THROWS_AS(read_matrix_file("/nonexistent/path"), ParseError);
}

TEST_CASE("space JSON round trip") {
    AffineSpace S = construct_counterexample_f3();
    json j = space_to_json(S);
    CHECK(j.at("p") == 3);
    CHECK(j.at("ambient") == "full");
    CHECK(space_from_json(j) == S);

    fs::path p = work_dir() / "space.json";
    write_space_file(p.string(), S);
    CHECK(read_space_file(p.string()) == S);

    json bad = j;
    bad["ambient"] = "diagonal";
    CHECK_THROWS_AS(space_from_json(bad), ParseError);
    bad = j;
    bad["offset"][0][0] = 5;  // not a residue mod 3
    CHECK_THROWS_AS(space_from_json(bad), ParseError);
    std::ofstream(work_dir() / "garbage.json") << "{not json";
    CHECK_THROWS_AS(read_space_file((work_dir() / "garbage.json").string()),
                    ParseError);
}

TEST_CASE("cli bounds") {
    RunResult r = run_cli("bounds --family range-mxn --m 3 --n 3 --s 2 --r 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3\n");
    CHECK(run_cli("bounds --family no-such --m 1 --n 1").exit_code == 2);
    // hypothesis violation: s > r
    CHECK(run_cli("bounds --family range-mxn --m 3 --n 3 --s 2 --r 1")
              .exit_code == 2);
    // missing required subcommand
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli construct, scan, pivot, code-params round trip") {
    fs::path space = work_dir() / "cx.json";
    RunResult c =
        run_cli("construct --family counterexample-f3 --out " + space.string());
    REQUIRE(c.exit_code == 0);
    json cj = json::parse(c.out);
    CHECK(cj.at("dim") == 4);

    RunResult s = run_cli("scan --in " + space.string());
    REQUIRE(s.exit_code == 0);
    json sj = json::parse(s.out);
    CHECK(sj.at("profile").at("histogram") == json{{"2", 81}});
    CHECK(sj.at("profile").at("min_rank") == 2);
    CHECK(sj.at("profile").at("max_rank") == 2);

    RunResult k = run_cli("code-params --in " + space.string());
    REQUIRE(k.exit_code == 0);
    json kj = json::parse(k.out);
    CHECK(kj.at("cardinality") == 81);
    CHECK(kj.at("min_distance") == 1);
    CHECK(kj.at("singleton_ok") == true);

    fs::path ech = work_dir() / "ech.json";
    REQUIRE(run_cli("construct --family echelon-constant --m 3 --n 4 --r 2 "
                    "--p 5 --out " +
                    ech.string())
                .exit_code == 0);
    RunResult p = run_cli("pivot --in " + ech.string());
    REQUIRE(p.exit_code == 0);
    json pj = json::parse(p.out);
    CHECK(pj.at("P") == json::array({1, 2}));
    CHECK(pj.at("j").at("1") == 1);
    CHECK(pj.at("j").at("2") == 2);
    // pivot rejects spaces that are not all-echelon
    CHECK(run_cli("pivot --in " + space.string()).exit_code == 2);
}

TEST_CASE("cli verify") {
    RunResult ok =
        run_cli("verify --family range-mxn --m 3 --n 4 --s 1 --r 2 --p 5");
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.out).at("all_pass") == true);
    // invalid parameters exit 2
    CHECK(run_cli("verify --family range-mxn --m 3 --n 3 --s 2 --r 1 --p 5")
              .exit_code == 2);
    // composite modulus exits 2
    CHECK(run_cli("verify --family range-mxn --m 2 --n 2 --s 1 --r 1 --p 6")
              .exit_code == 2);
}

TEST_CASE("cli search exit codes and seed contract") {
    RunResult found = run_cli(
        "search --m 2 --n 2 --s 1 --r 1 --p 2 --dim 1 --exhaustive");
    CHECK(found.exit_code == 0);
    CHECK(json::parse(found.out).at("found") == true);

    RunResult miss = run_cli(
        "search --m 2 --n 2 --s 1 --r 1 --p 3 --dim 2 --exhaustive");
    CHECK(miss.exit_code == 1);
    CHECK(json::parse(miss.out).at("found") == false);

    // --samples without an explicit --seed is a usage error
    CHECK(run_cli("search --m 2 --n 2 --s 1 --r 1 --p 3 --dim 2 --samples 10")
              .exit_code == 2);
    RunResult rnd = run_cli(
        "--seed 5 search --m 2 --n 2 --s 1 --r 2 --p 3 --dim 2 --samples "
        "2000");
    CHECK(rnd.exit_code == 0);
    json rj = json::parse(rnd.out);
    CHECK(rj.at("seed") == 5);
    CHECK(rj.at("mode") == "random");

    // neither mode selected
    CHECK(run_cli("search --m 2 --n 2 --s 1 --r 1 --p 3 --dim 1").exit_code ==
          2);
}

TEST_CASE("cli budget exit code") {
    fs::path space = work_dir() / "cx2.json";
    REQUIRE(run_cli("construct --family counterexample-f3 --out " +
                    space.string())
                .exit_code == 0);
    CHECK(run_cli("--budget 10 scan --in " + space.string()).exit_code == 3);
    CHECK(run_cli("--budget 10 search --m 3 --n 3 --s 1 --r 2 --p 5 --dim 4 "
                  "--exhaustive")
              .exit_code == 3);
}

TEST_CASE("cli normal-form") {
    Fp f7(7);
    fs::path mat = work_dir() / "skew.txt";
    write_matrix_file(mat.string(), Mat::jbar(4, f7));
    RunResult r = run_cli("normal-form --in " + mat.string());
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("r") == 4);
    CHECK(j.at("d").size() == 2);
    // the reported tHMH parses back as the reconstructed normal matrix
    std::stringstream ss(j.at("tHMH").get<std::string>());
    Mat thmh = read_matrix(ss);
    CHECK(thmh.rows() == 4);
    CHECK(thmh.is_skew());
    CHECK(thmh.rank() == 4);
    // non-skew input exits 2
    write_matrix_file(mat.string(), Mat::identity(3, f7));
    CHECK(run_cli("normal-form --in " + mat.string()).exit_code == 2);
}
