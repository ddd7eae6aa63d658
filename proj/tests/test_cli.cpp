#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "hddlogic");
    std::ostringstream out;
    std::ostringstream err;
    const int status = hddlogic::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gate subcommand") {
    CHECK(run({"gate", "or", "1010", "1001"}).out == "1011\n");
    CHECK(run({"gate", "and", "1010", "1001"}).out == "1000\n");
    CHECK(run({"gate", "xor", "1010", "1001"}).out == "0011\n");
    CHECK(run({"gate", "xorneg", "1010", "1001"}).out == "0011\n");
    CHECK(run({"gate", "not", "1010"}).out == "0101\n");
    CHECK(run({"gate", "xor", "0", "0"}).out == "0\n");
    CHECK(run({"gate", "nand", "1010", "1001"}).out == "0111\n");
    CHECK(run({"gate", "or", "1010", "1001", "--medium", "perpendicular", "--hk1", "2", "--hk2", "1"}).out ==
          "1011\n");
    CHECK(run({"gate", "and", "1010", "1001", "--mc", "--particles", "1000", "--seed", "3"}).out == "1000\n");
    CHECK(run({"gate", "or", "1010", "1001", "--guard", "3", "--pw50", "0.5"}).out == "1011\n");
}

TEST_CASE("gate verbose output") {
    const auto r = run({"gate", "or", "1010", "1001", "--verbose", "--head", "tandem"});
    CHECK(r.status == 0);
    CHECK(r.out.find("# profile\n0 -1\n1 1\n") != std::string::npos);
    CHECK(r.out.find("5 0\n") != std::string::npos);
    CHECK(r.out.find("0 2 LARGE\n") != std::string::npos);
    CHECK(r.out.find("4 1 MEDIUM\n") != std::string::npos);
    CHECK(r.out.find("\n1011\nrotations 1 tandem\n") != std::string::npos);
}

TEST_CASE("gate errors give a nonzero status and one diagnostic line") {
    auto r = run({"gate", "or", "1010", "101"});
    CHECK(r.status != 0);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

    CHECK(run({"gate", "or", "10a0", "1001"}).status != 0);
    CHECK(run({"gate", "implies", "1", "1"}).status != 0);
    CHECK(run({"gate", "not", "1", "1"}).status != 0);
    CHECK(run({"gate", "or", "1", "1", "--theta-low", "2"}).status != 0);
    CHECK(run({"gate", "or", "1", "1", "--medium", "perpendicular", "--hk1", "0.5", "--hk2", "1"}).status != 0);
}

TEST_CASE("add subcommand") {
    CHECK(run({"add", "1010", "1001"}).out == "10011\niterations 2\n");
    CHECK(run({"add", "0", "0"}).out == "0\niterations 1\n");
    CHECK(run({"add", "1111", "0001"}).out == "10000\niterations 5\n");
}

TEST_CASE("gate and add output is deterministic") {
    for (int i = 0; i < 3; ++i) {
        CHECK(run({"gate", "xnor", "110010", "011011", "--mc", "--seed", "5"}).out ==
              run({"gate", "xnor", "110010", "011011", "--mc", "--seed", "5"}).out);
        CHECK(run({"add", "101101", "011011", "--verbose"}).out == run({"add", "101101", "011011", "--verbose"}).out);
    }
}

TEST_CASE("physics-sweep") {
    auto r = run({"physics-sweep", "--grid", "0,0.5,0.866,1", "--particles", "100000"});
    REQUIRE(r.status == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header.find("analytic") != std::string::npos);
    std::string row;
    std::getline(lines, row);
    CHECK(row.rfind("0.000    1.000", 0) == 0);
    std::getline(lines, row);
    std::getline(lines, row);
    CHECK(row.rfind("0.866    0.000", 0) == 0);
    CHECK(row.find("zero crossing") != std::string::npos);

    auto single = run({"physics-sweep", "--grid", "0", "--particles", "10"});
    CHECK(single.out.find("\n0.000    1.000     1.000") != std::string::npos);

    CHECK(run({"physics-sweep", "--grid", "0,1.5"}).status != 0);
    CHECK(run({"physics-sweep", "--grid", "x"}).status != 0);
}

TEST_CASE("throughput subcommand") {
    CHECK(run({"throughput", "--head", "tandem"}).out == "100000000\n");
    CHECK(run({"throughput"}).out == "33333333\n");
    CHECK(run({"throughput", "--exact"}).out == "33333333\nexact 100000000/3\n");
    CHECK(run({"throughput", "--rps", "1", "--bits", "1", "--head", "tandem"}).out == "1\n");
    CHECK(run({"throughput", "--rps", "0"}).status != 0);
    CHECK(run({"throughput", "--rps", "-5"}).status != 0);
}

TEST_CASE("track subcommands") {
    const auto path = (std::filesystem::temp_directory_path() / "hddlogic_cli_track.img").string();
    auto s = run({"track", "save", path, "1010", "1001"});
    REQUIRE(s.status == 0);
    CHECK(run({"track", "load", path}).out == "any 1011\nlarge-only 1000\nmedium-only 0011\n");
    auto show = run({"track", "show", path});
    CHECK(show.out.rfind("guard 1 bits 4 cells 10 passes 2\n0 -1\n", 0) == 0);

    REQUIRE(run({"track", "save", path, "1010", "1001", "--negative"}).status == 0);
    CHECK(run({"track", "load", path}).out == "any 0011\nlarge-only 0000\nmedium-only 0011\n");

    std::ofstream(path) << "MAGTRACK 2\n";
    auto bad = run({"track", "load", path});
    CHECK(bad.status != 0);
    CHECK(bad.err.find("version") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("run subcommand") {
    const auto path = (std::filesystem::temp_directory_path() / "hddlogic_cli_prog.txt").string();
    std::ofstream(path) << "or 1010 1001\nand 1010 1001\n";
    CHECK(run({"run", path}).out == "1011\n1000\nrotations 6 operations 2\n");
    std::filesystem::remove(path);
}
