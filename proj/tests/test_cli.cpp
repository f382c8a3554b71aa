// Shell-level checks of the padovan_lab binary: exit-code contract,
// output determinism, and a couple of known output lines.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct run_result {
    int exit_code;
    std::string out;
};

run_result run_cli(const std::string& args) {
    const std::string path = std::string(PADOVAN_LAB_BIN);
    const std::string out_file =
        std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
        "/padovan_lab_test_out.txt";
    const std::string cmd =
        path + " " + args + " > " + out_file + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream read;
    read << in.rdbuf();
    std::remove(out_file.c_str());
    return {WEXITSTATUS(status), read.str()};
}

}  // namespace

TEST_CASE("sequence subcommand", "[cli]") {
    const run_result r = run_cli("sequence --max 17");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0: 1\n") == 0);
    CHECK(r.out.find("15: 12\n") != std::string::npos);
    CHECK(r.out.find("17: 21\n") != std::string::npos);

    CHECK(run_cli("sequence --max 0").out == "0: 1\n");
    CHECK(run_cli("sequence --max -3").exit_code == 2);
}

TEST_CASE("generate subcommand", "[cli]") {
    const run_result json =
        run_cli("generate --family partition -p 2 -q 2 --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"family\": \"partition\"") != std::string::npos);
    CHECK(json.out.find("\"(2,1)\"") != std::string::npos);

    const run_result edge =
        run_cli("generate --family padovan -n 6 -k 3 --format edgelist");
    CHECK(edge.exit_code == 0);
    CHECK(edge.out == "010110\t011010\n");

    // the empty family emits an empty graph and succeeds
    const run_result empty =
        run_cli("generate --family padovan -n 2 -k 1 --format json");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.find("\"vertices\": []") != std::string::npos);

    // both coordinate systems accepted, inconsistent pairs rejected
    CHECK(run_cli("generate --family ab -n 11 -k 6 --format edgelist")
              .exit_code == 0);
    CHECK(run_cli("generate --family ab -n 11 -k 6 -p 3 -q 1").exit_code == 2);
    CHECK(run_cli("generate --family ab -p -1 -q 2").exit_code == 2);
    CHECK(run_cli("generate --family ab -p 2").exit_code == 2);
    CHECK(run_cli("generate --family nosuch -p 1 -q 1").exit_code == 2);

    // byte-identical reruns
    const std::string args = "generate --family padovan -n 11 -k 6 --format dot";
    CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("verify subcommand", "[cli]") {
    const run_result ok = run_cli("verify --suite order --max-n 12");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("[PASS] order/sequence(12)") != std::string::npos);
    CHECK(ok.out.find("failures") != std::string::npos);
    CHECK(run_cli("verify --suite nosuch").exit_code == 2);
    CHECK(run_cli("verify --suite aut --max-pq 2").exit_code == 0);
    // a bound beyond the configured vertex limit is a usage error
    CHECK(run_cli("verify --suite median --max-pq 4 --max-vertices 10")
              .exit_code == 2);
}

TEST_CASE("report subcommand", "[cli]") {
    const run_result r = run_cli("report --n 11");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n=2  (empty family)") != std::string::npos);
    CHECK(r.out.find("k=4: |V|=3 |E|=2") != std::string::npos);   // n=8
    CHECK(r.out.find("k=5: |V|=1 |E|=0 diam=0 C(x)=[1]") !=
          std::string::npos);                                      // n=11
    CHECK(r.out.find("k=6: |V|=6 |E|=6 diam=4 C(x)=[6, 6, 1]") !=
          std::string::npos);
    CHECK(run_cli("report --n 0").exit_code == 2);
    CHECK(run_cli("report").exit_code == 2);
}
