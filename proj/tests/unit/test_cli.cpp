#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "ccc/report.hpp"

using namespace ccc;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + CCC_CLI_PATH + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

Json run_json(const std::string& args, int expected_status = 0) {
    const Run r = run(args);
    REQUIRE(r.status == expected_status);
    return Json::parse(r.out);
}

}  // namespace

TEST_CASE("order subcommand examples") {
    CHECK(run_json("order --pair non-isogenous --n 7").at("order") == 7);
    const Json cm = run_json("order --pair cm --m 2 --d -1 --n 4");
    CHECK(cm.at("order") == 1);
    CHECK(cm.at("method") == "congruence-solver");
    CHECK(cm.at("certificate").at(0).at("solution") == Json::array({1, 0, 0, 1}));
    const Json one = run_json("order --pair non-isogenous --n 1");
    CHECK(one.at("order") == 1);
    CHECK(one.at("method") == "rational-fiber");
    CHECK(run_json("order --pair isomorphic-cm --n 8").at("order") == 4);
    CHECK(run_json("order --pair no-cm --gen 2,1,-1,1 --n 12").at("order") == 6);
    CHECK(run_json("order --pair cm --m 2 --d=-1 --n 4 --t 3/4,1/2").at("order") == 1);
    CHECK(run_json("order --pair cm --m 2 --d=-1 --n 8").at("note") == std::string(kBeyondProvenRange));
}

TEST_CASE("order reports round-trip and are deterministic") {
    for (const std::string args : {"order --pair cm --m 6 --d=-3 --n 24", "order --pair non-isogenous --n 30",
                                   "order --pair isomorphic-cm --n 16"}) {
        const Run a = run(args), b = run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
        const Json j = Json::parse(a.out);
        const CurvePairSpec spec = pair_from_json(j.at("pair"));
        CHECK(order_result_from_json(j) == decide_order(spec, integer_from_json(j.at("n"))));
    }
}

TEST_CASE("sweep examples") {
    const Json grid = run_json("sweep --pair cm --m 1:4 --d=-2:-1 --n 4");
    REQUIRE(grid.at("rows").size() == 8);
    for (const auto& row : grid.at("rows")) {
        const bool one = (row.at("m") == 2 || row.at("m") == 4) && row.at("d") == -1;
        CHECK(row.at("order") == (one ? 1 : 2));
    }
    const Json generic = run_json("sweep --pair non-isogenous --n-range 3:8");
    std::vector<long> orders;
    for (const auto& row : generic.at("rows")) orders.push_back(row.at("order").get<long>());
    CHECK(orders == std::vector<long>{3, 2, 5, 3, 7, 4});
    const Json cell = run_json("sweep --pair cm --m 1 --d=-1 --n 4");
    REQUIRE(cell.at("rows").size() == 1);
    CHECK(cell.at("rows").at(0).at("order") == 2);
}

TEST_CASE("sweep rows are ordered, thread-independent and match single orders") {
    const std::string args = "sweep --pair cm --m 1:5 --d=-4:-1 --n-range 3:16 --format tsv";
    const Run serial = run(args, "CCC_THREADS=1");
    const Run parallel = run(args, "CCC_THREADS=8");
    REQUIRE(serial.status == 0);
    CHECK(serial.out == parallel.out);

    const Json rows = run_json("sweep --pair cm --m 1:3 --d=-3:-1 --n-range 4:9").at("rows");
    std::vector<std::array<long, 3>> keys;
    for (const auto& row : rows) {
        keys.push_back({row.at("m").get<long>(), row.at("d").get<long>(), row.at("n").get<long>()});
        const Json single = run_json("order --pair cm --m " + std::to_string(keys.back()[0]) +
                                     " --d=" + std::to_string(keys.back()[1]) + " --n " + std::to_string(keys.back()[2]));
        CHECK(single.at("order") == row.at("order"));
        CHECK(single.at("method") == row.at("method"));
    }
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(keys.size() == 54);
}

TEST_CASE("solve-congruence examples") {
    const Json prop = run_json("solve-congruence --pair cm --m 2 --d=-1 --M 2");
    CHECK(prop.at("solvable") == true);
    CHECK(prop.at("solution") == Json::array({1, 0, 0, 1}));
    const Json obstructed = run_json("solve-congruence --gen 0,1,-1,0 --gen=-1,0,0,-1 --gamma 1,0 --M 2");
    CHECK(obstructed.at("solvable") == false);
    CHECK(obstructed.at("solution").is_null());
    const Json trivial = run_json("solve-congruence --gen 0,1,-1,0 --M 1");
    CHECK(trivial.at("solution") == Json::array({0, 0}));
    const Run tsv = run("solve-congruence --pair cm --m 2 --d=-1 --M 2 --format tsv");
    CHECK(tsv.out == "solvable\tsolution\ntrue\t1,0,0,1\n");
}

TEST_CASE("verify-lattice") {
    const Json j = run_json("verify-lattice");
    CHECK(j.at("rank") == 16);
    CHECK(j.at("discriminant") == 64);
    CHECK(j.at("index_exceptional_over_pullback") == 2048);
    CHECK(j.at("index_kummer_over_roots") == 32);
    CHECK(j.at("weight_enumerator") == "1 + 30z^8 + z^16");
    CHECK(j.at("ok") == true);
}

TEST_CASE("output file and tsv format") {
    const auto path = std::filesystem::temp_directory_path() / "ccc_cli_test_report.tsv";
    const Run r = run("order --pair non-isogenous --n 9 --format tsv --out " + path.string());
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == "pair\tn\td_of_n\torder\tmethod\nnon-isogenous\t9\t9\t9\tgeneric-formula\n");
    std::filesystem::remove(path);
}

TEST_CASE("invalid configurations exit with 2") {
    for (const std::string args :
         {"order --pair nonsense --n 4", "order --pair non-isogenous --n 0", "order --pair non-isogenous",
          "order --pair cm --n 4", "order --pair cm --m 0 --d=-1 --n 4", "order --pair no-cm --gen 1,2,2,4 --n 4",
          "order --pair no-cm --gen 1,2,3 --n 4", "order --pair non-isogenous --n 6 --t 1/3,0",
          "order --pair non-isogenous --n x", "sweep --pair non-isogenous --n-range 5:3",
          "sweep --pair non-isogenous --n 3 --n-range 3:4", "solve-congruence --gen 1,2 --M 2",
          "solve-congruence --M 0", "order --pair non-isogenous --n 4 --format xml", "frobnicate", ""})
        CHECK_MESSAGE(run(args).status == 2, args);
    CHECK(run("sweep --pair non-isogenous --n 4", "CCC_THREADS=0").status == 2);
    CHECK(run("--help").status == 0);
}
