// End-to-end checks of the mdr binary: JSON output, exit codes, determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MDR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) {
        r.out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json parse(const RunResult& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("count: transfer, recurrence, and oracle methods agree") {
    auto r = run_cli("count --base path:2 --n 4");
    CHECK(r.exit_code == 0);
    auto doc = parse(r);
    CHECK(doc["value"] == "71");
    CHECK(doc["method"] == "transfer");

    auto neg = run_cli("count --base path:2 --n -6");
    CHECK(neg.exit_code == 0);
    CHECK(parse(neg)["value"] == "11");
    CHECK(parse(neg)["method"] == "recurrence");

    auto oracle = run_cli("count --base path:2 --n -6 --method oracle");
    CHECK(oracle.exit_code == 0);
    CHECK(parse(oracle)["value"] == "11");

    auto zero = run_cli("count --base path:1 --n 0");
    CHECK(zero.exit_code == 0);
    CHECK(parse(zero)["value"] == "1");
}

TEST_CASE("count methods agree wherever more than one applies") {
    for (const std::string base : {"path:1", "path:2"}) {
        for (int n = -3; n <= 3; ++n) {
            auto oracle = run_cli("count --base " + base + " --n " + std::to_string(n) +
                                  " --method oracle");
            auto recurrence = run_cli("count --base " + base + " --n " + std::to_string(n) +
                                      " --method recurrence");
            REQUIRE(oracle.exit_code == 0);
            REQUIRE(recurrence.exit_code == 0);
            CHECK(parse(oracle)["value"] == parse(recurrence)["value"]);
            if (n >= 0) {
                auto transfer = run_cli("count --base " + base + " --n " + std::to_string(n) +
                                        " --method transfer");
                CHECK(parse(transfer)["value"] == parse(oracle)["value"]);
            }
        }
    }
}

TEST_CASE("census reference values") {
    auto a = run_cli("census --base path:2 --n -6");
    CHECK(a.exit_code == 0);
    CHECK(parse(a)["positive"] == "41");
    CHECK(parse(a)["negative"] == "30");

    auto b = run_cli("census --base path:2 --n -7");
    CHECK(parse(b)["positive"] == "121");
    CHECK(parse(b)["negative"] == "107");

    auto c = run_cli("census --base path:2 --n 2");
    CHECK(parse(c)["positive"] == "7");
    CHECK(parse(c)["negative"] == "0");
}

TEST_CASE("recurrence discovery") {
    auto r = run_cli("recurrence --base path:2");
    CHECK(r.exit_code == 0);
    auto doc = parse(r);
    CHECK(doc["order"] == 3);
    CHECK(doc["coeffs"] == nlohmann::json({"3", "1", "-1"}));
}

TEST_CASE("extend reports the 2^n integrality failure") {
    const std::string path = "cli_test_seq.json";
    {
        std::ofstream f(path);
        f << "[\"2\", \"4\", \"8\"]";
    }
    auto r = run_cli("extend --seq " + path + " --lo -1 --hi 5");
    CHECK(r.exit_code == 0);
    auto doc = parse(r);
    CHECK(doc["recurrence"] == nlohmann::json({"2"}));
    CHECK(doc["integral"] == false);
    CHECK(doc["first_nonintegral_index"] == -1);
    CHECK(doc["values"][0] == "1/2");  // value at lo = -1
    std::remove(path.c_str());
}

TEST_CASE("verify subcommands pass and emit one verdict per instance") {
    auto r = run_cli("verify reciprocity1 --base path:2 --n 0..4");
    CHECK(r.exit_code == 0);
    auto doc = parse(r);
    CHECK(doc["pass"] == true);
    CHECK(doc["verdicts"].size() == 5);

    auto adj = run_cli("verify adjunction --base path:1 --ns 2,-3,1");
    CHECK(adj.exit_code == 0);
    CHECK(parse(adj)["verdicts"].size() == 1);

    auto sweep = run_cli("verify adjunction --base path:1 --ns -1..1,-1..1");
    CHECK(sweep.exit_code == 0);
    CHECK(parse(sweep)["verdicts"].size() == 9);

    auto eq1 = run_cli("verify eq1 --m 1 --n 0..2");
    CHECK(eq1.exit_code == 0);
    CHECK(parse(eq1)["pass"] == true);

    auto rec2 = run_cli("verify reciprocity2 --base path:1");
    CHECK(rec2.exit_code == 0);

    auto stanley = run_cli("verify stanley --m 2 --n 3");
    CHECK(stanley.exit_code == 0);
    auto sdoc = parse(stanley);
    CHECK(sdoc["verdicts"][0]["params"]["epsilon"] == "-1");

    auto mod2 = run_cli("verify mod2 --m 2 --nmax 4");
    CHECK(mod2.exit_code == 0);
}

TEST_CASE("poly and genfunc output") {
    auto p = run_cli("poly --m 1 --n 2");
    CHECK(p.exit_code == 0);
    CHECK(parse(p)["poly"] == "x + z^2");

    auto pf = run_cli("poly --m 1 --n 2 --formal");
    CHECK(parse(pf)["poly"] == "x[1,1] + z[1,1]*z[1,2]");

    auto g = run_cli("genfunc --base path:1");
    CHECK(g.exit_code == 0);
    auto gd = parse(g);
    CHECK(gd["numer"] == "(1)");
    CHECK(gd["denom"] == "(1) + (-z)*t + (-x)*t^2");
}

TEST_CASE("graph export") {
    auto j = run_cli("graph --base path:2 --n -1");
    CHECK(j.exit_code == 0);
    auto doc = parse(j);
    CHECK(doc["vertices"].size() == 6);
    CHECK(doc["edges"].size() == 5);  // 4 boundary hedges + 1 antivedge

    auto d = run_cli("graph --base path:2 --n 2 --dot");
    CHECK(d.exit_code == 0);
    CHECK(d.out.rfind("graph signed {", 0) == 0);
}

TEST_CASE("file-based base graphs") {
    const std::string path = "cli_test_base.txt";
    {
        std::ofstream f(path);
        f << "# path on two vertices\nvertices 2\nedge 0 1\n";
    }
    auto r = run_cli("count --base file:" + path + " --n 4");
    CHECK(r.exit_code == 0);
    CHECK(parse(r)["value"] == "71");  // same as path:2
    std::remove(path.c_str());
}

TEST_CASE("deterministic output") {
    auto a = run_cli("count --base path:3 --n 5");
    auto b = run_cli("count --base path:3 --n 5");
    CHECK(a.out == b.out);
    auto c = run_cli("verify stanley --m 2 --n 0..3");
    auto e = run_cli("verify stanley --m 2 --n 0..3");
    CHECK(c.out == e.out);
}

TEST_CASE("usage and guard errors use exit code 2 and a machine-readable code") {
    auto bad = run_cli("count --base nope:3 --n 1");
    CHECK(bad.exit_code == 2);
    CHECK(parse(bad)["error"]["code"] == "usage");

    auto guard = run_cli("census --base path:4 --n -8");
    CHECK(guard.exit_code == 2);
    CHECK(parse(guard)["error"]["code"] == "size_guard");

    auto missing = run_cli("count --n 1");
    CHECK(missing.exit_code == 2);

    auto neg_transfer = run_cli("count --base path:2 --n -3 --method transfer");
    CHECK(neg_transfer.exit_code == 2);
    CHECK(parse(neg_transfer)["error"]["code"] == "domain");
}
