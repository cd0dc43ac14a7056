#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

using json = nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(UNITENSOR_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json coeffs(std::initializer_list<int> c) { return json{{"coeffs", c}}; }

}  // namespace

TEST_CASE("table") {
    const auto r1 = run("table --n 1 --format json");
    REQUIRE(r1.status == 0);
    const auto j1 = json::parse(r1.out);
    REQUIRE(j1["rows"].size() == 1);
    CHECK(j1["rows"][0]["mu"] == "1|1|1");
    CHECK(j1["rows"][0]["V"] == coeffs({1}));
    CHECK(j1["rows"][0]["root"] == "real");

    const auto r2 = run("table --n 2 --format json");
    REQUIRE(r2.status == 0);
    const auto j2 = json::parse(r2.out);
    CHECK(j2["rows"].size() == 8);
    for (const auto& row : j2["rows"]) {
        if (row["mu"] == "2|2|2") {
            CHECK(row["U"] == coeffs({1}));
            CHECK(row["V"] == json{{"coeffs", json::array()}});
            CHECK(row["root"] == "none");
        }
    }

    const auto r3 = run("table --n 3 --format json");
    REQUIRE(r3.status == 0);
    const auto j3 = json::parse(r3.out);
    CHECK(j3["rows"].size() == 27);
    bool seen = false;
    for (const auto& row : j3["rows"]) {
        if (row["mu"] != "1^3|1^3|1^3") continue;
        seen = true;
        CHECK(row["U"] == coeffs({1, 1}));
        CHECK(row["V"] == coeffs({0, 1}));
        CHECK(row["A"] == coeffs({6, 1}));
        CHECK(row["d"] == 2);
        CHECK(row["delta"] == 0);
        CHECK(row["root"] == "imaginary");
    }
    CHECK(seen);

    const auto csv = run("table --n 2 --format csv");
    CHECK(csv.status == 0);
    CHECK(csv.out.rfind("mu,V,U,A,d,delta,root\n", 0) == 0);

    CHECK(run("table --n 3 --mu '1^3|1^3|1^3'").status == 0);
    CHECK(run("table --n 3 --mu '1^3|1^3'").status == 2);
    CHECK(run("table --n 7").status == 2);
    CHECK(run("table --n 0").status == 2);
    CHECK(run("table --n 2 --format xml").status == 2);
}

TEST_CASE("check") {
    CHECK(run("check --suite thm347 --max-n 4").status == 0);
    CHECK(run("check --suite eq344").status == 0);
    const auto h = run("check --suite harcos --samples 500 --format json");
    REQUIRE(h.status == 0);
    const auto j = json::parse(h.out);
    CHECK(j[0]["suite"] == "harcos");
    CHECK(j[0]["pass"] == true);
    CHECK(run("check --suite nonsense").status == 2);
    CHECK(run("check").status == 2);
    const auto list = run("check --list");
    CHECK(list.status == 0);
    CHECK(list.out.find("locks") != std::string::npos);
}

TEST_CASE("oracle") {
    const auto a = run("oracle --n 2 --q 2 --format json");
    REQUIRE(a.status == 0);
    for (const auto& row : json::parse(a.out)["rows"]) CHECK(row["match"] == true);

    const auto b = run("oracle --n 3 --q 2 --format json");
    REQUIRE(b.status == 0);
    for (const auto& row : json::parse(b.out)["rows"]) {
        CHECK(row["match"] == true);
        if (row["mu"] == "1^3|1^3|1^3") {
            CHECK(row["value"] == 3);
            CHECK(row["pipeline"] == 3);
        }
    }

    CHECK(run("oracle --n 2 --q 3 --g 1").status == 0);
    CHECK(run("oracle --n 2 --q 3 --generic --twists 2,1,1").status == 0);
    CHECK(run("oracle --n 2 --q 3 --generic --twists 2,2,1").status == 2);
    CHECK(run("oracle --n 4 --q 2").status == 2);
    CHECK(run("oracle --n 2 --q 4").status == 2);
    CHECK(run("bogus").status == 2);
}
