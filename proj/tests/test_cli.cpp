#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args) {
    std::string cmd = std::string(TRIFACT_CLI_PATH) + " " + args + " 2>/dev/null";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json run_json(const std::string& args, int expect_code = 0) {
    Result r = run("--json " + args);
    CHECK(r.code == expect_code);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("proj-collinear verdicts") {
    auto j = run_json("proj-collinear --n 4 --m 2 --k 2 --j 1 --q 2 --mode all");
    CHECK(j["agree"] == true);
    CHECK(j["verdicts"]["predicate"]["complete"] == true);
    CHECK(j["verdicts"]["oracle"]["complete"] == true);
    CHECK(j["verdicts"]["witness"]["complete"] == true);
    j = run_json("proj-collinear --n 6 --m 3 --k 3 --j 2 --q 2");
    CHECK(j["verdicts"]["oracle"]["complete"] == false);
    CHECK(j["verdicts"]["oracle"]["failing_t"] == 0);
    j = run_json("proj-collinear --n 5 --m 2 --k 2 --j 0 --q 3 --mode oracle");
    CHECK(j["verdicts"]["oracle"]["complete"] == true);
    CHECK_FALSE(j["verdicts"].contains("predicate"));
    Result t = run("proj-collinear --n 4 --m 2 --k 2 --j 1 --q 2");
    CHECK(t.code == 0);
    CHECK(t.out.find("oracle: complete") != std::string::npos);
}

TEST_CASE("bisection verbs") {
    auto j = run_json("bis-collinear --k 1 --m 1 --k1 0 --k2 0 --q 2");
    CHECK(j["verdicts"]["oracle"]["complete"] == false);
    CHECK(j["agree"] == true);
    j = run_json("bis-concurrent --k 2 --m 2 --k1 0 --k2 0 --q 3");
    CHECK(j["verdicts"]["oracle"]["complete"] == true);
    CHECK(j["verdicts"]["oracle"]["cases"] == 15);
    CHECK(j["verdicts"]["predicate"]["resolution"] == "complete");
    j = run_json("bis-concurrent --k 1 --m 1 --k1 0 --k2 1 --q 2");
    CHECK(j["verdicts"]["oracle"]["complete"] == true);
    j = run_json("bis-concurrent --k 2 --m 2 --k1 0 --k2 0 --q 2 --no-reps");
    CHECK(j["verdicts"]["oracle"]["complete"] == false);
    CHECK(j["verdicts"]["oracle"].contains("failing_lines"));
    j = run_json("bis-concurrent --k 2 --m 2 --k1 0 --k2 1 --q 2");
    CHECK(j["verdicts"]["predicate"]["resolution"] == "unresolved(paper)");
    CHECK(j["agree"] == true);
    CHECK(run("bis-concurrent --k 2 --m 2 --k1 0 --k2 0 --q 2 --mode witness").code == 1);
}

TEST_CASE("scans") {
    auto j = run_json("scan --family proj --max-n 5 --qs 2,3");
    CHECK(j["mismatches"] == 0);
    CHECK(j["rows"].size() > 100);
    j = run_json("scan --family sn --max-n 12");
    CHECK(j["mismatches"] == 0);
    j = run_json("scan --family bis-col --max-k 3 --qs 2");
    CHECK(j["mismatches"] == 0);
    CHECK(j["rows"].size() == 28);
    j = run_json("scan --family bis-con --max-k 2 --qs 2,3");
    CHECK(j["mismatches"] == 0);
    CHECK(j["unresolved"] > 0);
    CHECK(run("scan --family bogus").code == 1);
    CHECK(run("scan --family proj --qs 6").code == 1);
}

TEST_CASE("orbits and golden files") {
    Result r = run("orbits --q 3 --k 2 --golden");
    CHECK(r.code == 0);
    CHECK(r.out.find("15 orbits") != std::string::npos);
    CHECK(r.out.find("golden: match") != std::string::npos);
    auto j = run_json("orbits --q 2 --k 3 --golden");
    CHECK(j["golden"] == true);
    CHECK(j["total"] == 357119);
    j = run_json("orbits --q 2 --k 1");
    CHECK(j["orbits"] == 1);
    CHECK(j["total"] == 2);
    const std::string wrong = "cli_wrong_golden.txt";
    std::ofstream(wrong) << "24 64^2 72 96 144 192 288^2 384 576^3 768 1151\n";
    CHECK(run("orbits --q 3 --k 2 --golden-file " + wrong).code == 2);
    std::remove(wrong.c_str());
    CHECK(run("orbits --q 5 --k 1 --golden").code == 1);
}

TEST_CASE("counts, weyl and induction") {
    auto j = run_json("counts --q 3 --k 2");
    CHECK(j["rows"][0]["H"] == "24/65");
    CHECK(j["rows"][0]["sufficient"] == false);
    CHECK(j["gaussian_2k_k"] == "130");
    j = run_json("counts --q 4 --k 2 --digits 3");
    CHECK(j["rows"][0]["H"] == "60/119");
    CHECK(j["rows"][0]["H_decimal"] == "0.504");
    j = run_json("weyl --n 5 --m 2 --k 4 --j 1");
    CHECK(j["factorisation"] == false);
    CHECK(j["double_cosets"] == 2);
    j = run_json("weyl --n 4 --m 2 --k 2 --j 1");
    CHECK(j["factorisation"] == true);
    j = run_json("induction --q 3 --k 3 --samples 12");
    CHECK(j["ok"] == true);
    CHECK(run("induction --q 2 --k 3").code == 1);
}

TEST_CASE("exit codes") {
    CHECK(run("proj-collinear --n 4 --m 2 --k 2 --j 5 --q 2").code == 1);
    CHECK(run("proj-collinear --n 4 --m 2 --k 2 --j 1 --q 6").code == 1);
    CHECK(run("proj-collinear --n 4 --q 2").code == 1);
    CHECK(run("").code == 1);
    CHECK(run("proj-collinear --n 8 --m 4 --k 4 --j 2 --q 2 --mode oracle --budget 1000").code == 3);
    CHECK(run("bis-collinear --k 4 --m 4 --k1 0 --k2 4 --q 2 --mode oracle").code == 3);
    CHECK(run("--help").code == 0);
}

TEST_CASE("output does not depend on thread count") {
    for (std::string args : {"bis-concurrent --k 2 --m 2 --k1 0 --k2 0 --q 2 --no-reps",
                             "scan --family bis-col --max-k 2 --qs 2,3", "orbits --q 3 --k 2"}) {
        Result a = run("--json --threads 1 " + args), b = run("--json --threads 3 " + args),
               c = run("--json --threads 1 " + args);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }
}
