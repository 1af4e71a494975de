#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qmock/series_io.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + QMOCK_BIN + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("expand") {
    auto r = run("expand omega --order 8");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "1 + 2*q + 3*q^2 + 4*q^3 + 6*q^4 + 8*q^5 + 10*q^6 + 14*q^7 + 18*q^8"));

    auto j = run("expand nu_tri --args a=a,z=z --order 6 --format json");
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["schema"] == "qmock/1");
    qmock::QSeries s = qmock::series_from_json(parsed["series"]);
    CHECK(s.acc() == 6);
    CHECK(s.coeff(0) == qmock::LaurentPoly::constant(1));

    CHECK(run("expand bogus").exit_code == 2);
    CHECK(run("expand omega --args a=1x2").exit_code == 2);
    // non-unit monomial where an inverse is required
    CHECK(run("expand omega1 --args a=2*a,z=z").exit_code == 3);

    // env default order
    auto e = run("expand omega", "QMOCK_DEFAULT_ORDER=5");
    CHECK(contains(e.out, "O(q^6)"));
}

TEST_CASE("verify") {
    CHECK(run("verify --id THM3 --order 40 --stable").exit_code == 0);
    CHECK(run("verify --id NOPE").exit_code == 2);
    CHECK(run("verify --id THM3 --order 5").exit_code == 4);
    CHECK(run("verify").exit_code == 2);

    auto printed = run("verify --id JTP_PRINTED --order 10 --stable");
    CHECK(printed.exit_code == 0);
    CHECK(contains(printed.out, "pass-as-expected"));
    CHECK(contains(printed.out, "mismatch at q^2"));

    auto all = run("verify --all --order 16 --workers 8 --format json --stable");
    CHECK(all.exit_code == 0);
    auto parsed = nlohmann::json::parse(all.out);
    CHECK(parsed["ok"] == true);
    CHECK(parsed["reports"].size() >= 55);
    CHECK(parsed["reports"][0]["id"] == "PW");
}

TEST_CASE("output file, step flag, env-driven verify order") {
    std::string path = std::string(QMOCK_DATA_DIR) + "/../build/cli_out.txt";
    auto r = run("expand omega --order 4 -o " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(contains(ss.str(), "1 + 2*q + 3*q^2 + 4*q^3 + 6*q^4"));

    auto g = run("expand bigG --args a=a*q,b=z*q --step 2 --order 10");
    CHECK(g.exit_code == 0);
    auto rho = run("expand rho3 --order 8");
    CHECK(rho.exit_code == 0);

    auto sub = run("enumerate p_substar 5");
    CHECK(contains(sub.out, "p_substar(5) = 9"));

    auto env = run("verify --id RAM --stable", "QMOCK_DEFAULT_ORDER=12");
    CHECK(env.exit_code == 0);
    CHECK(contains(env.out, "order=12"));
}

TEST_CASE("deterministic output across runs and worker counts") {
    auto a = run("verify --all --order 16 --workers 1 --stable");
    auto b = run("verify --all --order 16 --workers 8 --stable");
    auto c = run("verify --all --order 16 --workers 8 --stable");
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
}

TEST_CASE("enumerate") {
    auto r = run("enumerate p_star 5 --list");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "p_star(5) = 17"));
    CHECK(contains(r.out, "5~"));
    CHECK(contains(r.out, "3+1+1+0~"));

    CHECK(contains(run("enumerate p_prime 5").out, "p_prime(5) = 4"));
    CHECK(run("enumerate bogus 5").exit_code == 2);

    auto j = run("enumerate overpartitions 3 --list --format json");
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["count"] == 8);
    CHECK(parsed["items"].size() == 8);
    CHECK(parsed["items"][0][0].contains("value"));
    CHECK(parsed["items"][0][0].contains("over"));
}

TEST_CASE("crosscheck") {
    CHECK(run("crosscheck p_omega --max-n 25").exit_code == 0);
    CHECK(run("crosscheck p_nu --max-n 25").exit_code == 0);
    CHECK(run("crosscheck p_star --max-n 20").exit_code == 0);
    CHECK(run("crosscheck p_substar --max-n 20").exit_code == 0);
    CHECK(run("crosscheck p_prime --max-n 25").exit_code == 0);
    CHECK(run("crosscheck overpartitions --max-n 20").exit_code == 0);
    CHECK(run("crosscheck bogus --max-n 5").exit_code == 2);
}

TEST_CASE("catalog matches the shipped machine-readable file") {
    auto r = run("catalog --format json --stable");
    CHECK(r.exit_code == 0);
    std::ifstream f(std::string(QMOCK_DATA_DIR) + "/catalog.json");
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(r.out == ss.str());

    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["entries"].size() >= 55);
    CHECK(parsed["classical"].size() >= 16);
    CHECK(parsed["families"].size() == 18);
}
