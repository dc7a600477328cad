#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

// End-to-end tests against the installed binary. The test runner exports
// SEGSYZ_BIN with the path of the freshly built executable.

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    std::string out;
    int code = -1;
};

RunResult run(const std::string& args, bool keep_stderr = false) {
    const char* bin = std::getenv("SEGSYZ_BIN");
    if (!bin) throw std::runtime_error("SEGSYZ_BIN not set");
    std::string cmd = std::string(bin) + " " + args +
                      (keep_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// env assignments prefix the command; popen runs through /bin/sh
RunResult run_env(const std::string& env, const std::string& args) {
    const char* bin = std::getenv("SEGSYZ_BIN");
    if (!bin) throw std::runtime_error("SEGSYZ_BIN not set");
    std::string cmd = env + " " + std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path fresh_dir(const std::string& name) {
    fs::path d = fs::temp_directory_path() / name;
    fs::remove_all(d);
    return d;
}

}  // namespace

TEST_CASE("betti emits the documented json schema") {
    RunResult r = run("betti --config segre:1,1,1 --degree 2 --index 0");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["config"] == "segre:1,1,1");
    CHECK(j["total"] == 9);
    REQUIRE(j["entries"].size() == 7);
    bool central = false;
    for (const auto& e : j["entries"]) {
        CHECK(e["j"] == 0);
        CHECK(e["t"] == 2);
        REQUIRE(e["b"].size() == 6);
        CHECK(e["rank"].get<long>() >= 1);
        if (e["b"] == json::array({1, 1, 1, 1, 1, 1})) {
            central = true;
            CHECK(e["rank"] == 3);
        }
    }
    CHECK(central);
}

TEST_CASE("betti csv output") {
    RunResult r = run("betti --config segre:1,1,1 --degree 2 --index 0 --csv");
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 11) == "j,t,b,rank\n");
    int lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == 8);  // header + seven rows
    CHECK(r.out.find("0,2,1;1;1;1;1;1,3") != std::string::npos);
}

TEST_CASE("np-check verifies a clean configuration") {
    RunResult r = run("np-check --config segre:1,1 -p 2");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "verified-through-5");  // default bound p + 3
    CHECK(j["max_degree"] == 5);
    CHECK(j["capped"] == false);
    REQUIRE(j["rows"].size() == 5);
    for (const auto& row : j["rows"]) {
        CHECK(row["verified"] == true);
        CHECK(row["witnesses"].empty());
    }
}

TEST_CASE("np-check reports the degree-six obstruction") {
    RunResult r = run("np-check --config segre:1,1,1 -p 4 --max-degree 6");
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j["status"] == "failed");
    bool hit = false;
    for (const auto& row : j["rows"]) {
        if (row["verified"] == true) continue;
        CHECK(row["p"] == 4);
        CHECK(row["q"] == 2);
        REQUIRE(row["witnesses"].size() == 1);
        CHECK(row["witnesses"][0] == json::array({3, 3, 3, 3, 3, 3}));
        hit = true;
    }
    CHECK(hit);
}

TEST_CASE("witness certifies a non-bounding cycle") {
    RunResult r = run("witness --config segre:1,1,1 -p 4 --degrees 6");
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    REQUIRE(j["entries"].size() == 1);
    const auto& e = j["entries"][0];
    CHECK(e["b"] == json::array({3, 3, 3, 3, 3, 3}));
    CHECK(e["t"] == 6);
    CHECK(e["rank"] == 1);
    CHECK(e["certified_non_bounding"] == true);
    REQUIRE(!e["cycle"].empty());
    for (const auto& term : e["cycle"]) {
        CHECK(term["simplex"].size() == 4);  // a 3-cycle
        CHECK(term["coeff"].is_string());
    }
}

TEST_CASE("witness comes back empty below the obstruction") {
    RunResult r = run("witness --config segre:1,1,1 -p 3 --degrees 5");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["entries"].empty());
}

TEST_CASE("koszul-check agrees with the simplicial count") {
    RunResult r = run("koszul-check --config segre:1,1,1 -p 1 -q 1");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["koszul"] == 9);
    CHECK(j["cps"] == 9);
    CHECK(j["summary"] == "match: 9 = 9");
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(run("betty").code == 2);               // unknown subcommand
    CHECK(run("betti --degree 2 --index 0").code == 2);  // missing required
    CHECK(run("betti --config segre:1,1 --degree 2 --index 0 --nope").code ==
          2);
    CHECK(run("betti --config what:1,1 --degree 2 --index 0").code == 2);
    CHECK(run("np-check --config segre:1,1 -p 0").code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("betti --help").code == 0);
}

TEST_CASE("warm cache reruns are byte-identical") {
    fs::path dir = fresh_dir("segsyz-cli-cache-warm");
    std::string flag = " --cache-dir " + dir.string() + " ";
    std::string q = "betti --config segre:1,1,1 --degree 2 --index 0";
    RunResult cold = run(flag + q);
    CHECK(cold.code == 0);
    RunResult warm = run(flag + q);
    CHECK(warm.code == 0);
    CHECK(cold.out == warm.out);

    RunResult stats = run(flag + "cache stats");
    CHECK(stats.code == 0);
    json js = json::parse(stats.out);
    CHECK(js["entries"].get<long>() >= 7);

    RunResult clear = run(flag + "cache clear");
    CHECK(clear.code == 0);
    CHECK(json::parse(clear.out)["cleared"] == true);
    RunResult after = run(flag + "cache stats");
    CHECK(json::parse(after.out)["entries"] == 0);
    fs::remove_all(dir);
}

TEST_CASE("cache directory falls back to the environment") {
    fs::path dir = fresh_dir("segsyz-cli-cache-env");
    std::string env = "SEGRE_CACHE_DIR=" + dir.string();
    RunResult r =
        run_env(env, "betti --config segre:1,1 --degree 2 --index 0");
    CHECK(r.code == 0);
    RunResult stats = run_env(env, "cache stats");
    CHECK(stats.code == 0);
    CHECK(json::parse(stats.out)["entries"].get<long>() >= 1);
    fs::remove_all(dir);
}

TEST_CASE("cache subcommand without a directory is a usage error") {
    RunResult r = run_env("SEGRE_CACHE_DIR=", "cache stats");
    CHECK(r.code == 2);
}

TEST_CASE("a corrupt cache file is skipped, not fatal") {
    fs::path dir = fresh_dir("segsyz-cli-cache-corrupt");
    fs::create_directories(dir);
    std::ofstream(dir / "ranks.jsonl") << "{ not json\n";
    RunResult r = run(" --cache-dir " + dir.string() +
                      " betti --config segre:1,1 --degree 2 --index 0");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["total"] == 1);
    fs::remove_all(dir);
}

TEST_CASE("ufo-demo runs the built-in instance") {
    RunResult r = run("ufo-demo");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["op"] == "fill_simple");
    CHECK(j["route"] == "cone");
    CHECK(j["verified"] == true);
    CHECK(j["target"] == json::array({2, 2, 3, 1, 2, 2}));
    CHECK(j["instance"]["op"] == "fill_simple");  // echoed for reproduction
}

TEST_CASE("ufo-demo accepts an instance file") {
    fs::path file = fs::temp_directory_path() / "segsyz-cli-instance.json";
    {
        json inst;
        inst["config"] = "segre:1,1,1";
        inst["op"] = "decompose_ufos";
        inst["beta"] = {3, 2, 3, 2, 3, 2};
        inst["coord"] = 1;
        json terms = json::array();
        auto term = [&](std::vector<int> s, const char* c) {
            json t;
            t["simplex"] = s;
            t["coeff"] = c;
            terms.push_back(t);
        };
        term({0, 4, 5}, "1");
        term({1, 4, 5}, "-1");
        term({2, 4, 6}, "1");
        term({0, 4, 6}, "-1");
        term({0, 1, 2}, "1");
        inst["eta"] = terms;
        std::ofstream(file) << inst.dump();
    }
    RunResult r = run("ufo-demo --instance " + file.string());
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["op"] == "decompose_ufos");
    CHECK(j["pieces"] == 2);
    CHECK(j["axes"] == json::array({{4, 5}, {4, 6}}));
    CHECK(j["remainder_terms"] == 1);
    CHECK(j["verified"] == true);
    fs::remove(file);
}

TEST_CASE("ufo-demo surfaces invalid instances as input errors") {
    fs::path file = fs::temp_directory_path() / "segsyz-cli-bad-instance.json";
    std::ofstream(file) << R"({"config":"segre:1,1,1","op":"nope"})";
    RunResult r = run("ufo-demo --instance " + file.string());
    CHECK(r.code == 2);
    fs::remove(file);
}

TEST_CASE("seeded runs are reproducible") {
    std::string q = "--seed 42 betti --config segre:1,1,1 --degree 2 --index 0";
    CHECK(run(q).out == run(q).out);
}
