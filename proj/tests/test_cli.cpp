#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace
{
    struct run_result
    {
        int code;
        std::string out;
    };

    /// Runs the CLI through the shell with stderr discarded.
    run_result run(const std::string & args, const std::string & env = "")
    {
        std::string command = env + (env.empty() ? "" : " ") + "'" ZS_CLI "' " + args + " 2>/dev/null";
        FILE * pipe = popen(command.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        char buffer[4096];
        while (auto n = std::fread(buffer, 1, sizeof buffer, pipe))
            out.append(buffer, n);
        int status = pclose(pipe);
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
    }

    std::string slurp(const fs::path & path)
    {
        std::ifstream in{path, std::ios::binary};
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    struct temp_dir
    {
        fs::path path;

        temp_dir()
        {
            std::random_device rd;
            path = fs::temp_directory_path() / ("zs-cli-" + std::to_string(rd()));
            fs::create_directories(path);
        }

        ~temp_dir() { fs::remove_all(path); }
    };

    json normalized_report(const std::string & text)
    {
        auto j = json::parse(text);
        j["elapsed_ms"] = 0;
        j["tool_version"] = "VERSION";
        return j;
    }
}

TEST_CASE("analyze output is stable and matches the golden record")
{
    auto a = run("analyze --n 157 --seq 1^75,81^2,77 --json");
    auto b = run("analyze --n 157 --seq 1^75,81^2,77 --json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = json::parse(a.out);
    CHECK(j == json::parse(slurp(fs::path{ZS_GOLDEN_DIR} / "analyze-157.json")));
    CHECK(j["minimal"] == true);
    CHECK(j["unsplittable"] == true);
    CHECK(j["index_value"] == "2");

    auto text1 = run("analyze --n 5 --seq 1,1,3");
    CHECK(text1.code == 0);
    CHECK(text1.out == run("analyze --n 5 --seq 1,1,3").out);

    auto first = json::parse(run("analyze --n 157 --seq 1^73,80^4,78 --json").out);
    CHECK(first["minimal"] == true);
    CHECK(first["unsplittable"] == true);
    CHECK(first["index_value"] == "2");

    auto small = json::parse(run("analyze --n 5 --seq 1,1,3 --json").out);
    CHECK(small["unsplittable"] == false);
    CHECK(small["witness"] == json{{"target", 3}, {"x", 1}, {"y", 2}});
}

TEST_CASE("exit codes")
{
    CHECK(run("analyze --n 5 --seq 1,,3").code == 2);
    CHECK(run("analyze --n 5 --seq 9").code == 2);
    CHECK(run("analyze --n 1 --seq 0").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("verify no-such-target").code == 2);
    CHECK(run("enumerate --n 5 --length 9").code == 2);
    CHECK(run("enumerate --n 5 --length 2 --filter odd").code == 2);

    CHECK(run("verify gao-counterexample").code == 0);
    CHECK(run("props --p-set 11").code == 0);

    auto partial = run("enumerate --n 13 --length 6 --budget 10");
    CHECK(partial.code == 1);
    auto report = run("verify i-of-g --n-range 10..12 --budget 20");
    CHECK(report.code == 1);
    CHECK(json::parse(report.out)["status"] == "incomplete");
}

TEST_CASE("verify report schema is pinned")
{
    auto r = run("verify gao-counterexample");
    REQUIRE(r.code == 0);
    CHECK(normalized_report(r.out) == json::parse(slurp(fs::path{ZS_GOLDEN_DIR} / "verify-gao-counterexample.json")));
}

TEST_CASE("enumerate output")
{
    CHECK(run("enumerate --n 5 --length 2").out
            == "{\"n\":5,\"seq\":\"1,4\",\"len\":2,\"index\":\"5/5\",\"unsplittable\":false,\"orbit\":2}\n");
    auto six = run("enumerate --n 6 --length 2");
    CHECK(std::count(six.out.begin(), six.out.end(), '\n') == 3);
    auto d5 = run("enumerate --n 5 --length 5 --filter unsplittable");
    CHECK(d5.out == "{\"n\":5,\"seq\":\"1^5\",\"len\":5,\"index\":\"5/5\",\"unsplittable\":true,\"orbit\":4}\n");

    auto one = run("enumerate --n 13 --length 6 --jobs 1");
    auto eight = run("enumerate --n 13 --length 6 --jobs 8");
    CHECK(one.code == 0);
    CHECK(one.out == eight.out);
    CHECK(std::count(one.out.begin(), one.out.end(), '\n') == 15);
}

TEST_CASE("enumerate --out writes the same bytes as stdout")
{
    temp_dir dir;
    auto file = dir.path / "out.jsonl";
    auto r = run("enumerate --n 11 --min-length 2 --out '" + file.string() + "'");
    CHECK(r.code == 0);
    CHECK(slurp(file) == run("enumerate --n 11 --min-length 2").out);
}

TEST_CASE("cache hits are byte-identical to recomputation")
{
    temp_dir dir;
    const std::string env = "ZS_CACHE_DIR='" + dir.path.string() + "'";
    const std::string args = "enumerate --n 12 --min-length 3 --max-length 8 --filter unsplittable";
    auto fresh = run(args);
    auto miss = run(args, env);
    std::size_t files = 0;
    for (const auto & entry : fs::directory_iterator(dir.path)) {
        (void) entry;
        ++files;
    }
    CHECK(files == 1);
    auto hit = run(args, env);
    CHECK(fresh.out == miss.out);
    CHECK(miss.out == hit.out);
    CHECK(hit.code == 0);

    // an incomplete run leaves no cache entry behind
    temp_dir other;
    run("enumerate --n 13 --length 6 --budget 10", "ZS_CACHE_DIR='" + other.path.string() + "'");
    CHECK(fs::is_empty(other.path));
}

TEST_CASE("verify reports are appended to the results directory")
{
    temp_dir dir;
    run("verify gao-counterexample --n 16 --results-dir '" + dir.path.string() + "'");
    run("verify gao-counterexample --n 24", "ZS_RESULTS_DIR='" + dir.path.string() + "'");
    std::ifstream in{dir.path / "verify.jsonl"};
    std::string line;
    std::vector<json> records;
    while (std::getline(in, line))
        records.push_back(json::parse(line));
    REQUIRE(records.size() == 2);
    CHECK(records[0]["report"]["params"]["n"] == 16);
    CHECK(records[1]["report"]["params"]["n"] == 24);
    CHECK(records[0]["run"].contains("recorded_at"));
    CHECK(records[0]["report"]["details"]["orders"]["16"]["index"] == "48/16");
}

TEST_CASE("props emits one record per property")
{
    auto r = run("props --p-set 11,13 --seed 7");
    CHECK(r.code == 0);
    std::istringstream in{r.out};
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        auto j = json::parse(line);
        CHECK(j["passed"] == true);
        ++count;
    }
    CHECK(count == 10);
    CHECK(r.out == run("props --p-set 11,13 --seed 7").out);
}
