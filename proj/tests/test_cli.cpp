#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(MINKARR_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("minkarr_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_SUITE("cli") {
    TEST_CASE("construct output verifies") {
        const std::string cli = MINKARR_CLI;
        auto grid = run("construct cube-grid --d 2 | " + cli + " verify --mode minkowski --intersecting");
        CHECK(grid.code == 0);
        CHECK(parse(grid)["count"] == 9);
        for (const std::string& c : {"icosahedron", "amplifier --k 1", "named --name circles8"}) {
            auto r = run("construct " + c + " | " + cli + " verify --mode strict --intersecting");
            CHECK_MESSAGE(r.code == 0, c);
        }
        for (const std::string& c : {"triangle-product --d 4", "named --name triangles10", "cube-grid --d 3"}) {
            auto r = run("construct " + c + " | " + cli + " verify --intersecting");
            CHECK_MESSAGE(r.code == 0, c);
        }
        auto strict_grid = run("construct cube-grid --d 2 | " + cli + " verify --mode strict");
        CHECK(strict_grid.code == 1);
        CHECK(parse(strict_grid)["first_violation"]["condition"] == "strict");
    }

    TEST_CASE("empty arrangement is vacuously fine") {
        auto path = temp_file("empty.json", R"({"body":{"dim":2,"shape":{"ball":{"r":"1"}}},"homothets":[]})");
        auto r = run("verify --mode strict --intersecting " + path);
        CHECK(r.code == 0);
        CHECK(parse(r)["count"] == 0);
    }

    TEST_CASE("malformed input exits with 2") {
        CHECK(run("verify " + temp_file("bad.json", "{not json")).code == 2);
        CHECK(run("verify " + temp_file("bad2.json", R"({"body":{"dim":2}})")).code == 2);
        CHECK(run("verify /nonexistent/file.json").code == 2);
        CHECK(run("verify --mode sideways").code == 2);
        CHECK(run("bound kappa-upper --body no-such-body").code == 2);
        CHECK(run("estimate-f --body cube:2 --t 3").code == 2);
        CHECK(run("").code == 2);
    }

    TEST_CASE("bounds") {
        auto r = run(std::string("bound kappa-upper --body ") + MINKARR_DATA_DIR + "/bodies/triangle.json");
        REQUIRE(r.code == 0);
        auto j = parse(r);
        CHECK(j["value"] == "216");
        CHECK(j["inputs"]["theta"] == "2");
        CHECK(j["inputs"]["N"] == "5");
        CHECK(parse(run("bound packing-upper --body cube:2 --lambda 1"))["value"] == "4");
        CHECK(parse(run("bound centroid-kappa-upper --d 2"))["value"] == "576");
        CHECK(parse(run("bound chain-upper --d 2"))["inputs"]["increasing_bound"] == "11");
        CHECK(parse(run("bound hadwiger-lower --d 12"))["value"] == "64/6561");
        CHECK(parse(run("bound hadwiger-lower --d 3"))["value"].contains("approx"));
    }

    TEST_CASE("sampling and estimation") {
        auto u = run("sample uniform --body triangle --n 5 --seed 3");
        REQUIRE(u.code == 0);
        CHECK(parse(u)["points"].size() == 5);
        CHECK(run("sample uniform --body triangle --n 5 --seed 3").out == u.out);
        auto s = run("sample strict-translates --body disc --oversample 8 --seed 2");
        REQUIRE(s.code == 0);
        auto arr = temp_file("strict.json", parse(s)["arrangement"].dump());
        CHECK(run("verify --mode strict --intersecting " + arr).code == 0);
        auto b = run("sample boundary-points --body triangle --oversample 32 --seed 5");
        CHECK(b.code == 0);
        CHECK_FALSE(parse(b)["points"].empty());
        auto f = run("estimate-f --body disc --t 1 --pairs 20000 --seed 4");
        REQUIRE(f.code == 0);
        CHECK(parse(f)["estimate"].get<double>() <= 0.75);
    }

    TEST_CASE("search") {
        auto hit = run("search --body disc --count 4 --seed 2");
        REQUIRE(hit.code == 0);
        auto path = temp_file("found.json", hit.out);
        CHECK(run("verify --mode strict --intersecting " + path).code == 0);
        auto miss = run("search --body disc --count 7 --lambda-lo 1 --lambda-hi 1 --steps 1000 --restarts 1");
        CHECK(miss.code == 1);
    }
}
