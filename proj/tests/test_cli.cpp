#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "../tools/commands.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cremona::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json without_time(const std::string& text) {
    json j = json::parse(text);
    j.erase("elapsed_ms");
    return j;
}

fs::path scratch(const std::string& name) {
    auto p = fs::temp_directory_path() / ("cremona_cli_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("usage errors") {
    CHECK(cli({"census", "--q", "5"}).code == cremona::cli::Usage);
    CHECK(cli({"census"}).code == cremona::cli::Usage);
    CHECK(cli({"census", "--q", "2", "--exact", "--sampled"}).code == cremona::cli::Usage);
    CHECK(cli({"verify", "nonsense"}).code == cremona::cli::Usage);
    CHECK(cli({"verify", "produit", "--q", "4"}).code == cremona::cli::Usage);
    CHECK(cli({"frobnicate"}).code == cremona::cli::Usage);
    CHECK(cli({"amalgam", "nf", "--word", "b1 x"}).code == cremona::cli::Usage);
    CHECK(cli({"amalgam", "ball", "--radius", "9"}).code == cremona::cli::Usage);
    CHECK(cli({"--help"}).code == cremona::cli::Ok);
}

TEST_CASE("census output is independent of the thread count") {
    auto a = cli({"census", "--q", "2", "--exact", "--threads", "1", "--no-cache"});
    auto b = cli({"census", "--q", "2", "--exact", "--threads", "4", "--no-cache"});
    REQUIRE(a.code == cremona::cli::Ok);
    REQUIRE(b.code == cremona::cli::Ok);
    CHECK(without_time(a.out) == without_time(b.out));
    auto j = json::parse(a.out);
    CHECK(j.at("total_degree8_orbits") == 8190);
    CHECK(j.at("pgl3_class_count") == 38);
    CHECK(j.at("bound_satisfied") == true);
}

TEST_CASE("census files and cache") {
    const auto dir = scratch("cache");
    const auto out = dir / "census.json", csv = dir / "census.csv";
    fs::create_directories(dir);
    auto first = cli({"census", "--q", "2", "--cache-dir", dir.string(), "--out", out.string(), "--csv", csv.string()});
    REQUIRE(first.code == cremona::cli::Ok);
    CHECK(first.out.empty());
    CHECK(json::parse(slurp(out)).at("pgl3_class_count") == 38);
    CHECK(slurp(csv).rfind("class,nodal,p0", 0) == 0);

    const auto entry_path = dir / "census_q2_exact.json";
    REQUIRE(fs::exists(entry_path));
    json entry = json::parse(slurp(entry_path));
    CHECK(entry.at("key").at("version") == cremona::cli::kCacheVersion);

    // A tampered result under a matching key shows that the cache is read.
    entry["result"]["pgl3_class_count"] = 999;
    std::ofstream(entry_path) << entry.dump();
    auto hit = cli({"census", "--q", "2", "--cache-dir", dir.string()});
    CHECK(json::parse(hit.out).at("pgl3_class_count") == 999);

    // A different version stamp is recomputed and rewritten.
    entry["key"]["version"] = "census-v0";
    std::ofstream(entry_path) << entry.dump();
    auto stale = cli({"-v", "census", "--q", "2", "--cache-dir", dir.string()});
    CHECK(stale.code == cremona::cli::Ok);
    CHECK(json::parse(stale.out).at("pgl3_class_count") == 38);
    CHECK(stale.err.find("stale") != std::string::npos);
    CHECK(json::parse(slurp(entry_path)).at("key").at("version") == cremona::cli::kCacheVersion);

    std::ofstream(entry_path) << "{broken";
    CHECK(json::parse(cli({"census", "--q", "2", "--cache-dir", dir.string()}).out).at("pgl3_class_count") == 38);
    fs::remove_all(dir);
}

TEST_CASE("checkpoint errors are infrastructure failures") {
    const auto path = scratch("ckpt.jsonl");
    std::ofstream(path) << "{not a header\n";
    CHECK(cli({"census", "--q", "2", "--checkpoint", path.string()}).code == cremona::cli::Infrastructure);
    fs::remove(path);
    CHECK(cli({"census", "--q", "2", "--checkpoint", path.string(), "--batch-size", "16384"}).code == cremona::cli::Ok);
    CHECK(cli({"census", "--q", "2", "--checkpoint", path.string(), "--batch-size", "8192"}).code ==
          cremona::cli::Infrastructure);
    fs::remove(path);
    CHECK(cli({"census", "--q", "2", "--budget", "0.000001", "--no-cache"}).code == cremona::cli::Infrastructure);
}

TEST_CASE("verify suites") {
    for (std::vector<std::string> args : {std::vector<std::string>{"verify", "same-orbit", "--q", "2"},
                                          {"verify", "produit", "--q", "3", "--samples", "2000"},
                                          {"verify", "beta-twist"},
                                          {"verify", "mq-identity", "--q-max", "97"},
                                          {"verify", "lambda-scan", "--seeds", "5"}}) {
        auto r = cli(args);
        CHECK(r.code == cremona::cli::Ok);
        auto j = json::parse(r.out);
        CHECK(j.at("violations") == 0);
        CHECK(j.at("checks").get<int>() > 0);
    }
    CHECK(json::parse(cli({"verify", "same-orbit"}).out).at("checks") == 240 * 7);
}

TEST_CASE("chambers and complexes") {
    auto ch = cli({"chambers", "--example", "3.8"});
    REQUIRE(ch.code == cremona::cli::Ok);
    auto j = json::parse(ch.out);
    CHECK(j.at("chambers").size() == 4);
    CHECK(j.at("walls") == json::array({"E+E'", "E'", "L'"}));
    CHECK(cli({"chambers", "--example", "2.4"}).code == cremona::cli::Usage);
    CHECK(json::parse(cli({"chambers", "--degrees", "1,1"}).out).at("chambers").size() == 5);

    auto cx = cli({"complex", "--points", "2"});
    REQUIRE(cx.code == cremona::cli::Ok);
    auto k = json::parse(cx.out);
    CHECK(k.at("squares") == 5);
    CHECK(k.at("vertices") == 11);

    const auto dot = scratch("complex.dot");
    CHECK(cli({"complex", "--points", "2", "--dot", dot.string()}).code == cremona::cli::Ok);
    CHECK(slurp(dot).rfind("digraph", 0) == 0);
    fs::remove(dot);
}

TEST_CASE("amalgam commands") {
    auto nf = cli({"amalgam", "nf", "--word", "b1 b1"});
    CHECK(nf.code == cremona::cli::Ok);
    CHECK(nf.out == "\n");
    CHECK(cli({"amalgam", "signature", "--word", "b1 e:g b2 e:h b1"}).out == "b1 b2 b1\n");
    auto ball = json::parse(cli({"amalgam", "ball", "--bertini", "2", "--radius", "1"}).out);
    CHECK(ball.at("vertices") == 4);
    CHECK(ball.at("root_degree") == 3);
    CHECK(ball.at("is_tree") == true);
}
