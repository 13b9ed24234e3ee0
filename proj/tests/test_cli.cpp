#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir() {
    static int counter = 0;
    fs::path d = fs::temp_directory_path() /
                 ("swpaths_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(d);
    return d;
}

// Runs the CLI with the given arguments, capturing stdout/stderr.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    fs::path dir = fresh_dir();
    fs::path out = dir / "stdout.txt";
    fs::path err = dir / "stderr.txt";
    std::string cmd = env_prefix + "\"" + SWPATHS_BIN_PATH + "\" " + args + " > \"" +
                      out.string() + "\" 2> \"" + err.string() + "\"";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    fs::remove_all(dir);
    return r;
}

std::string data_file(const std::string& name) {
    return (fs::path(SWPATHS_DATA_DIR) / name).string();
}

} // namespace

TEST_CASE("distances: triangle fixture summary and matrices") {
    fs::path dir = fresh_dir();
    auto r = run_cli("distances " + data_file("triangle.edges") + " --out " + dir.string());
    CHECK(r.exit_code == 0);
    REQUIRE_FALSE(r.out.empty());
    json summary = json::parse(r.out);
    CHECK(summary["notions"]["bottleneck"]["effective_diameter"] == 2.0);
    CHECK(summary["notions"]["bottleneck"]["diameter"] == 2.0);
    CHECK(summary["analyzed"]["nodes"] == 3);
    CHECK(summary["analyzed"]["distinct_weights"] == 2);

    // The same JSON is written to disk.
    json on_disk = json::parse(slurp(dir / "summary.json"));
    CHECK(on_disk == summary);

    std::string btl = slurp(dir / "bottleneck.csv");
    CHECK(btl.find(",a,b,c") == 0);
    CHECK(btl.find("a,0,2,1\n") != std::string::npos);
    for (const char* f : {"geodesic.csv", "weighted.csv", "minimax.csv"}) {
        CHECK(fs::exists(dir / f));
    }
    fs::remove_all(dir);
}

TEST_CASE("distances: unit weights collapse the three matrices") {
    fs::path dir = fresh_dir();
    auto r = run_cli("distances " + data_file("unit_triangle.edges") + " --out " + dir.string());
    CHECK(r.exit_code == 0);
    std::string geo = slurp(dir / "geodesic.csv");
    CHECK(geo == slurp(dir / "weighted.csv"));
    CHECK(geo == slurp(dir / "bottleneck.csv"));
    fs::remove_all(dir);
}

TEST_CASE("distances: strategies and worker counts do not change the bytes") {
    fs::path d1 = fresh_dir(), d2 = fresh_dir(), d3 = fresh_dir();
    std::string in = data_file("synthetic50.edges");
    CHECK(run_cli("distances " + in + " --out " + d1.string()).exit_code == 0);
    CHECK(run_cli("distances " + in + " --strategy labelset-fw --out " + d2.string()).exit_code ==
          0);
    CHECK(run_cli("distances " + in + " --workers 3 --out " + d3.string(),
                  "SWPATHS_WORKERS=2 ")
              .exit_code == 0);
    for (const char* f : {"geodesic.csv", "weighted.csv", "bottleneck.csv", "minimax.csv",
                          "summary.json"}) {
        CHECK(slurp(d1 / f) == slurp(d2 / f));
        CHECK(slurp(d1 / f) == slurp(d3 / f));
    }
    fs::remove_all(d1);
    fs::remove_all(d2);
    fs::remove_all(d3);
}

TEST_CASE("distances: path reconstruction output") {
    auto r = run_cli("distances " + data_file("triangle.edges") + " --path a,b --out " +
                     fresh_dir().string());
    CHECK(r.exit_code == 0);
    json summary = json::parse(r.out);
    REQUIRE(summary.contains("paths"));
    REQUIRE(summary["paths"].size() == 1);
    CHECK(summary["paths"][0]["path"] == "a->c->b");
    CHECK(summary["paths"][0]["distance"] == 2.0);
    CHECK(summary["paths"][0]["hops"] == 2);
    CHECK(summary["paths"][0]["max_width"] == 1.0);
}

TEST_CASE("distances: multiplicities mode stores reciprocal weights") {
    fs::path dir = fresh_dir();
    fs::path in = dir / "mult.edges";
    std::ofstream(in) << "a b 2\nb c 4\n";
    auto r = run_cli("oracle " + in.string() + " --mode multiplicities --source a --target c");
    CHECK(r.exit_code == 0);
    json o = json::parse(r.out);
    // Weights 0.5 and 0.25; the only path a-b-c has 2 hops, width 0.5.
    CHECK(o["pair"]["bottleneck"] == 1.0);
    CHECK(o["pair"]["weighted"] == 0.75);
    fs::remove_all(dir);
}

TEST_CASE("distances: disconnected input analyzes the giant component by default") {
    fs::path dir = fresh_dir();
    fs::path in = dir / "two_parts.edges";
    std::ofstream(in) << "a b 1\nb c 1\nx y 1\n";
    auto r = run_cli("distances " + in.string() + " --out " + dir.string());
    CHECK(r.exit_code == 0);
    json s = json::parse(r.out);
    CHECK(s["analysis_scope"] == "giant_component");
    CHECK(s["whole_graph"]["nodes"] == 5);
    CHECK(s["whole_graph"]["components"] == 2);
    CHECK(s["analyzed"]["nodes"] == 3);
    // Matrices cover only the giant component: no "inf" entries.
    CHECK(slurp(dir / "bottleneck.csv").find("inf") == std::string::npos);

    fs::path dir2 = fresh_dir();
    auto r2 = run_cli("distances " + in.string() + " --whole-graph --out " + dir2.string());
    CHECK(r2.exit_code == 0);
    json s2 = json::parse(r2.out);
    CHECK(s2["analysis_scope"] == "whole_graph");
    CHECK(s2["analyzed"]["nodes"] == 5);
    CHECK(slurp(dir2 / "bottleneck.csv").find("inf") != std::string::npos);
    fs::remove_all(dir);
    fs::remove_all(dir2);
}

TEST_CASE("survival: per-notion curves land on disk with sane shapes") {
    fs::path dir = fresh_dir();
    auto r = run_cli("survival " + data_file("path.edges") + " --out " + dir.string());
    CHECK(r.exit_code == 0);
    std::string curve = slurp(dir / "survival_geodesic.csv");
    // path a-b-c-d: distances {1,1,1,2,2,3} -> survival 0.5, 1/6, 0.
    std::istringstream in(curve);
    std::string header;
    std::getline(in, header);
    CHECK(header == "value,survival");
    double pv = -1.0, pf = 2.0;
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        double v = std::stod(line.substr(0, comma));
        double f = std::stod(line.substr(comma + 1));
        CHECK(v > pv);
        CHECK(f < pf);
        pv = v;
        pf = f;
        ++rows;
    }
    CHECK(rows == 3);
    CHECK(pf == 0.0);
    for (const char* f : {"survival_weighted.csv", "survival_bottleneck.csv",
                          "survival_minimax.csv", "survival.json"}) {
        CHECK(fs::exists(dir / f));
    }
    fs::remove_all(dir);
}

TEST_CASE("fit: recovers the gamma sample shipped with the repo") {
    fs::path dir = fresh_dir();
    auto r = run_cli("fit --values " + data_file("gamma_sample.csv") + " --out " + dir.string());
    fs::remove_all(dir);
    CHECK(r.exit_code == 0);
    json f = json::parse(r.out);
    CHECK(f["kind"] == "sample");
    double shape = f["fits"]["sample"]["shape"];
    double scale = f["fits"]["sample"]["scale"];
    CHECK(shape == doctest::Approx(2.0).epsilon(0.05));
    CHECK(scale == doctest::Approx(3.0).epsilon(0.05));
    CHECK(f["fits"]["sample"]["bins"].is_number_integer());
}

TEST_CASE("fit: degenerate sample reports a fit error") {
    fs::path dir = fresh_dir();
    fs::path in = dir / "flat.csv";
    std::ofstream out(in);
    for (int i = 0; i < 200; ++i) out << "1.5\n";
    out.close();
    auto r = run_cli("fit --values " + in.string() + " --out " + dir.string());
    CHECK(r.exit_code != 0);
    json e = json::parse(r.err);
    CHECK(e["error"]["type"] == "fit");
    fs::remove_all(dir);
}

TEST_CASE("fit: distance notions from a graph input") {
    fs::path dir = fresh_dir();
    auto r = run_cli("fit " + data_file("synthetic50.edges") + " --notion geodesic --out " +
                     dir.string());
    fs::remove_all(dir);
    // A 50-node graph yields 1225 pairs, enough for the minimum sample size;
    // the hop-count distribution may or may not fit well, but the command
    // must succeed and report all requested blocks.
    CHECK(r.exit_code == 0);
    json f = json::parse(r.out);
    CHECK(f["kind"] == "distances");
    CHECK(f["fits"].contains("geodesic"));
    CHECK_FALSE(f["fits"].contains("weighted"));
}

TEST_CASE("ensemble: byte-identical run.json across reruns with one seed") {
    fs::path d1 = fresh_dir(), d2 = fresh_dir();
    std::string args = "ensemble --kind er --nodes 24 --prob 0.15 --samples 4 --seed 11 "
                       "--analysis-cap 2 --out ";
    CHECK(run_cli(args + d1.string()).exit_code == 0);
    CHECK(run_cli(args + d2.string()).exit_code == 0);
    std::string a = slurp(d1 / "run.json");
    CHECK_FALSE(a.empty());
    CHECK(a == slurp(d2 / "run.json"));
    CHECK(slurp(d1 / "pooled_survival_bottleneck.csv") ==
          slurp(d2 / "pooled_survival_bottleneck.csv"));
    json run = json::parse(a);
    CHECK(run["samples"] == 4);
    CHECK(run["analyzed_samples"] <= 2);
    CHECK(run["per_sample"].size() == 4);
    fs::remove_all(d1);
    fs::remove_all(d2);
}

TEST_CASE("ensemble: degree-matched mode compares against the reference") {
    fs::path dir = fresh_dir();
    auto r = run_cli("ensemble --kind degree-matched --reference " +
                     data_file("synthetic50.edges") + " --samples 2 --seed 3 --out " +
                     dir.string());
    CHECK(r.exit_code == 0);
    json run = json::parse(slurp(dir / "run.json"));
    CHECK(run["kind"] == "degree-matched");
    CHECK(run.contains("comparison"));
    CHECK(run["comparison"]["reference_bottleneck_effective_diameter"].is_number());
    fs::remove_all(dir);
}

TEST_CASE("neuro: default bound and variations") {
    auto r = run_cli("neuro");
    CHECK(r.exit_code == 0);
    json n = json::parse(r.out);
    CHECK(n["noise_rms"] == doctest::Approx(3.74e-4).epsilon(0.005));
    CHECK(n["snr"] == doctest::Approx(2.2e3).epsilon(0.01));
    CHECK(n["bits_per_second"] == doctest::Approx(1700.0).epsilon(0.002));
    CHECK(n["bound_seconds"] == doctest::Approx(0.0411765).epsilon(1e-4));

    auto r2 = run_cli("neuro --diameter 2");
    json n2 = json::parse(r2.out);
    CHECK(n2["bound_seconds"] == doctest::Approx(0.0117647).epsilon(1e-4));

    auto r3 = run_cli("neuro --refractory-ms 1");
    json n3 = json::parse(r3.out);
    CHECK(n3["effective_symbol_rate_hz"] == 1000.0);
    CHECK(n3["bound_seconds"] == doctest::Approx(0.070).epsilon(1e-4));
}

TEST_CASE("oracle: exhaustive pair answer with paths") {
    auto r = run_cli("oracle " + data_file("triangle.edges") +
                     " --source a --target b --paths");
    CHECK(r.exit_code == 0);
    json o = json::parse(r.out);
    const json& pair = o["pair"];
    CHECK(pair["bottleneck"] == 2.0);
    CHECK(pair["geodesic"] == 1.0);
    CHECK(pair["weighted"] == 2.0);
    CHECK(pair["minimax_width"] == 1.0);
    CHECK(pair["simple_paths"] == 2);
    json want = json::array({"a", "c", "b"});
    bool found = false;
    for (const auto& p : pair["optimal_paths"]["bottleneck"]) {
        if (p == want) found = true;
    }
    CHECK(found);

    // Without endpoints the command enumerates all pairs.
    auto r2 = run_cli("oracle " + data_file("triangle.edges"));
    CHECK(r2.exit_code == 0);
    CHECK(json::parse(r2.out)["pairs"].size() == 3);
}

TEST_CASE("self-test: quick mode passes") {
    auto r = run_cli("self-test --quick");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ok ") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    auto r2 = run_cli("--self-test");
    CHECK(r2.exit_code == 0);
}

TEST_CASE("errors: malformed input yields machine-readable stderr and nonzero exit") {
    fs::path dir = fresh_dir();
    fs::path bad = dir / "bad.edges";
    std::ofstream(bad) << "a b 1\na b 2\n"; // duplicate edge
    auto r = run_cli("distances " + bad.string() + " --out " + dir.string());
    CHECK(r.exit_code == 1);
    json e = json::parse(r.err);
    CHECK(e["error"]["type"] == "parse");
    std::string msg = e["error"]["message"];
    CHECK(msg.find("line 2") != std::string::npos);

    auto r2 = run_cli("distances " + (dir / "missing.edges").string());
    CHECK(r2.exit_code == 1);
    json e2 = json::parse(r2.err);
    CHECK_FALSE(e2["error"]["message"].get<std::string>().empty());
    fs::remove_all(dir);
}

TEST_CASE("errors: unknown flags fail loudly") {
    auto r = run_cli("distances --definitely-not-a-flag");
    CHECK(r.exit_code != 0);
}
