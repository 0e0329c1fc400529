#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fuzzyeuler/euler.hpp"
#include "fuzzyeuler/experiment.hpp"
#include "fuzzyeuler/io.hpp"
#include "test_support.hpp"

using namespace fuzzyeuler;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("fuzzyeuler_test_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("json round trip is exact") {
    std::mt19937 rng(31);
    FuzzySequence seq;
    for (int i = 0; i < 10; ++i) seq.push_back(fuzzyeuler::testing::random_fuzzy(rng));

    auto doc = to_json(seq);
    auto text = doc.dump();
    auto parsed = fuzzy_sequence_from_json(nlohmann::json::parse(text));
    REQUIRE(parsed.size() == seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(parsed[i].levels() == seq[i].levels());
        CHECK(parsed[i].lower() == seq[i].lower());
        CHECK(parsed[i].upper() == seq[i].upper());
    }
}

TEST_CASE("tri shorthand") {
    auto u = fuzzy_number_from_json(nlohmann::json::parse(R"({"tri": [0, 1, 2]})"));
    CHECK(metric_d(u, FuzzyNumber::triangular(0.0, 1.0, 2.0)) == 0.0);
    CHECK(u.size() == kDefaultGridSize);

    CHECK_THROWS(fuzzy_number_from_json(nlohmann::json::parse(R"({"tri": [0, 1]})")));
    CHECK_THROWS(fuzzy_number_from_json(nlohmann::json::parse(R"([1, 2, 3])")));
    CHECK_THROWS(fuzzy_sequence_from_json(nlohmann::json::parse("[]")));
}

TEST_CASE("config parsing and tolerance lookup") {
    auto cfg = config_from_json(nlohmann::json::parse(R"({
        "command": "reproduce-example",
        "p": 3.0,
        "upto": 12,
        "grid_size": 51,
        "tolerances": {"example": 1e-10},
        "output_path": "x.csv"
    })"));
    CHECK(cfg.command == "reproduce-example");
    CHECK(cfg.p == 3.0);
    CHECK(cfg.upto == 12);
    CHECK(cfg.grid_size == 51);
    CHECK(cfg.output_path == "x.csv");
    CHECK(tolerance_or(cfg, "example", 1e-12) == 1e-10);
    CHECK(tolerance_or(cfg, "compose", 1e-10) == 1e-10);
}

TEST_CASE("example generator") {
    auto seq = generate_example(3);
    // u_0 cuts [1+a, 3-a], u_1 cuts [-1+a, 1-a]
    for (std::size_t i = 0; i < seq[0].size(); ++i) {
        double a = seq[0].levels()[i];
        CHECK(seq[0].lower()[i] == doctest::Approx(1.0 + a).epsilon(1e-15));
        CHECK(seq[0].upper()[i] == doctest::Approx(3.0 - a).epsilon(1e-15));
        CHECK(seq[1].lower()[i] == doctest::Approx(-1.0 + a).epsilon(1e-15));
        CHECK(seq[1].upper()[i] == doctest::Approx(1.0 - a).epsilon(1e-15));
    }
    for (std::size_t n = 0; n + 1 <= 3; ++n)
        CHECK(metric_d(seq[n], seq[n + 1]) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("closed-form reproduction report") {
    auto rep = reproduce_example_report(2.0, 40, 101, 1e-12);
    CHECK(rep.ok);
    REQUIRE(rep.rows.size() == 41);

    auto rep1 = reproduce_example_report(1.0, 10, 101, 1e-12);
    for (std::size_t n = 1; n < rep1.rows.size(); ++n)
        CHECK(rep1.rows[n].cells[0] <= 1e-15);  // measured

    auto rep3 = reproduce_example_report(3.0, 4, 101, 1e-12);
    CHECK(rep3.rows[2].cells[0] == doctest::Approx(0.25).epsilon(1e-12));

    CHECK_THROWS_AS(reproduce_example_report(-1.0, 4, 101, 1e-12), std::invalid_argument);
}

TEST_CASE("command dispatch, reports, exit statuses") {
    TempDir tmp;
    ExperimentConfig cfg;
    cfg.output_path = (tmp.path / "rep.csv").string();

    cfg.command = "reproduce-example";
    cfg.p = 2.0;
    cfg.upto = 20;
    CHECK(run_command(cfg) == 0);
    auto first = slurp(cfg.output_path);
    CHECK(first.rfind("n,measured,closed_form,deviation", 0) == 0);
    CHECK(slurp(cfg.output_path + ".summary.txt").find("verdict: pass") != std::string::npos);

    // determinism: identical config -> byte-identical report
    CHECK(run_command(cfg) == 0);
    CHECK(slurp(cfg.output_path) == first);

    // impossible tolerance -> nonzero exit
    cfg.tolerances["example"] = 0.0;
    cfg.p = 2.3;
    CHECK(run_command(cfg) != 0);
    cfg.tolerances.clear();

    cfg.command = "compose-check";
    cfg.p = 1.5;
    cfg.upto = 10;
    CHECK(run_command(cfg) == 0);

    cfg.command = "diagnose";
    cfg.upto = 60;
    CHECK(run_command(cfg) == 0);
    CHECK(slurp(cfg.output_path + ".summary.txt").find("classification: unbounded") !=
          std::string::npos);

    cfg.command = "limits-check";
    cfg.upto = 100000;
    CHECK(run_command(cfg) == 0);

    cfg.command = "bounds";
    cfg.upto = 25;
    CHECK(run_command(cfg) == 0);
    CHECK(slurp(cfg.output_path).rfind("n,p,k,lower,exact,upper,pass", 0) == 0);

    cfg.command = "no-such-command";
    CHECK_THROWS_AS(run_command(cfg), std::invalid_argument);
}

TEST_CASE("transform command round trip through files") {
    TempDir tmp;
    auto in_path = (tmp.path / "seq.json").string();
    save_sequence(in_path, generate_example(30));

    ExperimentConfig cfg;
    cfg.command = "transform";
    cfg.p = 2.0;
    cfg.upto = 30;
    cfg.input_path = in_path;
    cfg.output_path = (tmp.path / "out.csv").string();
    CHECK(run_command(cfg) == 0);

    auto transformed = load_sequence(cfg.output_path + ".sequence.json");
    REQUIRE(transformed.size() == 31);
    CHECK(metric_d(transformed[30], example_limit()) <=
          std::pow(1.0 / 3.0, 30) + 1e-12);

    CHECK_THROWS(load_sequence((tmp.path / "missing.json").string()));
}
