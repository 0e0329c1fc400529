#include "fuzzyeuler/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "fuzzyeuler/binomial_bounds.hpp"
#include "fuzzyeuler/euler.hpp"
#include "fuzzyeuler/io.hpp"
#include "fuzzyeuler/tauberian.hpp"

namespace fuzzyeuler {

using nlohmann::json;

namespace {

std::string fmt(double x) {
    if (std::isnan(x)) return "";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

long long upto_or(const ExperimentConfig& cfg, long long fallback) {
    return cfg.upto >= 0 ? cfg.upto : fallback;
}

FuzzySequence input_or_example(const ExperimentConfig& cfg, long long upto) {
    if (!cfg.input_path.empty())
        return load_sequence(cfg.input_path, static_cast<std::size_t>(cfg.grid_size));
    return generate_example(static_cast<std::size_t>(upto),
                            static_cast<std::size_t>(cfg.grid_size));
}

int run_transform(const ExperimentConfig& cfg) {
    const long long upto = upto_or(cfg, 40);
    FuzzySequence seq = input_or_example(cfg, upto);
    if (static_cast<long long>(seq.size()) <= upto)
        throw std::runtime_error("input sequence shorter than requested transform length");
    FuzzySequence transformed = euler_transform(seq, static_cast<std::size_t>(upto), cfg.p);

    const double tol = tolerance_or(cfg, "detect", 1e-8);
    std::optional<FuzzyNumber> limit;
    if (transformed.size() >= 2)
        limit = detect_limit(transformed, tol, std::min<std::size_t>(10, transformed.size()));
    FuzzyNumber ref = limit ? *limit : transformed.back();
    GapSeries gap;
    if (transformed.size() >= 2) gap = sequence_gap(transformed);

    Report rep;
    rep.columns = {"n", "d_ref", "gap"};
    for (long long n = 0; n <= upto; ++n)
        rep.rows.push_back({n,
                            {metric_d(transformed[static_cast<std::size_t>(n)], ref),
                             n >= 1 ? gap.values[static_cast<std::size_t>(n - 1)] : kNaN}});
    rep.summary = {{"command", "transform"},
                   {"p", fmt(cfg.p)},
                   {"upto", std::to_string(upto)},
                   {"limit_detected", limit ? "yes" : "no"}};
    write_report(rep, cfg.output_path);
    save_sequence(cfg.output_path + ".sequence.json", transformed);
    return 0;
}

int run_diagnose(const ExperimentConfig& cfg) {
    const long long upto = upto_or(cfg, 99);
    FuzzySequence seq = input_or_example(cfg, upto);
    GapSeries gap = sequence_gap(seq);
    RateVerdict v = classify_rate(gap);

    Report rep;
    rep.columns = {"n", "g_n"};
    for (std::size_t i = 0; i < gap.values.size(); ++i)
        rep.rows.push_back({static_cast<long long>(i + 1), {gap.values[i]}});
    rep.summary = {{"command", "diagnose"},
                   {"classification", to_string(v.classification)},
                   {"tail_sup", fmt(v.tail_sup)},
                   {"slope", fmt(v.slope_estimate)}};
    write_report(rep, cfg.output_path);
    return 0;
}

int run_bounds(const ExperimentConfig& cfg) {
    const long long n_max = upto_or(cfg, 200);
    const double slack = tolerance_or(cfg, "slack", 1e-12);
    const int p_count = 20;

    Report rep;
    rep.columns = {"n", "p", "k", "lower", "exact", "upper", "pass"};
    std::size_t failures = 0, total = 0;
    for (long long n = 1; n <= n_max; ++n) {
        for (int j = 1; j <= p_count; ++j) {
            const double p = static_cast<double>(j) / (p_count + 1.0);
            for (const auto& rec : verify_bounds(static_cast<int>(n), p, slack)) {
                rep.rows.push_back({rec.n,
                                    {rec.p, static_cast<double>(rec.k), rec.lower, rec.exact,
                                     rec.upper, rec.pass ? 1.0 : 0.0}});
                ++total;
                if (!rec.pass) ++failures;
            }
        }
    }
    rep.ok = failures == 0;
    rep.summary = {{"command", "bounds"},
                   {"n_max", std::to_string(n_max)},
                   {"p_count", std::to_string(p_count)},
                   {"slack", fmt(slack)},
                   {"checks", std::to_string(total)},
                   {"failures", std::to_string(failures)},
                   {"verdict", rep.ok ? "pass" : "fail"}};
    write_report(rep, cfg.output_path);
    return rep.ok ? 0 : 1;
}

int run_compose_check(const ExperimentConfig& cfg) {
    const long long upto = upto_or(cfg, 20);
    const double tol = tolerance_or(cfg, "compose", 1e-10);
    FuzzySequence seq = input_or_example(cfg, upto);
    if (static_cast<long long>(seq.size()) <= upto)
        throw std::runtime_error("input sequence shorter than requested check length");
    EulerParams params(cfg.p);
    auto [composed, direct] = ceiling_composition(seq, static_cast<std::size_t>(upto), params);

    Report rep;
    rep.columns = {"n", "deviation"};
    double max_dev = 0.0;
    for (long long n = 0; n <= upto; ++n) {
        double d = metric_d(composed[static_cast<std::size_t>(n)],
                            direct[static_cast<std::size_t>(n)]);
        max_dev = std::max(max_dev, d);
        rep.rows.push_back({n, {d}});
    }
    rep.ok = max_dev <= tol;
    rep.summary = {{"command", "compose-check"},
                   {"p", fmt(params.p)},
                   {"q", std::to_string(params.q)},
                   {"r", fmt(params.r)},
                   {"max_deviation", fmt(max_dev)},
                   {"tolerance", fmt(tol)},
                   {"verdict", rep.ok ? "pass" : "fail"}};
    write_report(rep, cfg.output_path);
    return rep.ok ? 0 : 1;
}

int run_reproduce_example(const ExperimentConfig& cfg) {
    const long long upto = upto_or(cfg, 40);
    const double tol = tolerance_or(cfg, "example", 1e-12);
    Report rep = reproduce_example_report(cfg.p, upto, cfg.grid_size, tol);
    write_report(rep, cfg.output_path);
    return rep.ok ? 0 : 1;
}

int run_limits_check(const ExperimentConfig& cfg) {
    const long long n_max = upto_or(cfg, 1000000);
    const double tol = tolerance_or(cfg, "limits", 1e-4);

    Report rep;
    rep.columns = {"q", "n", "left", "left_err", "right", "right_err"};
    bool ok = true;
    double worst_final = 0.0;
    for (int q = 1; q <= 3; ++q) {
        const double left_limit = (q + 1.0) / (2.0 * q);
        const double right_limit = q / (2.0 * (q + 1.0));
        double prev_err = kNaN;
        for (long long n = 1000; n <= n_max; n *= 10) {
            auto [left, right] = proof_limit_terms(n, q);
            const double le = std::abs(left - left_limit);
            const double re = std::abs(right - right_limit);
            rep.rows.push_back({q, {static_cast<double>(n), left, le, right, re}});
            const double err = std::max(le, re);
            // O(1/n) decay: each decade should shrink the error ~10x.
            if (!std::isnan(prev_err) && err > 0.0 && !(prev_err / err > 5.0)) ok = false;
            prev_err = err;
            if (n == n_max) {
                worst_final = std::max(worst_final, err);
                if (err > tol) ok = false;
            }
        }
    }
    rep.ok = ok;
    rep.summary = {{"command", "limits-check"},
                   {"n_max", std::to_string(n_max)},
                   {"max_error_at_n_max", fmt(worst_final)},
                   {"tolerance", fmt(tol)},
                   {"verdict", ok ? "pass" : "fail"}};
    write_report(rep, cfg.output_path);
    return ok ? 0 : 1;
}

}  // namespace

double tolerance_or(const ExperimentConfig& cfg, const std::string& name, double fallback) {
    auto it = cfg.tolerances.find(name);
    return it == cfg.tolerances.end() ? fallback : it->second;
}

ExperimentConfig config_from_json(const json& doc) {
    ExperimentConfig cfg;
    if (doc.contains("command")) cfg.command = doc.at("command").get<std::string>();
    if (doc.contains("p")) cfg.p = doc.at("p").get<double>();
    if (doc.contains("upto")) cfg.upto = doc.at("upto").get<long long>();
    if (doc.contains("grid_size")) cfg.grid_size = doc.at("grid_size").get<int>();
    if (doc.contains("input_path")) cfg.input_path = doc.at("input_path").get<std::string>();
    if (doc.contains("output_path")) cfg.output_path = doc.at("output_path").get<std::string>();
    if (doc.contains("tolerances"))
        for (const auto& [k, v] : doc.at("tolerances").items())
            cfg.tolerances[k] = v.get<double>();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json doc;
    in >> doc;
    return config_from_json(doc);
}

FuzzySequence generate_example(std::size_t upto, std::size_t grid_size) {
    FuzzySequence seq;
    seq.reserve(upto + 1);
    for (std::size_t n = 0; n <= upto; ++n) {
        const double c = (n % 2 == 0) ? 1.0 : -1.0;
        seq.push_back(FuzzyNumber::triangular(c, c + 1.0, c + 2.0, grid_size));
    }
    return seq;
}

FuzzyNumber example_limit(std::size_t grid_size) {
    return FuzzyNumber::triangular(0.0, 1.0, 2.0, grid_size);
}

Report reproduce_example_report(double p, long long upto, int grid_size, double tol) {
    if (!(p > 0.0)) throw std::invalid_argument("reproduction needs p > 0");
    const auto gs = static_cast<std::size_t>(grid_size);
    FuzzySequence seq = generate_example(static_cast<std::size_t>(upto), gs);
    FuzzyNumber mu = example_limit(gs);

    Report rep;
    rep.columns = {"n", "measured", "closed_form", "deviation"};
    const double ratio = std::abs(p - 1.0) / (p + 1.0);
    double closed = 1.0;  // |p-1|^n/(p+1)^n at n = 0
    double max_dev = 0.0;
    for (long long n = 0; n <= upto; ++n) {
        const double measured = metric_d(euler_mean(seq, static_cast<std::size_t>(n), p), mu);
        const double dev = std::abs(measured - closed);
        max_dev = std::max(max_dev, dev);
        rep.rows.push_back({n, {measured, closed, dev}});
        closed *= ratio;
    }
    rep.ok = max_dev <= tol;
    rep.summary = {{"command", "reproduce-example"},
                   {"p", fmt(p)},
                   {"upto", std::to_string(upto)},
                   {"max_deviation", fmt(max_dev)},
                   {"tolerance", fmt(tol)},
                   {"verdict", rep.ok ? "pass" : "fail"}};
    return rep;
}

void write_report(const Report& rep, const std::string& csv_path) {
    if (csv_path.empty()) throw std::invalid_argument("output path must be nonempty");
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot open output file: " + csv_path);
    for (std::size_t i = 0; i < rep.columns.size(); ++i)
        csv << (i ? "," : "") << rep.columns[i];
    csv << '\n';
    for (const auto& row : rep.rows) {
        csv << row.n;
        for (double c : row.cells) csv << ',' << fmt(c);
        csv << '\n';
    }

    std::ofstream summary(csv_path + ".summary.txt");
    if (!summary) throw std::runtime_error("cannot open summary file for: " + csv_path);
    for (const auto& [k, v] : rep.summary) summary << k << ": " << v << '\n';
}

int run_command(const ExperimentConfig& cfg) {
    if (cfg.command == "transform") return run_transform(cfg);
    if (cfg.command == "diagnose") return run_diagnose(cfg);
    if (cfg.command == "bounds") return run_bounds(cfg);
    if (cfg.command == "compose-check") return run_compose_check(cfg);
    if (cfg.command == "reproduce-example") return run_reproduce_example(cfg);
    if (cfg.command == "limits-check") return run_limits_check(cfg);
    throw std::invalid_argument("unknown command: " + cfg.command);
}

}  // namespace fuzzyeuler
