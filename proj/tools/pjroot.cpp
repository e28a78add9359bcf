#include "pjrl/run.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

std::optional<pjrl::Rational> parse_gain(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto r = pjrl::parse_rational(text);
    if (!r) throw CLI::ValidationError("expected a rational number, got '" + text + "'");
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact projective root locus of a rational transfer function"};

    pjrl::RunConfig config;
    std::string k_min_text, k_max_text, emit_text = "csv,json";
    std::string out_dir = ".";

    app.add_option("--plant", config.plant, "Transfer function, e.g. \"(s+1)/s^2\"")->required();
    app.add_option("--patch", config.patch, "Output patch: xy, zy, xz, sphere or all")
        ->check(CLI::IsMember({"xy", "zy", "xz", "sphere", "all"}))
        ->capture_default_str();
    app.add_option("--k-min", k_min_text, "Lowest gain (rational); enables a linear grid");
    app.add_option("--k-max", k_max_text, "Highest gain (rational); enables a linear grid");
    app.add_option("--samples", config.samples, "Gain samples in the sweep")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    app.add_option("--emit", emit_text, "Comma list of csv, svg, json")->capture_default_str();
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();
    app.add_flag("--symbolic-lambda", config.symbolic_lambda,
                 "Include the symbolic intermediary system in report.json");

    CLI11_PARSE(app, argc, argv);

    try {
        config.k_min = parse_gain(k_min_text);
        config.k_max = parse_gain(k_max_text);
        config.out_dir = out_dir;
        config.emit.clear();
        std::stringstream ss(emit_text);
        std::string kind;
        while (std::getline(ss, kind, ',')) {
            if (kind != "csv" && kind != "svg" && kind != "json") {
                std::cerr << "error: unknown emit kind '" << kind << "'\n";
                return 2;
            }
            config.emit.insert(kind);
        }

        const pjrl::LocusReport report = pjrl::run(config);
        std::cout << "wrote " << config.out_dir.string() << ": " << report.branches.size() << " branches, "
                  << report.initial.finite_points.size() + report.initial.infinite_points.size()
                  << " initial and "
                  << report.terminal.finite_points.size() + report.terminal.infinite_points.size()
                  << " terminal points\n";
        return 0;
    } catch (const pjrl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pjrl::NonCoprimeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "pipeline error: " << e.what() << "\n";
        return 4;
    }
}
