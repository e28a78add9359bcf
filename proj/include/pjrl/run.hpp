#pragma once

#include "pjrl/pjrl.hpp"
#include "pjrl/transfer.hpp"

#include <filesystem>
#include <optional>
#include <set>

namespace pjrl {

struct RunConfig {
    std::string plant;
    std::string patch = "all";  // xy | zy | xz | sphere | all
    std::optional<Rational> k_min, k_max;  // unset: default log-spaced grid
    int samples = 400;
    std::set<std::string> emit = {"csv", "json"};  // csv | svg | json
    std::filesystem::path out_dir = ".";
    bool symbolic_lambda = false;
};

/// Gain samples: linear between explicit bounds, otherwise log-spaced in |k|
/// over [1e-3, 1e3] on both signs plus 0.
std::vector<Rational> make_k_grid(const std::optional<Rational>& k_min, const std::optional<Rational>& k_max,
                                  int samples);

/// One sweep branch: a root tracked across the gain grid by nearest-neighbor
/// continuation; a sample has no entry where the branch degenerated away.
struct Branch {
    int id = 0;
    std::vector<std::optional<std::complex<double>>> points;  // aligned with k_grid
};

struct LocusReport {
    RationalFunction plant;
    HomogeneousSystem closure;
    LocusSlice initial, terminal;
    std::vector<AsymptoteDirection> asymptotes_xy, asymptotes_zy;
    std::vector<Rational> k_grid;
    std::vector<SweepPoint> sweep;
    std::vector<Branch> branches;
    std::vector<Rational> degree_drops;          // gains where deg(d + k n) fell
    std::vector<MultiPoly> symbolic_system;      // filled in symbolic-lambda mode
};

/// Nearest-neighbor pairing of sweep roots into continuous branches.
std::vector<Branch> pair_branches(const std::vector<SweepPoint>& sweep, int expected_count);

/// Full pipeline: parse, pencil, closure, endpoint slices, sweep, pairing,
/// then file emission per config (locus.csv, complementary.csv, sphere.json,
/// report.json, optional SVGs). Files are written atomically.
LocusReport run(const RunConfig& config);

/// Serialized forms (exposed for determinism tests).
std::string locus_csv(const LocusReport& report);
std::string complementary_csv(const LocusReport& report);
std::string sphere_json(const LocusReport& report);
std::string report_json(const LocusReport& report);
std::string locus_svg(const LocusReport& report);
std::string complementary_svg(const LocusReport& report);

}  // namespace pjrl
