#include "pjrl/run.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>

namespace pjrl {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    if (v == 0) v = 0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double round12(double v) { return std::stod(fmt_double(v)); }

json value_json(const AlgebraicValue& v) {
    json j;
    if (v.is_exact()) {
        j["exact"] = rational_str(v.exact());
    } else {
        if (!v.is_boxed()) j["poly"] = v.defining().str("y");
        j["interval"] = {rational_str(v.lo()), rational_str(v.hi())};
    }
    j["approx"] = round12(v.to_double());
    return j;
}

json point_json(const ProjectivePoint& p) {
    return json{{"x", value_json(p.x)}, {"y", value_json(p.y)}, {"z", value_json(p.z)}};
}

const char* patch_name(Patch p) {
    switch (p) {
        case Patch::xy: return "xy";
        case Patch::zy: return "zy";
        case Patch::xz: return "xz";
    }
    return "?";
}

json slice_json(const LocusSlice& slice) {
    json j;
    j["finite"] = json::array();
    for (const auto& p : slice.finite_points) j["finite"].push_back(point_json(p));
    j["infinite"] = json::array();
    for (const auto& p : slice.infinite_points) j["infinite"].push_back(point_json(p));
    j["components"] = json::array();
    for (const auto& c : slice.components) {
        json polys = json::array();
        for (const auto& g : c.polys) polys.push_back(g.str());
        j["components"].push_back(json{{"patch", patch_name(c.patch)}, {"polys", polys}});
    }
    j["inconsistent"] = slice.inconsistent;
    return j;
}

json asymptotes_json(const std::vector<AsymptoteDirection>& dirs) {
    json arr = json::array();
    for (const auto& d : dirs) {
        if (d.vertical)
            arr.push_back(json{{"vertical", true}});
        else
            arr.push_back(json{{"slope", value_json(d.slope)}});
    }
    return arr;
}

void append_unique_dirs(std::vector<AsymptoteDirection>& into, std::vector<AsymptoteDirection> more) {
    for (auto& d : more) {
        bool dup = false;
        for (const auto& e : into) {
            if (d.vertical != e.vertical) continue;
            if (d.vertical || d.slope.same_value(e.slope)) {
                dup = true;
                break;
            }
        }
        if (!dup) into.push_back(std::move(d));
    }
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

struct Range {
    double lo = 0, hi = 1;
};

// 2nd-98th percentile window, padded slightly.
Range percentile_range(std::vector<double> values) {
    if (values.empty()) return {};
    std::sort(values.begin(), values.end());
    const auto at = [&](double q) { return values[static_cast<std::size_t>(q * (values.size() - 1))]; };
    double lo = at(0.02), hi = at(0.98);
    if (hi - lo < 1e-9) {
        lo -= 1;
        hi += 1;
    }
    const double pad = (hi - lo) * 0.05;
    return {lo - pad, hi + pad};
}

std::string polyline_svg(const std::vector<std::vector<std::pair<double, double>>>& lines,
                         const std::vector<AsymptoteDirection>& asymptotes) {
    constexpr int W = 800, H = 600;
    std::vector<double> xs, ys;
    for (const auto& line : lines)
        for (const auto& [x, y] : line) {
            xs.push_back(x);
            ys.push_back(y);
        }
    const Range rx = percentile_range(std::move(xs));
    const Range ry = percentile_range(std::move(ys));
    const auto px = [&](double x) { return (x - rx.lo) / (rx.hi - rx.lo) * W; };
    const auto py = [&](double y) { return H - (y - ry.lo) / (ry.hi - ry.lo) * H; };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(W) + "\" height=\"" +
                      std::to_string(H) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& d : asymptotes) {
        double x1, y1, x2, y2;
        if (d.vertical) {
            x1 = x2 = 0;
            y1 = ry.lo;
            y2 = ry.hi;
        } else {
            const double m = d.slope.to_double();
            x1 = rx.lo;
            x2 = rx.hi;
            y1 = m * x1;
            y2 = m * x2;
        }
        svg += "<line x1=\"" + fmt_double(px(x1)) + "\" y1=\"" + fmt_double(py(y1)) + "\" x2=\"" +
               fmt_double(px(x2)) + "\" y2=\"" + fmt_double(py(y2)) +
               "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
    }
    for (const auto& line : lines) {
        if (line.empty()) continue;
        svg += "<polyline fill=\"none\" stroke=\"black\" points=\"";
        for (const auto& [x, y] : line) svg += fmt_double(px(x)) + "," + fmt_double(py(y)) + " ";
        svg.pop_back();
        svg += "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace

std::vector<Rational> make_k_grid(const std::optional<Rational>& k_min, const std::optional<Rational>& k_max,
                                  int samples) {
    if (samples < 2) throw std::invalid_argument("samples must be >= 2");
    std::vector<Rational> grid;
    grid.reserve(static_cast<std::size_t>(samples));
    if (k_min || k_max) {
        const Rational lo = k_min.value_or(Rational(-1000));
        const Rational hi = k_max.value_or(Rational(1000));
        if (lo >= hi) throw std::invalid_argument("k-min must be below k-max");
        for (int i = 0; i < samples; ++i) grid.push_back(lo + (hi - lo) * Rational(i, samples - 1));
        return grid;
    }
    // Default: log-spaced magnitudes 1e-3..1e3 on both signs, plus 0.
    const int npos = (samples - 1) / 2;
    const int nneg = samples - 1 - npos;
    const auto mag = [](int i, int n) {
        const double e = -3.0 + 6.0 * i / (n - 1);
        return Rational(static_cast<long long>(std::llround(std::pow(10.0, e) * 1e6)), 1000000LL);
    };
    for (int i = nneg - 1; i >= 0; --i) grid.push_back(-mag(i, nneg));
    grid.emplace_back(0);
    for (int i = 0; i < npos; ++i) grid.push_back(mag(i, npos));
    return grid;
}

std::vector<Branch> pair_branches(const std::vector<SweepPoint>& sweep, int expected_count) {
    std::vector<Branch> branches(static_cast<std::size_t>(std::max(expected_count, 0)));
    for (std::size_t b = 0; b < branches.size(); ++b) branches[b].id = static_cast<int>(b);
    std::vector<std::optional<std::complex<double>>> last(branches.size());

    for (const auto& sp : sweep) {
        std::vector<int> root_to_branch(sp.roots.size(), -1);
        std::vector<bool> branch_used(branches.size(), false);

        // Greedy nearest-neighbor over all (tracked branch, root) pairs.
        struct Cand {
            double dist;
            std::size_t b, r;
        };
        std::vector<Cand> cands;
        for (std::size_t b = 0; b < branches.size(); ++b) {
            if (!last[b]) continue;
            for (std::size_t r = 0; r < sp.roots.size(); ++r)
                cands.push_back({std::abs(sp.roots[r] - *last[b]), b, r});
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.dist != b.dist) return a.dist < b.dist;
            return a.b != b.b ? a.b < b.b : a.r < b.r;
        });
        for (const auto& c : cands) {
            if (branch_used[c.b] || root_to_branch[c.r] >= 0) continue;
            branch_used[c.b] = true;
            root_to_branch[c.r] = static_cast<int>(c.b);
        }
        // Fresh roots go to idle branches in order.
        for (std::size_t r = 0; r < sp.roots.size(); ++r) {
            if (root_to_branch[r] >= 0) continue;
            for (std::size_t b = 0; b < branches.size(); ++b) {
                if (branch_used[b]) continue;
                branch_used[b] = true;
                root_to_branch[r] = static_cast<int>(b);
                break;
            }
        }
        for (auto& b : branches) b.points.emplace_back(std::nullopt);
        for (std::size_t r = 0; r < sp.roots.size(); ++r) {
            if (root_to_branch[r] < 0) continue;  // more roots than branches
            const auto b = static_cast<std::size_t>(root_to_branch[r]);
            branches[b].points.back() = sp.roots[r];
            last[b] = sp.roots[r];
        }
    }
    return branches;
}

std::string locus_csv(const LocusReport& report) {
    std::string out = "k,branch_id,x,y\n";
    for (std::size_t i = 0; i < report.k_grid.size(); ++i) {
        if (report.sweep[i].degree_drop) continue;
        const std::string k = fmt_double(to_double(report.k_grid[i]));
        for (const auto& b : report.branches) {
            if (!b.points[i]) continue;
            out += k + "," + std::to_string(b.id) + "," + fmt_double(b.points[i]->real()) + "," +
                   fmt_double(b.points[i]->imag()) + "\n";
        }
    }
    return out;
}

std::string complementary_csv(const LocusReport& report) {
    std::string out = "k,branch_id,z,y,blow_up\n";
    for (std::size_t i = 0; i < report.k_grid.size(); ++i) {
        if (report.sweep[i].degree_drop) continue;
        bool blow_up = false;
        for (const auto& b : report.branches)
            if (b.points[i] && std::abs(b.points[i]->real()) < 1e-9) blow_up = true;
        const std::string k = fmt_double(to_double(report.k_grid[i]));
        const std::string flag = blow_up ? "1" : "0";
        for (const auto& b : report.branches) {
            if (!b.points[i]) continue;
            const double x = b.points[i]->real(), y = b.points[i]->imag();
            if (std::abs(x) < 1e-9) continue;
            out += k + "," + std::to_string(b.id) + "," + fmt_double(1.0 / x) + "," + fmt_double(y / x) + "," +
                   flag + "\n";
        }
    }
    return out;
}

std::string sphere_json(const LocusReport& report) {
    json j;
    j["branches"] = json::array();
    for (const auto& b : report.branches) {
        json pts = json::array();
        for (const auto& p : b.points) {
            if (!p) continue;
            const double x = p->real(), y = p->imag();
            const double norm = std::sqrt(x * x + y * y + 1.0);
            pts.push_back({round12(x / norm), round12(y / norm), round12(1.0 / norm)});
        }
        j["branches"].push_back(json{{"id", b.id}, {"points", pts}});
    }
    const auto markers = [](const LocusSlice& slice) {
        json arr = json::array();
        for (const auto* list : {&slice.finite_points, &slice.infinite_points})
            for (const auto& p : *list) {
                const SpherePoint sp = gnomonic_lift(p);
                arr.push_back({round12(sp.X), round12(sp.Y), round12(sp.Z)});
            }
        return arr;
    };
    j["initial"] = markers(report.initial);
    j["terminal"] = markers(report.terminal);
    return j.dump(2) + "\n";
}

std::string report_json(const LocusReport& report) {
    json j;
    j["plant"] = {{"num", report.plant.num.str()}, {"den", report.plant.den.str()}};
    json closure = json::array();
    for (const auto& g : report.closure.polys) closure.push_back(g.str());
    j["closure_system"] = closure;
    j["initial"] = slice_json(report.initial);
    j["terminal"] = slice_json(report.terminal);
    j["asymptotes"] = {{"xy", asymptotes_json(report.asymptotes_xy)}, {"zy", asymptotes_json(report.asymptotes_zy)}};
    json drops = json::array();
    for (const auto& k : report.degree_drops) drops.push_back(rational_str(k));
    j["degree_drops"] = drops;
    j["k_grid"] = {{"count", report.k_grid.size()},
                   {"min", report.k_grid.empty() ? "" : rational_str(report.k_grid.front())},
                   {"max", report.k_grid.empty() ? "" : rational_str(report.k_grid.back())}};
    j["branch_count"] = report.branches.size();
    if (!report.symbolic_system.empty()) {
        json sym = json::array();
        for (const auto& g : report.symbolic_system) sym.push_back(g.str());
        j["symbolic_system"] = sym;
    }
    return j.dump(2) + "\n";
}

std::string locus_svg(const LocusReport& report) {
    std::vector<std::vector<std::pair<double, double>>> lines;
    for (const auto& b : report.branches) {
        std::vector<std::pair<double, double>> line;
        for (const auto& p : b.points)
            if (p) line.emplace_back(p->real(), p->imag());
        lines.push_back(std::move(line));
    }
    return polyline_svg(lines, report.asymptotes_xy);
}

std::string complementary_svg(const LocusReport& report) {
    std::vector<std::vector<std::pair<double, double>>> lines;
    for (const auto& b : report.branches) {
        std::vector<std::pair<double, double>> line;
        for (const auto& p : b.points) {
            if (!p || std::abs(p->real()) < 1e-9) continue;
            line.emplace_back(1.0 / p->real(), p->imag() / p->real());
        }
        lines.push_back(std::move(line));
    }
    return polyline_svg(lines, report.asymptotes_zy);
}

LocusReport run(const RunConfig& config) {
    LocusReport report;
    report.plant = parse_transfer_function(config.plant);
    const PencilPair pencil = build_pencil(report.plant);
    report.closure = projective_closure(pencil);

    const ParameterValue init_k = pencil.swapped ? ParameterValue::infinity() : ParameterValue::finite(Rational(0));
    const ParameterValue term_k = pencil.swapped ? ParameterValue::finite(Rational(0)) : ParameterValue::infinity();
    report.initial = solve_slice(specialize(report.closure, init_k), init_k);
    report.initial.kind = SliceKind::initial;
    report.terminal = solve_slice(specialize(report.closure, term_k), term_k);
    report.terminal.kind = SliceKind::terminal;

    append_unique_dirs(report.asymptotes_xy, asymptote_directions(report.initial, Patch::xy));
    append_unique_dirs(report.asymptotes_xy, asymptote_directions(report.terminal, Patch::xy));
    append_unique_dirs(report.asymptotes_zy, asymptote_directions(report.initial, Patch::zy));
    append_unique_dirs(report.asymptotes_zy, asymptote_directions(report.terminal, Patch::zy));

    report.k_grid = make_k_grid(config.k_min, config.k_max, config.samples);
    report.sweep = sweep_conventional(report.plant, report.k_grid);
    for (std::size_t i = 0; i < report.sweep.size(); ++i)
        if (report.sweep[i].degree_drop) report.degree_drops.push_back(report.k_grid[i]);
    // The exact critical gain, even when it falls between samples.
    const UniPoly d = report.plant.den_uni(), n = report.plant.num_uni();
    if (n.degree() == d.degree()) {
        const Rational crit = -d.leading() / n.leading();
        if (std::find(report.degree_drops.begin(), report.degree_drops.end(), crit) == report.degree_drops.end())
            report.degree_drops.push_back(crit);
    }
    report.branches = pair_branches(report.sweep, d.degree());
    if (config.symbolic_lambda) report.symbolic_system = specialize_symbolic(report.closure);

    const bool all = config.patch == "all";
    const auto want = [&](const char* kind) { return config.emit.count(kind) > 0; };
    std::filesystem::create_directories(config.out_dir);
    if (want("csv") && (all || config.patch == "xy")) write_atomic(config.out_dir / "locus.csv", locus_csv(report));
    if (want("csv") && (all || config.patch == "zy"))
        write_atomic(config.out_dir / "complementary.csv", complementary_csv(report));
    if (want("json") && (all || config.patch == "sphere"))
        write_atomic(config.out_dir / "sphere.json", sphere_json(report));
    if (want("json")) write_atomic(config.out_dir / "report.json", report_json(report));
    if (want("svg") && (all || config.patch == "xy")) write_atomic(config.out_dir / "locus.svg", locus_svg(report));
    if (want("svg") && (all || config.patch == "zy"))
        write_atomic(config.out_dir / "complementary.svg", complementary_svg(report));
    return report;
}

}  // namespace pjrl
