#include "contact/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <random>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "contact/analysis.hpp"
#include "contact/config.hpp"
#include "contact/csvio.hpp"
#include "contact/evolution1.hpp"
#include "contact/evolution2.hpp"
#include "contact/simulator.hpp"
#include "contact/symbols.hpp"

namespace contact {

namespace {

using nlohmann::json;

bool load_or_complain(const std::string& path, RunConfig& rc) {
    ParsedConfig parsed = load_config(path);
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors)
            std::fprintf(stderr, "%s:%d: %s\n", path.c_str(), e.line, e.message.c_str());
        return false;
    }
    rc = std::move(parsed.config);
    return true;
}

bool report_violations(const std::vector<std::string>& v, const char* what) {
    for (const auto& s : v) std::fprintf(stderr, "%s: %s\n", what, s.c_str());
    return !v.empty();
}

std::string out_path(const RunConfig& rc, const std::string& name) {
    std::filesystem::create_directories(rc.out_dir);
    return rc.out_dir + "/" + name;
}

// CSV plus a JSON sidecar carrying the config echo and content hash; every
// output embeds the config hash so reruns can be checked for byte identity.
bool emit(const RunConfig& rc, const std::string& command, const std::string& csv_name,
          CsvTable& table, const json& extra = json::object()) {
    table.comments.insert(table.comments.begin(), "config_hash=" + hash_hex(rc.config_hash));
    table.comments.insert(table.comments.begin(), "command=" + command);
    const std::string csv = render_csv(table);
    const std::string csv_path = out_path(rc, csv_name);
    if (!write_text_file(csv_path, csv)) {
        std::fprintf(stderr, "cannot write '%s'\n", csv_path.c_str());
        return false;
    }
    json meta;
    meta["command"] = command;
    meta["config_hash"] = hash_hex(rc.config_hash);
    meta["config"] = rc.raw_text;
    meta["csv"] = csv_name;
    meta["content_hash"] = hash_hex(fnv1a64(csv));
    meta["columns"] = table.header;
    meta["rows"] = table.rows.size();
    for (const auto& [k, v] : extra.items()) meta[k] = v;
    const std::string stem = csv_name.substr(0, csv_name.rfind('.'));
    const std::string json_path = out_path(rc, stem + ".json");
    if (!write_text_file(json_path, meta.dump(2) + "\n")) {
        std::fprintf(stderr, "cannot write '%s'\n", json_path.c_str());
        return false;
    }
    std::printf("wrote %s (content %s)\n", csv_path.c_str(), hash_hex(fnv1a64(csv)).c_str());
    return true;
}

std::string verdict_string(const AsymptoticVerdict& v) {
    switch (v.kind) {
        case AsymptoticVerdict::Kind::zero:
            return "Zero";
        case AsymptoticVerdict::Kind::finite:
            return "Finite, constant = " + format_double(v.constant);
        case AsymptoticVerdict::Kind::diverges:
            return v.note.empty() ? "Diverges" : "Diverges (" + v.note + ")";
    }
    return "?";
}

// lattice indices along the positive first axis, for radial CSV profiles
std::vector<std::size_t> axis_indices(const FourierGrid& grid) {
    std::vector<std::size_t> idx;
    for (int s = 0; s < grid.n() / 2; ++s) idx.push_back(grid.flatten({s, 0, 0}));
    return idx;
}

}  // namespace

int cmd_limits(const std::string& config_path) {
    RunConfig rc;
    if (!load_or_complain(config_path, rc)) return 1;
    const ModelParams params = build_params(rc);
    if (report_violations(validate_params(params), "model")) return 1;
    const FourierGrid grid = build_grid(rc);
    const FirstOrderInit init1 = build_first_order(rc, grid);
    if (report_violations(validate_first_order(init1, grid), "init")) return 1;

    const FirstOrderVerdicts v1 = limit_first(params, init1);
    std::printf("(-) verdict: %s\n", verdict_string(v1.minus).c_str());
    std::printf("(+) verdict: %s\n", verdict_string(v1.plus).c_str());

    const SecondOrderInit init2 = build_second_order(rc, grid);
    if (report_violations(validate_second_order(init2, grid, &init1), "init")) return 1;
    json extra;
    extra["verdict_minus"] = verdict_string(v1.minus);
    extra["verdict_plus"] = verdict_string(v1.plus);
    try {
        const SecondOrderLimits lim = limits_second(params, init1, init2, grid);
        std::printf("pair dichotomy case %d\n", lim.dichotomy_case);
        std::printf("k_mm limit: %s\n", verdict_string(lim.mm).c_str());
        std::printf("k_pm limit: %s\n", verdict_string(lim.pm).c_str());
        std::printf("k_pp limit: %s\n", verdict_string(lim.pp).c_str());
        if (lim.radial_check_rel_err >= 0.0)
            std::printf("origin quadrature cross-check rel err %.3g\n", lim.radial_check_rel_err);
        if (!lim.note.empty()) std::printf("note: %s\n", lim.note.c_str());

        CsvTable tab;
        tab.header = {"r"};
        std::vector<const std::vector<double>*> cols;
        if (!lim.spectra.omega_pp.empty()) {
            tab.header.push_back("Omega_pp");
            cols.push_back(&lim.spectra.omega_pp);
        }
        if (!lim.spectra.xi_mm.empty()) {
            tab.header.push_back("Xi_mm");
            cols.push_back(&lim.spectra.xi_mm);
        }
        if (!lim.spectra.xi_pm.empty()) {
            tab.header.push_back("Xi_pm");
            cols.push_back(&lim.spectra.xi_pm);
        }
        if (!lim.spectra.xi_pp.empty()) {
            tab.header.push_back("Xi_pp");
            cols.push_back(&lim.spectra.xi_pp);
        }
        for (std::size_t flat : axis_indices(grid)) {
            std::vector<std::string> row{format_double(grid.coord_norm(flat))};
            for (const auto* c : cols) row.push_back(format_double((*c)[flat]));
            tab.add_row(std::move(row));
        }
        extra["dichotomy_case"] = lim.dichotomy_case;
        extra["k_mm"] = verdict_string(lim.mm);
        extra["k_pm"] = verdict_string(lim.pm);
        extra["k_pp"] = verdict_string(lim.pp);
        if (!emit(rc, "limits", "limits.csv", tab, extra)) return 1;
    } catch (const std::invalid_argument& e) {
        std::printf("%s\n", e.what());
    }
    return 0;
}

int cmd_evolve(const std::string& config_path) {
    RunConfig rc;
    if (!load_or_complain(config_path, rc)) return 1;
    const ModelParams params = build_params(rc);
    if (report_violations(validate_params(params), "model")) return 1;
    const FourierGrid grid = build_grid(rc);
    const FirstOrderInit init1 = build_first_order(rc, grid);
    if (report_violations(validate_first_order(init1, grid), "init")) return 1;
    const SecondOrderInit init2 = build_second_order(rc, grid);
    if (report_violations(validate_second_order(init2, grid, &init1), "init")) return 1;

    const FirstOrderProblem p1 = FirstOrderProblem::prepare(params, init1, grid);
    std::optional<SecondOrderProblem> p2;
    if (init2.translation_invariant)
        p2.emplace(SecondOrderProblem::prepare(params, init1, init2, grid));
    else
        std::printf("pair columns skipped: fluctuating first moments break translation invariance\n");

    std::vector<double> times = rc.times;
    if (times.empty())
        for (int k = 0; k * rc.dt_out <= rc.t_end + 1e-12; ++k) times.push_back(k * rc.dt_out);
    std::sort(times.begin(), times.end());

    const bool oracle_route = p2 && params.lambda_plus == params.lambda_minus;
    const std::string mark = oracle_route ? ":oracle" : "";
    CsvTable tab;
    tab.header = {"t", "C_minus", "C_plus"};
    if (p2) {
        tab.header.push_back("C_mm" + mark);
        tab.header.push_back("C_pm" + mark);
        tab.header.push_back("C_pp" + mark);
    }

    const FourierTransformer ft(grid);
    const auto profile = axis_indices(grid);
    int snapshot_idx = 0;
    for (double t : times) {
        const SplitField km = k_minus_closed(p1, t);
        const SplitField kp = k_plus_closed(p1, t);
        std::vector<std::string> row{format_double(t), format_double(km.constant),
                                     format_double(kp.constant)};
        std::optional<SecondOrderState> s2;
        if (p2) {
            s2 = oracle_route && rc.dt > 0.0 ? evolve_ode2(*p2, t, rc.dt) : k2_closed(*p2, t);
            row.push_back(format_double(s2->k_mm.constant));
            row.push_back(format_double(s2->k_pm.constant));
            row.push_back(format_double(s2->k_pp.constant));
        }
        tab.add_row(std::move(row));

        if (rc.fields) {
            CsvTable ftab;
            ftab.comments.push_back("t=" + format_double(t));
            ftab.header = {"r", "k_minus", "k_plus"};
            if (s2) {
                ftab.header.push_back("k_mm" + mark);
                ftab.header.push_back("k_pm" + mark);
                ftab.header.push_back("k_pp" + mark);
            }
            const auto vm = space_values(km, ft);
            const auto vp = space_values(kp, ft);
            std::vector<std::vector<double>> pair_vals;
            if (s2) {
                pair_vals.push_back(space_values(s2->k_mm, ft));
                pair_vals.push_back(space_values(s2->k_pm, ft));
                pair_vals.push_back(space_values(s2->k_pp, ft));
            }
            for (std::size_t flat : profile) {
                std::vector<std::string> frow{format_double(grid.coord_norm(flat)),
                                              format_double(vm[flat]), format_double(vp[flat])};
                for (const auto& pv : pair_vals) frow.push_back(format_double(pv[flat]));
                ftab.add_row(std::move(frow));
            }
            char name[64];
            std::snprintf(name, sizeof(name), "evolve_fields_%03d.csv", snapshot_idx);
            if (!emit(rc, "evolve", name, ftab)) return 1;
        }
        ++snapshot_idx;
    }

    json extra;
    extra["pair_route"] = p2 ? (oracle_route ? "oracle" : "closed") : "skipped";
    if (oracle_route)
        std::printf("pair columns via the ODE oracle (lambda+ == lambda-), marked ':oracle'\n");
    if (!emit(rc, "evolve", "evolve.csv", tab, extra)) return 1;
    return 0;
}

int cmd_simulate(const std::string& config_path) {
    RunConfig rc;
    if (!load_or_complain(config_path, rc)) return 1;
    const ModelParams params = build_params(rc);
    if (report_violations(validate_params(params), "model")) return 1;

    EstimateSeries series;
    try {
        series = run_replicas(params, rc.c_plus, rc.c_minus, rc.sim);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "sim: %s\n", e.what());
        return 1;
    }

    CsvTable dens;
    dens.header = {"t", "density_plus", "density_plus_se", "density_minus", "density_minus_se"};
    for (const auto& st : series.snapshots)
        dens.add_row({format_double(st.t), format_double(st.density_plus),
                      format_double(st.density_plus_se), format_double(st.density_minus),
                      format_double(st.density_minus_se)});

    CsvTable pairs;
    pairs.header = {"t", "r", "k_pp", "k_pp_se", "k_pm", "k_pm_se", "k_mm", "k_mm_se"};
    for (const auto& st : series.snapshots)
        for (std::size_t k = 0; k < series.bin_centers.size(); ++k)
            pairs.add_row({format_double(st.t), format_double(series.bin_centers[k]),
                           format_double(st.k_pp[k]), format_double(st.k_pp_se[k]),
                           format_double(st.k_pm[k]), format_double(st.k_pm_se[k]),
                           format_double(st.k_mm[k]), format_double(st.k_mm_se[k])});

    json extra;
    extra["status"] = series.status;
    extra["replicas"] = series.replicas;
    std::printf("status: %s\n", series.status.c_str());
    if (!emit(rc, "simulate", "simulate.csv", dens, extra)) return 1;
    if (!emit(rc, "simulate", "simulate_pairs.csv", pairs, extra)) return 1;
    return 0;
}

int cmd_compare(const std::string& config_path) {
    RunConfig rc;
    if (!load_or_complain(config_path, rc)) return 1;
    const ModelParams params = build_params(rc);
    if (report_violations(validate_params(params), "model")) return 1;
    const FourierGrid grid = build_grid(rc);
    const FirstOrderInit init1 = build_first_order(rc, grid);
    if (report_violations(validate_first_order(init1, grid), "init")) return 1;

    ComparisonReport report;
    try {
        report = compare_sim_analytic(params, init1, rc.sim);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "compare: %s\n", e.what());
        return 1;
    }

    CsvTable tab;
    tab.header = {"t", "observable", "analytic", "mc", "se", "z"};
    for (const auto& e : report.entries)
        tab.add_row({format_double(e.t), e.observable, format_double(e.analytic),
                     format_double(e.mc), format_double(e.se), format_double(e.z)});

    json extra;
    extra["pass"] = report.pass;
    extra["max_abs_z"] = report.max_abs_z;
    extra["threshold"] = report.threshold;
    extra["note"] = report.note;
    std::printf("compare: %zu entries, max |z| = %.4g, threshold %g -> %s\n",
                report.entries.size(), report.max_abs_z, report.threshold,
                report.pass ? "pass" : "FAIL");
    std::printf("%s\n", report.note.c_str());
    if (!emit(rc, "compare", "compare.csv", tab, extra)) return 1;
    return report.pass ? 0 : 2;
}

int cmd_check(const std::string& config_path) {
    RunConfig rc;
    if (!load_or_complain(config_path, rc)) return 1;
    const ModelParams params = build_params(rc);
    if (report_violations(validate_params(params), "model")) return 1;

    if (rc.dim < 3) {
        std::fprintf(stderr,
                     "check: the integrable-ratio refinement needs d = 3; in d < 3 the lattice "
                     "sums diverge by design (the d = 1 control lives in the test suite)\n");
        return 1;
    }

    bool overall = true;
    CsvTable tab;
    tab.header = {"check", "pass", "detail"};
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        overall = overall && ok;
        std::printf("[%s] %s: %s\n", ok ? "pass" : "FAIL", name.c_str(), detail.c_str());
        tab.add_row({name, ok ? "1" : "0", detail});
    };

    {
        const double mp = kernel_mass(params.kernel_plus);
        const double mm = kernel_mass(params.kernel_minus);
        const double mx = kernel_mass(params.kernel_cross);
        const bool ok = std::abs(mp - 1.0) < 1e-8 && std::abs(mm - 1.0) < 1e-8 &&
                        std::abs(mx - 1.0) < 1e-8;
        char d[128];
        std::snprintf(d, sizeof(d), "kernel masses %.12g %.12g %.12g", mp, mm, mx);
        add("kernel_normalization", ok, d);
    }

    const FourierGrid grid = build_grid(rc);
    if (params.lambda_plus != params.lambda_minus) {
        const auto rep = check_disjoint_singular_sets(params, grid);
        add("singular_sets_disjoint", rep.disjoint,
            rep.message.empty() ? "degenerate sets do not overlap away from p = 0" : rep.message);
    } else {
        add("singular_sets_disjoint", true,
            "skipped: lambda+ == lambda- routes the pair solution to the ODE oracle");
    }

    {
        const int n0 = std::min(rc.grid_n, 32);
        const double box0 = rc.box * static_cast<double>(n0) / rc.grid_n;
        const Kernel& kern = params.kernel_minus;
        const Kernel& cross = params.kernel_cross;
        const auto b = [&cross](double q) { return cross.fourier_radial(q); };
        std::vector<FourierGrid> seq;
        for (int k = 0; k < 3; ++k) seq.emplace_back(rc.dim, n0 << k, box0 * (1 << k));
        IntegrabilityReport rep = check_kernel_integrability(kern, b, seq);
        // a coarse starting grid can leave the last doubling just above the 5%
        // verdict while the steps still halve; keep refining until it settles
        while (!rep.converged && n0 << seq.size() <= 256) {
            const auto& s = rep.sums;
            const double d1 = std::abs(s[s.size() - 1] - s[s.size() - 2]);
            const double d0 = std::abs(s[s.size() - 2] - s[s.size() - 3]);
            if (!(d1 < d0)) break;  // not shrinking: refusing to call it convergent
            const int k = static_cast<int>(seq.size());
            seq.emplace_back(rc.dim, n0 << k, box0 * (1 << k));
            rep = check_kernel_integrability(kern, b, seq);
        }
        const auto& s = rep.sums;
        char d[192];
        std::snprintf(d, sizeof(d), "%zu grids, sums %.6g -> %.6g -> %.6g, origin slope %.3f; %s",
                      s.size(), s[s.size() - 3], s[s.size() - 2], s[s.size() - 1], rep.slope,
                      rep.note.c_str());
        add("integrable_ratio", rep.converged && std::abs(rep.slope - 2.0) < 0.1, d);
    }

    {
        std::mt19937_64 rng(rc.sim.seed);
        const auto rep = check_divided_difference_bound(2000, rng);
        char d[160];
        std::snprintf(d, sizeof(d), "%lld cases, %lld violations, min margin %.3g; %s",
                      rep.cases, rep.violations, rep.min_margin, rep.note.c_str());
        add("divided_difference_bound", rep.pass, d);
    }

    const FirstOrderInit init1 = build_first_order(rc, grid);
    const SecondOrderInit init2 = build_second_order(rc, grid);
    if (params.lambda_plus <= 1.0 && params.lambda_minus <= 1.0 && init2.translation_invariant) {
        const auto rep = check_majorant(params, init1, init2, grid);
        char d[192];
        std::snprintf(d, sizeof(d), "max |U|/M = %.6g over sampled times", rep.max_ratio);
        add("majorant_domination", rep.dominated, d);
        std::snprintf(d, sizeof(d), "integral %.6g -> %.6g (rel change %.3g)", rep.integral_coarse,
                      rep.integral_fine, rep.refinement_rel_change);
        add("majorant_integrable", rep.integrable, d);
        if (params.lambda_minus == 1.0)
            add("majorant_denominator_bound", rep.case2_inequality_ok,
                "h4*h2 >= -2*mu+*(1-ahat-) on the lattice");
    } else {
        add("majorant_domination", true,
            "skipped: needs lambda+ <= 1, lambda- <= 1 and translation-invariant initial data");
    }

    json extra;
    extra["pass"] = overall;
    if (!emit(rc, "check", "check.csv", tab, extra)) return 1;
    std::printf("check: %s\n", overall ? "pass" : "FAIL");
    return overall ? 0 : 2;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"two-type contact process toolkit: closed-form moment evolution, stochastic "
                 "simulation, and consistency checks"};
    app.require_subcommand(1);
    std::string config_path;
    auto make_sub = [&](const char* name, const char* desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("config", config_path, "run configuration file")->required();
        return sub;
    };
    CLI::App* limits = make_sub("limits", "long-time verdicts and limit spectra profiles");
    CLI::App* evolve = make_sub("evolve", "moment constants over time (CSV + JSON sidecar)");
    CLI::App* simulate = make_sub("simulate", "Monte Carlo replicas with density/pair estimates");
    CLI::App* compare = make_sub("compare", "Monte Carlo vs closed forms with z-scores");
    CLI::App* check = make_sub("check", "bound sweeps, integrability and majorant validation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (limits->parsed()) return cmd_limits(config_path);
        if (evolve->parsed()) return cmd_evolve(config_path);
        if (simulate->parsed()) return cmd_simulate(config_path);
        if (compare->parsed()) return cmd_compare(config_path);
        if (check->parsed()) return cmd_check(config_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}

}  // namespace contact
