#include <cmath>
#include <limits>
#include <map>

#include "contact/simulator.hpp"
#include "doctest.h"

using namespace contact;

namespace {

ModelParams sim_params(double lp, double lm, double lam, int dim) {
    return make_params(lp, lm, lam, Kernel(KernelFamily::gaussian, 0.5, dim),
                       Kernel(KernelFamily::gaussian, 0.6, dim),
                       Kernel(KernelFamily::tent, 0.8, dim));
}

Configuration fixed_config(int np, int nm, double L) {
    Configuration c;
    for (int i = 0; i < np; ++i)
        c.plus_points.push_back({0.1 + 0.13 * i, std::fmod(0.7 * i, L), 0.0});
    for (int i = 0; i < nm; ++i)
        c.minus_points.push_back({std::fmod(1.3 + 0.29 * i, L), 0.5, 0.0});
    return c;
}

}  // namespace

TEST_CASE("poisson initial configuration has the right moments") {
    const ModelParams params = sim_params(0.5, 0.5, 0.25, 2);
    SimConfig cfg;
    cfg.dim = 2;
    cfg.box_length = 8.0;
    const double c = 2.0;
    const double expect = c * 64.0;
    const int trials = 300;
    double total = 0.0;
    for (int k = 0; k < trials; ++k) {
        StepContext ctx = make_step_context(11, k);
        const Configuration conf = init_poisson(params, 0.0, c, cfg, ctx);
        total += static_cast<double>(conf.minus_points.size());
        CHECK(conf.plus_points.empty());
        for (const Point& p : conf.minus_points) {
            CHECK(p[0] >= 0.0);
            CHECK(p[0] < 8.0);
            CHECK(p[2] == 0.0);  // unused axis stays zero in d = 2
        }
    }
    const double se = std::sqrt(expect / trials);
    CHECK(std::abs(total / trials - expect) < 5.0 * se);
}

TEST_CASE("empty configuration is absorbing") {
    const ModelParams params = sim_params(0.5, 0.5, 0.25, 2);
    SimConfig cfg;
    cfg.dim = 2;
    Configuration empty;
    StepContext ctx = make_step_context(1, 0);
    const StepResult res = step(params, empty, cfg, ctx);
    CHECK(res.kind == EventKind::none);
    CHECK(res.total_rate == 0.0);
    CHECK(res.waiting_time == std::numeric_limits<double>::infinity());
}

TEST_CASE("total event rate follows the population counts") {
    const ModelParams params = sim_params(0.8, 0.5, 0.25, 2);
    SimConfig cfg;
    cfg.dim = 2;
    cfg.box_length = 10.0;
    Configuration config = fixed_config(3, 5, cfg.box_length);
    StepContext ctx = make_step_context(2, 0);
    const StepResult res = step(params, config, cfg, ctx);
    // 3 * (1 + 0.8) + 5 * (1 + 0.5) + 0.25 * 5
    CHECK(res.total_rate == doctest::Approx(14.15).epsilon(1e-12));
}

TEST_CASE("event kinds and waiting times have the exact distribution") {
    const double lp = 0.5, lm = 1.0, lam = 0.75;
    const ModelParams params = sim_params(lp, lm, lam, 2);
    SimConfig cfg;
    cfg.dim = 2;
    cfg.box_length = 10.0;
    const Configuration base = fixed_config(4, 6, cfg.box_length);
    const double rm = 6.0 * (1.0 + lm);                  // 12
    const double rp = 4.0 * (1.0 + lp) + lam * 6.0;      // 10.5
    const double total = rm + rp;

    const int trials = 20000;
    std::map<EventKind, int> tally;
    double wait_sum = 0.0;
    for (int k = 0; k < trials; ++k) {
        StepContext ctx = make_step_context(7, k);
        Configuration config = base;
        const StepResult res = step(params, config, cfg, ctx);
        ++tally[res.kind];
        wait_sum += res.waiting_time;
    }
    auto within = [&](EventKind kind, double p) {
        const double se = std::sqrt(trials * p * (1.0 - p));
        CHECK(std::abs(tally[kind] - trials * p) < 5.0 * se);
    };
    within(EventKind::death_minus, rm / total / (1.0 + lm));
    within(EventKind::birth_minus_contact, rm / total * lm / (1.0 + lm));
    within(EventKind::death_plus, 4.0 / total);
    within(EventKind::birth_plus_contact, lp * 4.0 / total);
    within(EventKind::birth_plus_cross, lam * 6.0 / total);

    const double mean_wait = wait_sum / trials;
    CHECK(std::abs(mean_wait - 1.0 / total) < 5.0 / (total * std::sqrt(trials)));
}

TEST_CASE("pure death decays exponentially") {
    const ModelParams params = sim_params(0.0, 0.0, 0.0, 2);
    SimConfig cfg;
    cfg.dim = 2;
    cfg.box_length = 12.0;
    cfg.t_end = 1.0;
    cfg.snapshot_times = {0.5, 1.0};
    cfg.seed = 3;
    cfg.replicas = 400;
    const EstimateSeries series = run_replicas(params, 1.0, 2.0, cfg);
    CHECK(series.status == "ok");
    for (const SnapshotStats& st : series.snapshots) {
        const double decay = std::exp(-st.t);
        CHECK(std::abs(st.density_plus - decay) < 5.0 * st.density_plus_se);
        CHECK(std::abs(st.density_minus - 2.0 * decay) < 5.0 * st.density_minus_se);
    }
}

TEST_CASE("pair estimator reads c*c off a poisson field") {
    const ModelParams params = sim_params(0.5, 0.5, 0.25, 2);
    SimConfig cfg;
    cfg.dim = 2;
    cfg.box_length = 8.0;
    cfg.bin_width = 0.5;
    const double cp = 3.0, cm = 2.0;
    const int trials = 200;
    std::vector<double> centers;
    pair_estimate({}, {}, false, cfg, &centers);
    const int nbins = static_cast<int>(centers.size());
    REQUIRE(nbins == 8);
    std::vector<double> sum_pp(nbins, 0.0), sum_sq_pp(nbins, 0.0);
    std::vector<double> sum_pm(nbins, 0.0), sum_sq_pm(nbins, 0.0);
    for (int k = 0; k < trials; ++k) {
        StepContext ctx = make_step_context(13, k);
        const Configuration conf = init_poisson(params, cp, cm, cfg, ctx);
        const auto kpp = pair_estimate(conf.plus_points, conf.plus_points, true, cfg, nullptr);
        const auto kpm = pair_estimate(conf.plus_points, conf.minus_points, false, cfg, nullptr);
        for (int b = 0; b < nbins; ++b) {
            sum_pp[b] += kpp[b];
            sum_sq_pp[b] += kpp[b] * kpp[b];
            sum_pm[b] += kpm[b];
            sum_sq_pm[b] += kpm[b] * kpm[b];
        }
    }
    for (int b = 0; b < nbins; ++b) {
        const double mpp = sum_pp[b] / trials;
        const double spp = std::sqrt((sum_sq_pp[b] / trials - mpp * mpp) / (trials - 1.0));
        CHECK(std::abs(mpp - cp * cp) < 5.0 * spp);
        const double mpm = sum_pm[b] / trials;
        const double spm = std::sqrt((sum_sq_pm[b] / trials - mpm * mpm) / (trials - 1.0));
        CHECK(std::abs(mpm - cp * cm) < 5.0 * spm);
    }
}

TEST_CASE("replica runs are reproducible and seed-sensitive") {
    const ModelParams params = sim_params(0.8, 0.9, 0.5, 2);
    SimConfig cfg;
    cfg.dim = 2;
    cfg.box_length = 6.0;
    cfg.snapshot_times = {0.3, 0.8};
    cfg.seed = 21;
    cfg.replicas = 8;
    const EstimateSeries a = run_replicas(params, 1.0, 1.5, cfg);
    const EstimateSeries b = run_replicas(params, 1.0, 1.5, cfg);
    REQUIRE(a.snapshots.size() == b.snapshots.size());
    for (std::size_t s = 0; s < a.snapshots.size(); ++s) {
        CHECK(a.snapshots[s].density_plus == b.snapshots[s].density_plus);
        CHECK(a.snapshots[s].density_minus == b.snapshots[s].density_minus);
        for (std::size_t k = 0; k < a.snapshots[s].k_pp.size(); ++k)
            CHECK(a.snapshots[s].k_pp[k] == b.snapshots[s].k_pp[k]);
    }
    cfg.seed = 22;
    const EstimateSeries c = run_replicas(params, 1.0, 1.5, cfg);
    CHECK(a.snapshots[0].density_minus != c.snapshots[0].density_minus);
}

TEST_CASE("minus marginal ignores the plus side entirely") {
    SimConfig cfg;
    cfg.dim = 2;
    cfg.box_length = 6.0;
    cfg.snapshot_times = {0.5, 1.0};
    cfg.seed = 31;
    cfg.replicas = 6;
    const ModelParams weak = sim_params(0.5, 0.9, 0.0, 2);
    const ModelParams strong =
        make_params(1.2, 0.9, 5.0, Kernel(KernelFamily::tent, 1.1, 2),
                    weak.kernel_minus, Kernel(KernelFamily::gaussian, 0.4, 2));
    const EstimateSeries a = run_replicas(weak, 1.0, 1.5, cfg);
    const EstimateSeries b = run_replicas(strong, 1.0, 1.5, cfg);
    REQUIRE(a.records.size() == b.records.size());
    bool plus_differs = false;
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].n_minus == b.records[i].n_minus);
        for (std::size_t k = 0; k < a.records[i].k_mm.size(); ++k)
            CHECK(a.records[i].k_mm[k] == b.records[i].k_mm[k]);
        if (a.records[i].n_plus != b.records[i].n_plus) plus_differs = true;
    }
    CHECK(plus_differs);
}

TEST_CASE("the two populations never share a site") {
    const ModelParams params = sim_params(0.9, 1.0, 2.0, 2);
    SimConfig cfg;
    cfg.dim = 2;
    cfg.box_length = 5.0;
    StepContext ctx = make_step_context(17, 0);
    Configuration config = init_poisson(params, 1.0, 1.5, cfg, ctx);
    for (int k = 0; k < 2000; ++k) {
        if (step(params, config, cfg, ctx).kind == EventKind::none) break;
    }
    CHECK(config.minus_points.size() > 0);
    for (const Point& p : config.plus_points)
        for (const Point& q : config.minus_points)
            CHECK((p[0] != q[0] || p[1] != q[1]));
}

TEST_CASE("population guard trips and is reported") {
    const ModelParams params = sim_params(0.0, 2.0, 0.0, 1);
    SimConfig cfg;
    cfg.dim = 1;
    cfg.box_length = 50.0;
    cfg.t_end = 6.0;
    cfg.snapshot_times = {6.0};
    cfg.seed = 5;
    cfg.replicas = 2;
    cfg.max_population = 300;
    const EstimateSeries series = run_replicas(params, 0.0, 2.0, cfg);
    CHECK(series.status.find("guard tripped") != std::string::npos);
    REQUIRE(series.records.size() == 2);  // snapshots still recorded at the trip
}

TEST_CASE("simulation configs are validated") {
    SimConfig cfg;
    cfg.dim = 3;
    cfg.box_length = 1.0;
    auto v = validate_sim_config(cfg, 2.0, 2.0);
    REQUIRE(v.size() == 2);
    CHECK(v.front().find("estimator unusable") != std::string::npos);

    cfg.box_length = 10.0;
    cfg.replicas = 0;
    cfg.snapshot_times = {-1.0};
    v = validate_sim_config(cfg, 2.0, 2.0);
    CHECK(v.size() == 2);

    cfg.replicas = 1;
    cfg.snapshot_times = {};
    const ModelParams params = sim_params(0.5, 0.5, 0.25, 3);
    CHECK_THROWS_AS(run_replicas(params, 2.0, 2.0, cfg), std::invalid_argument);
}
