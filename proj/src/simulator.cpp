#include "contact/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace contact {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double exp1(std::mt19937_64& gen) {
    std::exponential_distribution<double> d(1.0);
    return d(gen);
}

double uniform01(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> d(0.0, 1.0);
    return d(gen);
}

std::size_t uniform_index(std::mt19937_64& gen, std::size_t n) {
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    return d(gen);
}

double wrap_coord(double x, double L) {
    double w = std::fmod(x, L);
    if (w < 0.0) w += L;
    if (w >= L) w -= L;
    return w;
}

bool contains_point(const std::vector<Point>& set, const Point& p) {
    for (const Point& q : set)
        if (q[0] == p[0] && q[1] == p[1] && q[2] == p[2]) return true;
    return false;
}

double ball_volume(int d, double r) {
    switch (d) {
        case 1: return 2.0 * r;
        case 2: return kPi * r * r;
        default: return 4.0 / 3.0 * kPi * r * r * r;
    }
}

double minus_rate(const ModelParams& params, const Configuration& c) {
    return static_cast<double>(c.minus_points.size()) * (1.0 + params.lambda_minus);
}

double plus_rate(const ModelParams& params, const Configuration& c) {
    return static_cast<double>(c.plus_points.size()) * (1.0 + params.lambda_plus) +
           params.lambda_cross * static_cast<double>(c.minus_points.size());
}

void ensure_scheduled(ChannelRng& chan, double rate, double now) {
    if (chan.scheduled || rate <= 0.0) return;
    double e = chan.unit_pending >= 0.0 ? chan.unit_pending : exp1(chan.gen);
    chan.unit_pending = -1.0;
    chan.next_time = now + e / rate;
    chan.scheduled = true;
}

void rescale_clock(ChannelRng& chan, double old_rate, double new_rate, double now) {
    if (!chan.scheduled || old_rate == new_rate) return;
    if (new_rate > 0.0) {
        chan.next_time = now + (chan.next_time - now) * old_rate / new_rate;
    } else {
        chan.unit_pending = (chan.next_time - now) * old_rate;
        chan.scheduled = false;
    }
}

Point sample_birth(const Kernel& kernel, const Point& parent, double L, int dim,
                   const std::vector<Point>& opposite, std::mt19937_64& gen) {
    for (;;) {
        Point disp = kernel.sample(gen);
        Point child{0.0, 0.0, 0.0};
        for (int a = 0; a < dim; ++a) child[a] = wrap_coord(parent[a] + disp[a], L);
        if (!contains_point(opposite, child)) return child;
    }
}

}  // namespace

std::vector<std::string> validate_sim_config(const SimConfig& cfg, double c_plus, double c_minus) {
    std::vector<std::string> out;
    if (!(cfg.box_length > 0.0)) out.push_back("sim: box length must be positive");
    if (cfg.dim < 1 || cfg.dim > 3) out.push_back("sim: dim must be 1, 2 or 3");
    if (cfg.replicas < 1) out.push_back("sim: need at least one replica");
    if (!(cfg.bin_width > 0.0)) out.push_back("sim: bin width must be positive");
    double vol = FourierGrid::ipow(cfg.box_length, cfg.dim);
    if (c_plus > 0.0 && c_plus * vol < 10.0)
        out.push_back("sim: expected plus count below 10, estimator unusable");
    if (c_minus > 0.0 && c_minus * vol < 10.0)
        out.push_back("sim: expected minus count below 10, estimator unusable");
    for (double s : cfg.snapshot_times)
        if (s < 0.0) out.push_back("sim: snapshot times must be nonnegative");
    return out;
}

StepContext make_step_context(std::uint64_t master_seed, std::uint64_t replica_index) {
    std::uint64_t base = splitmix64(master_seed ^ splitmix64(replica_index + 0x51ed270b7a64f9c1ULL));
    StepContext ctx;
    ctx.minus_chan.gen.seed(splitmix64(base + 1));
    ctx.plus_chan.gen.seed(splitmix64(base + 2));
    return ctx;
}

Configuration init_poisson(const ModelParams& params, double c_plus, double c_minus,
                           const SimConfig& cfg, StepContext& ctx) {
    (void)params;
    double vol = FourierGrid::ipow(cfg.box_length, cfg.dim);
    Configuration c;
    auto draw_points = [&](double intensity, std::mt19937_64& gen, std::vector<Point>& dst,
                           const std::vector<Point>& opposite) {
        if (intensity <= 0.0) return;
        std::poisson_distribution<long long> pois(intensity * vol);
        long long n = pois(gen);
        dst.reserve(static_cast<std::size_t>(n));
        std::uniform_real_distribution<double> uni(0.0, cfg.box_length);
        for (long long k = 0; k < n; ++k) {
            Point p{0.0, 0.0, 0.0};
            do {
                for (int a = 0; a < cfg.dim; ++a) p[a] = uni(gen);
            } while (contains_point(opposite, p));
            dst.push_back(p);
        }
    };
    draw_points(c_minus, ctx.minus_chan.gen, c.minus_points, c.plus_points);
    draw_points(c_plus, ctx.plus_chan.gen, c.plus_points, c.minus_points);
    return c;
}

StepResult step(const ModelParams& params, Configuration& config, const SimConfig& cfg,
                StepContext& ctx) {
    StepResult res;
    double rm = minus_rate(params, config);
    double rp = plus_rate(params, config);
    res.total_rate = rm + rp;
    if (res.total_rate <= 0.0) {
        res.kind = EventKind::none;
        res.waiting_time = kInf;
        return res;
    }
    ensure_scheduled(ctx.minus_chan, rm, ctx.now);
    ensure_scheduled(ctx.plus_chan, rp, ctx.now);

    double tm = ctx.minus_chan.scheduled ? ctx.minus_chan.next_time : kInf;
    double tp = ctx.plus_chan.scheduled ? ctx.plus_chan.next_time : kInf;
    bool fire_minus = tm <= tp;
    double fired_at = fire_minus ? tm : tp;
    res.waiting_time = fired_at - ctx.now;
    ctx.now = fired_at;

    if (fire_minus) {
        ctx.minus_chan.scheduled = false;
        std::mt19937_64& gen = ctx.minus_chan.gen;
        std::size_t nm = config.minus_points.size();
        double u = uniform01(gen) * (1.0 + params.lambda_minus);
        if (u < 1.0) {
            std::size_t victim = uniform_index(gen, nm);
            config.minus_points[victim] = config.minus_points.back();
            config.minus_points.pop_back();
            res.kind = EventKind::death_minus;
        } else {
            const Point& parent = config.minus_points[uniform_index(gen, nm)];
            config.minus_points.push_back(sample_birth(params.kernel_minus, parent, cfg.box_length,
                                                       cfg.dim, config.plus_points, gen));
            res.kind = EventKind::birth_minus_contact;
        }
        // the minus event shifted the cross-birth intensity; rescale the plus
        // clock so its pending unit-exponential budget is preserved
        rescale_clock(ctx.plus_chan, rp, plus_rate(params, config), ctx.now);
    } else {
        ctx.plus_chan.scheduled = false;
        std::mt19937_64& gen = ctx.plus_chan.gen;
        std::size_t np = config.plus_points.size();
        double u = uniform01(gen) * rp;
        double w_death = static_cast<double>(np);
        double w_contact = params.lambda_plus * static_cast<double>(np);
        if (u < w_death) {
            std::size_t victim = uniform_index(gen, np);
            config.plus_points[victim] = config.plus_points.back();
            config.plus_points.pop_back();
            res.kind = EventKind::death_plus;
        } else if (u < w_death + w_contact) {
            const Point& parent = config.plus_points[uniform_index(gen, np)];
            config.plus_points.push_back(sample_birth(params.kernel_plus, parent, cfg.box_length,
                                                      cfg.dim, config.minus_points, gen));
            res.kind = EventKind::birth_plus_contact;
        } else {
            const Point& parent = config.minus_points[uniform_index(gen, config.minus_points.size())];
            config.plus_points.push_back(sample_birth(params.kernel_cross, parent, cfg.box_length,
                                                      cfg.dim, config.minus_points, gen));
            res.kind = EventKind::birth_plus_cross;
        }
    }
    return res;
}

std::vector<double> pair_estimate(const std::vector<Point>& a, const std::vector<Point>& b,
                                  bool same_set, const SimConfig& cfg,
                                  std::vector<double>* centers) {
    const double L = cfg.box_length;
    const int nbins = static_cast<int>(std::floor(L / 2.0 / cfg.bin_width + 1e-9));
    if (centers) {
        centers->resize(nbins);
        for (int k = 0; k < nbins; ++k) (*centers)[k] = (k + 0.5) * cfg.bin_width;
    }
    std::vector<double> counts(nbins, 0.0);
    auto torus_dist = [&](const Point& x, const Point& y) {
        double s = 0.0;
        for (int axis = 0; axis < cfg.dim; ++axis) {
            double d = std::abs(x[axis] - y[axis]);
            d = std::min(d, L - d);
            s += d * d;
        }
        return std::sqrt(s);
    };
    auto tally = [&](const Point& x, const Point& y, double weight) {
        int k = static_cast<int>(std::floor(torus_dist(x, y) / cfg.bin_width));
        if (k >= 0 && k < nbins) counts[k] += weight;
    };
    if (same_set) {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j) tally(a[i], a[j], 2.0);
    } else {
        for (const Point& x : a)
            for (const Point& y : b) tally(x, y, 1.0);
    }
    double vol = FourierGrid::ipow(L, cfg.dim);
    for (int k = 0; k < nbins; ++k) {
        double shell = ball_volume(cfg.dim, (k + 1) * cfg.bin_width) -
                       ball_volume(cfg.dim, k * cfg.bin_width);
        counts[k] /= vol * shell;
    }
    return counts;
}

EstimateSeries run_replicas(const ModelParams& params, double c_plus, double c_minus,
                            const SimConfig& cfg, Backend backend) {
    auto violations = validate_sim_config(cfg, c_plus, c_minus);
    if (!violations.empty()) throw std::invalid_argument(violations.front());
    if (cfg.replicas < 2) throw std::invalid_argument("run_replicas: need at least 2 replicas");

    std::vector<double> snaps = cfg.snapshot_times;
    if (snaps.empty()) snaps.push_back(cfg.t_end);
    std::sort(snaps.begin(), snaps.end());

    std::vector<std::vector<ReplicaSnapshot>> per_replica(cfg.replicas);
    std::vector<std::string> guard_notes(cfg.replicas);

    auto run_one = [&](int r) {
        StepContext ctx = make_step_context(cfg.seed, static_cast<std::uint64_t>(r));
        Configuration config = init_poisson(params, c_plus, c_minus, cfg, ctx);
        auto& out = per_replica[r];
        std::size_t si = 0;
        auto record = [&](double t) {
            ReplicaSnapshot snap;
            snap.replica = r;
            snap.t = t;
            snap.n_plus = config.plus_points.size();
            snap.n_minus = config.minus_points.size();
            snap.k_pp = pair_estimate(config.plus_points, config.plus_points, true, cfg, nullptr);
            snap.k_pm = pair_estimate(config.plus_points, config.minus_points, false, cfg, nullptr);
            snap.k_mm = pair_estimate(config.minus_points, config.minus_points, true, cfg, nullptr);
            out.push_back(std::move(snap));
        };
        while (si < snaps.size()) {
            double rm = minus_rate(params, config);
            double rp = plus_rate(params, config);
            ensure_scheduled(ctx.minus_chan, rm, ctx.now);
            ensure_scheduled(ctx.plus_chan, rp, ctx.now);
            double next = kInf;
            if (ctx.minus_chan.scheduled) next = ctx.minus_chan.next_time;
            if (ctx.plus_chan.scheduled) next = std::min(next, ctx.plus_chan.next_time);
            while (si < snaps.size() && snaps[si] <= next) record(snaps[si++]);
            if (si >= snaps.size() || next == kInf) {
                while (si < snaps.size()) record(snaps[si++]);
                break;
            }
            step(params, config, cfg, ctx);
            if (config.plus_points.size() + config.minus_points.size() > cfg.max_population) {
                guard_notes[r] = "guard tripped: population exceeded " +
                                 std::to_string(cfg.max_population);
                while (si < snaps.size()) record(snaps[si++]);
                break;
            }
        }
    };

    if (backend == Backend::openmp) {
#pragma omp parallel for schedule(dynamic)
        for (int r = 0; r < cfg.replicas; ++r) run_one(r);
    } else {
        for (int r = 0; r < cfg.replicas; ++r) run_one(r);
    }

    EstimateSeries series;
    series.replicas = cfg.replicas;
    SimConfig probe = cfg;
    pair_estimate({}, {}, false, probe, &series.bin_centers);
    double vol = FourierGrid::ipow(cfg.box_length, cfg.dim);
    const int nbins = static_cast<int>(series.bin_centers.size());
    const int R = cfg.replicas;

    for (std::size_t si = 0; si < snaps.size(); ++si) {
        SnapshotStats st;
        st.t = snaps[si];
        std::vector<double> dp(R), dm(R);
        std::vector<std::vector<double>> bpp(R), bpm(R), bmm(R);
        for (int r = 0; r < R; ++r) {
            const ReplicaSnapshot& s = per_replica[r][si];
            dp[r] = static_cast<double>(s.n_plus) / vol;
            dm[r] = static_cast<double>(s.n_minus) / vol;
            bpp[r] = s.k_pp;
            bpm[r] = s.k_pm;
            bmm[r] = s.k_mm;
        }
        auto mean_se = [&](const std::vector<double>& xs, double& mean, double& se) {
            mean = 0.0;
            for (double x : xs) mean += x;
            mean /= xs.size();
            double var = 0.0;
            for (double x : xs) var += (x - mean) * (x - mean);
            var /= xs.size() > 1 ? (xs.size() - 1.0) : 1.0;
            se = std::sqrt(var / xs.size());
        };
        mean_se(dp, st.density_plus, st.density_plus_se);
        mean_se(dm, st.density_minus, st.density_minus_se);
        auto bin_stats = [&](const std::vector<std::vector<double>>& b, std::vector<double>& m,
                             std::vector<double>& s) {
            m.resize(nbins);
            s.resize(nbins);
            std::vector<double> col(R);
            for (int k = 0; k < nbins; ++k) {
                for (int r = 0; r < R; ++r) col[r] = b[r][k];
                mean_se(col, m[k], s[k]);
            }
        };
        bin_stats(bpp, st.k_pp, st.k_pp_se);
        bin_stats(bpm, st.k_pm, st.k_pm_se);
        bin_stats(bmm, st.k_mm, st.k_mm_se);
        series.snapshots.push_back(std::move(st));
    }
    for (int r = 0; r < R; ++r)
        for (auto& snap : per_replica[r]) series.records.push_back(std::move(snap));
    for (int r = 0; r < R; ++r)
        if (!guard_notes[r].empty()) {
            series.status = guard_notes[r] + " (replica " + std::to_string(r) + ")";
            break;
        }
    return series;
}

}  // namespace contact
