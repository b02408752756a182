#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "contact/backend.hpp"
#include "contact/model.hpp"

namespace contact {

using Point = std::array<double, 3>;

// Particle configuration on the periodic box [0, L)^d.  The two populations
// stay disjoint almost surely; births landing exactly on an opposite-type
// point are resampled.
struct Configuration {
    std::vector<Point> plus_points;
    std::vector<Point> minus_points;
};

struct SimConfig {
    double box_length = 10.0;
    int dim = 3;
    double t_end = 1.0;
    std::vector<double> snapshot_times;
    std::uint64_t seed = 1;
    int replicas = 100;
    double bin_width = 0.25;
    std::size_t max_population = 100000;
};

std::vector<std::string> validate_sim_config(const SimConfig& cfg, double c_plus, double c_minus);

// Two independent event channels with next-reaction bookkeeping: each keeps
// its own generator and an absolute next-firing time; a channel whose rate
// drops to zero parks its unit-exponential remainder in unit_pending.  All
// minus-system randomness is drawn from the minus channel only, and the minus
// clock is never rescaled (plus events cannot change the minus rate), so the
// minus marginal is bit-identical under any change to lambda+, lambda or the
// plus/cross kernels.
struct ChannelRng {
    std::mt19937_64 gen;
    bool scheduled = false;
    double next_time = 0.0;
    double unit_pending = -1.0;
};

struct StepContext {
    ChannelRng minus_chan;
    ChannelRng plus_chan;
    double now = 0.0;
};

StepContext make_step_context(std::uint64_t master_seed, std::uint64_t replica_index);

enum class EventKind {
    none,  // absorbing state, nothing can fire
    death_plus,
    death_minus,
    birth_plus_contact,
    birth_minus_contact,
    birth_plus_cross,
};

struct StepResult {
    EventKind kind = EventKind::none;
    double waiting_time = 0.0;
    double total_rate = 0.0;  // |g+|(1+lambda+) + |g-|(1+lambda- + lambda) before the event
};

Configuration init_poisson(const ModelParams& params, double c_plus, double c_minus,
                           const SimConfig& cfg, StepContext& ctx);

// One exact Gillespie event; mutates config in place and reports what fired.
StepResult step(const ModelParams& params, Configuration& config, const SimConfig& cfg,
                StepContext& ctx);

// Per (replica, snapshot) record with normalized pair estimates per bin.
struct ReplicaSnapshot {
    int replica = 0;
    double t = 0.0;
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::vector<double> k_pp, k_pm, k_mm;
};

struct SnapshotStats {
    double t = 0.0;
    double density_plus = 0.0, density_plus_se = 0.0;
    double density_minus = 0.0, density_minus_se = 0.0;
    std::vector<double> k_pp, k_pp_se;
    std::vector<double> k_pm, k_pm_se;
    std::vector<double> k_mm, k_mm_se;
};

struct EstimateSeries {
    std::vector<double> bin_centers;
    std::vector<SnapshotStats> snapshots;
    std::vector<ReplicaSnapshot> records;  // raw per-replica data, replica-major
    std::string status = "ok";
    int replicas = 0;
};

// Ordered-pair shell counts normalized by L^d * shell volume, so a Poisson
// field of intensity c estimates c*c in every bin.
std::vector<double> pair_estimate(const std::vector<Point>& a, const std::vector<Point>& b,
                                  bool same_set, const SimConfig& cfg,
                                  std::vector<double>* centers = nullptr);

EstimateSeries run_replicas(const ModelParams& params, double c_plus, double c_minus,
                            const SimConfig& cfg, Backend backend = Backend::openmp);

}  // namespace contact
