#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contact/grid.hpp"
#include "contact/model.hpp"
#include "contact/simulator.hpp"

namespace contact {

struct KernelSpec {
    std::string family = "gaussian";
    double scale = 1.0;
};

// radial Gaussian bump amp * exp(-|x|^2 / (2 w^2)); amplitude 0 means absent
struct BumpSpec {
    double amplitude = 0.0;
    double width = 1.0;
    bool present() const { return amplitude != 0.0; }
};

// Sectioned key=value run description; see README for the schema.
struct RunConfig {
    // [model]
    double lambda_plus = 1.0;
    double lambda_minus = 1.0;
    double lambda_cross = 0.0;
    KernelSpec kernel_plus, kernel_minus, kernel_cross;
    int dim = 3;
    // [init]
    double c_plus = 0.0;
    double c_minus = 0.0;
    double alpha_minus = 0.0;
    double c_pp = -1.0, c_pm = -1.0, c_mm = -1.0;  // negative: Poissonian default from c+-
    BumpSpec psi_plus, psi_minus, phi_pp, phi_pm, phi_mm;
    // [grid]
    int grid_n = 32;
    double box = 20.0;
    // [evolve]
    std::vector<double> times;  // explicit output times; empty = 0..t_end step dt_out
    double t_end = 1.0;
    double dt_out = 0.1;
    double dt = 0.0;  // ODE oracle step, 0 = automatic
    // [sim]
    SimConfig sim;
    // [output]
    std::string out_dir = ".";
    bool fields = false;

    std::string raw_text;
    std::uint64_t config_hash = 0;
};

struct ConfigDiagnostic {
    int line = 0;  // 0 = file-level problem
    std::string message;
};

struct ParsedConfig {
    RunConfig config;
    std::vector<ConfigDiagnostic> errors;
    bool ok() const { return errors.empty(); }
};

ParsedConfig parse_config_text(const std::string& text);
ParsedConfig load_config(const std::string& path);

// materialize module-level types from a parsed config
ModelParams build_params(const RunConfig& rc);
FourierGrid build_grid(const RunConfig& rc);
FirstOrderInit build_first_order(const RunConfig& rc, const FourierGrid& grid);
SecondOrderInit build_second_order(const RunConfig& rc, const FourierGrid& grid);

}  // namespace contact
