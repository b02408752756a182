#include "contact/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "contact/csvio.hpp"

namespace contact {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
    const char* c = s.c_str();
    char* end = nullptr;
    out = std::strtod(c, &end);
    return end != c && *end == '\0' && std::isfinite(out);
}

bool parse_int(const std::string& s, long long& out) {
    const char* c = s.c_str();
    char* end = nullptr;
    out = std::strtoll(c, &end, 10);
    return end != c && *end == '\0';
}

bool parse_uint(const std::string& s, unsigned long long& out) {
    const char* c = s.c_str();
    char* end = nullptr;
    out = std::strtoull(c, &end, 10);
    return end != c && *end == '\0';
}

bool parse_double_list(const std::string& s, std::vector<double>& out) {
    out.clear();
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        double v;
        if (!parse_double(tok, v)) return false;
        out.push_back(v);
    }
    return true;
}

bool parse_bool(const std::string& s, bool& out) {
    if (s == "true" || s == "1") return out = true, true;
    if (s == "false" || s == "0") return out = false, true;
    return false;
}

bool parse_kernel(const std::string& s, KernelSpec& out) {
    std::istringstream in(s);
    std::string family;
    double scale;
    if (!(in >> family >> scale)) return false;
    std::string rest;
    if (in >> rest) return false;
    if (family != "gaussian" && family != "tent") return false;
    if (!(scale > 0.0)) return false;
    out.family = family;
    out.scale = scale;
    return true;
}

// "zero" or "bump AMPLITUDE WIDTH"
bool parse_bump(const std::string& s, BumpSpec& out) {
    std::istringstream in(s);
    std::string kind;
    if (!(in >> kind)) return false;
    if (kind == "zero") {
        std::string rest;
        if (in >> rest) return false;
        out = BumpSpec{};
        return true;
    }
    if (kind != "bump") return false;
    double amp, width;
    if (!(in >> amp >> width)) return false;
    std::string rest;
    if (in >> rest) return false;
    if (!(width > 0.0)) return false;
    out.amplitude = amp;
    out.width = width;
    return true;
}

struct Parser {
    RunConfig& rc;
    std::vector<ConfigDiagnostic>& errors;
    std::set<std::string> seen;

    void fail(int line, const std::string& msg) { errors.push_back({line, msg}); }

    bool once(int line, const std::string& section, const std::string& key) {
        if (!seen.insert(section + "." + key).second) {
            fail(line, "duplicate key '" + key + "' in [" + section + "]");
            return false;
        }
        return true;
    }

    void handle(int line, const std::string& section, const std::string& key,
                const std::string& value) {
        if (!once(line, section, key)) return;
        const auto bad = [&](const char* what) {
            fail(line, std::string("bad ") + what + " for '" + key + "': '" + value + "'");
        };
        auto num = [&](double& dst, bool positive = false, bool nonneg = false) {
            double v;
            if (!parse_double(value, v) || (positive && !(v > 0.0)) || (nonneg && v < 0.0))
                bad("number");
            else
                dst = v;
        };

        if (section == "model") {
            if (key == "lambda_plus") num(rc.lambda_plus, false, true);
            else if (key == "lambda_minus") num(rc.lambda_minus, false, true);
            else if (key == "lambda_cross") num(rc.lambda_cross, false, true);
            else if (key == "kernel_plus") { if (!parse_kernel(value, rc.kernel_plus)) bad("kernel (want 'gaussian S' or 'tent S')"); }
            else if (key == "kernel_minus") { if (!parse_kernel(value, rc.kernel_minus)) bad("kernel (want 'gaussian S' or 'tent S')"); }
            else if (key == "kernel_cross") { if (!parse_kernel(value, rc.kernel_cross)) bad("kernel (want 'gaussian S' or 'tent S')"); }
            else if (key == "dim") {
                long long v;
                if (!parse_int(value, v) || v < 1 || v > 3) bad("dimension (want 1, 2 or 3)");
                else rc.dim = static_cast<int>(v);
            } else fail(line, "unknown key '" + key + "' in [model]");
        } else if (section == "init") {
            if (key == "c_plus") num(rc.c_plus, false, true);
            else if (key == "c_minus") num(rc.c_minus, false, true);
            else if (key == "alpha_minus") num(rc.alpha_minus, false, true);
            else if (key == "c_pp") num(rc.c_pp, false, true);
            else if (key == "c_pm") num(rc.c_pm, false, true);
            else if (key == "c_mm") num(rc.c_mm, false, true);
            else if (key == "psi_plus") { if (!parse_bump(value, rc.psi_plus)) bad("field (want 'zero' or 'bump AMP WIDTH')"); }
            else if (key == "psi_minus") { if (!parse_bump(value, rc.psi_minus)) bad("field (want 'zero' or 'bump AMP WIDTH')"); }
            else if (key == "phi_pp") { if (!parse_bump(value, rc.phi_pp)) bad("field (want 'zero' or 'bump AMP WIDTH')"); }
            else if (key == "phi_pm") { if (!parse_bump(value, rc.phi_pm)) bad("field (want 'zero' or 'bump AMP WIDTH')"); }
            else if (key == "phi_mm") { if (!parse_bump(value, rc.phi_mm)) bad("field (want 'zero' or 'bump AMP WIDTH')"); }
            else fail(line, "unknown key '" + key + "' in [init]");
        } else if (section == "grid") {
            if (key == "n") {
                long long v;
                if (!parse_int(value, v) || v < 8 || (v & (v - 1)) != 0)
                    bad("grid size (want a power of two >= 8)");
                else rc.grid_n = static_cast<int>(v);
            } else if (key == "box") num(rc.box, true);
            else fail(line, "unknown key '" + key + "' in [grid]");
        } else if (section == "evolve") {
            if (key == "times") {
                if (!parse_double_list(value, rc.times) || rc.times.empty()) bad("time list");
            } else if (key == "t_end") num(rc.t_end, false, true);
            else if (key == "dt_out") num(rc.dt_out, true);
            else if (key == "dt") num(rc.dt, false, true);
            else fail(line, "unknown key '" + key + "' in [evolve]");
        } else if (section == "sim") {
            if (key == "box") num(rc.sim.box_length, true);
            else if (key == "t_end") num(rc.sim.t_end, false, true);
            else if (key == "snapshots") {
                if (!parse_double_list(value, rc.sim.snapshot_times)) bad("time list");
            } else if (key == "seed") {
                unsigned long long v;
                if (!parse_uint(value, v)) bad("seed");
                else rc.sim.seed = v;
            } else if (key == "replicas") {
                long long v;
                if (!parse_int(value, v) || v < 1) bad("replica count");
                else rc.sim.replicas = static_cast<int>(v);
            } else if (key == "bin_width") num(rc.sim.bin_width, true);
            else if (key == "max_population") {
                unsigned long long v;
                if (!parse_uint(value, v) || v == 0) bad("population cap");
                else rc.sim.max_population = static_cast<std::size_t>(v);
            } else fail(line, "unknown key '" + key + "' in [sim]");
        } else if (section == "output") {
            if (key == "dir") rc.out_dir = value;
            else if (key == "fields") { if (!parse_bool(value, rc.fields)) bad("boolean"); }
            else fail(line, "unknown key '" + key + "' in [output]");
        } else {
            fail(line, "unknown section [" + section + "]");
        }
    }
};

}  // namespace

ParsedConfig parse_config_text(const std::string& text) {
    ParsedConfig out;
    out.config.raw_text = text;
    out.config.config_hash = fnv1a64(text);
    Parser p{out.config, out.errors, {}};

    static const std::set<std::string> known_sections = {"model", "init",   "grid",
                                                         "evolve", "sim", "output"};
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') {
                p.fail(line, "unterminated section header: '" + s + "'");
                continue;
            }
            section = trim(s.substr(1, s.size() - 2));
            if (known_sections.count(section) == 0) {
                p.fail(line, "unknown section [" + section + "]");
                section.clear();
            }
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            p.fail(line, "expected 'key = value', got '" + s + "'");
            continue;
        }
        if (section.empty()) {
            p.fail(line, "key outside any section: '" + s + "'");
            continue;
        }
        p.handle(line, section, trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
    }
    out.config.sim.dim = out.config.dim;
    return out;
}

ParsedConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ParsedConfig out;
        out.errors.push_back({0, "cannot open config file '" + path + "'"});
        return out;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

namespace {

Kernel make_kernel(const KernelSpec& spec, int dim) {
    return Kernel(spec.family == "tent" ? KernelFamily::tent : KernelFamily::gaussian, spec.scale,
                  dim);
}

std::vector<double> materialize_bump(const BumpSpec& spec, const FourierGrid& grid) {
    if (!spec.present()) return {};
    std::vector<double> f(grid.size());
    const double w2 = 2.0 * spec.width * spec.width;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double r = grid.coord_norm(i);
        f[i] = spec.amplitude * std::exp(-r * r / w2);
    }
    return f;
}

}  // namespace

ModelParams build_params(const RunConfig& rc) {
    return make_params(rc.lambda_plus, rc.lambda_minus, rc.lambda_cross,
                       make_kernel(rc.kernel_plus, rc.dim), make_kernel(rc.kernel_minus, rc.dim),
                       make_kernel(rc.kernel_cross, rc.dim));
}

FourierGrid build_grid(const RunConfig& rc) { return FourierGrid(rc.dim, rc.grid_n, rc.box); }

FirstOrderInit build_first_order(const RunConfig& rc, const FourierGrid& grid) {
    FirstOrderInit init;
    init.c_plus = rc.c_plus;
    init.c_minus = rc.c_minus;
    init.psi_plus = materialize_bump(rc.psi_plus, grid);
    init.psi_minus = materialize_bump(rc.psi_minus, grid);
    init.alpha_minus = rc.alpha_minus;
    if (init.alpha_minus <= 0.0) {
        // default to the actual infimum of the minus density
        double lo = init.c_minus;
        for (double v : init.psi_minus) lo = std::min(lo, init.c_minus + v);
        init.alpha_minus = std::max(lo, 0.0);
    }
    return init;
}

SecondOrderInit build_second_order(const RunConfig& rc, const FourierGrid& grid) {
    SecondOrderInit init;
    init.c_pp = rc.c_pp >= 0.0 ? rc.c_pp : rc.c_plus * rc.c_plus;
    init.c_pm = rc.c_pm >= 0.0 ? rc.c_pm : rc.c_plus * rc.c_minus;
    init.c_mm = rc.c_mm >= 0.0 ? rc.c_mm : rc.c_minus * rc.c_minus;
    init.phi_pp = materialize_bump(rc.phi_pp, grid);
    init.phi_pm = materialize_bump(rc.phi_pm, grid);
    init.phi_mm = materialize_bump(rc.phi_mm, grid);
    init.translation_invariant = !rc.psi_plus.present() && !rc.psi_minus.present();
    return init;
}

}  // namespace contact
