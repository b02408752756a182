#include "contact/split_field.hpp"

#include <cmath>
#include <stdexcept>

namespace contact {

SplitField make_constant_field(double c) { return SplitField{c, {}}; }

SplitField make_field(double c, cvector fluct_hat) { return SplitField{c, std::move(fluct_hat)}; }

double conjugate_symmetry_defect(const FourierGrid& grid, const cvector& fhat) {
    if (fhat.empty()) return 0.0;
    if (fhat.size() != grid.size()) throw std::invalid_argument("field size mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < fhat.size(); ++i) {
        std::complex<double> diff = fhat[i] - std::conj(fhat[grid.mirror(i)]);
        worst = std::max(worst, std::abs(diff));
    }
    return worst;
}

double evenness_defect(const FourierGrid& grid, const cvector& fhat) {
    if (fhat.empty()) return 0.0;
    if (fhat.size() != grid.size()) throw std::invalid_argument("field size mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < fhat.size(); ++i)
        worst = std::max(worst, std::abs(fhat[i] - fhat[grid.mirror(i)]));
    return worst;
}

double sup_abs(const cvector& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

double sup_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double z : v) m = std::max(m, std::abs(z));
    return m;
}

std::vector<double> space_values(const SplitField& f, const FourierTransformer& ft) {
    if (!f.has_fluct()) return std::vector<double>(ft.grid().size(), f.constant);
    std::vector<double> out = ft.inverse_real_part(f.fluct_hat);
    for (auto& v : out) v += f.constant;
    return out;
}

}  // namespace contact
