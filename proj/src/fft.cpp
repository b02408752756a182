#include "contact/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

namespace contact {

struct FourierTransformer::Plans {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    ~Plans() {
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
    }
};

FourierTransformer::FourierTransformer(const FourierGrid& grid)
    : grid_(grid), plans_(std::make_unique<Plans>()) {
    int rank = grid_.dim();
    int dims[3] = {grid_.n(), grid_.n(), grid_.n()};
    cvector dummy_in(grid_.size()), dummy_out(grid_.size());
    auto* in = reinterpret_cast<fftw_complex*>(dummy_in.data());
    auto* out = reinterpret_cast<fftw_complex*>(dummy_out.data());
    // FFTW_UNALIGNED so the plans stay valid for any std::vector buffer
    // handed to fftw_execute_dft later.
    plans_->fwd = fftw_plan_dft(rank, dims, in, out, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_->bwd = fftw_plan_dft(rank, dims, in, out, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plans_->fwd || !plans_->bwd) throw std::runtime_error("fft: planning failed");
}

FourierTransformer::~FourierTransformer() = default;

cvector FourierTransformer::forward(const cvector& space) const {
    if (space.size() != grid_.size()) throw std::invalid_argument("fft: field size mismatch");
    cvector in = space;
    cvector out(grid_.size());
    fftw_execute_dft(plans_->fwd, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    double scale = grid_.cell_volume();
    for (auto& v : out) v *= scale;
    return out;
}

cvector FourierTransformer::inverse(const cvector& freq) const {
    if (freq.size() != grid_.size()) throw std::invalid_argument("fft: field size mismatch");
    cvector in = freq;
    cvector out(grid_.size());
    fftw_execute_dft(plans_->bwd, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    double scale = 1.0 / FourierGrid::ipow(grid_.box_length(), grid_.dim());
    for (auto& v : out) v *= scale;
    return out;
}

cvector FourierTransformer::forward_real(const std::vector<double>& space) const {
    if (space.size() != grid_.size()) throw std::invalid_argument("fft: field size mismatch");
    cvector tmp(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) tmp[i] = space[i];
    return forward(tmp);
}

std::vector<double> FourierTransformer::inverse_real_part(const cvector& freq) const {
    cvector tmp = inverse(freq);
    std::vector<double> out(tmp.size());
    for (std::size_t i = 0; i < tmp.size(); ++i) out[i] = tmp[i].real();
    return out;
}

namespace {

cvector reference_dft(const FourierGrid& grid, const cvector& in, int sign, double scale) {
    const int n = grid.n();
    const int d = grid.dim();
    const double two_pi = 2.0 * 3.14159265358979323846;
    cvector cur = in;
    // transform one axis at a time
    std::size_t total = grid.size();
    for (int axis = 0; axis < d; ++axis) {
        cvector next(total, {0.0, 0.0});
        std::size_t stride = 1;
        for (int a = axis + 1; a < d; ++a) stride *= static_cast<std::size_t>(n);
        std::size_t outer = total / (static_cast<std::size_t>(n) * stride);
        for (std::size_t o = 0; o < outer; ++o) {
            for (std::size_t s = 0; s < stride; ++s) {
                std::size_t base = o * static_cast<std::size_t>(n) * stride + s;
                for (int k = 0; k < n; ++k) {
                    std::complex<double> acc{0.0, 0.0};
                    for (int j = 0; j < n; ++j) {
                        double ang = sign * two_pi * double(j) * double(k) / double(n);
                        acc += cur[base + static_cast<std::size_t>(j) * stride] *
                               std::complex<double>(std::cos(ang), std::sin(ang));
                    }
                    next[base + static_cast<std::size_t>(k) * stride] = acc;
                }
            }
        }
        cur.swap(next);
    }
    for (auto& v : cur) v *= scale;
    return cur;
}

}  // namespace

cvector reference_forward(const FourierGrid& grid, const cvector& space) {
    return reference_dft(grid, space, -1, grid.cell_volume());
}

cvector reference_inverse(const FourierGrid& grid, const cvector& freq) {
    return reference_dft(grid, freq, +1, 1.0 / FourierGrid::ipow(grid.box_length(), grid.dim()));
}

}  // namespace contact
