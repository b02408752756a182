#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace contact {

// Periodic box [-L/2, L/2)^d discretized with n points per axis.
// Fields are stored in wrap-around (DFT) order: axis index i in [0, n)
// represents the signed index s = i for i < n/2 and s = i - n otherwise,
// so site coordinate is s*dx and frequency is s*dp with dp = 2*pi/L.
class FourierGrid {
public:
    FourierGrid(int dim, int n, double box_length)
        : dim_(dim), n_(n), box_(box_length) {
        if (dim < 1 || dim > 3) throw std::invalid_argument("grid: dim must be 1, 2 or 3");
        if (n < 8 || (n & (n - 1)) != 0) throw std::invalid_argument("grid: n must be a power of two >= 8");
        if (!(box_length > 0.0)) throw std::invalid_argument("grid: box length must be positive");
        size_ = 1;
        for (int a = 0; a < dim_; ++a) size_ *= static_cast<std::size_t>(n_);
        dx_ = box_ / n_;
        dp_ = 2.0 * 3.14159265358979323846 / box_;
    }

    int dim() const { return dim_; }
    int n() const { return n_; }
    double box_length() const { return box_; }
    double dx() const { return dx_; }
    double dp() const { return dp_; }
    std::size_t size() const { return size_; }

    // volume elements for quadrature on the space / frequency lattice
    double cell_volume() const { return ipow(dx_, dim_); }
    double freq_cell_volume() const { return ipow(dp_, dim_); }

    int signed_index(int i) const { return i < n_ / 2 ? i : i - n_; }
    int wrap_index(int s) const { return s >= 0 ? s : s + n_; }

    void decompose(std::size_t flat, std::array<int, 3>& idx) const {
        idx = {0, 0, 0};
        for (int a = dim_ - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(flat % static_cast<std::size_t>(n_));
            flat /= static_cast<std::size_t>(n_);
        }
    }

    std::size_t flatten(const std::array<int, 3>& idx) const {
        std::size_t flat = 0;
        for (int a = 0; a < dim_; ++a)
            flat = flat * static_cast<std::size_t>(n_) + static_cast<std::size_t>(idx[a]);
        return flat;
    }

    // site flat index with all axes mirrored, i.e. x -> -x on the torus
    std::size_t mirror(std::size_t flat) const {
        std::array<int, 3> idx;
        decompose(flat, idx);
        for (int a = 0; a < dim_; ++a) idx[a] = (n_ - idx[a]) % n_;
        return flatten(idx);
    }

    std::array<double, 3> coord(std::size_t flat) const {
        std::array<int, 3> idx;
        decompose(flat, idx);
        std::array<double, 3> x{0.0, 0.0, 0.0};
        for (int a = 0; a < dim_; ++a) x[a] = signed_index(idx[a]) * dx_;
        return x;
    }

    std::array<double, 3> freq(std::size_t flat) const {
        std::array<int, 3> idx;
        decompose(flat, idx);
        std::array<double, 3> p{0.0, 0.0, 0.0};
        for (int a = 0; a < dim_; ++a) p[a] = signed_index(idx[a]) * dp_;
        return p;
    }

    double freq_norm(std::size_t flat) const {
        auto p = freq(flat);
        return norm3(p);
    }

    double coord_norm(std::size_t flat) const {
        auto x = coord(flat);
        return norm3(x);
    }

    std::vector<double> all_freq_norms() const {
        std::vector<double> r(size_);
        for (std::size_t i = 0; i < size_; ++i) r[i] = freq_norm(i);
        return r;
    }

    static double ipow(double b, int e) {
        double r = 1.0;
        for (int k = 0; k < e; ++k) r *= b;
        return r;
    }

private:
    static double norm3(const std::array<double, 3>& v) {
        double s = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        return s > 0.0 ? std::sqrt(s) : 0.0;
    }

    int dim_;
    int n_;
    double box_;
    double dx_;
    double dp_;
    std::size_t size_;
};

}  // namespace contact
