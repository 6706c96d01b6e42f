// SPDX-License-Identifier: Apache-2.0
//
// twrelay - two-way relay channel estimation simulator

#pragma once

#include <armadillo>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace twrelay {

// SplitMix64 finalizer; used to derive substream seeds from (master, ids...).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic random substream. A stream is identified by the master seed
// plus a list of ids (e.g. {trial, purpose}); re-deriving the same ids yields
// bitwise-identical draws regardless of call site, thread or execution order.
//
// Complex Gaussian convention (used everywhere in this project):
// CN(0, sigma2) has independent real and imaginary parts, variance sigma2/2
// each. Gaussians come from Box-Muller over the stream's own uniforms, so
// sequences do not depend on the standard library's distribution internals.
class Substream {
  public:
    Substream(std::uint64_t master, std::initializer_list<std::uint64_t> ids) {
        std::uint64_t s = splitmix64(master);
        for (std::uint64_t id : ids) s = splitmix64(s ^ (id + 0x9e3779b97f4a7c15ULL));
        engine_.seed(s);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; pairs are generated and cached.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    // One draw from CN(0, sigma2).
    std::complex<double> cgaussian(double sigma2) {
        const double s = std::sqrt(0.5 * sigma2);
        const double re = gaussian();
        const double im = gaussian();
        return {s * re, s * im};
    }

    // Fills column-major with i.i.d. CN(0, sigma2) entries.
    arma::cx_mat cgaussian_matrix(arma::uword rows, arma::uword cols, double sigma2) {
        arma::cx_mat m(rows, cols);
        for (arma::uword j = 0; j < cols; ++j)
            for (arma::uword i = 0; i < rows; ++i) m(i, j) = cgaussian(sigma2);
        return m;
    }

    arma::cx_vec cgaussian_vector(arma::uword n, double sigma2) {
        arma::cx_vec v(n);
        for (arma::uword i = 0; i < n; ++i) v(i) = cgaussian(sigma2);
        return v;
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace twrelay
