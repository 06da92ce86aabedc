#include "qnc/qpd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qnc {

namespace {

constexpr double pi = std::numbers::pi;

void check_order(double s) {
    if (!(s >= -1.0 && s < 1.0)) {
        throw std::invalid_argument("qpd: s must lie in [-1, 1); the P function (s = 1) is singular here");
    }
}

void check_grid(const GridSpec& grid) {
    if (!(grid.half_width > 0.0)) throw std::invalid_argument("qpd: grid half_width must be positive");
    if (grid.points_per_axis < 16) throw std::invalid_argument("qpd: grid needs at least 16 points per axis");
}

// Small nonnegative integer powers; std::pow(complex(0,0), k) is NaN.
complexd ipow(complexd base, int exponent) {
    complexd out{1.0, 0.0};
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

}  // namespace

double laguerre(int n, int k, double x) {
    if (n < 0) throw std::invalid_argument("laguerre: n must be nonnegative");
    double prev = 1.0;  // L_0
    if (n == 0) return prev;
    double cur = 1.0 + k - x;  // L_1
    for (int j = 2; j <= n; ++j) {
        const double next = ((2.0 * j - 1.0 + k - x) * cur - (j - 1.0 + k) * prev) / j;
        prev = cur;
        cur = next;
    }
    return cur;
}

double qpd_qubit(const QubitState& state, double s, complexd alpha) {
    check_order(s);
    const double y = 2.0 / (1.0 - s);
    const double z = (s + 1.0) / (s - 1.0);
    const double a2 = std::norm(alpha);
    const double c = std::exp(-2.0 * a2 / (1.0 - s)) / pi;
    // z (1 - x_alpha) written as z + |alpha|^2 y^2: identical for s > -1 and
    // finite in the Husimi limit s = -1 where x_alpha diverges.
    const double one_photon = z + a2 * y * y;
    return c * y * (state.rho00() + one_photon * state.rho11() + 2.0 * y * std::real(alpha * state.x));
}

double qpd_general(const Eigen::MatrixXcd& rho, double s, complexd alpha) {
    check_order(s);
    const auto dim = rho.rows();
    if (dim != rho.cols() || dim < 1) throw std::invalid_argument("qpd_general: rho must be square");
    if (dim > 16) throw std::invalid_argument("qpd_general: dimension above the Fock cap of 16");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
        throw std::invalid_argument("qpd_general: rho must be Hermitian");
    }
    if (std::abs(rho.trace() - complexd{1.0, 0.0}) > 1e-9) {
        throw std::invalid_argument("qpd_general: rho must have unit trace");
    }

    double fact[17];
    fact[0] = 1.0;
    for (int i = 1; i <= 16; ++i) fact[i] = fact[i - 1] * i;

    const double a2 = std::norm(alpha);
    complexd sum = 0.0;

    if (s == -1.0) {
        // Coherent-state kernel <n|T|m> = c (alpha*)^m alpha^n / sqrt(m! n!),
        // the finite limit of the general kernel.
        const double c = std::exp(-a2) / pi;
        for (Eigen::Index m = 0; m < dim; ++m) {
            for (Eigen::Index n = 0; n < dim; ++n) {
                const complexd t = c * ipow(std::conj(alpha), static_cast<int>(m)) *
                                   ipow(alpha, static_cast<int>(n)) / std::sqrt(fact[m] * fact[n]);
                sum += rho(m, n) * t;
            }
        }
    } else {
        const double y = 2.0 / (1.0 - s);
        const double z = (s + 1.0) / (s - 1.0);
        const double xa = 4.0 * a2 / (1.0 - s * s);
        const double c = std::exp(-2.0 * a2 / (1.0 - s)) / pi;
        for (Eigen::Index m = 0; m < dim; ++m) {
            // m >= n: kernel as given; m < n by Hermiticity of T^(s)(alpha).
            for (Eigen::Index n = 0; n <= m; ++n) {
                const int k = static_cast<int>(m - n);
                const double radial = c * std::sqrt(fact[n] / fact[m]) * std::pow(y, k + 1) *
                                      std::pow(z, static_cast<double>(n)) * laguerre(static_cast<int>(n), k, xa);
                const complexd t = radial * ipow(std::conj(alpha), k);
                sum += rho(m, n) * t;
                if (m != n) sum += rho(n, m) * std::conj(t);
            }
        }
    }

    const double scale = std::max(1.0, std::abs(sum));
    if (std::abs(sum.imag()) > 1e-10 * scale) {
        throw std::runtime_error("qpd_general: imaginary residue above 1e-10");
    }
    return sum.real();
}

std::vector<double> grid_axis(const GridSpec& grid) {
    check_grid(grid);
    std::vector<double> axis(grid.points_per_axis);
    const double step = 2.0 * grid.half_width / (grid.points_per_axis - 1);
    for (int i = 0; i < grid.points_per_axis; ++i) axis[i] = -grid.half_width + step * i;
    return axis;
}

QpdGrid qpd_grid(const QubitState& state, double s, const GridSpec& grid) {
    const auto axis = grid_axis(grid);
    const int n = grid.points_per_axis;
    QpdGrid out{grid, s, std::vector<double>(static_cast<std::size_t>(n) * n)};
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            out.values[static_cast<std::size_t>(iy) * n + ix] = qpd_qubit(state, s, {axis[ix], axis[iy]});
        }
    }
    return out;
}

QpdGrid convolve_qpd(const QubitState& state, double s1, double s2, const GridSpec& grid) {
    check_order(s1);
    if (!(s2 < s1)) throw std::invalid_argument("convolve_qpd: requires s2 < s1 (kernel undefined otherwise)");
    if (s2 < -1.0) throw std::invalid_argument("convolve_qpd: s2 must be >= -1");

    const QpdGrid src = qpd_grid(state, s1, grid);
    const auto axis = grid_axis(grid);
    const int n = grid.points_per_axis;
    const double step = axis[1] - axis[0];

    // Boundary-mass precondition: the outermost ring must carry a negligible
    // fraction of the total |W| mass, otherwise the window truncates the
    // convolution.
    double total = 0.0, border = 0.0;
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const double v = std::abs(src.value(iy, ix));
            total += v;
            if (iy == 0 || iy == n - 1 || ix == 0 || ix == n - 1) border += v;
        }
    }
    if (border > 1e-6 * total) {
        throw std::invalid_argument("convolve_qpd: grid too narrow, boundary mass above 1e-6 of total");
    }

    // Separable Gaussian kernel: exp(-2|a-b|^2/(s1-s2)) factorizes over the
    // two axes; each 1-D pass carries sqrt(2/(pi (s1-s2))) * step.
    const double width = s1 - s2;
    const double norm1d = std::sqrt(2.0 / (pi * width)) * step;
    const int reach = static_cast<int>(std::ceil(std::sqrt(width * 0.5 * 42.0) / step));  // exp(-42) ~ 5e-19
    std::vector<double> kernel(static_cast<std::size_t>(reach) + 1);
    for (int k = 0; k <= reach; ++k) {
        const double u = k * step;
        kernel[k] = norm1d * std::exp(-2.0 * u * u / width);
    }

    auto convolve_axis = [&](const std::vector<double>& in, bool along_x) {
        std::vector<double> out(in.size(), 0.0);
        for (int iy = 0; iy < n; ++iy) {
            for (int ix = 0; ix < n; ++ix) {
                double acc = 0.0;
                for (int k = -reach; k <= reach; ++k) {
                    const int jx = along_x ? ix + k : ix;
                    const int jy = along_x ? iy : iy + k;
                    if (jx < 0 || jx >= n || jy < 0 || jy >= n) continue;
                    acc += kernel[std::abs(k)] * in[static_cast<std::size_t>(jy) * n + jx];
                }
                out[static_cast<std::size_t>(iy) * n + ix] = acc;
            }
        }
        return out;
    };

    QpdGrid result{grid, s2, convolve_axis(convolve_axis(src.values, true), false)};
    return result;
}

DepthResult depth_analytic(const QubitState& state) {
    DepthResult r;
    r.method = DepthMethod::analytic;
    if (state.p <= 0.0) {
        r.tau = 0.0;
    } else {
        r.tau = state.p * state.p / (state.p - std::norm(state.x));
    }
    r.s0 = 1.0 - 2.0 * r.tau;
    return r;
}

namespace {

struct GridMin {
    double min_value = 0.0;
    complexd argmin = {0.0, 0.0};
    double scale = 0.0;  // max |W| over the coarse grid
};

struct Basin {
    double value;
    complexd center;
};

// Adaptive 5x local refinement around one candidate basin: refine until one
// more level improves the minimum by less than half the zero threshold. The
// QPD envelope narrows like sqrt(1-s), so the number of levels needed grows
// as s approaches 1; fourteen levels cover the whole bisection range.
Basin refine_basin(const QubitState& state, double s, Basin basin, double spacing, double threshold,
                   double scale, double tol) {
    double half = spacing;
    double delta = std::numeric_limits<double>::infinity();
    // At least six levels regardless of progress: a dip lying between
    // samples shows zero improvement until the spacing resolves its offset.
    for (int level = 0; level < 14 && (level < 6 || delta > threshold); ++level) {
        const double before = basin.value;
        const complexd center = basin.center;
        const int m = 11;  // spacing shrinks 5x per level
        for (int iy = 0; iy < m; ++iy) {
            for (int ix = 0; ix < m; ++ix) {
                const complexd alpha = center + complexd{-half + 2.0 * half * ix / (m - 1),
                                                         -half + 2.0 * half * iy / (m - 1)};
                const double v = qpd_qubit(state, s, alpha);
                if (v < basin.value) {
                    basin.value = v;
                    basin.center = alpha;
                }
            }
        }
        delta = before - basin.value;
        half /= 5.0;
    }
    if (delta > 10.0 * tol * std::max(scale, 1e-300)) {
        throw std::runtime_error("depth_numeric: grid too coarse to bracket the QPD minimum");
    }
    return basin;
}

struct Scan {
    std::vector<double> axis;
    std::vector<double> values;
    double spacing;
};

Scan scan_window(const QubitState& state, double s, double half, int n) {
    Scan scan;
    scan.axis.resize(n);
    for (int i = 0; i < n; ++i) scan.axis[i] = -half + 2.0 * half * i / (n - 1);
    scan.spacing = scan.axis[1] - scan.axis[0];
    scan.values.resize(static_cast<std::size_t>(n) * n);
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            scan.values[static_cast<std::size_t>(iy) * n + ix] =
                qpd_qubit(state, s, {scan.axis[ix], scan.axis[iy]});
        }
    }
    return scan;
}

// Coarse scan over the requested window plus a finer scan of the structure
// region |alpha| <= 4 sigma, where sigma = sqrt((1-s)/4) is the width of the
// kernel's Gaussian envelope: everything that can decide the sign of W lives
// there, and near s = 1 it shrinks far below the coarse spacing. Candidate
// basins from both scans are then refined locally.
GridMin grid_minimum(const QubitState& state, double s, const GridSpec& grid, double tol) {
    const double sigma = std::sqrt((1.0 - s) / 4.0);
    const std::vector<Scan> scans = {
        scan_window(state, s, grid.half_width, grid.points_per_axis),
        scan_window(state, s, std::min(grid.half_width, 4.0 * sigma), 161),
    };

    GridMin best;
    best.min_value = std::numeric_limits<double>::infinity();
    for (const auto& scan : scans) {
        const int n = static_cast<int>(scan.axis.size());
        for (int iy = 0; iy < n; ++iy) {
            for (int ix = 0; ix < n; ++ix) {
                const double v = scan.values[static_cast<std::size_t>(iy) * n + ix];
                best.scale = std::max(best.scale, std::abs(v));
                if (v < best.min_value) {
                    best.min_value = v;
                    best.argmin = complexd{scan.axis[ix], scan.axis[iy]};
                }
            }
        }
    }

    // Candidate centers per scan, two complementary families:
    //  - discrete local minima with salience above the noise floor (the
    //    generic negative-dip basins; the underflowed envelope tail is a
    //    plateau of ties with no salience and never crowds the list);
    //  - the samples whose neighborhood rises most steeply above them (the
    //    shoulders of a narrow peak, where a sub-cell dip can hide without
    //    registering as a local minimum at this spacing).
    struct Candidate {
        Basin basin;
        double spacing;
        double rise;
    };
    const double noise_floor = 0.5 * tol * std::max(best.scale, 1e-300);
    std::vector<Candidate> seeds;
    for (const auto& scan : scans) {
        const int n = static_cast<int>(scan.axis.size());
        auto at = [&](int iy, int ix) { return scan.values[static_cast<std::size_t>(iy) * n + ix]; };
        std::vector<Candidate> minima;
        std::vector<Candidate> shoulders;
        for (int iy = 0; iy < n; ++iy) {
            for (int ix = 0; ix < n; ++ix) {
                const double v = at(iy, ix);
                double rise = 0.0;
                bool local_min = true;
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        const int jy = iy + dy;
                        const int jx = ix + dx;
                        if (jy < 0 || jy >= n || jx < 0 || jx >= n) continue;
                        const double w = at(jy, jx);
                        if (w < v) local_min = false;
                        rise = std::max(rise, w - v);
                    }
                }
                if (rise > noise_floor || v < -noise_floor) {
                    const Candidate c{{v, complexd{scan.axis[ix], scan.axis[iy]}}, scan.spacing, rise};
                    if (local_min) minima.push_back(c);
                    shoulders.push_back(c);
                }
            }
        }
        auto by_rise = [](const Candidate& a, const Candidate& b) { return a.rise > b.rise; };
        std::sort(minima.begin(), minima.end(), by_rise);
        std::sort(shoulders.begin(), shoulders.end(), by_rise);
        if (minima.size() > 16) minima.resize(16);
        if (shoulders.size() > 16) shoulders.resize(16);
        seeds.insert(seeds.end(), minima.begin(), minima.end());
        seeds.insert(seeds.end(), shoulders.begin(), shoulders.end());
    }

    seeds.push_back({{best.min_value, best.argmin}, scans.front().spacing, 0.0});
    for (const auto& seed : seeds) {
        const Basin refined =
            refine_basin(state, s, seed.basin, seed.spacing, noise_floor, best.scale, tol);
        if (refined.value < best.min_value) {
            best.min_value = refined.value;
            best.argmin = refined.center;
        }
    }
    return best;
}

}  // namespace

DepthResult depth_numeric(const QubitState& state, const GridSpec& grid, double tol) {
    check_grid(grid);
    if (!(tol >= 1e-8 && tol <= 1e-2)) {
        throw std::invalid_argument("depth_numeric: tol must lie in [1e-8, 1e-2]");
    }
    // Near-pure states cross zero with a slope proportional to their
    // impurity, so the zero threshold leaks into s0 amplified by 1/(1-r);
    // the tight default keeps the bias well under the 1e-4 oracle budget.

    DepthResult r;
    r.method = DepthMethod::bisection;

    const double hi_end = 1.0 - 1e-9;  // never touch the singular P function
    auto nonnegative_at = [&](double s, GridMin& out) {
        out = grid_minimum(state, s, grid, tol);
        return out.min_value >= -tol * out.scale;
    };

    GridMin probe;
    if (nonnegative_at(hi_end, probe)) {
        // Classical all the way up: vacuum-like state.
        r.s0 = hi_end;
        r.tau = (1.0 - r.s0) / 2.0;
        r.witness_alpha = probe.argmin;
        return r;
    }

    double lo = -1.0;  // Husimi order: nonnegative for every state
    double hi = hi_end;
    complexd witness = probe.argmin;
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        if (nonnegative_at(mid, probe)) {
            lo = mid;
        } else {
            hi = mid;
            witness = probe.argmin;
        }
    }

    r.s0 = 0.5 * (lo + hi);
    r.tau = std::clamp((1.0 - r.s0) / 2.0, 0.0, 1.0);
    r.witness_alpha = witness;
    return r;
}

}  // namespace qnc
