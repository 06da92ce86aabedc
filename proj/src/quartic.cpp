#include "qnc/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qnc {

namespace {

double eval_poly(const double* c, int degree, double x) {
    double v = c[0];
    for (int i = 1; i <= degree; ++i) v = v * x + c[i];
    return v;
}

double eval_dpoly(const double* c, int degree, double x) {
    double v = c[0] * degree;
    for (int i = 1; i < degree; ++i) v = v * x + c[i] * (degree - i);
    return v;
}

// A few Newton steps on the original polynomial; keeps the update only while
// the residual shrinks.
double polish(const double* c, int degree, double x) {
    double fx = std::abs(eval_poly(c, degree, x));
    for (int it = 0; it < 4; ++it) {
        const double d = eval_dpoly(c, degree, x);
        if (d == 0.0) break;
        const double xn = x - eval_poly(c, degree, x) / d;
        const double fn = std::abs(eval_poly(c, degree, xn));
        if (!(fn < fx) || !std::isfinite(xn)) break;
        x = xn;
        fx = fn;
    }
    return x;
}

int solve_quadratic(double a, double b, double c, double* roots) {
    if (a == 0.0) {
        if (b == 0.0) return 0;
        roots[0] = -c / b;
        return 1;
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return 0;
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    // Stable pair: q/a and c/q (Vieta) unless q vanishes.
    if (q == 0.0) {
        roots[0] = roots[1] = 0.0;
    } else {
        roots[0] = q / a;
        roots[1] = c / q;
    }
    return 2;
}

}  // namespace

int solve_cubic_real(double a, double b, double c, double d, std::array<double, 3>& roots) {
    if (a == 0.0) {
        const int n = solve_quadratic(b, c, d, roots.data());
        std::sort(roots.begin(), roots.begin() + n);
        return n;
    }
    const double coeffs[4] = {a, b, c, d};
    const double a2 = b / a;
    const double a1 = c / a;
    const double a0 = d / a;

    const double q = a1 / 3.0 - a2 * a2 / 9.0;
    const double r = (a1 * a2 - 3.0 * a0) / 6.0 - a2 * a2 * a2 / 27.0;
    const double delta = q * q * q + r * r;

    int n = 0;
    if (delta > 0.0) {
        // One real root.
        const double sd = std::sqrt(delta);
        const double s1 = std::cbrt(r + sd);
        const double s2 = std::cbrt(r - sd);
        roots[n++] = s1 + s2 - a2 / 3.0;
    } else if (delta < 0.0) {
        // Three distinct real roots.
        const double theta = std::acos(std::clamp(r / std::sqrt(-q * q * q), -1.0, 1.0)) / 3.0;
        const double sq = std::sqrt(-q);
        const double third = 2.0 * std::numbers::pi / 3.0;
        roots[n++] = 2.0 * sq * std::cos(theta) - a2 / 3.0;
        roots[n++] = 2.0 * sq * std::cos(theta + third) - a2 / 3.0;
        roots[n++] = 2.0 * sq * std::cos(theta - third) - a2 / 3.0;
    } else {
        // Repeated roots.
        const double s = std::cbrt(r);
        roots[n++] = 2.0 * s - a2 / 3.0;
        roots[n++] = -s - a2 / 3.0;
        roots[n++] = -s - a2 / 3.0;
    }
    for (int i = 0; i < n; ++i) roots[i] = polish(coeffs, 3, roots[i]);
    std::sort(roots.begin(), roots.begin() + n);
    return n;
}

int solve_quartic_real(double a, double b, double c, double d, double e, std::array<double, 4>& roots) {
    if (a == 0.0) {
        std::array<double, 3> r3{};
        const int n = solve_cubic_real(b, c, d, e, r3);
        std::copy(r3.begin(), r3.begin() + n, roots.begin());
        return n;
    }
    const double coeffs[5] = {a, b, c, d, e};
    const double a3 = b / a;
    const double a2 = c / a;
    const double a1 = d / a;
    const double a0 = e / a;

    // Resolvent cubic; take its largest real root.
    std::array<double, 3> res{};
    const int nres = solve_cubic_real(1.0, -a2, a1 * a3 - 4.0 * a0, 4.0 * a0 * a2 - a1 * a1 - a0 * a3 * a3, res);
    const double u1 = res[nres - 1];

    const double r2 = 0.25 * a3 * a3 + u1 - a2;
    const double r = r2 > 0.0 ? std::sqrt(r2) : 0.0;

    double d2, e2;
    if (r != 0.0) {
        const double base = 0.75 * a3 * a3 - r2 - 2.0 * a2;
        const double split = 0.25 * (4.0 * a3 * a2 - 8.0 * a1 - a3 * a3 * a3) / r;
        d2 = base + split;
        e2 = base - split;
    } else {
        const double base = 0.75 * a3 * a3 - 2.0 * a2;
        const double split = 2.0 * std::sqrt(std::max(u1 * u1 - 4.0 * a0, 0.0));
        d2 = base + split;
        e2 = base - split;
    }

    int n = 0;
    if (d2 >= 0.0) {
        const double dd = std::sqrt(d2);
        roots[n++] = -0.25 * a3 + 0.5 * r - 0.5 * dd;
        roots[n++] = -0.25 * a3 + 0.5 * r + 0.5 * dd;
    }
    if (e2 >= 0.0) {
        const double ee = std::sqrt(e2);
        roots[n++] = -0.25 * a3 - 0.5 * r - 0.5 * ee;
        roots[n++] = -0.25 * a3 - 0.5 * r + 0.5 * ee;
    }
    for (int i = 0; i < n; ++i) roots[i] = polish(coeffs, 4, roots[i]);
    std::sort(roots.begin(), roots.begin() + n);
    return n;
}

}  // namespace qnc
