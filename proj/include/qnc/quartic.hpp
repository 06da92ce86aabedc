#pragma once

#include <array>

namespace qnc {

// Real-root solvers for low-degree polynomials with real coefficients.
// Roots are returned sorted ascending; multiple roots appear with their
// multiplicity. Closed-form (Cardano / resolvent-cubic) solutions followed
// by a few Newton polishing steps on the original polynomial.

/// Real roots of a x^3 + b x^2 + c x + d. Falls back to the quadratic when
/// a == 0. Returns the number of roots written.
int solve_cubic_real(double a, double b, double c, double d, std::array<double, 3>& roots);

/// Real roots of a x^4 + b x^3 + c x^2 + d x + e. Falls back to the cubic
/// when a == 0. Returns the number of roots written.
int solve_quartic_real(double a, double b, double c, double d, double e, std::array<double, 4>& roots);

}  // namespace qnc
