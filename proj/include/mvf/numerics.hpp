#pragma once

#include <functional>
#include <span>

namespace mvf {

// Uniform 1-D grid with n cells on [lo, hi]. Node positions are computed from
// the index, never by repeated addition, so they do not drift.
struct Grid1D {
  double lo = 0.0;
  double hi = 1.0;
  int n = 1;

  Grid1D() = default;
  Grid1D(double lo_, double hi_, int n_);

  double h() const { return (hi - lo) / n; }
  int cells() const { return n; }
  int nodes() const { return n + 1; }
  double node(int k) const { return k >= n ? hi : lo + k * h(); }

  // Cell index containing x, clamped to [0, n-1].
  int locate(double x) const;
};

using Ode1Fn = std::function<double(double s, double y)>;

// Classical fixed-step RK4 from (s0, y0) to s1. s1 < s0 integrates backward.
double integrate_ode_rk4(const Ode1Fn& f, double s0, double y0, double s1, int steps);

// Composite trapezoid of uniformly spaced samples with spacing h.
double quad_composite(std::span<const double> f, double h);

// Piecewise-linear interpolation of nodal values. Queries are clamped to the
// hull when within clamp_tol of it; farther out they throw. clamp_tol < 0
// selects 1e-9 * (hi - lo).
double interp_linear(const Grid1D& grid, std::span<const double> values, double x,
                     double clamp_tol = -1.0);

// Bilinear interpolation on the tensor grid gx x gy; values are row-major with
// rows indexed by gx nodes.
double interp_bilinear(const Grid1D& gx, const Grid1D& gy, std::span<const double> values,
                       double x, double y, double clamp_tol = -1.0);

// Bisection for a root of g on [lo, hi]; requires a sign change. Returns the
// midpoint of the final bracket of width <= tol.
double bisect_root(const std::function<double(double)>& g, double lo, double hi, double tol);

}  // namespace mvf
