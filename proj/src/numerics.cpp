#include "mvf/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mvf {

Grid1D::Grid1D(double lo_, double hi_, int n_) : lo(lo_), hi(hi_), n(n_) {
  if (!(hi > lo)) throw std::invalid_argument("Grid1D: hi must exceed lo");
  if (n < 1) throw std::invalid_argument("Grid1D: need at least one cell");
}

int Grid1D::locate(double x) const {
  int k = static_cast<int>((x - lo) / h());
  if (k < 0) k = 0;
  if (k > n - 1) k = n - 1;
  return k;
}

double integrate_ode_rk4(const Ode1Fn& f, double s0, double y0, double s1, int steps) {
  if (steps < 1) throw std::invalid_argument("integrate_ode_rk4: steps must be >= 1");
  const double h = (s1 - s0) / steps;
  double y = y0;
  for (int i = 0; i < steps; ++i) {
    const double s = s0 + i * h;
    const double k1 = f(s, y);
    const double k2 = f(s + 0.5 * h, y + 0.5 * h * k1);
    const double k3 = f(s + 0.5 * h, y + 0.5 * h * k2);
    const double k4 = f(s + h, y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!std::isfinite(y))
      throw std::runtime_error("integrate_ode_rk4: non-finite value at step " +
                               std::to_string(i));
  }
  return y;
}

double quad_composite(std::span<const double> f, double h) {
  if (f.size() < 2) throw std::invalid_argument("quad_composite: need at least 2 nodes");
  double sum = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) sum += f[i];
  return sum * h;
}

namespace {

double hull_clamp(const Grid1D& g, double x, double clamp_tol, const char* who) {
  const double tol = clamp_tol < 0 ? 1e-9 * (g.hi - g.lo) : clamp_tol;
  if (x < g.lo - tol || x > g.hi + tol)
    throw std::out_of_range(std::string(who) + ": query " + std::to_string(x) +
                            " outside [" + std::to_string(g.lo) + ", " +
                            std::to_string(g.hi) + "]");
  return x < g.lo ? g.lo : (x > g.hi ? g.hi : x);
}

}  // namespace

double interp_linear(const Grid1D& grid, std::span<const double> values, double x,
                     double clamp_tol) {
  if (static_cast<int>(values.size()) != grid.nodes())
    throw std::invalid_argument("interp_linear: value count does not match grid");
  x = hull_clamp(grid, x, clamp_tol, "interp_linear");
  const int k = grid.locate(x);
  const double t = (x - grid.node(k)) / grid.h();
  return values[k] + t * (values[k + 1] - values[k]);
}

double interp_bilinear(const Grid1D& gx, const Grid1D& gy, std::span<const double> values,
                       double x, double y, double clamp_tol) {
  if (static_cast<int>(values.size()) != gx.nodes() * gy.nodes())
    throw std::invalid_argument("interp_bilinear: value count does not match grids");
  x = hull_clamp(gx, x, clamp_tol, "interp_bilinear");
  y = hull_clamp(gy, y, clamp_tol, "interp_bilinear");
  const int i = gx.locate(x);
  const int j = gy.locate(y);
  const double tx = (x - gx.node(i)) / gx.h();
  const double ty = (y - gy.node(j)) / gy.h();
  const int ny = gy.nodes();
  const double v00 = values[i * ny + j];
  const double v01 = values[i * ny + j + 1];
  const double v10 = values[(i + 1) * ny + j];
  const double v11 = values[(i + 1) * ny + j + 1];
  const double a = v00 + ty * (v01 - v00);
  const double b = v10 + ty * (v11 - v10);
  return a + tx * (b - a);
}

double bisect_root(const std::function<double(double)>& g, double lo, double hi, double tol) {
  double glo = g(lo);
  double ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if (glo * ghi > 0.0)
    throw std::invalid_argument("bisect_root: no sign change on [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "]");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at floating-point resolution
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if (glo * gm < 0.0) {
      hi = mid;
      ghi = gm;
    } else {
      lo = mid;
      glo = gm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace mvf
