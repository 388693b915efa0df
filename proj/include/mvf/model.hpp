#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mvf/history.hpp"

namespace mvf {

using SpeedFn = std::function<double(double t, double x, const History& q)>;
using RateFn = std::function<double(double t, double x, const History& w, const History& q)>;
using PhiFn = std::function<double(double t, double x)>;

// A positive continuous functional on history segments: a finite list of point
// atoms on [-tau, 0] plus an optional density part. Covers point evaluation at
// an offset, delayed evaluation, and windowed averages.
struct RenewalAtom {
  double offset = 0.0;  // in [-tau, 0]
  double weight = 0.0;  // >= 0
};

class RenewalFunctional {
 public:
  std::vector<RenewalAtom> atoms;
  std::function<double(double s)> density;  // nonnegative on [-tau, 0]; empty = none

  // Sum of atom evaluations plus the trapezoid integral of density * segment.
  double apply(const History& seg) const;

  // Total mass: sum of atom weights + integral of the density.
  double norm(double tau, int quad_cells = 128) const;

  // Functional-norm distance to another functional over segments on [-tau, 0].
  double distance(const RenewalFunctional& other, double tau, int quad_cells = 128) const;
};

using KernelFn = std::function<RenewalFunctional(double t, double x)>;

// The problem instance. All evaluators must be safe for concurrent read-only
// calls; instances are treated as immutable once constructed.
struct ModelSpec {
  SpeedFn c;
  SpeedFn dc_dx;  // empty -> central finite difference with step fd_step
  RateFn lambda;
  KernelFn kernel;
  PhiFn phi;

  double tau = 0.0;
  double a = 1.0;
  double x_max = 1.0;

  double fd_step = -1.0;  // < 0 selects 1e-4 * x_max

  // Structural declarations some diagnostics require.
  bool kernel_is_zero = false;  // K == 0
  bool w_is_zero = false;       // lambda == -d_x c identically

  std::string name = "custom";

  double fd_step_value() const { return fd_step > 0 ? fd_step : 1e-4 * x_max; }
  void validate() const;
};

// One constant per symbol (the constant realization of the assumption
// moduli): speed bound c_hat, boundary-wedge fraction eps0, kernel mass bound
// kappa, Lipschitz moduli L_*, bound functions M_*, and the two norms of the
// initial data.
struct AssumptionConstants {
  double c_hat = 1.0;
  double eps0 = 0.5;
  double kappa = 0.0;
  double L_phi = 0.0;
  double L_c = 0.0;
  double L_lambda = 0.0;
  double L_W = 0.0;
  double L_K = 0.0;
  double M_lambda = 0.0;
  double M_W = 0.0;
  double phi_sup = 0.0;
  double phi_inf1 = 0.0;

  void validate() const;
};

struct ConsistencyReport {
  bool pass = false;
  double residual = 0.0;
  double boundary_value = 0.0;  // phi(0, 0)
  double renewal_value = 0.0;   // quadrature of K(0, x) applied to phi(., x)
};

// Corner compatibility between the initial data and the renewal rule:
// phi(0,0) must equal the renewal integral at t = 0. quad_cells controls the
// quadrature grid on [0, x_max].
ConsistencyReport validate_consistency(const ModelSpec& m, double tol, int quad_cells = 20000);

// lambda + d_x c, exact when dc_dx is supplied, else central difference
// (one-sided at the x = 0 edge).
double eval_w(const ModelSpec& m, double t, double x, const History& w, const History& q);

struct SamplingPlan {
  int n_probes = 256;  // single-point probes for the M / eps0 / kappa estimates
  int n_pairs = 256;   // probe pairs for the difference-quotient estimates
  std::uint64_t seed = 1;
  double probe_amplitude = 1.0;  // value scale of the random probe segments
};

struct ConstantViolation {
  std::string constant;
  double declared = 0.0;
  double observed = 0.0;
  double t = 0.0;
  double x = 0.0;
};

struct ConstantsReport {
  AssumptionConstants estimated;
  std::vector<ConstantViolation> violations;
  bool clean() const { return violations.empty(); }
};

// Empirical estimates of the assumption constants from randomized probes:
// max difference quotients for the L moduli, max absolute values for the M
// bounds, min c / c_hat over the boundary wedge for eps0, max kernel mass for
// kappa. If declared constants are passed, every probe exceeding them is
// reported as a violation.
ConstantsReport estimate_constants(const ModelSpec& m, const SamplingPlan& plan,
                                   const AssumptionConstants* declared = nullptr);

}  // namespace mvf
