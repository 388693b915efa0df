#include "mvf/model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "mvf/numerics.hpp"

namespace mvf {

namespace {

std::string at_point(double t, double x) {
  return " at (t=" + std::to_string(t) + ", x=" + std::to_string(x) + ")";
}

void require_finite(double v, const char* what, double t, double x) {
  if (!std::isfinite(v))
    throw std::runtime_error(std::string(what) + " is non-finite" + at_point(t, x));
}

}  // namespace

double RenewalFunctional::apply(const History& seg) const {
  double value = 0.0;
  for (const RenewalAtom& a : atoms) value += a.weight * seg.at(a.offset);
  if (density && seg.tau() > 0.0) {
    const int n = std::max(seg.quad_nodes(), 9);
    const double tau = seg.tau();
    const double h = tau / (n - 1);
    double sum = 0.5 * (density(-tau) * seg.at(-tau) + density(0.0) * seg.at(0.0));
    for (int i = 1; i + 1 < n; ++i) {
      const double s = -tau + i * h;
      sum += density(s) * seg.at(s);
    }
    value += sum * h;
  }
  return value;
}

double RenewalFunctional::norm(double tau, int quad_cells) const {
  double mass = 0.0;
  for (const RenewalAtom& a : atoms) mass += std::abs(a.weight);
  if (density && tau > 0.0) {
    const int n = quad_cells + 1;
    const double h = tau / quad_cells;
    double sum = 0.5 * (std::abs(density(-tau)) + std::abs(density(0.0)));
    for (int i = 1; i + 1 < n; ++i) sum += std::abs(density(-tau + i * h));
    mass += sum * h;
  }
  return mass;
}

double RenewalFunctional::distance(const RenewalFunctional& other, double tau,
                                   int quad_cells) const {
  double d = 0.0;
  // Atoms matched by offset; unmatched atoms contribute their full weight.
  std::vector<bool> used(other.atoms.size(), false);
  for (const RenewalAtom& a : atoms) {
    double w = a.weight;
    for (std::size_t j = 0; j < other.atoms.size(); ++j) {
      if (!used[j] && std::abs(other.atoms[j].offset - a.offset) <= 1e-12 * (tau + 1.0)) {
        w = std::abs(a.weight - other.atoms[j].weight);
        used[j] = true;
        break;
      }
    }
    d += std::abs(w);
  }
  for (std::size_t j = 0; j < other.atoms.size(); ++j)
    if (!used[j]) d += std::abs(other.atoms[j].weight);
  if (tau > 0.0 && (density || other.density)) {
    const int n = quad_cells + 1;
    const double h = tau / quad_cells;
    auto diff = [&](double s) {
      const double d1 = density ? density(s) : 0.0;
      const double d2 = other.density ? other.density(s) : 0.0;
      return std::abs(d1 - d2);
    };
    double sum = 0.5 * (diff(-tau) + diff(0.0));
    for (int i = 1; i + 1 < n; ++i) sum += diff(-tau + i * h);
    d += sum * h;
  }
  return d;
}

void ModelSpec::validate() const {
  if (!c) throw std::invalid_argument("ModelSpec: speed evaluator missing");
  if (!lambda) throw std::invalid_argument("ModelSpec: rate evaluator missing");
  if (!kernel) throw std::invalid_argument("ModelSpec: renewal kernel missing");
  if (!phi) throw std::invalid_argument("ModelSpec: initial data missing");
  if (tau < 0.0) throw std::invalid_argument("ModelSpec: tau must be >= 0");
  if (!(a > 0.0)) throw std::invalid_argument("ModelSpec: horizon must be positive");
  if (!(x_max > 0.0)) throw std::invalid_argument("ModelSpec: x_max must be positive");
}

void AssumptionConstants::validate() const {
  if (!(eps0 > 0.0 && eps0 < 1.0))
    throw std::invalid_argument("AssumptionConstants: eps0 must lie in (0, 1)");
  if (!(c_hat > 0.0)) throw std::invalid_argument("AssumptionConstants: c_hat must be positive");
  for (double v : {kappa, L_phi, L_c, L_lambda, L_W, L_K, M_lambda, M_W, phi_sup, phi_inf1})
    if (v < 0.0 || !std::isfinite(v))
      throw std::invalid_argument("AssumptionConstants: moduli must be finite and nonnegative");
}

ConsistencyReport validate_consistency(const ModelSpec& m, double tol, int quad_cells) {
  m.validate();
  if (quad_cells < 2) throw std::invalid_argument("validate_consistency: quadrature too coarse");
  const double h = m.x_max / quad_cells;
  double sum = 0.0;
  for (int j = 0; j <= quad_cells; ++j) {
    const double x = j == quad_cells ? m.x_max : j * h;
    double g;
    try {
      FnSegment seg(m.tau, m.phi, x, 65);
      g = m.kernel(0.0, x).apply(seg);
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string("validate_consistency: evaluator failure (") +
                               e.what() + ")" + at_point(0.0, x));
    }
    require_finite(g, "renewal integrand", 0.0, x);
    sum += (j == 0 || j == quad_cells) ? 0.5 * g : g;
  }
  ConsistencyReport rep;
  rep.renewal_value = sum * h;
  rep.boundary_value = m.phi(0.0, 0.0);
  require_finite(rep.boundary_value, "phi", 0.0, 0.0);
  rep.residual = std::abs(rep.boundary_value - rep.renewal_value) /
                 std::max(1.0, std::abs(rep.boundary_value));
  rep.pass = rep.residual <= tol;
  return rep;
}

double eval_w(const ModelSpec& m, double t, double x, const History& w, const History& q) {
  const double lam = m.lambda(t, x, w, q);
  require_finite(lam, "lambda", t, x);
  double dcdx;
  if (m.dc_dx) {
    dcdx = m.dc_dx(t, x, q);
  } else {
    const double h = m.fd_step_value();
    if (x - h >= 0.0) {
      dcdx = (m.c(t, x + h, q) - m.c(t, x - h, q)) / (2.0 * h);
    } else {
      dcdx = (m.c(t, x + h, q) - m.c(t, x, q)) / h;
    }
  }
  require_finite(dcdx, "d_x c", t, x);
  return lam + dcdx;
}

namespace {

// Random piecewise-linear nonnegative probe segment.
HistorySegment random_segment(double tau, double amp, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, amp);
  if (tau <= 0.0) return HistorySegment(0.0, {u(rng)});
  std::vector<double> s(9);
  for (double& v : s) v = u(rng);
  return HistorySegment(tau, std::move(s));
}

double seg_dist(const HistorySegment& p, const HistorySegment& q) {
  double d = 0.0;
  const int n = std::max(p.quad_nodes(), q.quad_nodes());
  if (p.tau() <= 0.0) return std::abs(p.at(0.0) - q.at(0.0));
  for (int i = 0; i < n; ++i) {
    const double s = -p.tau() + p.tau() * i / (n - 1);
    d = std::max(d, std::abs(p.at(s) - q.at(s)));
  }
  return d;
}

struct Extremum {
  double value = 0.0;
  double t = 0.0;
  double x = 0.0;
  void take_max(double v, double tt, double xx) {
    if (v > value) {
      value = v;
      t = tt;
      x = xx;
    }
  }
};

}  // namespace

ConstantsReport estimate_constants(const ModelSpec& m, const SamplingPlan& plan,
                                   const AssumptionConstants* declared) {
  m.validate();
  std::mt19937_64 rng(plan.seed);
  std::uniform_real_distribution<double> ut(0.0, m.a);
  std::uniform_real_distribution<double> ux(0.0, m.x_max);
  std::uniform_real_distribution<double> uh(-m.tau, 0.0);
  const double amp = plan.probe_amplitude;

  Extremum m_lambda, m_w, c_sup, kappa_obs, phi_sup_obs, l_c, l_lambda, l_w, l_k, l_phi;
  double eps0_obs = 1.0;
  double eps0_t = 0.0, eps0_x = 0.0;
  const double c_hat_ref = declared ? declared->c_hat : 1.0;

  for (int i = 0; i < plan.n_probes; ++i) {
    const double t = ut(rng);
    const double x = ux(rng);
    HistorySegment w = random_segment(m.tau, amp, rng);
    HistorySegment q = random_segment(m.tau, amp, rng);
    const double cv = m.c(t, x, q);
    require_finite(cv, "c", t, x);
    c_sup.take_max(std::abs(cv), t, x);
    const double lam = m.lambda(t, x, w, q);
    require_finite(lam, "lambda", t, x);
    m_lambda.take_max(std::abs(lam), t, x);
    m_w.take_max(std::abs(eval_w(m, t, x, w, q)), t, x);
    kappa_obs.take_max(m.kernel(t, x).norm(m.tau), t, x);

    // Boundary wedge probe: 0 <= x <= int_0^t c_hat.
    const double xw = std::min(m.x_max, t * c_hat_ref) * ux(rng) / m.x_max;
    const double cw = m.c(t, xw, q) / c_hat_ref;
    if (cw < eps0_obs) {
      eps0_obs = cw;
      eps0_t = t;
      eps0_x = xw;
    }

    const double th = m.tau > 0.0 ? uh(rng) : 0.0;
    const double pv = m.phi(th, x);
    require_finite(pv, "phi", th, x);
    phi_sup_obs.take_max(pv, th, x);
  }

  for (int i = 0; i < plan.n_pairs; ++i) {
    const double t = ut(rng);
    const double x1 = ux(rng), x2 = ux(rng);
    HistorySegment w1 = random_segment(m.tau, amp, rng);
    HistorySegment w2 = random_segment(m.tau, amp, rng);
    HistorySegment q1 = random_segment(m.tau, amp, rng);
    HistorySegment q2 = random_segment(m.tau, amp, rng);
    const double dq = seg_dist(q1, q2);
    const double dw = seg_dist(w1, w2);
    const double dx = std::abs(x1 - x2);

    if (dx + dq > 1e-12) {
      const double quot = std::abs(m.c(t, x1, q1) - m.c(t, x2, q2)) / (dx + dq);
      l_c.take_max(quot, t, x1);
    }
    if (dx + dw + dq > 1e-12) {
      const double quot =
          std::abs(m.lambda(t, x1, w1, q1) - m.lambda(t, x2, w2, q2)) / (dx + dw + dq);
      l_lambda.take_max(quot, t, x1);
      const double quot_w =
          std::abs(eval_w(m, t, x1, w1, q1) - eval_w(m, t, x2, w2, q2)) / (dx + dw + dq);
      l_w.take_max(quot_w, t, x1);
    }
    const double t2 = ut(rng);
    const double denom = c_hat_ref * std::abs(t2 - t) + dx;
    if (denom > 1e-12) {
      const double dk = m.kernel(t, x1).distance(m.kernel(t2, x2), m.tau);
      l_k.take_max(dk / denom, t, x1);
    }
    if (dx > 1e-12) {
      const double th = m.tau > 0.0 ? uh(rng) : 0.0;
      l_phi.take_max(std::abs(m.phi(th, x1) - m.phi(th, x2)) / dx, th, x1);
    }
  }

  ConstantsReport rep;
  rep.estimated.c_hat = c_sup.value;
  rep.estimated.eps0 = std::clamp(eps0_obs, 1e-12, 1.0 - 1e-12);
  rep.estimated.kappa = kappa_obs.value;
  rep.estimated.L_phi = l_phi.value;
  rep.estimated.L_c = l_c.value;
  rep.estimated.L_lambda = l_lambda.value;
  rep.estimated.L_W = l_w.value;
  rep.estimated.L_K = l_k.value;
  rep.estimated.M_lambda = m_lambda.value;
  rep.estimated.M_W = m_w.value;
  rep.estimated.phi_sup = phi_sup_obs.value;

  // Deterministic part: integral of sup_t phi over [0, x_max].
  {
    const int cells = 2000;
    const double h = m.x_max / cells;
    double sum = 0.0;
    for (int j = 0; j <= cells; ++j) {
      const double x = j == cells ? m.x_max : j * h;
      double sup = 0.0;
      const int nt = m.tau > 0.0 ? 9 : 1;
      for (int k = 0; k < nt; ++k) {
        const double th = m.tau > 0.0 ? -m.tau + m.tau * k / (nt - 1) : 0.0;
        sup = std::max(sup, m.phi(th, x));
      }
      sum += (j == 0 || j == cells) ? 0.5 * sup : sup;
    }
    rep.estimated.phi_inf1 = sum * h;
  }

  if (declared) {
    const double pad = 1.0 + 1e-9;
    auto breach = [&](const char* name, double decl, const Extremum& obs) {
      if (obs.value > decl * pad + 1e-300)
        rep.violations.push_back({name, decl, obs.value, obs.t, obs.x});
    };
    breach("c_hat", declared->c_hat, c_sup);
    breach("kappa", declared->kappa, kappa_obs);
    breach("L_phi", declared->L_phi, l_phi);
    breach("L_c", declared->L_c, l_c);
    breach("L_lambda", declared->L_lambda, l_lambda);
    breach("L_W", declared->L_W, l_w);
    breach("L_K", declared->L_K, l_k);
    breach("M_lambda", declared->M_lambda, m_lambda);
    breach("M_W", declared->M_W, m_w);
    breach("phi_sup", declared->phi_sup, phi_sup_obs);
    if (rep.estimated.phi_inf1 > declared->phi_inf1 * pad)
      rep.violations.push_back(
          {"phi_inf1", declared->phi_inf1, rep.estimated.phi_inf1, 0.0, 0.0});
    if (eps0_obs < declared->eps0 * (1.0 - 1e-9))
      rep.violations.push_back({"eps0", declared->eps0, eps0_obs, eps0_t, eps0_x});
  }
  return rep;
}

}  // namespace mvf
