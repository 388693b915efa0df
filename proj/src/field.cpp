#include "mvf/field.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mvf {

TimeAxis::TimeAxis(double tau, double a, int m_h, int n_t)
    : tau_(tau), a_(a), m_h_(m_h), n_t_(n_t) {
  if (tau < 0.0) throw std::invalid_argument("TimeAxis: tau must be >= 0");
  if (!(a > 0.0)) throw std::invalid_argument("TimeAxis: horizon must be positive");
  if (n_t < 1) throw std::invalid_argument("TimeAxis: need at least one forward cell");
  if ((tau > 0.0) != (m_h > 0))
    throw std::invalid_argument("TimeAxis: history cells must match tau > 0");
  dt_ = a / n_t;
  h_hist_ = m_h > 0 ? tau / m_h : 0.0;
}

double TimeAxis::time(int r) const {
  if (r == m_h_) return 0.0;
  if (r == m_h_ + n_t_) return a_;
  if (r < m_h_) return -tau_ + r * h_hist_;
  return (r - m_h_) * dt_;
}

TimeAxis::Bracket TimeAxis::locate(double t) const {
  const double tol = 1e-9 * (a_ + tau_);
  if (t < -tau_ - tol || t > a_ + tol)
    throw std::out_of_range("TimeAxis: t=" + std::to_string(t) + " outside [" +
                            std::to_string(-tau_) + ", " + std::to_string(a_) + "]");
  if (t >= 0.0) {
    int k = static_cast<int>(t / dt_);
    if (k > n_t_ - 1) k = n_t_ - 1;
    const int r = m_h_ + k;
    double theta = (t - time(r)) / dt_;
    if (theta < 0.0) theta = 0.0;
    if (theta > 1.0) theta = 1.0;
    return {r, theta};
  }
  if (m_h_ == 0) return {0, 0.0};  // tau == 0, round-off below zero
  int k = static_cast<int>((t + tau_) / h_hist_);
  if (k < 0) k = 0;
  if (k > m_h_ - 1) k = m_h_ - 1;
  double theta = (t - time(k)) / h_hist_;
  if (theta < 0.0) theta = 0.0;
  if (theta > 1.0) theta = 1.0;
  return {k, theta};
}

bool TimeAxis::same_axis(const TimeAxis& o) const {
  return tau_ == o.tau_ && a_ == o.a_ && m_h_ == o.m_h_ && n_t_ == o.n_t_;
}

TotalSizeTrace::TotalSizeTrace(TimeAxis axis, std::vector<double> values)
    : axis_(axis), v_(std::move(values)) {
  if (static_cast<int>(v_.size()) != axis_.rows())
    throw std::invalid_argument("TotalSizeTrace: value count does not match axis");
}

double TotalSizeTrace::value_at(double t) const {
  const TimeAxis::Bracket b = axis_.locate(t);
  return v_[b.row] + b.theta * (v_[b.row + 1] - v_[b.row]);
}

DensityField::DensityField(TimeAxis taxis, Grid1D xgrid)
    : taxis_(taxis), xgrid_(xgrid),
      v_(static_cast<std::size_t>(taxis.rows()) * xgrid.nodes(), 0.0) {}

std::span<const double> DensityField::row(int r) const {
  return {v_.data() + static_cast<std::size_t>(r) * cols(), static_cast<std::size_t>(cols())};
}

std::span<double> DensityField::row(int r) {
  return {v_.data() + static_cast<std::size_t>(r) * cols(), static_cast<std::size_t>(cols())};
}

double DensityField::value_at(double t, double x) const {
  if (x > xgrid_.hi) return 0.0;  // truncated tail
  if (x < xgrid_.lo) x = xgrid_.lo;
  const TimeAxis::Bracket b = taxis_.locate(t);
  const int j = xgrid_.locate(x);
  const double tx = (x - xgrid_.node(j)) / xgrid_.h();
  const std::size_t base = static_cast<std::size_t>(b.row) * cols() + j;
  const std::size_t stride = cols();
  const double lo = v_[base] + tx * (v_[base + 1] - v_[base]);
  const double hi = v_[base + stride] + tx * (v_[base + stride + 1] - v_[base + stride]);
  return lo + b.theta * (hi - lo);
}

double total_size(const DensityField& u, double t) {
  const TimeAxis::Bracket b = u.taxis().locate(t);
  const Grid1D& g = u.xgrid();
  const double th = b.theta;
  std::span<const double> r0 = u.row(b.row);
  std::span<const double> r1 = u.row(b.row + 1);
  double sum = 0.5 * ((r0.front() + th * (r1.front() - r0.front())) +
                      (r0.back() + th * (r1.back() - r0.back())));
  for (int j = 1; j < g.nodes() - 1; ++j) sum += r0[j] + th * (r1[j] - r0[j]);
  return sum * g.h();
}

TotalSizeTrace total_size_all(const DensityField& u) {
  std::vector<double> z(u.rows());
  const double h = u.xgrid().h();
  for (int r = 0; r < u.rows(); ++r) z[r] = quad_composite(u.row(r), h);
  return TotalSizeTrace(u.taxis(), std::move(z));
}

HistorySegment extract_history(const DensityField& u, double t, double x) {
  const TimeAxis& ax = u.taxis();
  if (t < -1e-12 * (ax.horizon() + ax.tau()))
    throw std::out_of_range("extract_history: t must be >= 0, got " + std::to_string(t));
  if (t < 0.0) t = 0.0;
  if (ax.tau() <= 0.0) return HistorySegment(0.0, {u.value_at(t, x)});
  const int m = ax.history_cells();
  std::vector<double> s(m + 1);
  for (int i = 0; i <= m; ++i) {
    const double off = i == m ? 0.0 : -ax.tau() + i * ax.dt_hist();
    s[i] = u.value_at(t + off, x);
  }
  return HistorySegment(ax.tau(), std::move(s));
}

HistorySegment extract_history_total(const TotalSizeTrace& z, double t) {
  const TimeAxis& ax = z.axis();
  if (t < -1e-12 * (ax.horizon() + ax.tau()))
    throw std::out_of_range("extract_history_total: t must be >= 0, got " + std::to_string(t));
  if (t < 0.0) t = 0.0;
  if (ax.tau() <= 0.0) return HistorySegment(0.0, {z.value_at(t)});
  const int m = ax.history_cells();
  std::vector<double> s(m + 1);
  for (int i = 0; i <= m; ++i) {
    const double off = i == m ? 0.0 : -ax.tau() + i * ax.dt_hist();
    s[i] = z.value_at(t + off);
  }
  return HistorySegment(ax.tau(), std::move(s));
}

int FieldHistory::quad_nodes() const { return u_->taxis().history_cells() + 1; }

int TraceHistory::quad_nodes() const { return z_->axis().history_cells() + 1; }

void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

void write_density_csv(std::ostream& out, const DensityField& u) {
  std::string line;
  out << "t,x,u\n";
  for (int r = 0; r < u.rows(); ++r) {
    const double t = u.taxis().time(r);
    for (int j = 0; j < u.cols(); ++j) {
      line.clear();
      append_double(line, t);
      line.push_back(',');
      append_double(line, u.xgrid().node(j));
      line.push_back(',');
      append_double(line, u.at(r, j));
      line.push_back('\n');
      out << line;
    }
  }
}

void write_totalsize_csv(std::ostream& out, const TotalSizeTrace& z) {
  std::string line;
  out << "t,z\n";
  for (int r = 0; r < z.axis().rows(); ++r) {
    line.clear();
    append_double(line, z.axis().time(r));
    line.push_back(',');
    append_double(line, z[r]);
    line.push_back('\n');
    out << line;
  }
}

}  // namespace mvf
