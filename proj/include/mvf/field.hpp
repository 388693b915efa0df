#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "mvf/history.hpp"
#include "mvf/numerics.hpp"

namespace mvf {

// Time axis over [-tau, a]: a uniform history part on [-tau, 0] with m_h cells
// and a uniform forward part on [0, a] with n_t cells. Row times are exact
// functions of the row index; row m_h is t = 0 exactly and the last row is a.
class TimeAxis {
 public:
  TimeAxis() = default;
  TimeAxis(double tau, double a, int m_h, int n_t);

  int rows() const { return m_h_ + n_t_ + 1; }
  int history_cells() const { return m_h_; }
  int forward_cells() const { return n_t_; }
  int row_t0() const { return m_h_; }
  double tau() const { return tau_; }
  double horizon() const { return a_; }
  double dt() const { return dt_; }
  double dt_hist() const { return h_hist_; }

  double time(int r) const;

  struct Bracket {
    int row;       // lower row of the bracketing pair
    double theta;  // interpolation weight toward row + 1
  };
  // Bracket for t in [-tau, a]; clamps within 1e-9 * (a + tau) of the ends.
  Bracket locate(double t) const;

  bool same_axis(const TimeAxis& o) const;

 private:
  double tau_ = 0.0;
  double a_ = 1.0;
  int m_h_ = 0;
  int n_t_ = 1;
  double dt_ = 1.0;
  double h_hist_ = 0.0;
};

// Total size z on [-tau, a], one value per axis row, linear in between.
class TotalSizeTrace {
 public:
  TotalSizeTrace() = default;
  TotalSizeTrace(TimeAxis axis, std::vector<double> values);

  const TimeAxis& axis() const { return axis_; }
  double operator[](int r) const { return v_[r]; }
  double& operator[](int r) { return v_[r]; }
  std::span<const double> values() const { return v_; }
  double value_at(double t) const;

 private:
  TimeAxis axis_;
  std::vector<double> v_;
};

// Sampled density u on [-tau, a] x [0, x_max], bilinear access in between.
// Rows on [-tau, 0] hold the initial data and are never rewritten by the
// solver. Queries right of x_max return 0 (the truncated tail); queries left
// of 0 clamp to the boundary column.
class DensityField {
 public:
  DensityField() = default;
  DensityField(TimeAxis taxis, Grid1D xgrid);

  const TimeAxis& taxis() const { return taxis_; }
  const Grid1D& xgrid() const { return xgrid_; }
  int rows() const { return taxis_.rows(); }
  int cols() const { return xgrid_.nodes(); }

  double at(int r, int j) const { return v_[static_cast<std::size_t>(r) * cols() + j]; }
  double& at(int r, int j) { return v_[static_cast<std::size_t>(r) * cols() + j]; }
  std::span<const double> row(int r) const;
  std::span<double> row(int r);
  std::span<const double> raw() const { return v_; }

  double value_at(double t, double x) const;

 private:
  TimeAxis taxis_;
  Grid1D xgrid_;
  std::vector<double> v_;
};

// Trapezoid integral of u(t, .) over [0, x_max].
double total_size(const DensityField& u, double t);

// Row-wise total size for every axis row.
TotalSizeTrace total_size_all(const DensityField& u);

// Materialized history segments; t must lie in [0, horizon].
HistorySegment extract_history(const DensityField& u, double t, double x);
HistorySegment extract_history_total(const TotalSizeTrace& z, double t);

// Lazy views used inside kernels; they alias the underlying field/trace.
class FieldHistory final : public History {
 public:
  FieldHistory(const DensityField& u, double t, double x)
      : History(u.taxis().tau()), u_(&u), t_(t), x_(x) {}
  double at(double s) const override { return u_->value_at(t_ + s, x_); }
  int quad_nodes() const override;

 private:
  const DensityField* u_;
  double t_, x_;
};

class TraceHistory final : public History {
 public:
  TraceHistory(const TotalSizeTrace& z, double t)
      : History(z.axis().tau()), z_(&z), t_(t) {}
  double at(double s) const override { return z_->value_at(t_ + s); }
  int quad_nodes() const override;

 private:
  const TotalSizeTrace* z_;
  double t_;
};

// CSV serialization; shortest round-trip decimals, fixed column order.
void write_density_csv(std::ostream& out, const DensityField& u);    // "t,x,u"
void write_totalsize_csv(std::ostream& out, const TotalSizeTrace& z);  // "t,z"

// Shortest round-trip decimal for CSV cells.
void append_double(std::string& out, double v);

}  // namespace mvf
