#pragma once

#include <functional>
#include <span>
#include <vector>

namespace mvf {

// A nonnegative continuous function on the delay window [-tau, 0]: the
// history segment fed to the model coefficients. Implementations are either
// materialized sample vectors or lightweight views into solver state.
class History {
 public:
  explicit History(double tau) : tau_(tau) {}
  virtual ~History() = default;

  double tau() const { return tau_; }

  // Value at offset s in [-tau, 0].
  virtual double at(double s) const = 0;
  double operator()(double s) const { return at(s); }

  // Mean over [-tau, 0]; the single value at 0 when tau == 0. The default
  // uses the trapezoid rule at the segment's own sampling density.
  virtual double mean() const;

  // Node count hint for quadrature against this segment.
  virtual int quad_nodes() const { return 33; }

 protected:
  double tau_;
};

// Materialized segment: m+1 uniform samples on [-tau, 0], linear interpolation
// in between. tau == 0 degenerates to a single sample.
class HistorySegment final : public History {
 public:
  HistorySegment(double tau, std::vector<double> samples);
  static HistorySegment constant(double tau, double value, int cells = 8);

  double at(double s) const override;
  double mean() const override;
  int quad_nodes() const override { return static_cast<int>(samples_.size()); }
  std::span<const double> samples() const { return samples_; }

 private:
  std::vector<double> samples_;
};

// Segment backed by a two-argument callable f(t, x) at fixed x; used to wrap
// initial-data evaluators without copying samples.
class FnSegment final : public History {
 public:
  FnSegment(double tau, const std::function<double(double, double)>& f, double x,
            int quad_nodes = 33)
      : History(tau), f_(&f), x_(x), quad_nodes_(quad_nodes) {}
  double at(double s) const override { return (*f_)(s, x_); }
  int quad_nodes() const override { return quad_nodes_; }

 private:
  const std::function<double(double, double)>* f_;
  double x_;
  int quad_nodes_;
};

}  // namespace mvf
