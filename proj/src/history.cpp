#include "mvf/history.hpp"

#include <cmath>
#include <stdexcept>

namespace mvf {

double History::mean() const {
  if (tau_ <= 0.0) return at(0.0);
  const int n = quad_nodes() < 2 ? 2 : quad_nodes();
  const double h = tau_ / (n - 1);
  double sum = 0.5 * (at(-tau_) + at(0.0));
  for (int i = 1; i + 1 < n; ++i) sum += at(-tau_ + i * h);
  return sum * h / tau_;
}

HistorySegment::HistorySegment(double tau, std::vector<double> samples)
    : History(tau), samples_(std::move(samples)) {
  if (samples_.empty()) throw std::invalid_argument("HistorySegment: no samples");
  if (tau_ > 0.0 && samples_.size() < 2)
    throw std::invalid_argument("HistorySegment: tau > 0 needs at least 2 samples");
}

HistorySegment HistorySegment::constant(double tau, double value, int cells) {
  if (tau <= 0.0) return HistorySegment(0.0, {value});
  return HistorySegment(tau, std::vector<double>(static_cast<std::size_t>(cells) + 1, value));
}

double HistorySegment::at(double s) const {
  if (tau_ <= 0.0) return samples_.back();
  const int m = static_cast<int>(samples_.size()) - 1;
  const double h = tau_ / m;
  double pos = (s + tau_) / h;
  if (pos < 0.0) pos = 0.0;
  if (pos > m) pos = m;
  int k = static_cast<int>(pos);
  if (k > m - 1) k = m - 1;
  const double t = pos - k;
  return samples_[k] + t * (samples_[k + 1] - samples_[k]);
}

double HistorySegment::mean() const {
  if (tau_ <= 0.0) return samples_.back();
  const int m = static_cast<int>(samples_.size()) - 1;
  double sum = 0.5 * (samples_.front() + samples_.back());
  for (int i = 1; i < m; ++i) sum += samples_[i];
  return sum / m;
}

}  // namespace mvf
