#ifndef QDECOH_GRID_HPP
#define QDECOH_GRID_HPP

#include <memory>
#include <span>
#include <vector>

#include "qdecoh/common.hpp"

namespace qdecoh {

/// Uniform periodic position grid with its conjugate momentum grid.
///
/// q_k = q_min + k*dq, k = 0..n-1, dq = (q_max - q_min)/n.
/// The momentum lattice is spectrally paired through hbar:
/// dp = 2*pi*hbar/(n*dq), spanning [-pi*hbar/dq, pi*hbar/dq).
/// Momentum values are exposed in monotonically increasing order;
/// FFT natural order is an internal detail.
///
/// Immutable after construction and safe to share across threads.
class Grid {
public:
    Grid(int n_points, double q_min, double q_max, double hbar);

    int size() const { return n_; }
    double q_min() const { return q_min_; }
    double q_max() const { return q_max_; }
    double hbar() const { return hbar_; }
    double dq() const { return dq_; }
    double dp() const { return dp_; }

    double q(int k) const { return q_min_ + k * dq_; }
    /// Monotonic momentum value, j = 0..n-1 maps to (j - n/2)*dp.
    double p(int j) const { return (j - n_ / 2) * dp_; }

    const std::vector<double>& q_values() const { return qv_; }
    const std::vector<double>& p_values() const { return pv_; }

private:
    int n_;
    double q_min_, q_max_, hbar_, dq_, dp_;
    std::vector<double> qv_, pv_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Validates preconditions (power-of-two n_points, q_max > q_min, hbar > 0).
GridPtr make_grid(int n_points, double q_min, double q_max, double hbar);

/// Rectangle rule on a uniform periodic grid: weight * sum(values).
/// Exact for band-limited integrands.
template <typename T>
T quadrature(std::span<const T> values, double weight) {
    T acc{};
    for (const T& v : values) acc += v;
    return acc * weight;
}

inline cplx quadrature(const std::vector<cplx>& v, double w) {
    return quadrature(std::span<const cplx>(v), w);
}
inline double quadrature(const std::vector<double>& v, double w) {
    return quadrature(std::span<const double>(v), w);
}

} // namespace qdecoh

#endif
