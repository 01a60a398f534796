#ifndef QDECOH_BESSEL_HPP
#define QDECOH_BESSEL_HPP

namespace qdecoh {

/// Bessel function of the first kind, J_nu(z) for z >= 0.
/// Supported orders: nonnegative integers (power series for small z,
/// Miller backward recurrence beyond) and +-1/2 (closed forms).
double bessel_j(double nu, double z);

} // namespace qdecoh

#endif
