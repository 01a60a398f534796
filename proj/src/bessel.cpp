#include "qdecoh/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qdecoh {

namespace {

// J_nu(z) = sum_k (-1)^k (z/2)^{nu+2k} / (k! Gamma(nu+k+1)).
double series(int nu, double z) {
    double term = std::pow(0.5 * z, nu) / std::tgamma(nu + 1.0);
    double sum = term;
    const double q = 0.25 * z * z;
    for (int k = 0; k < 200; ++k) {
        term *= -q / ((k + 1.0) * (nu + k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

// Backward (Miller) recurrence J_{k-1} = (2k/z) J_k - J_{k+1}, normalized
// with J_0 + 2 sum J_{2k} = 1. Stable for z above the series range.
double miller(int nu, double z) {
    int start = static_cast<int>(z + 1.5 * std::sqrt(40.0 * z)) + nu + 20;
    start += start & 1; // even start keeps the normalization sum aligned
    double jp = 0.0, j = 1e-30, norm = 0.0, result = 0.0;
    for (int k = start; k > 0; --k) {
        const double jm = (2.0 * k / z) * j - jp; // jm = J_{k-1}
        jp = j;
        j = jm;
        if (std::abs(j) > 1e250) { // rescale to avoid overflow
            j *= 1e-250;
            jp *= 1e-250;
            norm *= 1e-250;
            result *= 1e-250;
        }
        if (((k - 1) & 1) == 0 && k - 1 >= 2) norm += j;
        if (k - 1 == nu) result = j;
    }
    norm = j + 2.0 * norm; // J_0 + 2 sum_{even m >= 2} J_m = 1
    return result / norm;
}

} // namespace

double bessel_j(double nu, double z) {
    if (z < 0) throw std::invalid_argument("bessel_j: negative argument unsupported");
    if (nu == 0.5) {
        if (z == 0) return 0.0;
        return std::sqrt(2.0 / (std::numbers::pi * z)) * std::sin(z);
    }
    if (nu == -0.5) {
        if (z == 0) throw std::invalid_argument("bessel_j: J_{-1/2} diverges at z = 0");
        return std::sqrt(2.0 / (std::numbers::pi * z)) * std::cos(z);
    }
    if (nu < 0 || nu != std::floor(nu))
        throw std::invalid_argument("bessel_j: unsupported order");
    const int n = static_cast<int>(nu);
    if (z == 0) return n == 0 ? 1.0 : 0.0;
    if (z <= nu + 10.0) return series(n, z);
    return miller(n, z);
}

} // namespace qdecoh
