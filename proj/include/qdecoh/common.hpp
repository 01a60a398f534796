#ifndef QDECOH_COMMON_HPP
#define QDECOH_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace qdecoh {

using cplx = std::complex<double>;

/// Violation of a numerical guard (grid wrap-around, norm loss, ...).
/// The CLI maps this to exit code 3.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent experiment configuration. Exit code 2.
struct config_error : std::runtime_error {
    int line = 0;
    config_error(int line_, const std::string& msg)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
          line(line_) {}
};

void warn(const std::string& msg);

} // namespace qdecoh

#endif
