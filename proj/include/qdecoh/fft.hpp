#ifndef QDECOH_FFT_HPP
#define QDECOH_FFT_HPP

#include <vector>

#include "qdecoh/common.hpp"

namespace qdecoh {

/// In-place power-of-two DFT, FFTW-backed.
/// forward:  X_j = sum_k x_k exp(-2 pi i j k / n)   (unnormalized)
/// backward: x_k = sum_j X_j exp(+2 pi i j k / n)   (unnormalized)
/// Plans are cached per size behind a mutex; execution is safe for
/// concurrent calls on distinct buffers.
void fft_forward(std::vector<cplx>& data);
void fft_backward(std::vector<cplx>& data);

} // namespace qdecoh

#endif
