#include "qdecoh/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace qdecoh {

namespace {

// FFTW_UNALIGNED makes the cached plans valid for any caller buffer,
// so fftw_execute_dft can run concurrently on distinct arrays.
class PlanCache {
public:
    fftw_plan get(int n, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<cplx> tmp(n);
        fftw_plan p = fftw_plan_dft_1d(
            n, reinterpret_cast<fftw_complex*>(tmp.data()),
            reinterpret_cast<fftw_complex*>(tmp.data()), sign,
            FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, p);
        return p;
    }

private:
    std::mutex mu_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void run(std::vector<cplx>& data, int sign) {
    fftw_plan p = cache().get(static_cast<int>(data.size()), sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, buf, buf);
}

} // namespace

void fft_forward(std::vector<cplx>& data) { run(data, FFTW_FORWARD); }
void fft_backward(std::vector<cplx>& data) { run(data, FFTW_BACKWARD); }

} // namespace qdecoh
