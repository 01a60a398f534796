#include "qdecoh/state_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace qdecoh {

static_assert(std::endian::native == std::endian::little,
              "checkpoint format assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'Q', 'P', 'S', '1'};

void put_u32(std::ostream& os, std::uint32_t v) {
    os.write(reinterpret_cast<const char*>(&v), 4);
}
void put_f64(std::ostream& os, double v) {
    os.write(reinterpret_cast<const char*>(&v), 8);
}

} // namespace

void save_state(const std::string& path, const WaveFunction& psi, double T) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("save_state: cannot open " + path);
    os.write(kMagic, 4);
    put_u32(os, static_cast<std::uint32_t>(psi.size()));
    put_f64(os, psi.grid->q_min());
    put_f64(os, psi.grid->q_max());
    put_f64(os, psi.grid->hbar());
    put_f64(os, T);
    for (const cplx& a : psi.amp) {
        put_f64(os, a.real());
        put_f64(os, a.imag());
    }
    if (!os) throw std::runtime_error("save_state: write failed for " + path);
}

LoadedState load_state(const std::string& path, double expected_hbar) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("load_state: cannot open " + path);
    is.seekg(0, std::ios::end);
    const std::int64_t fsize = is.tellg();
    is.seekg(0);

    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("load_state: bad magic in " + path);

    std::uint32_t n = 0;
    is.read(reinterpret_cast<char*>(&n), 4);
    const std::int64_t expected = 4 + 4 + 8 * 4 + 16ll * n;
    if (fsize != expected)
        throw std::runtime_error("load_state: size mismatch in " + path + " (" +
                                 std::to_string(fsize) + " bytes, expected " +
                                 std::to_string(expected) + ")");

    double q_min, q_max, hbar, T;
    is.read(reinterpret_cast<char*>(&q_min), 8);
    is.read(reinterpret_cast<char*>(&q_max), 8);
    is.read(reinterpret_cast<char*>(&hbar), 8);
    is.read(reinterpret_cast<char*>(&T), 8);
    if (expected_hbar > 0 && hbar != expected_hbar)
        warn("load_state: file hbar = " + std::to_string(hbar) +
             " differs from configured " + std::to_string(expected_hbar) +
             "; the file value wins");

    WaveFunction psi;
    psi.grid = make_grid(static_cast<int>(n), q_min, q_max, hbar);
    psi.amp.resize(n);
    is.read(reinterpret_cast<char*>(psi.amp.data()), 16ll * n);
    if (!is) throw std::runtime_error("load_state: truncated read in " + path);

    const double drift = std::abs(norm_sq(psi) - 1.0);
    if (drift > 1e-8)
        throw std::runtime_error("load_state: norm deviates by " +
                                 std::to_string(drift) + " in " + path);
    return LoadedState{std::move(psi), T};
}

} // namespace qdecoh
