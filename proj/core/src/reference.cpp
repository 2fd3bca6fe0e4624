#include "laurent/reference.hpp"

#include <cmath>
#include <numbers>

#include "laurent/error.hpp"

namespace laurent {

OracleComplex unit_root(std::size_t exponent, std::size_t n) {
    const auto e = exponent % n;
    const OracleReal angle =
        -2 * std::numbers::pi_v<OracleReal> * static_cast<OracleReal>(e) / static_cast<OracleReal>(n);
    return {std::cos(angle), std::sin(angle)};
}

Spectrum dft_direct(const Signal& v) {
    if (v.empty()) throw InvalidInput("dft_direct: empty signal");
    const auto n = v.size();
    Spectrum out;
    out.bins.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        OracleComplex acc{0, 0};
        for (std::size_t t = 0; t < n; ++t) {
            acc += static_cast<OracleReal>(v[t]) * unit_root(k * t, n);
        }
        out.bins[k] = acc;
    }
    return out;
}

HartleySpectrum dht_direct(const Signal& v) {
    if (v.empty()) throw InvalidInput("dht_direct: empty signal");
    const auto n = v.size();
    HartleySpectrum out;
    out.bins.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        OracleReal acc = 0;
        for (std::size_t t = 0; t < n; ++t) {
            const auto e = (k * t) % n;
            const OracleReal angle =
                2 * std::numbers::pi_v<OracleReal> * static_cast<OracleReal>(e) / static_cast<OracleReal>(n);
            acc += static_cast<OracleReal>(v[t]) * (std::cos(angle) + std::sin(angle));
        }
        out.bins[k] = acc;
    }
    return out;
}

HartleySpectrum dht_from_dft(const Spectrum& spectrum) {
    HartleySpectrum out;
    out.bins.reserve(spectrum.size());
    for (const auto& bin : spectrum.bins) out.bins.push_back(bin.real() - bin.imag());
    return out;
}

std::vector<OracleComplex> dft_matrix(std::size_t n) {
    std::vector<OracleComplex> m(n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n; ++t) m[k * n + t] = unit_root(k * t, n);
    return m;
}

}  // namespace laurent
