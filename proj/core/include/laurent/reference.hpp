#pragma once

// Direct-summation DFT/DHT in long double. These are the correctness oracle
// for the plan-based engine; they accept any N >= 1.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace laurent {

using OracleReal = long double;
using OracleComplex = std::complex<OracleReal>;

/// Real time-domain samples v_n.
class Signal {
public:
    Signal() = default;
    explicit Signal(std::vector<double> samples) : samples_(std::move(samples)) {}
    Signal(std::initializer_list<double> samples) : samples_(samples) {}

    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
    [[nodiscard]] bool empty() const noexcept { return samples_.empty(); }
    [[nodiscard]] std::span<const double> samples() const noexcept { return samples_; }
    [[nodiscard]] double operator[](std::size_t n) const { return samples_[n]; }

private:
    std::vector<double> samples_;
};

/// Complex DFT bins V_k.
struct Spectrum {
    std::vector<OracleComplex> bins;
    [[nodiscard]] std::size_t size() const noexcept { return bins.size(); }
};

/// Real DHT bins H_k.
struct HartleySpectrum {
    std::vector<OracleReal> bins;
    [[nodiscard]] std::size_t size() const noexcept { return bins.size(); }
};

/// V_k = sum_n v_n exp(-j 2 pi k n / N), O(N^2). Throws InvalidInput on an empty signal.
[[nodiscard]] Spectrum dft_direct(const Signal& v);

/// H_k = sum_n v_n cas(2 pi k n / N), O(N^2). Throws InvalidInput on an empty signal.
[[nodiscard]] HartleySpectrum dht_direct(const Signal& v);

/// H_k = Re(V_k) - Im(V_k).
[[nodiscard]] HartleySpectrum dht_from_dft(const Spectrum& spectrum);

/// The N x N matrix [exp(-j 2 pi k n / N)], row-major.
[[nodiscard]] std::vector<OracleComplex> dft_matrix(std::size_t n);

/// Phase exp(-j 2 pi e / N) with e reduced mod N first, so large k*n stay accurate.
[[nodiscard]] OracleComplex unit_root(std::size_t exponent, std::size_t n);

}  // namespace laurent
