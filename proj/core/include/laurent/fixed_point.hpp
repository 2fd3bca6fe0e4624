#pragma once

// Two's-complement Q-format arithmetic with saturation.
//
// Every operation takes a FixedContext carrying the rounding mode and a sticky
// overflow flag, so concurrent computations never share flag state.

#include <cstdint>
#include <string>

namespace laurent {

struct QFormat {
    int totalBits = 16;
    int fracBits = 7;

    /// Throws InvalidInput unless 1 <= fracBits < totalBits <= 32.
    void validate() const;

    [[nodiscard]] std::int64_t max_raw() const noexcept { return (std::int64_t{1} << (totalBits - 1)) - 1; }
    [[nodiscard]] std::int64_t min_raw() const noexcept { return -(std::int64_t{1} << (totalBits - 1)); }
    [[nodiscard]] double ulp() const noexcept;

    friend bool operator==(const QFormat&, const QFormat&) = default;
};

/// 16-bit words with 7 fractional bits: the device input format.
inline constexpr QFormat kDeviceInputFormat{16, 7};
/// 32-bit accumulators with the same binary point.
inline constexpr QFormat kDeviceAccumulatorFormat{32, 7};

enum class Rounding { HalfAwayFromZero, HalfToEven, TowardZero };

[[nodiscard]] const char* to_string(Rounding mode) noexcept;

class FixedContext {
public:
    FixedContext() = default;
    explicit FixedContext(Rounding mode) : rounding_(mode) {}

    [[nodiscard]] Rounding rounding() const noexcept { return rounding_; }
    [[nodiscard]] bool overflow() const noexcept { return overflow_; }
    void flag_overflow() noexcept { overflow_ = true; }
    void clear_overflow() noexcept { overflow_ = false; }

private:
    Rounding rounding_ = Rounding::HalfAwayFromZero;
    bool overflow_ = false;
};

struct Fixed {
    std::int64_t raw = 0;
    QFormat format = kDeviceInputFormat;

    [[nodiscard]] double to_real() const noexcept;
    friend bool operator==(const Fixed&, const Fixed&) = default;
};

/// Clamp raw into fmt's range, flagging overflow when it had to move.
[[nodiscard]] std::int64_t saturate(std::int64_t raw, const QFormat& fmt, FixedContext& ctx) noexcept;

/// Round x * 2^fracBits under the context's mode; saturates with the sticky flag.
[[nodiscard]] Fixed quantize(double x, const QFormat& fmt, FixedContext& ctx);

/// Rounded value/2^shift for an exact integer numerator.
[[nodiscard]] std::int64_t round_shift(std::int64_t value, int shift, Rounding mode) noexcept;

/// Same-format saturating sum. Throws InvalidInput on format mismatch.
[[nodiscard]] Fixed fx_add(const Fixed& a, const Fixed& b, FixedContext& ctx);
[[nodiscard]] Fixed fx_sub(const Fixed& a, const Fixed& b, FixedContext& ctx);
[[nodiscard]] Fixed fx_neg(const Fixed& a, FixedContext& ctx);

/// Product with a single rounding of the double-width intermediate. Both operands
/// must share fracBits; the result takes the wider of the two formats.
[[nodiscard]] Fixed fx_mul(const Fixed& a, const Fixed& b, FixedContext& ctx);

/// Re-express in a format with the same fracBits (saturating when narrowing).
[[nodiscard]] Fixed fx_convert(const Fixed& a, const QFormat& to, FixedContext& ctx);

/// Two's-complement hex of the raw, ceil(totalBits/4) uppercase digits ("FC00" for -8.0 in Q8.7).
[[nodiscard]] std::string to_hex(const Fixed& a);

}  // namespace laurent
