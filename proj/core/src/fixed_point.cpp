#include "laurent/fixed_point.hpp"

#include <cmath>

#include <fmt/format.h>

#include "laurent/error.hpp"

namespace laurent {

void QFormat::validate() const {
    if (fracBits < 1 || fracBits >= totalBits || totalBits > 32)
        throw InvalidInput(fmt::format("invalid Q-format: {} total bits, {} fractional bits", totalBits, fracBits));
}

double QFormat::ulp() const noexcept { return std::ldexp(1.0, -fracBits); }

const char* to_string(Rounding mode) noexcept {
    switch (mode) {
        case Rounding::HalfAwayFromZero: return "half-away";
        case Rounding::HalfToEven: return "half-even";
        case Rounding::TowardZero: return "truncate";
    }
    return "?";
}

double Fixed::to_real() const noexcept { return std::ldexp(static_cast<double>(raw), -format.fracBits); }

std::int64_t saturate(std::int64_t raw, const QFormat& fmt, FixedContext& ctx) noexcept {
    if (raw > fmt.max_raw()) {
        ctx.flag_overflow();
        return fmt.max_raw();
    }
    if (raw < fmt.min_raw()) {
        ctx.flag_overflow();
        return fmt.min_raw();
    }
    return raw;
}

Fixed quantize(double x, const QFormat& fmt, FixedContext& ctx) {
    fmt.validate();
    if (!std::isfinite(x)) throw InvalidInput("quantize: non-finite value");
    const double scaled = std::ldexp(x, fmt.fracBits);
    double rounded = 0.0;
    switch (ctx.rounding()) {
        case Rounding::HalfAwayFromZero: rounded = std::round(scaled); break;
        case Rounding::HalfToEven: {
            rounded = std::floor(scaled);
            const double diff = scaled - rounded;
            if (diff > 0.5 || (diff == 0.5 && std::fmod(rounded, 2.0) != 0.0)) rounded += 1.0;
            break;
        }
        case Rounding::TowardZero: rounded = std::trunc(scaled); break;
    }
    // Clamp in floating point first so the integer conversion is defined.
    constexpr double limit = 9.0e18;
    if (rounded > limit) rounded = limit;
    if (rounded < -limit) rounded = -limit;
    return {saturate(static_cast<std::int64_t>(rounded), fmt, ctx), fmt};
}

std::int64_t round_shift(std::int64_t value, int shift, Rounding mode) noexcept {
    if (shift <= 0) return value;
    const bool negative = value < 0;
    const std::uint64_t magnitude = negative ? 0 - static_cast<std::uint64_t>(value) : static_cast<std::uint64_t>(value);
    const std::uint64_t whole = magnitude >> shift;
    const std::uint64_t rest = magnitude & ((std::uint64_t{1} << shift) - 1);
    const std::uint64_t half = std::uint64_t{1} << (shift - 1);
    std::uint64_t q = whole;
    switch (mode) {
        case Rounding::HalfAwayFromZero:
            if (rest >= half) ++q;
            break;
        case Rounding::HalfToEven:
            if (rest > half || (rest == half && (whole & 1u))) ++q;
            break;
        case Rounding::TowardZero: break;
    }
    const auto signed_q = static_cast<std::int64_t>(q);
    return negative ? -signed_q : signed_q;
}

namespace {

void require_same_format(const Fixed& a, const Fixed& b, const char* op) {
    if (a.format != b.format)
        throw InvalidInput(fmt::format("{}: format mismatch (Q{}.{} vs Q{}.{})", op, a.format.totalBits,
                                       a.format.fracBits, b.format.totalBits, b.format.fracBits));
}

}  // namespace

Fixed fx_add(const Fixed& a, const Fixed& b, FixedContext& ctx) {
    require_same_format(a, b, "fx_add");
    return {saturate(a.raw + b.raw, a.format, ctx), a.format};
}

Fixed fx_sub(const Fixed& a, const Fixed& b, FixedContext& ctx) {
    require_same_format(a, b, "fx_sub");
    return {saturate(a.raw - b.raw, a.format, ctx), a.format};
}

Fixed fx_neg(const Fixed& a, FixedContext& ctx) { return {saturate(-a.raw, a.format, ctx), a.format}; }

Fixed fx_mul(const Fixed& a, const Fixed& b, FixedContext& ctx) {
    if (a.format.fracBits != b.format.fracBits)
        throw InvalidInput(fmt::format("fx_mul: fractional bits differ ({} vs {})", a.format.fracBits,
                                       b.format.fracBits));
    const QFormat out = a.format.totalBits >= b.format.totalBits ? a.format : b.format;
    // |raw| <= 2^31 per operand, so the product fits in 63 bits.
    const std::int64_t product = a.raw * b.raw;
    return {saturate(round_shift(product, a.format.fracBits, ctx.rounding()), out, ctx), out};
}

Fixed fx_convert(const Fixed& a, const QFormat& to, FixedContext& ctx) {
    to.validate();
    if (to.fracBits != a.format.fracBits) throw InvalidInput("fx_convert: fractional bits differ");
    return {saturate(a.raw, to, ctx), to};
}

std::string to_hex(const Fixed& a) {
    const int digits = (a.format.totalBits + 3) / 4;
    const std::uint64_t mask = a.format.totalBits >= 64 ? ~std::uint64_t{0}
                                                        : (std::uint64_t{1} << a.format.totalBits) - 1;
    return fmt::format("{:0{}X}", static_cast<std::uint64_t>(a.raw) & mask, digits);
}

}  // namespace laurent
