#pragma once

// Functional model of the device's memory-management block.
//
// The device holds sixteen 16-bit Q8.7 input words, one DFT/DHT select bit and
// sixteen 32-bit output words. Output packing (word-level big-endian):
//
//   DFT  bits 31..16 = Re raw, bits 15..0 = Im raw
//   DHT  bits 31..16 = 0,      bits 15..0 = H raw

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "laurent/engine.hpp"
#include "laurent/error.hpp"

namespace laurent {

inline constexpr std::size_t kDeviceLength = 16;

using InputWords = std::array<std::uint16_t, kDeviceLength>;
using OutputWords = std::array<std::uint32_t, kDeviceLength>;

struct MemoryImage {
    InputWords inputWords{};
    TransformSelect select = TransformSelect::DFT;
    OutputWords outputWords{};

    friend bool operator==(const MemoryImage&, const MemoryImage&) = default;
};

/// 16-bit raws recovered from output words. imag is all zero for DHT.
struct UnpackedRaws {
    std::array<std::int16_t, kDeviceLength> real{};
    std::array<std::int16_t, kDeviceLength> imag{};
    friend bool operator==(const UnpackedRaws&, const UnpackedRaws&) = default;
};

[[nodiscard]] OutputWords pack_raws(const UnpackedRaws& raws, TransformSelect select);
[[nodiscard]] UnpackedRaws unpack_output(const OutputWords& words, TransformSelect select);

/// Packs a fixed-mode engine output, narrowing each accumulator word to 16 bits
/// (saturating; `overflow`, when given, is set if any value had to be clamped).
/// Throws InvalidInput for exact-mode output or a length other than 16.
[[nodiscard]] OutputWords pack_output(const TransformOutput& output, bool* overflow = nullptr);

/// Load, compute in device arithmetic, select, store. Throws InvalidInput unless
/// the engine's plan has order 16.
[[nodiscard]] MemoryImage run_device(const MemoryImage& image, const TransformEngine& engine);

// Testbench interchange files.
//
// Stimulus: first line `SELECT DFT` or `SELECT DHT`, then sixteen lines of one
// 16-bit hex word each (optional 0x prefix). Output: sixteen lines `0xXXXXXXXX`.

[[nodiscard]] MemoryImage parse_stimulus(std::istream& in);
void write_stimulus(std::ostream& out, const MemoryImage& image);
void write_output_words(std::ostream& out, const OutputWords& words);
[[nodiscard]] OutputWords parse_output_words(std::istream& in);

/// Throws InvalidInput with the line number for malformed testbench files.
class TestbenchFormatError : public InvalidInput {
public:
    TestbenchFormatError(std::size_t line, const std::string& what);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] const char* code() const noexcept override { return "testbench-format"; }

private:
    std::size_t line_;
};

}  // namespace laurent
