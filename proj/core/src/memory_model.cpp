#include "laurent/memory_model.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "laurent/error.hpp"

namespace laurent {

TestbenchFormatError::TestbenchFormatError(std::size_t line, const std::string& what)
    : InvalidInput(fmt::format("line {}: {}", line, what)), line_(line) {}

OutputWords pack_raws(const UnpackedRaws& raws, TransformSelect select) {
    OutputWords words{};
    for (std::size_t k = 0; k < kDeviceLength; ++k) {
        const auto re = static_cast<std::uint16_t>(raws.real[k]);
        const auto im = static_cast<std::uint16_t>(raws.imag[k]);
        words[k] = select == TransformSelect::DFT ? (std::uint32_t{re} << 16) | im : std::uint32_t{re};
    }
    return words;
}

UnpackedRaws unpack_output(const OutputWords& words, TransformSelect select) {
    UnpackedRaws raws;
    for (std::size_t k = 0; k < kDeviceLength; ++k) {
        if (select == TransformSelect::DFT) {
            raws.real[k] = static_cast<std::int16_t>(static_cast<std::uint16_t>(words[k] >> 16));
            raws.imag[k] = static_cast<std::int16_t>(static_cast<std::uint16_t>(words[k] & 0xFFFFu));
        } else {
            raws.real[k] = static_cast<std::int16_t>(static_cast<std::uint16_t>(words[k] & 0xFFFFu));
        }
    }
    return raws;
}

OutputWords pack_output(const TransformOutput& output, bool* overflow) {
    if (output.mode != ArithmeticMode::Fixed)
        throw InvalidInput("pack_output: packing is defined only for fixed-point output");
    if (output.realFixed.size() != kDeviceLength)
        throw InvalidInput(fmt::format("pack_output: expected {} bins, got {}", kDeviceLength, output.realFixed.size()));

    FixedContext ctx;
    auto narrow = [&](const Fixed& x) {
        const QFormat word{16, x.format.fracBits};
        return static_cast<std::int16_t>(saturate(x.raw, word, ctx));
    };
    UnpackedRaws raws;
    for (std::size_t k = 0; k < kDeviceLength; ++k) {
        raws.real[k] = narrow(output.realFixed[k]);
        if (output.select == TransformSelect::DFT) raws.imag[k] = narrow(output.imagFixed[k]);
    }
    if (overflow) *overflow = ctx.overflow();
    return pack_raws(raws, output.select);
}

MemoryImage run_device(const MemoryImage& image, const TransformEngine& engine) {
    if (engine.order() != kDeviceLength)
        throw InvalidInput(fmt::format("run_device: plan order {} does not match the {} input words", engine.order(),
                                       kDeviceLength));
    static const auto config = ArithmeticConfig::fixed();
    const auto bound = engine.bind(config);

    std::array<std::int64_t, kDeviceLength> raws{};
    for (std::size_t k = 0; k < kDeviceLength; ++k) raws[k] = static_cast<std::int16_t>(image.inputWords[k]);

    MemoryImage out = image;
    out.outputWords = pack_output(engine.execute_raw(raws, image.select, bound));
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::uint32_t parse_hex(std::string_view text, std::size_t maxDigits, std::size_t line) {
    if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
    if (text.empty() || text.size() > maxDigits)
        throw TestbenchFormatError(line, fmt::format("expected 1 to {} hex digits", maxDigits));
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw TestbenchFormatError(line, fmt::format("malformed hex word '{}'", text));
    return value;
}

// Reads the next line, skipping nothing: blank lines are errors inside a file body.
bool next_line(std::istream& in, std::string& line, std::size_t& number) {
    if (!std::getline(in, line)) return false;
    ++number;
    return true;
}

}  // namespace

MemoryImage parse_stimulus(std::istream& in) {
    MemoryImage image;
    std::string line;
    std::size_t number = 0;
    if (!next_line(in, line, number)) throw TestbenchFormatError(1, "empty stimulus file");

    const auto header = trim(line);
    if (header == "SELECT DFT")
        image.select = TransformSelect::DFT;
    else if (header == "SELECT DHT")
        image.select = TransformSelect::DHT;
    else
        throw TestbenchFormatError(number, "expected 'SELECT DFT' or 'SELECT DHT'");

    std::size_t count = 0;
    while (next_line(in, line, number)) {
        const auto text = trim(line);
        if (text.empty()) {
            // Trailing blank lines are tolerated; anything after them is not.
            std::string rest;
            std::size_t restNumber = number;
            while (next_line(in, rest, restNumber))
                if (!trim(rest).empty()) throw TestbenchFormatError(restNumber, "data after blank line");
            break;
        }
        if (count == kDeviceLength) throw TestbenchFormatError(number, "more than 16 input words");
        image.inputWords[count++] = static_cast<std::uint16_t>(parse_hex(text, 4, number));
    }
    if (count != kDeviceLength)
        throw TestbenchFormatError(number + 1, fmt::format("expected 16 input words, found {}", count));
    return image;
}

void write_stimulus(std::ostream& out, const MemoryImage& image) {
    out << "SELECT " << to_string(image.select) << '\n';
    for (auto w : image.inputWords) out << fmt::format("{:04X}\n", w);
}

void write_output_words(std::ostream& out, const OutputWords& words) {
    for (auto w : words) out << fmt::format("0x{:08X}\n", w);
}

OutputWords parse_output_words(std::istream& in) {
    OutputWords words{};
    std::string line;
    std::size_t number = 0;
    std::size_t count = 0;
    while (next_line(in, line, number)) {
        const auto text = trim(line);
        if (text.empty()) continue;
        if (count == kDeviceLength) throw TestbenchFormatError(number, "more than 16 output words");
        words[count++] = parse_hex(text, 8, number);
    }
    if (count != kDeviceLength)
        throw TestbenchFormatError(number + 1, fmt::format("expected 16 output words, found {}", count));
    return words;
}

}  // namespace laurent
