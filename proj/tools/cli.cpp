#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "laurent/engine.hpp"
#include "laurent/error.hpp"
#include "laurent/memory_model.hpp"
#include "laurent/plan.hpp"

namespace laurent::cli {
namespace {

enum class OutputFormat { Text, Csv, Hex };

struct RunConfig {
    std::size_t n = 16;
    TransformSelect select = TransformSelect::DFT;
    ArithmeticMode mode = ArithmeticMode::Fixed;
    int fracBits = 7;
    Rounding rounding = Rounding::HalfAwayFromZero;
    std::string input;
    std::string output;
    OutputFormat format = OutputFormat::Text;
    bool compare = false;
    bool dumpPlan = false;
    bool countOps = false;

    [[nodiscard]] ArithmeticConfig arithmetic() const {
        return mode == ArithmeticMode::Exact ? ArithmeticConfig::exact() : ArithmeticConfig::fixed(fracBits, rounding);
    }
};

// Raised for command-line misuse caught after CLI11 parsing.
class UsageError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
    [[nodiscard]] const char* code() const noexcept override { return "usage"; }
};

const std::map<std::string, TransformSelect> kSelects{{"dft", TransformSelect::DFT}, {"dht", TransformSelect::DHT}};
const std::map<std::string, ArithmeticMode> kModes{{"exact", ArithmeticMode::Exact}, {"fixed", ArithmeticMode::Fixed}};
const std::map<std::string, Rounding> kRoundings{{"half-away", Rounding::HalfAwayFromZero},
                                                 {"half-even", Rounding::HalfToEven},
                                                 {"truncate", Rounding::TowardZero}};
const std::map<std::string, OutputFormat> kFormats{
    {"text", OutputFormat::Text}, {"csv", OutputFormat::Csv}, {"hex", OutputFormat::Hex}};

double clean(double x) { return x == 0.0 ? 0.0 : x; }  // drops the sign of -0

std::string format_value(double x, bool csv) { return csv ? fmt::format("{:.17g}", clean(x)) : fmt::format("{:.10g}", clean(x)); }

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput(fmt::format("cannot open input '{}'", path));
    return in;
}

// Writes to the named file, or to `fallback` when the path is empty. The file
// is only created once the content is complete.
void emit(const std::string& path, const std::string& content, std::ostream& fallback) {
    if (path.empty()) {
        fallback << content;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw InvalidInput(fmt::format("cannot open output '{}'", path));
    file << content;
    if (!file) throw InvalidInput(fmt::format("failed writing output '{}'", path));
}

std::string render_counts(const OpCount& c) {
    std::string s;
    s += fmt::format("multiplications: {}\n", c.multiplications);
    s += fmt::format("additions: {}\n", c.additions);
    s += fmt::format("  pre-additions: {}\n", c.preAdditions);
    s += fmt::format("  combiner additions: {}\n", c.combinerAdditions);
    s += fmt::format("  accumulation additions: {}\n", c.accumulationAdditions);
    s += fmt::format("dht extra additions: {}\n", c.dhtExtraAdds);
    s += fmt::format("unshared additions: {}\n", c.unsharedAdditions);
    return s;
}

std::string render_output(const TransformOutput& out, OutputFormat format) {
    std::string s;
    const bool dft = out.select == TransformSelect::DFT;
    switch (format) {
        case OutputFormat::Text:
            for (std::size_t k = 0; k < out.size(); ++k) {
                if (dft)
                    s += fmt::format("{:.10g}{:+.10g}j\n", clean(out.real[k]), clean(out.imag[k]));
                else
                    s += format_value(out.real[k], false) + "\n";
            }
            break;
        case OutputFormat::Csv:
            s += dft ? "k,real,imag\n" : "k,hartley\n";
            for (std::size_t k = 0; k < out.size(); ++k) {
                s += fmt::format("{},{}", k, format_value(out.real[k], true));
                if (dft) s += "," + format_value(out.imag[k], true);
                s += '\n';
            }
            break;
        case OutputFormat::Hex: {
            if (out.mode != ArithmeticMode::Fixed) throw UsageError("--format hex requires --arith fixed");
            if (out.size() != kDeviceLength) throw UsageError("--format hex requires the 16-point device layout");
            std::ostringstream words;
            write_output_words(words, pack_output(out));
            s = words.str();
            break;
        }
    }
    return s;
}

void check_fixed_range(const std::vector<double>& samples, const ArithmeticConfig& config) {
    std::string bad;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        FixedContext ctx(config.rounding);
        (void)quantize(samples[i], config.input, ctx);
        if (ctx.overflow()) bad += fmt::format("{}{} ({:g})", bad.empty() ? "" : ", ", i, samples[i]);
    }
    if (!bad.empty()) {
        const QFormat f = config.input;
        throw InvalidInput(fmt::format("samples outside the Q{}.{} range [{:g}, {:g}] at index {}",
                                       f.totalBits - f.fracBits - 1, f.fracBits, Fixed{f.min_raw(), f}.to_real(),
                                       Fixed{f.max_raw(), f}.to_real(), bad));
    }
}

int cmd_transform(const RunConfig& cfg, std::ostream& out) {
    require_plan_length(static_cast<long long>(cfg.n));
    auto in = open_input(cfg.input);
    const auto samples = parse_samples(in);
    if (samples.size() != cfg.n)
        throw InvalidInput(fmt::format("input has {} samples but --n is {}", samples.size(), cfg.n));

    const auto arithmetic = cfg.arithmetic();
    if (arithmetic.mode == ArithmeticMode::Fixed) check_fixed_range(samples, arithmetic);

    const TransformEngine engine(build_plan(cfg.n));
    const Signal v(samples);
    const auto result = engine.execute(v, cfg.select, arithmetic);
    emit(cfg.output, render_output(result, cfg.format), out);

    if (result.overflow) out << "warning: fixed-point overflow (saturated)\n";
    if (cfg.dumpPlan) out << dump_plan(engine.plan());
    if (cfg.countOps) out << render_counts(engine.count_ops());
    if (cfg.compare) {
        double deviation = 0.0;
        if (cfg.select == TransformSelect::DFT) {
            const auto ref = dft_direct(v);
            for (std::size_t k = 0; k < cfg.n; ++k)
                deviation = std::max(deviation, std::hypot(result.real[k] - static_cast<double>(ref.bins[k].real()),
                                                           result.imag[k] - static_cast<double>(ref.bins[k].imag())));
        } else {
            const auto ref = dht_direct(v);
            for (std::size_t k = 0; k < cfg.n; ++k)
                deviation = std::max(deviation, std::abs(result.real[k] - static_cast<double>(ref.bins[k])));
        }
        out << fmt::format("compare: max deviation vs direct {}: {:.3e}\n", to_string(cfg.select), deviation);
        if (arithmetic.mode == ArithmeticMode::Fixed) {
            const auto report = quantization_report(engine.plan(), v, cfg.select, arithmetic);
            out << fmt::format("compare: max relative quantization error: {:.4f}% (bin {}, component {})\n",
                               100.0 * report.maxRelativeError, report.worstBin, report.worstComponent);
        }
    }
    return 0;
}

int cmd_plan(std::size_t n, std::ostream& out, std::ostream& err) {
    require_plan_length(static_cast<long long>(n));
    const TransformEngine engine(build_plan(n));
    out << dump_plan(engine.plan());
    out << render_counts(engine.count_ops());
    if (!engine.plan().optimal()) {
        err << "laurent: error[non-optimal]: a factorization fell back to distinct rows\n";
        return 4;
    }
    return 0;
}

int cmd_testbench(const std::string& input, const std::string& output, std::ostream& out) {
    auto in = open_input(input);
    const auto image = parse_stimulus(in);
    const TransformEngine engine(build_plan(kDeviceLength));
    const auto result = run_device(image, engine);
    std::ostringstream words;
    write_output_words(words, result.outputWords);
    emit(output, words.str(), out);
    return 0;
}

int cmd_stimulus(const RunConfig& cfg, std::ostream& out) {
    auto in = open_input(cfg.input);
    const auto samples = parse_samples(in);
    if (samples.size() != kDeviceLength)
        throw InvalidInput(fmt::format("stimulus needs {} samples, input has {}", kDeviceLength, samples.size()));
    const auto arithmetic = ArithmeticConfig::fixed(7, cfg.rounding);
    check_fixed_range(samples, arithmetic);

    MemoryImage image;
    image.select = cfg.select;
    FixedContext ctx(cfg.rounding);
    for (std::size_t k = 0; k < kDeviceLength; ++k)
        image.inputWords[k] = static_cast<std::uint16_t>(quantize(samples[k], arithmetic.input, ctx).raw);
    std::ostringstream text;
    write_stimulus(text, image);
    emit(cfg.output, text.str(), out);
    return 0;
}

void print_error(std::ostream& err, const char* code, const std::string& message) {
    std::string single = message;
    std::replace(single.begin(), single.end(), '\n', ' ');
    err << "laurent: error[" << code << "]: " << single << '\n';
}

}  // namespace

std::vector<double> parse_samples(std::istream& in) {
    std::vector<double> samples;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value))
                throw InvalidInput(fmt::format("line {}: malformed sample '{}'", number, token));
            samples.push_back(value);
        }
    }
    if (samples.empty()) throw InvalidInput("input contains no samples");
    return samples;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Laurent-series DFT/DHT engine and 16-point device golden model", "laurent"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "Blocklength (N ≡ 0 mod 4)")->capture_default_str();
        sub->add_option("--select", cfg.select, "Transform: dft or dht")
            ->transform(CLI::CheckedTransformer(kSelects, CLI::ignore_case));
        sub->add_option("--round", cfg.rounding, "Rounding: half-away, half-even, truncate")
            ->transform(CLI::CheckedTransformer(kRoundings, CLI::ignore_case));
    };

    auto* transform = app.add_subcommand("transform", "Run a transform on a sample file");
    add_common(transform);
    transform->add_option("--arith", cfg.mode, "Arithmetic: exact or fixed")
        ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
    transform->add_option("--frac-bits", cfg.fracBits, "Fractional bits of the fixed-point format")
        ->check(CLI::Range(1, 15));
    transform->add_option("--input", cfg.input, "Sample file (one value per line or comma-separated)")->required();
    transform->add_option("--output", cfg.output, "Output file (default stdout)");
    transform->add_option("--format", cfg.format, "Output format: text, csv, hex")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    transform->add_flag("--compare", cfg.compare, "Report deviation from direct summation");
    transform->add_flag("--dump-plan", cfg.dumpPlan, "Print the plan listing");
    transform->add_flag("--count-ops", cfg.countOps, "Print the operation count");

    auto* plan = app.add_subcommand("plan", "Print the decomposition and its operation count");
    plan->add_option("--n", cfg.n, "Blocklength (N ≡ 0 mod 4)")->capture_default_str();
    plan->add_flag("--dump-plan", cfg.dumpPlan, "Accepted for symmetry; the listing is always printed");
    plan->add_flag("--count-ops", cfg.countOps, "Accepted for symmetry; counts are always printed");

    std::string stimulus_path, words_path;
    auto* testbench = app.add_subcommand("testbench", "Run the device model on a stimulus file");
    testbench->add_option("--input", stimulus_path, "Stimulus file (SELECT header + 16 hex words)")->required();
    testbench->add_option("--output", words_path, "Output-word file (default stdout)");

    auto* stimulus = app.add_subcommand("stimulus", "Convert 16 samples into a stimulus file");
    stimulus->add_option("--select", cfg.select, "Transform: dft or dht")
        ->transform(CLI::CheckedTransformer(kSelects, CLI::ignore_case));
    stimulus->add_option("--round", cfg.rounding, "Rounding: half-away, half-even, truncate")
        ->transform(CLI::CheckedTransformer(kRoundings, CLI::ignore_case));
    stimulus->add_option("--input", cfg.input, "Sample file")->required();
    stimulus->add_option("--output", cfg.output, "Stimulus file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        print_error(err, "usage", e.what());
        return 2;
    }

    try {
        if (*transform) return cmd_transform(cfg, out);
        if (*plan) return cmd_plan(cfg.n, out, err);
        if (*testbench) return cmd_testbench(stimulus_path, words_path, out);
        if (*stimulus) return cmd_stimulus(cfg, out);
    } catch (const UsageError& e) {
        print_error(err, e.code(), e.what());
        return 2;
    } catch (const UnsupportedLength& e) {
        print_error(err, e.code(), e.what());
        return 3;
    } catch (const Error& e) {
        print_error(err, e.code(), e.what());
        return 1;
    }
    return 2;
}

}  // namespace laurent::cli
