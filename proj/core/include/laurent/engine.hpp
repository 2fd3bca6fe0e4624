#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "laurent/fixed_point.hpp"
#include "laurent/plan.hpp"
#include "laurent/reference.hpp"
#include "laurent/schedule.hpp"

namespace laurent {

/// The single selection bit: which transform the engine emits.
enum class TransformSelect { DFT, DHT };

[[nodiscard]] const char* to_string(TransformSelect select) noexcept;

enum class ArithmeticMode { Exact, Fixed };

struct ArithmeticConfig {
    ArithmeticMode mode = ArithmeticMode::Fixed;
    QFormat input = kDeviceInputFormat;
    QFormat accumulator = kDeviceAccumulatorFormat;
    Rounding rounding = Rounding::HalfAwayFromZero;

    [[nodiscard]] static ArithmeticConfig exact() { return {ArithmeticMode::Exact}; }
    /// 16-bit inputs and scalars, 32-bit accumulators, both with fracBits fractional bits.
    [[nodiscard]] static ArithmeticConfig fixed(int fracBits = 7, Rounding rounding = Rounding::HalfAwayFromZero);
};

/// Engine output. For DFT, real/imag hold Re(V_k)/Im(V_k); for DHT, real holds
/// H_k and imag is empty. In fixed mode the *Fixed vectors carry the bit-exact
/// accumulator words and real/imag their decoded values.
struct TransformOutput {
    TransformSelect select = TransformSelect::DFT;
    ArithmeticMode mode = ArithmeticMode::Exact;
    std::vector<double> real;
    std::vector<double> imag;
    std::vector<Fixed> realFixed;
    std::vector<Fixed> imagFixed;
    bool overflow = false;

    [[nodiscard]] std::size_t size() const noexcept { return real.size(); }
};

/// Structural operation count of a compiled plan.
struct OpCount {
    std::size_t multiplications = 0;
    std::size_t additions = 0;  ///< pre + combiner + accumulation
    std::size_t preAdditions = 0;
    std::size_t combinerAdditions = 0;
    std::size_t accumulationAdditions = 0;
    std::size_t dhtExtraAdds = 0;       ///< Re - Im output stage, DHT only
    std::size_t unsharedAdditions = 0;  ///< same plan with no subexpression sharing
};

/// Trigonometric scalars rounded once into the constant format (one per plan term).
struct BoundScalars {
    ArithmeticConfig config;
    std::vector<Fixed> scalars;
};

/// A plan plus its compiled schedule. Immutable after construction; execute()
/// may be called concurrently.
class TransformEngine {
public:
    explicit TransformEngine(std::shared_ptr<const LaurentPlan> plan);
    explicit TransformEngine(LaurentPlan plan);

    [[nodiscard]] const LaurentPlan& plan() const noexcept { return *plan_; }
    [[nodiscard]] const ExecutionSchedule& schedule() const noexcept { return schedule_; }
    [[nodiscard]] std::size_t order() const noexcept { return plan_->order(); }

    [[nodiscard]] OpCount count_ops() const;

    /// Throws InvalidInput on length mismatch. Fixed-mode overflow is reported via
    /// TransformOutput::overflow, never thrown.
    [[nodiscard]] TransformOutput execute(const Signal& v, TransformSelect select,
                                          const ArithmeticConfig& config) const;

    [[nodiscard]] BoundScalars bind(const ArithmeticConfig& config) const;

    /// Fixed-mode run on raw input words already in config.input format.
    [[nodiscard]] TransformOutput execute_raw(std::span<const std::int64_t> inputRaws, TransformSelect select,
                                              const BoundScalars& bound) const;

private:
    std::shared_ptr<const LaurentPlan> plan_;
    ExecutionSchedule schedule_;
};

[[nodiscard]] TransformOutput execute(const LaurentPlan& plan, const Signal& v, TransformSelect select,
                                      const ArithmeticConfig& config);

[[nodiscard]] OpCount count_ops(const LaurentPlan& plan);

/// Re - Im per bin, in the same arithmetic as the input (saturating in fixed mode).
[[nodiscard]] TransformOutput hartley_from_fourier(const TransformOutput& dft);

struct QuantizationReport {
    double maxRelativeError = 0.0;
    std::size_t worstBin = 0;
    /// 'r' real part, 'i' imaginary part, 'h' Hartley bin; '-' when no bin qualified.
    char worstComponent = '-';
    double floor = 0.0;  ///< absolute magnitude threshold actually applied
    bool overflow = false;
};

/// Largest |fixed - exact| / |exact| over output components whose exact magnitude
/// exceeds relativeFloor * (peak exact bin magnitude). The exact reference runs on
/// the dequantized input, so only arithmetic error (scalar and product rounding)
/// is measured.
[[nodiscard]] QuantizationReport quantization_report(const LaurentPlan& plan, const Signal& v,
                                                     TransformSelect select, const ArithmeticConfig& fixedConfig,
                                                     double relativeFloor = 0.1);

}  // namespace laurent
