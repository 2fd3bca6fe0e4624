#include "laurent/engine.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "laurent/error.hpp"

namespace laurent {

const char* to_string(TransformSelect select) noexcept { return select == TransformSelect::DFT ? "DFT" : "DHT"; }

ArithmeticConfig ArithmeticConfig::fixed(int fracBits, Rounding rounding) {
    ArithmeticConfig c;
    c.mode = ArithmeticMode::Fixed;
    c.input = {16, fracBits};
    c.accumulator = {32, fracBits};
    c.rounding = rounding;
    c.input.validate();
    c.accumulator.validate();
    return c;
}

namespace {

struct ExactArithmetic {
    using Value = double;
    const LaurentPlan* plan;

    [[nodiscard]] Value zero() const { return 0.0; }
    [[nodiscard]] Value neg(Value a) const { return -a; }
    [[nodiscard]] Value add_signed(Value a, Value b, int sign) const { return sign > 0 ? a + b : a - b; }
    [[nodiscard]] Value scale(Value a, std::size_t term) const { return a * plan->terms()[term].scalar; }
};

struct FixedArithmetic {
    using Value = Fixed;
    const BoundScalars* bound;
    FixedContext ctx;

    [[nodiscard]] Value zero() const { return {0, bound->config.accumulator}; }
    [[nodiscard]] Value neg(Value a) { return fx_neg(a, ctx); }
    [[nodiscard]] Value add_signed(Value a, Value b, int sign) {
        return sign > 0 ? fx_add(a, b, ctx) : fx_sub(a, b, ctx);
    }
    [[nodiscard]] Value scale(Value a, std::size_t term) { return fx_mul(a, bound->scalars[term], ctx); }
};

template <class Arith>
typename Arith::Value eval_form(const LinearForm& form, const std::vector<typename Arith::Value>& vars, Arith& ar) {
    const auto& first = form.terms.front();
    auto acc = first.sign > 0 ? vars[first.index] : ar.neg(vars[first.index]);
    for (std::size_t i = 1; i < form.terms.size(); ++i)
        acc = ar.add_signed(acc, vars[form.terms[i].index], form.terms[i].sign);
    return acc;
}

template <class Arith>
std::pair<std::vector<typename Arith::Value>, std::vector<typename Arith::Value>> run_schedule(
    const ExecutionSchedule& s, std::vector<typename Arith::Value> vars, Arith& ar) {
    using Value = typename Arith::Value;

    for (const auto& node : s.pre.nodes) vars.push_back(ar.add_signed(vars[node.lhs], vars[node.rhs], node.sign));

    std::vector<Value> slots;
    slots.reserve(s.pre.forms.size());
    for (const auto& form : s.pre.forms) slots.push_back(eval_form(form, vars, ar));

    const auto n = s.order;
    std::vector<std::optional<Value>> re(n), im(n);
    std::vector<Value> products;
    std::vector<Value> combined;
    for (const auto& f : s.factors) {
        products.clear();
        for (std::size_t r = 0; r < f.rank; ++r) {
            const auto& u = slots[f.firstProduct + r];
            products.push_back(f.scaled ? ar.scale(u, f.term) : u);
        }
        combined.clear();
        for (const auto& row : f.combiner.distinctRows) combined.push_back(eval_form(row, products, ar));

        auto& out = f.imaginaryOutput ? im : re;
        for (std::size_t k = 0; k < n; ++k) {
            const auto& ref = f.combiner.outputRow[k];
            if (!ref) continue;
            const auto& y = combined[ref->index];
            if (!out[k])
                out[k] = ref->sign > 0 ? y : ar.neg(y);
            else
                out[k] = ar.add_signed(*out[k], y, ref->sign);
        }
    }

    std::vector<Value> real_out, imag_out;
    real_out.reserve(n);
    imag_out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        real_out.push_back(re[k].value_or(ar.zero()));
        imag_out.push_back(im[k].value_or(ar.zero()));
    }
    return {std::move(real_out), std::move(imag_out)};
}

void require_length(std::size_t got, std::size_t order) {
    if (got != order)
        throw InvalidInput(fmt::format("signal length {} does not match plan order {}", got, order));
}

}  // namespace

TransformEngine::TransformEngine(std::shared_ptr<const LaurentPlan> plan)
    : plan_(std::move(plan)), schedule_(compile_schedule(*plan_)) {}

TransformEngine::TransformEngine(LaurentPlan plan)
    : TransformEngine(std::make_shared<const LaurentPlan>(std::move(plan))) {}

OpCount TransformEngine::count_ops() const {
    OpCount c;
    c.multiplications = schedule_.multiplications();
    c.preAdditions = schedule_.pre_additions();
    c.combinerAdditions = schedule_.combiner_additions();
    c.accumulationAdditions = schedule_.accumulation_additions();
    c.additions = c.preAdditions + c.combinerAdditions + c.accumulationAdditions;
    c.dhtExtraAdds = plan_->order();
    c.unsharedAdditions = unshared_additions(*plan_);
    return c;
}

BoundScalars TransformEngine::bind(const ArithmeticConfig& config) const {
    if (config.mode != ArithmeticMode::Fixed) throw InvalidInput("bind: scalars are only bound for fixed arithmetic");
    config.input.validate();
    config.accumulator.validate();
    if (config.input.fracBits != config.accumulator.fracBits)
        throw InvalidInput("bind: input and accumulator formats must share fractional bits");
    BoundScalars bound{config, {}};
    FixedContext ctx(config.rounding);
    for (const auto& term : plan_->terms()) bound.scalars.push_back(quantize(term.scalar, config.input, ctx));
    if (ctx.overflow()) throw InvalidInput("bind: a plan scalar does not fit the constant format");
    return bound;
}

TransformOutput TransformEngine::execute_raw(std::span<const std::int64_t> inputRaws, TransformSelect select,
                                             const BoundScalars& bound) const {
    require_length(inputRaws.size(), order());
    FixedArithmetic ar{&bound, FixedContext(bound.config.rounding)};

    std::vector<Fixed> vars;
    vars.reserve(inputRaws.size());
    for (auto raw : inputRaws) {
        const Fixed word{saturate(raw, bound.config.input, ar.ctx), bound.config.input};
        vars.push_back(fx_convert(word, bound.config.accumulator, ar.ctx));
    }
    auto [re, im] = run_schedule(schedule_, std::move(vars), ar);

    TransformOutput out;
    out.select = TransformSelect::DFT;
    out.mode = ArithmeticMode::Fixed;
    out.realFixed = std::move(re);
    out.imagFixed = std::move(im);
    for (const auto& x : out.realFixed) out.real.push_back(x.to_real());
    for (const auto& x : out.imagFixed) out.imag.push_back(x.to_real());
    out.overflow = ar.ctx.overflow();
    return select == TransformSelect::DFT ? out : hartley_from_fourier(out);
}

TransformOutput TransformEngine::execute(const Signal& v, TransformSelect select,
                                         const ArithmeticConfig& config) const {
    require_length(v.size(), order());

    if (config.mode == ArithmeticMode::Fixed) {
        const auto bound = bind(config);
        FixedContext ctx(config.rounding);
        std::vector<std::int64_t> raws;
        raws.reserve(v.size());
        for (double x : v.samples()) raws.push_back(quantize(x, config.input, ctx).raw);
        auto out = execute_raw(raws, select, bound);
        out.overflow = out.overflow || ctx.overflow();
        return out;
    }

    ExactArithmetic ar{plan_.get()};
    std::vector<double> vars(v.samples().begin(), v.samples().end());
    auto [re, im] = run_schedule(schedule_, std::move(vars), ar);
    TransformOutput out;
    out.select = TransformSelect::DFT;
    out.mode = ArithmeticMode::Exact;
    out.real = std::move(re);
    out.imag = std::move(im);
    return select == TransformSelect::DFT ? out : hartley_from_fourier(out);
}

TransformOutput hartley_from_fourier(const TransformOutput& dft) {
    if (dft.select != TransformSelect::DFT) throw InvalidInput("hartley_from_fourier: input is not a DFT output");
    TransformOutput out;
    out.select = TransformSelect::DHT;
    out.mode = dft.mode;
    out.overflow = dft.overflow;
    const auto n = dft.size();
    out.real.reserve(n);
    if (dft.mode == ArithmeticMode::Fixed) {
        FixedContext ctx;
        for (std::size_t k = 0; k < n; ++k) {
            out.realFixed.push_back(fx_sub(dft.realFixed[k], dft.imagFixed[k], ctx));
            out.real.push_back(out.realFixed.back().to_real());
        }
        out.overflow = out.overflow || ctx.overflow();
    } else {
        for (std::size_t k = 0; k < n; ++k) out.real.push_back(dft.real[k] - dft.imag[k]);
    }
    return out;
}

TransformOutput execute(const LaurentPlan& plan, const Signal& v, TransformSelect select,
                        const ArithmeticConfig& config) {
    return TransformEngine(plan).execute(v, select, config);
}

OpCount count_ops(const LaurentPlan& plan) { return TransformEngine(plan).count_ops(); }

QuantizationReport quantization_report(const LaurentPlan& plan, const Signal& v, TransformSelect select,
                                       const ArithmeticConfig& fixedConfig, double relativeFloor) {
    if (fixedConfig.mode != ArithmeticMode::Fixed)
        throw InvalidInput("quantization_report: configuration must be fixed-point");
    const TransformEngine engine(plan);
    const auto fixed = engine.execute(v, select, fixedConfig);

    // Reference on exactly the values the device saw.
    FixedContext ctx(fixedConfig.rounding);
    std::vector<double> dequantized;
    for (double x : v.samples()) dequantized.push_back(quantize(x, fixedConfig.input, ctx).to_real());
    const auto exact = engine.execute(Signal(std::move(dequantized)), select, ArithmeticConfig::exact());

    const auto n = exact.size();
    double peak = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double im = exact.imag.empty() ? 0.0 : exact.imag[k];
        peak = std::max(peak, std::hypot(exact.real[k], im));
    }

    QuantizationReport report;
    report.floor = relativeFloor * peak;
    report.overflow = fixed.overflow;
    auto consider = [&](double ref, double got, std::size_t k, char component) {
        if (std::abs(ref) <= report.floor || ref == 0.0) return;
        const double err = std::abs(got - ref) / std::abs(ref);
        if (err > report.maxRelativeError || report.worstComponent == '-') {
            report.maxRelativeError = err;
            report.worstBin = k;
            report.worstComponent = component;
        }
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (select == TransformSelect::DFT) {
            consider(exact.real[k], fixed.real[k], k, 'r');
            consider(exact.imag[k], fixed.imag[k], k, 'i');
        } else {
            consider(exact.real[k], fixed.real[k], k, 'h');
        }
    }
    return report;
}

}  // namespace laurent
