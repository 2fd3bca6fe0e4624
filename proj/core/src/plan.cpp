#include "laurent/plan.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "laurent/error.hpp"

namespace laurent {
namespace {

long floor_mod(long a, long b) {
    const long r = a % b;
    return r < 0 ? r + b : r;
}

void require_ternary(const IntMatrix& m, const char* what) {
    if (!m.is_ternary())
        throw Error(fmt::format("plan construction: {} has entries outside {{-1, 0, +1}}", what));
}

PlanTerm make_term(TermKind kind, long m, std::string name, double scalar, IntMatrix realMatrix,
                   IntMatrix imagMatrix) {
    require_ternary(realMatrix, "real-output matrix");
    require_ternary(imagMatrix, "imaginary-output matrix");
    PlanTerm t;
    t.kind = kind;
    t.m = m;
    t.scalarName = std::move(name);
    t.scalar = scalar;
    t.realPart = echelon_factor(realMatrix);
    t.imagPart = echelon_factor(imagMatrix);
    t.realMatrix = std::move(realMatrix);
    t.imagMatrix = std::move(imagMatrix);
    return t;
}

}  // namespace

IntMatrix exponent_matrix(std::size_t n) {
    IntMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n; ++t) out(k, t) = static_cast<int>((k * t) % n);
    return out;
}

IntMatrix chi(std::size_t l, std::size_t n) {
    if (l >= n) throw InvalidInput(fmt::format("chi: class index {} out of range for N={}", l, n));
    IntMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n; ++t) out(k, t) = (k * t) % n == l ? 1 : 0;
    return out;
}

std::vector<std::size_t> congruence_class(long m, std::size_t n) {
    require_plan_length(static_cast<long long>(n));
    const auto quarter = static_cast<long>(n / 4);
    const long base = floor_mod(m, quarter);
    std::vector<std::size_t> out;
    for (long l = base; l < static_cast<long>(n); l += quarter) out.push_back(static_cast<std::size_t>(l));
    return out;
}

GaussianIntegerMatrix build_M(long m, std::size_t n) {
    const auto cls = congruence_class(m, n);
    const auto quarter = static_cast<long>(n / 4);

    // (-j)^t for t mod 4.
    constexpr int unit_re[4] = {1, 0, -1, 0};
    constexpr int unit_im[4] = {0, -1, 0, 1};

    std::vector<int> power_of_class(n, -1);
    for (auto l : cls) {
        const long t = (static_cast<long>(l) - m) / quarter;  // exact by construction of C_m
        power_of_class[l] = static_cast<int>(floor_mod(t, 4));
    }

    GaussianIntegerMatrix out{IntMatrix(n, n), IntMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n; ++t) {
            const int p = power_of_class[(k * t) % n];
            if (p < 0) continue;
            out.re(k, t) = unit_re[p];
            out.im(k, t) = unit_im[p];
        }
    return out;
}

const char* to_string(TermKind kind) noexcept {
    switch (kind) {
        case TermKind::Unit: return "unit";
        case TermKind::Cosine: return "cosine";
        case TermKind::Sine: return "sine";
        case TermKind::Middle: return "middle";
    }
    return "?";
}

bool LaurentPlan::optimal() const noexcept {
    for (const auto& t : terms_)
        if (!t.realPart.optimal || !t.imagPart.optimal) return false;
    return true;
}

LaurentPlan build_plan(std::size_t n) {
    require_plan_length(static_cast<long long>(n));
    const long quarter = static_cast<long>(n / 4);
    const long sweep = (quarter - 1) / 2;
    const double pi = std::numbers::pi;

    LaurentPlan plan;
    plan.order_ = n;

    auto m0 = build_M(0, n);
    plan.terms_.push_back(make_term(TermKind::Unit, 0, "1", 1.0, std::move(m0.re), std::move(m0.im)));

    for (long m = 1; m <= sweep; ++m) {
        const auto plus = build_M(m, n);
        const auto minus = build_M(-m, n);
        const double angle = 2.0 * pi * static_cast<double>(m) / static_cast<double>(n);
        const auto suffix = fmt::format("(2*pi*{}/{})", m, n);

        plan.terms_.push_back(make_term(TermKind::Cosine, m, "cos" + suffix, std::cos(angle),
                                        plus.re + minus.re, plus.im + minus.im));
        // Re gets + Im(M_m - M_-m) sin, Im gets - Re(M_m - M_-m) sin.
        plan.terms_.push_back(make_term(TermKind::Sine, m, "sin" + suffix, std::sin(angle),
                                        plus.im - minus.im, minus.re - plus.re));
    }

    if (quarter % 2 == 0) {
        // exp(-j pi/4) = (√2/2)(1 - j)
        const long mid = quarter / 2;
        const auto mm = build_M(mid, n);
        plan.terms_.push_back(make_term(TermKind::Middle, mid, "sqrt(2)/2", std::numbers::sqrt2 / 2.0,
                                        mm.re + mm.im, mm.im - mm.re));
    }
    return plan;
}

std::vector<std::complex<double>> reconstruct(const LaurentPlan& plan) {
    const auto n = plan.order();
    std::vector<std::complex<double>> out(n * n);
    for (const auto& term : plan.terms()) {
        const auto re = term.realPart.product();
        const auto im = term.imagPart.product();
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t t = 0; t < n; ++t)
                out[k * n + t] += term.scalar * std::complex<double>(re(k, t), im(k, t));
    }
    return out;
}

namespace {

void dump_matrix(std::string& out, const char* label, const IntMatrix& m) {
    out += fmt::format("    {} ({}x{}):\n", label, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += "      ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const int x = m(r, c);
            out += x > 0 ? '+' : x < 0 ? '-' : '0';
        }
        out += '\n';
    }
}

void dump_factor(std::string& out, const char* side, const FactoredTernary& f) {
    out += fmt::format("  {} output: rank {}{}\n", side, f.rank, f.optimal ? "" : " (non-optimal)");
    dump_matrix(out, "combiner", f.combiner);
    dump_matrix(out, "reduced rows", f.reducedRows);
}

}  // namespace

std::string dump_plan(const LaurentPlan& plan) {
    std::string out = fmt::format("plan N={} terms={}\n", plan.order(), plan.terms().size());
    for (const auto& term : plan.terms()) {
        out += fmt::format("term {} m={} scalar {} = {:.10g}\n", to_string(term.kind), term.m,
                           term.scalarName, term.scalar);
        dump_factor(out, "real", term.realPart);
        dump_factor(out, "imag", term.imagPart);
    }
    return out;
}

}  // namespace laurent
