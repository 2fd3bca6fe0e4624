#pragma once

// Straight-line add/multiply program compiled from a LaurentPlan.
//
// Dataflow, per plan:
//   pre-additions   all reducedRows of every factor applied to the input, with
//                   pairwise common subexpressions shared across terms
//   multipliers     one per reduced row of a scalar-weighted factor
//   combiners       per factor, each distinct (up to sign) combiner row summed once
//   accumulators    each output Re_k / Im_k sums one signed combiner value per factor

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "laurent/plan.hpp"

namespace laurent {

struct SignedRef {
    std::uint32_t index = 0;
    int sign = 1;  ///< +1 or -1
    friend bool operator==(const SignedRef&, const SignedRef&) = default;
};

/// Sum of ±1-weighted variables.
struct LinearForm {
    std::vector<SignedRef> terms;
    /// Two-operand additions needed to evaluate this form alone.
    [[nodiscard]] std::size_t additions() const noexcept { return terms.empty() ? 0 : terms.size() - 1; }
};

/// value(new var) = value(lhs) + sign * value(rhs)
struct SumNode {
    std::uint32_t lhs = 0;
    std::uint32_t rhs = 0;
    int sign = 1;
};

/// Forms over `inputs` variables rewritten to reuse shared two-term sums.
///
/// Variables [0, inputs) are the inputs; variable inputs + i is nodes[i].
struct AdditionNetwork {
    std::size_t inputs = 0;
    std::vector<SumNode> nodes;
    std::vector<LinearForm> forms;

    [[nodiscard]] std::size_t additions() const noexcept;
};

/// Greedy pairwise common-subexpression elimination: repeatedly pull out the
/// signed pair (x_i ± x_j) that occurs in the most forms, while some pair occurs
/// at least twice. Ties break toward the lexicographically smallest pair, so the
/// result is deterministic.
[[nodiscard]] AdditionNetwork share_subexpressions(std::size_t inputs, std::vector<LinearForm> forms);

/// The plain row form of a ternary matrix row.
[[nodiscard]] LinearForm row_form(const IntMatrix& m, std::size_t row);

/// Combiner stage of one factor: distinct combiner rows, plus the signed
/// distinct-row reference (or nothing) for each output position.
struct CombinerStage {
    std::vector<LinearForm> distinctRows;              ///< over this factor's product slots
    std::vector<std::optional<SignedRef>> outputRow;   ///< per output k, into distinctRows
};

struct FactorStage {
    std::size_t term = 0;       ///< index into plan.terms()
    bool imaginaryOutput = false;
    bool scaled = false;        ///< false for the unit term
    std::size_t firstProduct = 0;  ///< first slot in the product/intermediate vector
    std::size_t rank = 0;
    CombinerStage combiner;
};

struct ExecutionSchedule {
    std::size_t order = 0;
    /// forms[i] produces intermediate slot i; slots are grouped per factor.
    AdditionNetwork pre;
    std::vector<FactorStage> factors;

    [[nodiscard]] std::size_t multiplications() const noexcept;
    [[nodiscard]] std::size_t pre_additions() const noexcept { return pre.additions(); }
    [[nodiscard]] std::size_t combiner_additions() const noexcept;
    [[nodiscard]] std::size_t accumulation_additions() const noexcept;
};

[[nodiscard]] ExecutionSchedule compile_schedule(const LaurentPlan& plan);

/// Additions when nothing is shared: the unit term applied row by row, each
/// factor's reduced rows applied on their own, and every nonzero combiner
/// entry accumulated directly into its output.
[[nodiscard]] std::size_t unshared_additions(const LaurentPlan& plan);

}  // namespace laurent
